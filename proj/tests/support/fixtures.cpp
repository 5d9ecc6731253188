#include "fixtures.hpp"

#include <map>
#include <mutex>

#include <flatlab/io.hpp>

namespace fixtures {

std::string path(const std::string& name) { return std::string(FLATLAB_FIXTURE_DIR) + "/" + name + ".fn"; }

const flatlab::VectorialFunc& get(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, flatlab::VectorialFunc> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, flatlab::io::read_function_file(path(name))).first;
  return it->second;
}

}  // namespace fixtures

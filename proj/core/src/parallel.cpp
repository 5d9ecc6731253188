#include "flatlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace flatlab {
namespace {

unsigned initial_workers() {
  if (const char* env = std::getenv("FLATLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::atomic<unsigned>& workers() {
  static std::atomic<unsigned> value{initial_workers()};
  return value;
}

}  // namespace

unsigned worker_count() noexcept { return workers().load(); }

void set_worker_count(unsigned threads) noexcept { workers().store(threads < 1 ? 1 : threads); }

void parallel_for(std::uint64_t begin, std::uint64_t end,
                  const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  const unsigned count = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), total));
  if (count <= 1) {
    body(begin, end, 0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(count);
  threads.reserve(count);
  for (unsigned w = 0; w < count; ++w) {
    const std::uint64_t lo = begin + total * w / count;
    const std::uint64_t hi = begin + total * (w + 1) / count;
    threads.emplace_back([&, lo, hi, w] {
      try {
        body(lo, hi, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace flatlab

#pragma once

#include <set>
#include <vector>

#include <flatlab/incidence.hpp>

#include "oracles.hpp"

namespace support {

inline std::set<oracle::Block> block_set(const flatlab::IncidenceStructure& s) {
  std::set<oracle::Block> out;
  for (std::size_t i = 0; i < s.block_count(); ++i) {
    const auto b = s.block(i);
    out.insert(oracle::Block(b.begin(), b.end()));
  }
  return out;
}

}  // namespace support

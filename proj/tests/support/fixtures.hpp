#pragma once

#include <string>

#include <flatlab/func.hpp>

namespace fixtures {

std::string path(const std::string& name);
/// Loads tests/fixtures/<name>.fn: f4, bent42, gold5, gold6, dillon_sextic, kim, dillon_perm.
const flatlab::VectorialFunc& get(const std::string& name);

/// f4 = x1x2 + x3x4.
inline const flatlab::VectorialFunc& f4() { return get("f4"); }
/// (x1x2 + x3x4, x1x2 + x1x4 + x2x3).
inline const flatlab::VectorialFunc& bent42() { return get("bent42"); }
inline const flatlab::VectorialFunc& gold5() { return get("gold5"); }
inline const flatlab::VectorialFunc& gold6() { return get("gold6"); }
inline const flatlab::VectorialFunc& dillon_sextic() { return get("dillon_sextic"); }
inline const flatlab::VectorialFunc& kim() { return get("kim"); }
inline const flatlab::VectorialFunc& dillon_perm() { return get("dillon_perm"); }

}  // namespace fixtures

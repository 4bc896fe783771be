#include "giso/bigreal.hpp"

#include <vector>

namespace giso {

std::string BigReal::to_string(long decimals) const {
  if (decimals < 0) decimals = 0;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  std::vector<char> buf(static_cast<size_t>(decimals) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(decimals),
                v_);
  return std::string(buf.data());
}

}  // namespace giso

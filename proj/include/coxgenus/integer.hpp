#pragma once

#include <gmpxx.h>

#include <string>

namespace coxgenus {

using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool fits_int64(const Integer& z) {
  return z.fits_slong_p() && sizeof(long) == 8;
}

}  // namespace coxgenus

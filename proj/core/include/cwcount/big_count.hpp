#ifndef CWCOUNT_BIG_COUNT_HPP
#define CWCOUNT_BIG_COUNT_HPP

#include <gmpxx.h>

#include <string>

namespace cwcount {

// All counting is exact.  Counts routinely exceed 64 bits, so every table
// value is an arbitrary-precision non-negative integer.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

inline BigCount big_from_decimal(const std::string& s) { return BigCount(s); }

// Shared zero for lookup misses.
const BigCount& big_zero();

}  // namespace cwcount

#endif  // CWCOUNT_BIG_COUNT_HPP

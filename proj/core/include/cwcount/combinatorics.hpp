#ifndef CWCOUNT_COMBINATORICS_HPP
#define CWCOUNT_COMBINATORICS_HPP

#include "cwcount/big_count.hpp"

namespace cwcount {

// Cached small-argument helpers.  Arguments are vertex counts, so the cache
// stays tiny; results are exact.

// C(n, k); 0 when k < 0 or k > n.  Returned by value: the cache may grow
// (and reallocate) under later calls from any thread.
BigCount binomial(int n, int k);

// n!; n must be >= 0.
BigCount factorial(int n);

// (2m-1)!! = 1*3*5*...*(2m-1); m must be >= 0, with double_factorial_odd(0) == 1.
BigCount double_factorial_odd(int m);

// Fibonacci with F(1) = F(2) = 1; F(0) == 0.
BigCount fibonacci(int n);

}  // namespace cwcount

#endif  // CWCOUNT_COMBINATORICS_HPP

#include "cwcount/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace cwcount {

const BigCount& big_zero() {
  static const BigCount zero = 0;
  return zero;
}

namespace {

std::mutex cache_mutex;
// row n holds C(n, 0..n)
std::vector<std::vector<BigCount>> pascal_rows = {{1}};
std::vector<BigCount> factorials = {1};

void grow_pascal(int n) {
  while (static_cast<int>(pascal_rows.size()) <= n) {
    const std::vector<BigCount>& prev = pascal_rows.back();
    std::vector<BigCount> row(prev.size() + 1, BigCount(1));
    for (size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
    pascal_rows.push_back(std::move(row));
  }
}

void grow_factorials(int n) {
  while (static_cast<int>(factorials.size()) <= n) {
    factorials.push_back(factorials.back() *
                         BigCount(static_cast<long>(factorials.size())));
  }
}

}  // namespace

BigCount binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n < 0");
  if (k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(cache_mutex);
  grow_pascal(n);
  return pascal_rows[n][k];
}

BigCount factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n < 0");
  std::lock_guard<std::mutex> lock(cache_mutex);
  grow_factorials(n);
  return factorials[n];
}

BigCount double_factorial_odd(int m) {
  if (m < 0) throw std::invalid_argument("double_factorial_odd: m < 0");
  BigCount out = 1;
  for (int i = 1; i < 2 * m; i += 2) out *= i;
  return out;
}

BigCount fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci: n < 0");
  BigCount a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigCount next = a + b;
    a = b;
    b = next;
  }
  return a;
}

}  // namespace cwcount

#include "gridcycles/arith.hpp"

#include <stdexcept>
#include <string>

namespace gridcycles {

int moebius(long m) {
  if (m < 1) throw std::invalid_argument("moebius: m must be >= 1");
  int factors = 0;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;  // squared prime factor
      ++factors;
    }
  }
  if (m > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

std::vector<long> divisors(long m) {
  if (m < 1) throw std::invalid_argument("divisors: m must be >= 1");
  std::vector<long> small, large;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

ExactInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt result = 1;
  for (long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return result;
}

ExactInt pow_int(long base, long exp) {
  ExactInt b = base, result = 1;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result *= b;
    b *= b;
  }
  return result;
}

ExactInt exact_div(const ExactInt& a, const ExactInt& b, const char* context) {
  if (b == 0 || a % b != 0) {
    throw std::logic_error(std::string("non-exact division in ") + context +
                           ": " + a.str() + " / " + b.str());
  }
  return a / b;
}

}  // namespace gridcycles

#include "hyperop/binomial.hpp"

#include <cmath>
#include <limits>

namespace hyperop {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

long double logPowBig(double base, const BigInt& e) {
  if (e == 0) return 0.0L;
  if (base == 0.0) return -std::numeric_limits<long double>::infinity();
  return e.convert_to<long double>() * std::log(static_cast<long double>(base));
}

double powBig(double base, const BigInt& e) {
  return static_cast<double>(std::exp(logPowBig(base, e)));
}

}  // namespace hyperop

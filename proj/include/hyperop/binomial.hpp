#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperop {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// base^e for base in [0, 1], evaluated as exp(e log base).
double powBig(double base, const BigInt& e);
/// log(base^e), -inf when base = 0 and e > 0.
long double logPowBig(double base, const BigInt& e);

}  // namespace hyperop

#pragma once

#include <gmpxx.h>

namespace ed {

using Rational = mpq_class;
using Integer = mpz_class;

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// m!! for odd m >= 1; defined as 1 for m <= 0.
Integer double_factorial(long m);

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace ed

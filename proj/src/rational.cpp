#include "ed/rational.hpp"

namespace ed {

Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer double_factorial(long m) {
    Integer r = 1;
    for (long v = m; v > 1; v -= 2) r *= v;
    return r;
}

} // namespace ed

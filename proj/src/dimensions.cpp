#include "ed/dimensions.hpp"

#include "ed/errors.hpp"
#include "ed/rational.hpp"

namespace ed {

long pol_dim_full_space(int n, int e) {
    return binomial(n + e, e).get_si();
}

long pol_dim_star_space(int n, int e) {
    Integer acc = 0;
    for (int i = 0; 2 * i <= e; ++i) acc += binomial(n + e - 2 * i - 1, n - 1);
    return acc.get_si();
}

long design_dimension_bound(int n, int e, int p, int epsilon_S, Parity parity) {
    if (n < 1 || e < 0 || p < 1 || epsilon_S < 0 || epsilon_S > 1)
        throw Error("design_dimension_bound: invalid arguments");
    if (parity == Parity::Full) {
        if (p <= (e + epsilon_S) / 2) {
            Integer acc = epsilon_S;
            for (int i = 0; i <= 2 * (p - epsilon_S) - 1; ++i)
                acc += binomial(n + e - i - 1, n - 1);
            return acc.get_si();
        }
        return pol_dim_full_space(n, e);
    }
    if (p <= e / 2) {
        Integer acc = 0;
        if (e % 2 == 0 && epsilon_S == 1) {
            acc = 1;
            for (int i = 0; i <= p - 2; ++i)
                acc += binomial(n + e - 2 * i - 1, n - 1);
        } else {
            for (int i = 0; i <= p - 1; ++i)
                acc += binomial(n + e - 2 * i - 1, n - 1);
        }
        return acc.get_si();
    }
    return pol_dim_star_space(n, e);
}

} // namespace ed

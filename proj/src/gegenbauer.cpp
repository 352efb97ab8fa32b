#include "ed/gegenbauer.hpp"

#include "ed/errors.hpp"
#include "ed/harmonic.hpp"

namespace ed {

namespace {

using Coeffs = std::vector<Rational>;

Coeffs shift_mul_y(const Coeffs& c) {
    Coeffs r(c.size() + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r[i + 1] = c[i];
    return r;
}

// Chebyshev T_l via T_0 = 1, T_1 = y, T_l = 2 y T_{l-1} - T_{l-2}.
Coeffs chebyshev(int l) {
    Coeffs prev{Rational(1)};
    if (l == 0) return prev;
    Coeffs cur{Rational(0), Rational(1)};
    for (int k = 2; k <= l; ++k) {
        Coeffs next = shift_mul_y(cur);
        for (auto& q : next) q *= 2;
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Ultraspherical C_l^lambda via the three-term recurrence
// l C_l = 2 (l + lambda - 1) y C_{l-1} - (l + 2 lambda - 2) C_{l-2}.
Coeffs ultraspherical(const Rational& lambda, int l) {
    Coeffs prev{Rational(1)};
    if (l == 0) return prev;
    Coeffs cur{Rational(0), 2 * lambda};
    for (int k = 2; k <= l; ++k) {
        Coeffs next = shift_mul_y(cur);
        Rational a = 2 * (Rational(k) + lambda - 1) / k;
        for (auto& q : next) q *= a;
        Rational b = (Rational(k) + 2 * lambda - 2) / k;
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= b * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

Rational GegenbauerPoly::evaluate_exact(const Rational& y) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * y + *it;
    return acc;
}

double GegenbauerPoly::evaluate(double y) const {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * y + to_double(*it);
    return acc;
}

GegenbauerPoly gegenbauer(int n, int l) {
    if (n < 2 || l < 0) throw Error("gegenbauer: need n >= 2, l >= 0");
    GegenbauerPoly q;
    q.n = n;
    q.l = l;
    if (n == 2) {
        q.coeffs = chebyshev(l);
        if (l >= 1)
            for (auto& c : q.coeffs) c *= 2;
        return q;
    }
    Rational lambda(n - 2, 2);
    lambda.canonicalize();
    q.coeffs = ultraspherical(lambda, l);
    Rational at_one(0);
    for (const auto& c : q.coeffs) at_one += c;
    Rational scale = Rational(harm_dim(n, l)) / at_one;
    for (auto& c : q.coeffs) c *= scale;
    return q;
}

} // namespace ed

#include "ed/monomial.hpp"

#include <numeric>

namespace ed {

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::all_even() const {
    for (int e : exponents)
        if (e % 2 != 0) return false;
    return true;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
}

namespace {

void enumerate(int n, int d, int pos, std::vector<int>& cur,
               std::vector<Monomial>& out) {
    if (pos == n - 1) {
        cur[pos] = d;
        out.push_back(Monomial(cur));
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[pos] = e;
        enumerate(n, d - e, pos + 1, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    std::vector<int> cur(n, 0);
    enumerate(n, d, 0, cur, out);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(int n, int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k) {
        auto part = monomials_of_degree(n, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace ed

#include "ed/harmonic.hpp"

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "ed/errors.hpp"
#include "ed/moments.hpp"

namespace ed {

long harm_dim(int n, int l) {
    if (n < 1 || l < 0) throw Error("harm_dim: need n >= 1, l >= 0");
    Integer d = binomial(n + l - 1, l) - binomial(n + l - 3, l - 2);
    return d.get_si();
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(RMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[pr], a[r]);
        Rational inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

// Scales a rational coefficient vector to primitive integers and flips the
// sign so the first nonzero entry (the grlex-greatest monomial) is positive.
void make_primitive(std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& q : v)
        if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    Integer g = 0;
    for (auto& q : v) {
        q *= l;
        q.canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    if (g == 0) return;
    for (auto& q : v) {
        q /= g;
        q.canonicalize();
    }
    for (const auto& q : v) {
        if (q == 0) continue;
        if (q < 0)
            for (auto& w : v) w = -w;
        break;
    }
}

struct CacheKey {
    int n, l;
    bool operator<(const CacheKey& o) const {
        return n != o.n ? n < o.n : l < o.l;
    }
};

} // namespace

HarmonicBasis harmonic_basis(int n, int l) {
    if (n < 1 || l < 0) throw Error("harmonic_basis: need n >= 1, l >= 0");
    const auto cols = monomials_of_degree(n, l);
    const auto rows = l >= 2 ? monomials_of_degree(n, l - 2)
                             : std::vector<Monomial>{};
    std::map<Monomial, int, GrlexLess> row_index;
    for (size_t r = 0; r < rows.size(); ++r)
        row_index.emplace(rows[r], static_cast<int>(r));

    RMatrix a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (size_t c = 0; c < cols.size(); ++c) {
        const auto& alpha = cols[c].exponents;
        for (int i = 0; i < n; ++i) {
            if (alpha[i] < 2) continue;
            std::vector<int> beta = alpha;
            beta[i] -= 2;
            int r = row_index.at(Monomial(std::move(beta)));
            a[r][c] += Rational(alpha[i] * (alpha[i] - 1));
        }
    }

    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols.size(), false);
    for (int c : pivots) is_pivot[c] = true;

    HarmonicBasis basis;
    basis.n = n;
    basis.l = l;
    for (size_t f = 0; f < cols.size(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols.size(), Rational(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a[r][f];
        make_primitive(v);
        RationalPoly p(n);
        for (size_t c = 0; c < cols.size(); ++c)
            if (v[c] != 0) p.terms.emplace(cols[c], v[c]);
        basis.exact.push_back(std::move(p));
    }
    if (static_cast<long>(basis.exact.size()) != harm_dim(n, l))
        throw Error("harmonic_basis: nullspace dimension mismatch");
    basis.numeric.reserve(basis.exact.size());
    for (const auto& p : basis.exact) basis.numeric.push_back(to_double(p));
    return basis;
}

const HarmonicBasis& harmonic_basis_ref(int n, int l) {
    static std::map<CacheKey, std::unique_ptr<HarmonicBasis>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, l}];
    if (!slot) slot = std::make_unique<HarmonicBasis>(harmonic_basis(n, l));
    return *slot;
}

Rational sphere_inner_product(const RationalPoly& f, const RationalPoly& g) {
    return sphere_average(f * g);
}

std::vector<std::vector<Rational>> harmonic_gram(const HarmonicBasis& basis) {
    if (basis.exact.empty())
        throw Error("harmonic_gram: exact coefficients required");
    const int h = static_cast<int>(basis.exact.size());
    const int l = basis.l;
    Integer den = 1;
    for (int k = 0; k < l; ++k) den *= (basis.n + 2 * k);
    std::vector<std::vector<Rational>> gram(h, std::vector<Rational>(h));
    for (int i = 0; i < h; ++i) {
        for (int j = i; j < h; ++j) {
            Rational acc(0);
            const auto& a = basis.exact[i].terms;
            const auto& b = basis.exact[j].terms;
            for (const auto& [m, ca] : a) {
                auto it = b.find(m);
                if (it == b.end()) continue;
                Integer fact = 1;
                for (int e : m.exponents)
                    for (int k = 2; k <= e; ++k) fact *= k;
                acc += ca * it->second * Rational(fact);
            }
            acc /= Rational(den);
            gram[i][j] = acc;
            gram[j][i] = acc;
        }
    }
    return gram;
}

HarmonicBasis orthonormalize_sphere(const HarmonicBasis& basis) {
    if (basis.orthonormal) return basis;
    if (basis.exact.empty())
        throw Error("orthonormalize_sphere: exact input basis required");
    const int h = static_cast<int>(basis.exact.size());
    auto gram = harmonic_gram(basis);
    Eigen::MatrixXd g(h, h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) g(i, j) = to_double(gram[i][j]);
    Eigen::LLT<Eigen::MatrixXd> llt(g);
    if (llt.info() != Eigen::Success)
        throw Error("orthonormalize_sphere: input basis is rank deficient");
    Eigen::MatrixXd linv = Eigen::MatrixXd(llt.matrixL())
                               .triangularView<Eigen::Lower>()
                               .solve(Eigen::MatrixXd::Identity(h, h));
    std::vector<DoublePoly> numeric_in;
    numeric_in.reserve(h);
    for (const auto& p : basis.exact) numeric_in.push_back(to_double(p));
    HarmonicBasis out;
    out.n = basis.n;
    out.l = basis.l;
    out.orthonormal = true;
    out.numeric.reserve(h);
    for (int i = 0; i < h; ++i) {
        DoublePoly p(basis.n);
        for (int j = 0; j <= i; ++j) {
            if (linv(i, j) == 0.0) continue;
            p += numeric_in[j].scaled(linv(i, j));
        }
        out.numeric.push_back(std::move(p));
    }
    return out;
}

const HarmonicBasis& orthonormal_basis_ref(int n, int l) {
    static std::map<CacheKey, std::unique_ptr<HarmonicBasis>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, l}];
    if (!slot)
        slot = std::make_unique<HarmonicBasis>(
            orthonormalize_sphere(harmonic_basis_ref(n, l)));
    return *slot;
}

} // namespace ed

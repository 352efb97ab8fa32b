#include "ed/polynomial.hpp"

namespace ed {

DoublePoly to_double(const RationalPoly& p) {
    DoublePoly r(p.n);
    for (const auto& [m, c] : p.terms) r.terms.emplace(m, to_double(c));
    return r;
}

CompiledPoly compile(const DoublePoly& p) {
    CompiledPoly c;
    c.n = p.n;
    c.nterms = static_cast<int>(p.terms.size());
    c.exps.reserve(static_cast<size_t>(c.nterms) * p.n);
    c.coef.reserve(c.nterms);
    for (const auto& [m, v] : p.terms) {
        c.exps.insert(c.exps.end(), m.exponents.begin(), m.exponents.end());
        c.coef.push_back(v);
    }
    return c;
}

CompiledPoly compile(const RationalPoly& p) { return compile(to_double(p)); }

} // namespace ed

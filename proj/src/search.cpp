#include "ed/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ed/errors.hpp"
#include "ed/rank.hpp"

namespace ed {
namespace {

// C(v, m) saturated at LLONG_MAX so rank arithmetic cannot overflow.
long long choose_ll(int v, int m) {
    if (m < 0 || m > v) return 0;
    m = std::min(m, v - m);
    long long r = 1;
    for (int i = 1; i <= m; ++i) {
        const long long num = v - m + i;
        if (r > LLONG_MAX / num) return LLONG_MAX;
        r = r * num / i; // exact: r accumulates C(v-m+i, i)
    }
    return r;
}

// r-th size-m subset of {0..V-1} in lexicographic order.
void unrank_combination(long long r, int V, int m, std::vector<int>& comb) {
    comb.resize(m);
    int c = 0;
    for (int i = 0; i < m; ++i) {
        while (true) {
            const long long cnt = choose_ll(V - c - 1, m - i - 1);
            if (r < cnt) {
                comb[i] = c++;
                break;
            }
            r -= cnt;
            ++c;
        }
    }
}

bool next_combination(std::vector<int>& comb, int V) {
    const int m = static_cast<int>(comb.size());
    for (int i = m - 1; i >= 0; --i) {
        if (comb[i] < V - m + i) {
            ++comb[i];
            for (int k = i + 1; k < m; ++k) comb[k] = comb[k - 1] + 1;
            return true;
        }
    }
    return false;
}

using Mask = std::vector<uint64_t>;

void set_bit(Mask& mask, int bit) { mask[bit >> 6] |= uint64_t(1) << (bit & 63); }

bool contains(const Mask& cand, const Mask& pair_mask) {
    for (size_t w = 0; w < cand.size(); ++w)
        if ((cand[w] & pair_mask[w]) != pair_mask[w]) return false;
    return true;
}

std::vector<Mask> qualifying_pair_masks(const DesignSystem& sys,
                                        const SearchOptions& opt) {
    std::vector<Mask> masks;
    if (opt.constraint == PairConstraint::None) return masks;
    ShellDecomposition shells = decompose_shells(sys.base, opt.group_tol);
    const int words = (sys.num_variables() + 63) / 64;
    for (int a = 0; a < sys.reps; ++a) {
        for (int b = a + 1; b < sys.reps; ++b) {
            if (shells.membership[a] != shells.membership[b]) continue;
            const bool antip =
                (sys.base.points[a] + sys.base.points[b]).norm() < 1e-9;
            if (antip != (opt.constraint == PairConstraint::AntipodalPair))
                continue;
            Mask m(words, 0);
            for (int c = 0; c < sys.n; ++c) {
                set_bit(m, sys.coord_index(a, c));
                set_bit(m, sys.coord_index(b, c));
            }
            masks.push_back(std::move(m));
        }
    }
    return masks;
}

struct ChunkResult {
    std::vector<std::vector<int>> hits;
    long enumerated = 0;
    bool exhausted = false;
};

// Walk lexicographic subset ranks [lo, hi), rank-testing every subset that
// passes the structural filter. tests_done is shared across chunks and
// enforces the global budget.
ChunkResult run_chunk(const DesignSystem& sys, const SearchOptions& opt,
                      const Eigen::MatrixXd& J,
                      const std::vector<Mask>& pair_masks, long long lo,
                      long long hi, std::atomic<long>& tests_done) {
    ChunkResult out;
    const int V = sys.num_variables();
    const int K = sys.num_equations();
    const int m = opt.size;
    const int words = (V + 63) / 64;
    std::vector<int> comb;
    unrank_combination(lo, V, m, comb);
    Mask cand(words);
    for (long long r = lo; r < hi; ++r) {
        if (r > lo && !next_combination(comb, V)) break;
        bool pass = true;
        if (!pair_masks.empty() || opt.constraint != PairConstraint::None) {
            std::fill(cand.begin(), cand.end(), 0);
            for (int idx : comb) set_bit(cand, idx);
            pass = false;
            for (const Mask& pm : pair_masks) {
                if (contains(cand, pm)) {
                    pass = true;
                    break;
                }
            }
        }
        if (!pass) continue;
        ++out.enumerated;
        if (tests_done.fetch_add(1, std::memory_order_relaxed) >= opt.budget) {
            tests_done.fetch_sub(1, std::memory_order_relaxed);
            out.exhausted = true;
            break;
        }
        std::vector<int> dep = complement_indices(V, comb);
        if (matrix_rank(select_columns(J, dep), opt.rank_tol) == K)
            out.hits.push_back(comb);
    }
    return out;
}

SearchResult run_search(const DesignSystem& sys, const SearchOptions& opt,
                        int nthreads) {
    const int V = sys.num_variables();
    const int K = sys.num_equations();
    if (opt.size != V - K)
        throw Error("free-set size must equal variables minus equations (" +
                    std::to_string(V) + " - " + std::to_string(K) + " = " +
                    std::to_string(V - K) + ")");
    if (opt.size < 0) throw Error("system has more equations than variables");

    const auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    const Eigen::MatrixXd J = jacobian(sys, pack_variables(sys.base));
    const std::vector<Mask> pair_masks = qualifying_pair_masks(sys, opt);
    if (opt.constraint != PairConstraint::None && pair_masks.empty()) {
        res.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        return res;
    }

    const long long total = choose_ll(V, opt.size);
    std::atomic<long> tests_done{0};
    std::vector<ChunkResult> chunks(nthreads);
    const long long base = total / nthreads;
    const long long rem = total % nthreads;
    auto chunk_lo = [&](int q) {
        return q * base + std::min<long long>(q, rem);
    };

#ifdef _OPENMP
#pragma omp parallel for num_threads(nthreads) schedule(static, 1)
#endif
    for (int q = 0; q < nthreads; ++q) {
        const long long lo = chunk_lo(q);
        const long long hi = chunk_lo(q + 1);
        if (lo < hi)
            chunks[q] = run_chunk(sys, opt, J, pair_masks, lo, hi, tests_done);
    }

    for (const ChunkResult& c : chunks) {
        for (const auto& h : c.hits) res.hits.push_back(h);
        res.candidates_enumerated += c.enumerated;
        res.budget_exhausted = res.budget_exhausted || c.exhausted;
    }
    res.candidates_tested = std::min<long>(tests_done.load(), opt.budget);
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

} // namespace

SearchResult search_free_sets_serial(const DesignSystem& sys,
                                     const SearchOptions& opt) {
    return run_search(sys, opt, 1);
}

SearchResult search_free_sets(const DesignSystem& sys,
                              const SearchOptions& opt) {
    int nthreads = opt.jobs;
#ifdef _OPENMP
    if (nthreads <= 0) nthreads = omp_get_max_threads();
#else
    nthreads = 1;
#endif
    if (nthreads < 1) nthreads = 1;
    return run_search(sys, opt, nthreads);
}

} // namespace ed

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zsum/automorphisms.hpp"
#include "zsum/config.hpp"
#include "zsum/group.hpp"
#include "zsum/group_atom.hpp"
#include "zsum/parallel.hpp"

namespace zsum {

/// General upper bound sum_i (n_i - 1) + 1.
inline std::int64_t sep_upper_bound(const FiniteAbelianGroup& g) {
    std::int64_t s = 1;
    for (std::int64_t f : g.factors()) s += f - 1;
    return s;
}

/// Whether the upper bound is attained: exactly for cyclic groups and for
/// groups whose tail factors n_{s+1} = ... = n_r all equal 2 (r = 2s-1 or 2s).
inline bool sep_upper_bound_attained(const FiniteAbelianGroup& g) {
    const int r = g.rank();
    if (r <= 1) return true;
    const int s = (r + 1) / 2;
    for (int i = s; i < r; ++i)
        if (g.factors()[static_cast<std::size_t>(i)] != 2) return false;
    return true;
}

/// Lower bound n_1 + ... + n_s + n_{s+1}/p for groups of even rank r = 2s,
/// with p the least prime divisor of n_r. Empty for odd rank.
inline std::optional<std::int64_t> sep_lower_bound(const FiniteAbelianGroup& g) {
    const int r = g.rank();
    if (r == 0 || r % 2 != 0) return std::nullopt;
    const int s = r / 2;
    std::int64_t sum = 0;
    for (int i = 0; i < s; ++i) sum += g.factors()[static_cast<std::size_t>(i)];
    std::int64_t p = least_prime_divisor(g.factors().back());
    return sum + g.factors()[static_cast<std::size_t>(s)] / p;
}

/// Rank-two prediction l*n + n/p (= n_1 + n_2/p), p the least prime of n_2.
inline std::int64_t rank2_prediction(const FiniteAbelianGroup& g) {
    if (g.rank() != 2)
        throw std::invalid_argument("rank-two prediction requires a rank-two group");
    return g.factors()[0] + g.factors()[1] / least_prime_divisor(g.factors()[1]);
}

struct ExtremalWitness {
    ElementTuple tuple;
    ZsVector vector;
};

struct SepNoetherBounds {
    std::int64_t upper = 0;
    bool upper_equality_predicted = false;
    std::optional<std::int64_t> lower;  // even rank only
};

struct SepNoetherResult {
    FiniteAbelianGroup group;
    std::int64_t beta_sep = 0;
    std::vector<ExtremalWitness> extremal;
    std::optional<std::int64_t> predicted;  // rank two only
    SepNoetherBounds bounds;
    std::int64_t subsets_scanned = 0;
    bool automorphism_pruning = false;

    std::optional<bool> match() const {
        if (!predicted) return std::nullopt;
        return beta_sep == *predicted;
    }
};

namespace detail {

// All ascending index combinations of exactly `size` out of [0, n_items), in
// lexicographic order.
inline std::vector<std::vector<std::int32_t>> index_combinations_exact(
    std::int32_t n_items, int size) {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> cur;
    auto rec = [&](auto&& self, std::int32_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::int32_t i = start; i <= n_items - remaining; ++i) {
            cur.push_back(i);
            self(self, i + 1, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, size);
    return out;
}

// All index combinations of sizes 1..max_size, ordered by (size, lexicographic).
inline std::vector<std::vector<std::int32_t>> index_combinations(std::int32_t n_items,
                                                                 int max_size) {
    std::vector<std::vector<std::int32_t>> out;
    for (int size = 1; size <= max_size; ++size) {
        auto part = index_combinations_exact(n_items, size);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct SweepOutcome {
    std::int64_t max_len = 0;
    std::vector<ExtremalWitness> extremal;
    std::int64_t subsets_scanned = 0;
};

// Max group-atom length over unordered subsets of size 1..rank+1 of the
// nonzero elements of G. Subsets containing the identity are skipped: the
// length-1 element e_0 makes every vector with repeated use of coordinate 0
// lattice-reducible, so such subsets never raise the maximum (regression test
// covers this on C4xC2). With pruning enabled only one representative per
// Aut(G)-orbit is evaluated; the maximum is automorphism-invariant because an
// automorphism induces a length-preserving isomorphism of block monoids.
inline SweepOutcome sweep_group_atoms(const FiniteAbelianGroup& g, const RunConfig& cfg,
                                      bool include_identity) {
    if (g.trivial())
        throw std::invalid_argument("the subset sweep requires a nontrivial group");
    const auto all = enumerate_elements(g, cfg.budget_candidates);
    std::vector<GroupElement> pool(all.begin() + (include_identity ? 0 : 1), all.end());
    const int max_size =
        std::min<int>(g.rank() + 1, static_cast<int>(pool.size()));
    auto combos = index_combinations(static_cast<std::int32_t>(pool.size()), max_size);

    if (cfg.automorphism_pruning) {
        const auto maps = automorphism_index_maps(g, cfg.budget_candidates);
        const std::int32_t offset = include_identity ? 0 : 1;
        std::vector<std::vector<std::int32_t>> kept;
        std::vector<std::int32_t> global;
        for (const auto& c : combos) {
            global.assign(c.begin(), c.end());
            for (auto& x : global) x += offset;
            if (orbit_representative(global, maps) == global) kept.push_back(c);
        }
        combos = std::move(kept);
    }

    struct PerSubset {
        std::int64_t max_len = 0;
        std::vector<ZsVector> extremal;
    };
    std::vector<PerSubset> results(combos.size());
    parallel_for_index(combos.size(), cfg.effective_workers(), [&](std::size_t idx) {
        std::vector<GroupElement> elems;
        elems.reserve(combos[idx].size());
        for (std::int32_t i : combos[idx]) elems.push_back(pool[static_cast<std::size_t>(i)]);
        GroupAtomEvaluator ev(ElementTuple(g, std::move(elems)), cfg);
        auto [len, verdicts] = ev.max_group_atom_length();
        results[idx].max_len = len;
        for (auto& v : verdicts) results[idx].extremal.push_back(std::move(v.vector));
    });

    SweepOutcome out;
    out.subsets_scanned = static_cast<std::int64_t>(combos.size());
    for (const auto& r : results) out.max_len = std::max(out.max_len, r.max_len);
    for (std::size_t idx = 0; idx < combos.size(); ++idx) {
        if (results[idx].max_len != out.max_len) continue;
        std::vector<GroupElement> elems;
        for (std::int32_t i : combos[idx]) elems.push_back(pool[static_cast<std::size_t>(i)]);
        ElementTuple t(g, std::move(elems));
        for (auto& v : results[idx].extremal)
            out.extremal.push_back(ExtremalWitness{t, std::move(v)});
    }
    return out;
}

}  // namespace detail

/// The separating Noether number of G, computed as the maximal group-atom
/// length over subsets of at most rank(G)+1 distinct elements.
inline SepNoetherResult beta_sep(const FiniteAbelianGroup& g, const RunConfig& cfg = {}) {
    if (g.rank() > 3)
        throw std::invalid_argument("the subset sweep supports rank <= 3 groups");
    auto sweep = detail::sweep_group_atoms(g, cfg, /*include_identity=*/false);

    SepNoetherResult res;
    res.group = g;
    res.beta_sep = sweep.max_len;
    res.extremal = std::move(sweep.extremal);
    res.subsets_scanned = sweep.subsets_scanned;
    res.automorphism_pruning = cfg.automorphism_pruning;
    res.bounds.upper = sep_upper_bound(g);
    res.bounds.upper_equality_predicted = sep_upper_bound_attained(g);
    res.bounds.lower = sep_lower_bound(g);
    if (g.rank() == 2) res.predicted = rank2_prediction(g);
    if (res.beta_sep > res.bounds.upper)
        throw std::logic_error("computed beta_sep exceeds the general upper bound");
    return res;
}

/// Builds C_{l*n} + C_n, runs the full sweep, and records the predicted value
/// l*n + n/p. The l = 1 case runs through the same sweep with no special path.
inline SepNoetherResult verify_main_theorem(std::int64_t l, std::int64_t n,
                                            const RunConfig& cfg = {}) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    FiniteAbelianGroup g({detail::checked_mul(l, n), n});
    auto res = beta_sep(g, cfg);
    std::int64_t predicted = l * n + n / least_prime_divisor(n);
    if (!res.predicted || *res.predicted != predicted)
        throw std::logic_error("rank-two prediction mismatch; bug");
    return res;
}

struct VerifyCell {
    std::int64_t l = 0;
    std::int64_t n = 0;
    FiniteAbelianGroup group;
    std::optional<SepNoetherResult> result;  // empty when skipped
    bool skipped = false;
    double wall_ms = 0.0;
};

struct VerifySweep {
    std::pair<std::int64_t, std::int64_t> l_range;
    std::pair<std::int64_t, std::int64_t> n_range;
    std::vector<VerifyCell> cells;

    bool all_match() const {
        for (const auto& c : cells)
            if (!c.skipped && c.result && c.result->match() == std::optional<bool>(false))
                return false;
        return true;
    }
};

/// Sweeps verify_main_theorem over rectangular (l, n) ranges. Cells whose
/// enumeration exceeds the budget are marked skipped rather than failing the
/// whole sweep.
inline VerifySweep verify_sweep(std::int64_t l_lo, std::int64_t l_hi, std::int64_t n_lo,
                                std::int64_t n_hi, const RunConfig& cfg = {}) {
    if (l_lo < 1 || l_hi < l_lo) throw std::invalid_argument("bad l range");
    if (n_lo < 2 || n_hi < n_lo) throw std::invalid_argument("bad n range");
    VerifySweep sweep;
    sweep.l_range = {l_lo, l_hi};
    sweep.n_range = {n_lo, n_hi};
    for (std::int64_t l = l_lo; l <= l_hi; ++l) {
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            VerifyCell cell;
            cell.l = l;
            cell.n = n;
            cell.group = FiniteAbelianGroup({detail::checked_mul(l, n), n});
            auto start = std::chrono::steady_clock::now();
            try {
                cell.result = verify_main_theorem(l, n, cfg);
            } catch (const BudgetExceeded&) {
                cell.skipped = true;
            }
            cell.wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            sweep.cells.push_back(std::move(cell));
        }
    }
    return sweep;
}

}  // namespace zsum

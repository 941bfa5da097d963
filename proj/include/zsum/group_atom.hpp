#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zsum/block_monoid.hpp"
#include "zsum/config.hpp"
#include "zsum/zlattice.hpp"

namespace zsum {

inline SignedVector to_signed(const ZsVector& v) {
    SignedVector out;
    out.reserve(v.size());
    for (std::int64_t m : v.multiplicities()) out.emplace_back(m);
    return out;
}

/// Reducibility certificate for a non-group-atom: integer coefficients over
/// monoid elements of strictly smaller length whose combination equals the
/// vector. Only the generators with nonzero coefficients are kept.
struct GroupAtomWitness {
    std::vector<Int> coeffs;
    std::vector<ZsVector> generators;
};

struct GroupAtomVerdict {
    ZsVector vector;
    bool is_group_atom = false;
    /// Engaged exactly when is_group_atom is false; re-verified at construction.
    std::optional<GroupAtomWitness> witness;
    /// Engaged exactly when is_group_atom is true: the canonical basis of the
    /// lattice spanned by the shorter elements, against which membership failed.
    std::optional<IntMatrix> shorter_span_basis;
};

/// Decides the group-atom predicate for vectors over one tuple, reusing the
/// atom list and the per-length-threshold lattices across queries.
///
/// A vector m is a group atom iff it is not an integer combination of monoid
/// elements of length < |m|. Every monoid element of length < |m| is an
/// N-combination of atoms of length < |m|, so the two Z-spans coincide and
/// atoms alone generate the lattice that is tested.
class GroupAtomEvaluator {
public:
    explicit GroupAtomEvaluator(ElementTuple tuple, RunConfig cfg = {})
        : tuple_(std::move(tuple)), cfg_(cfg) {}

    const ElementTuple& tuple() const { return tuple_; }

    /// Complete search bound for group atoms over this tuple: a group atom
    /// with |m| > max_i ord(g_i) satisfies 2|m| <= sum_i ord(g_i), so every
    /// group atom has length at most max(max ord, floor(sum ord / 2)).
    std::int64_t search_bound() const {
        return std::max(tuple_.max_order(), tuple_.order_sum() / 2);
    }

    const std::vector<ZsVector>& atoms_up_to_bound(std::int64_t bound) {
        ensure_atoms(bound);
        return atoms_;
    }

    GroupAtomVerdict verdict(const ZsVector& m) {
        if (m.is_zero())
            throw std::invalid_argument(
                "the zero vector is excluded from the group-atom predicate");
        if (m.size() != tuple_.size())
            throw std::invalid_argument("vector size does not match the tuple");

        const std::int64_t len = m.length();
        const LatticeEntry& entry = lattice_for_threshold(len);
        auto lambda = witness(entry.lattice, to_signed(m));
        if (!lambda) {
            GroupAtomVerdict v{m, true, std::nullopt, entry.lattice.basis()};
            // A group atom is in particular an atom; cheap cross-check.
            if (!is_atom(tuple_, m))
                throw std::logic_error("group-atom verdict for a non-atom; evaluator bug");
            return v;
        }
        GroupAtomWitness w;
        for (std::size_t i = 0; i < lambda->size(); ++i) {
            if ((*lambda)[i] == 0) continue;
            w.coeffs.push_back((*lambda)[i]);
            w.generators.push_back(entry.generators[i]);
        }
        verify_witness(m, w);
        return GroupAtomVerdict{m, false, std::move(w), std::nullopt};
    }

    /// Maximal group-atom length over the tuple together with all extremal
    /// verdicts, in lexicographic vector order. Complete by the search bound;
    /// always attained (the minimal-length nonzero monoid element is a group
    /// atom, there being no shorter elements to combine).
    std::pair<std::int64_t, std::vector<GroupAtomVerdict>> max_group_atom_length() {
        ensure_atoms(search_bound());
        std::vector<std::int64_t> lengths;
        for (const auto& a : atoms_) lengths.push_back(a.length());
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

        for (std::int64_t len : lengths) {
            std::vector<GroupAtomVerdict> extremal;
            for (const auto& a : atoms_) {
                if (a.length() != len) continue;
                auto v = verdict(a);
                if (v.is_group_atom) extremal.push_back(std::move(v));
            }
            if (!extremal.empty()) return {len, std::move(extremal)};
        }
        throw std::logic_error("no group atom found; evaluator bug");
    }

    /// All group atoms with length strictly above `threshold` (and at most the
    /// search bound, which no group atom exceeds), as verdicts.
    std::vector<GroupAtomVerdict> group_atoms_above(std::int64_t threshold) {
        ensure_atoms(search_bound());
        std::vector<GroupAtomVerdict> out;
        for (const auto& a : atoms_) {
            if (a.length() <= threshold) continue;
            auto v = verdict(a);
            if (v.is_group_atom) out.push_back(std::move(v));
        }
        return out;
    }

private:
    struct LatticeEntry {
        IntLattice lattice;
        std::vector<ZsVector> generators;
    };

    void ensure_atoms(std::int64_t bound) {
        if (bound <= atoms_bound_) return;
        atoms_ = atoms_up_to(tuple_, bound, cfg_);
        atoms_bound_ = bound;
        // Extending the bound only appends atoms of greater length, so cached
        // lattices for thresholds <= old bound + 1 stay valid.
    }

    const LatticeEntry& lattice_for_threshold(std::int64_t threshold) {
        auto it = lattices_.find(threshold);
        if (it != lattices_.end()) return it->second;
        ensure_atoms(threshold - 1);
        std::vector<ZsVector> gens;
        for (const auto& a : atoms_)
            if (a.length() < threshold) gens.push_back(a);
        std::vector<SignedVector> rows;
        rows.reserve(gens.size());
        for (const auto& g : gens) rows.push_back(to_signed(g));
        IntLattice lattice = normal_form(IntMatrix(std::move(rows), tuple_.size()));
        auto pos = lattices_.emplace(threshold,
                                     LatticeEntry{std::move(lattice), std::move(gens)});
        return pos.first->second;
    }

    void verify_witness(const ZsVector& m, const GroupAtomWitness& w) const {
        SignedVector acc(m.size(), 0);
        for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
            if (w.generators[i].length() >= m.length())
                throw std::logic_error("witness cites a generator of non-smaller length");
            const auto& mult = w.generators[i].multiplicities();
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += w.coeffs[i] * mult[j];
        }
        for (std::size_t j = 0; j < acc.size(); ++j)
            if (acc[j] != m[j]) throw std::logic_error("witness re-multiplication failed");
    }

    ElementTuple tuple_;
    RunConfig cfg_;
    std::int64_t atoms_bound_ = -1;
    std::vector<ZsVector> atoms_;
    std::map<std::int64_t, LatticeEntry> lattices_;
};

inline GroupAtomVerdict is_group_atom(const ElementTuple& t, const ZsVector& m,
                                      const RunConfig& cfg = {}) {
    GroupAtomEvaluator ev(t, cfg);
    return ev.verdict(m);
}

inline std::pair<std::int64_t, std::vector<GroupAtomVerdict>> max_group_atom_length(
    const ElementTuple& t, const RunConfig& cfg = {}) {
    GroupAtomEvaluator ev(t, cfg);
    return ev.max_group_atom_length();
}

}  // namespace zsum

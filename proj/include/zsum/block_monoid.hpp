#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zsum/config.hpp"
#include "zsum/group.hpp"

namespace zsum {

/// A fixed tuple (g_1, ..., g_k) of pairwise distinct elements of one group,
/// with their orders cached. Coordinate order is significant: it is the
/// coordinate order of every multiplicity vector over the tuple.
class ElementTuple {
public:
    ElementTuple(FiniteAbelianGroup group, std::vector<GroupElement> elements)
        : group_(std::move(group)), elements_(std::move(elements)) {
        if (elements_.empty())
            throw std::invalid_argument("element tuple must contain at least one element");
        for (const auto& e : elements_)
            if (!(e.group() == group_))
                throw std::invalid_argument("tuple elements belong to a different group");
        std::set<std::vector<std::int64_t>> seen;
        for (const auto& e : elements_)
            if (!seen.insert(e.residues()).second)
                throw std::invalid_argument("tuple elements must be pairwise distinct");
        orders_.reserve(elements_.size());
        for (const auto& e : elements_) orders_.push_back(order_of(e));
    }

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::size_t size() const { return elements_.size(); }

    std::int64_t max_order() const {
        return *std::max_element(orders_.begin(), orders_.end());
    }
    std::int64_t order_sum() const {
        return std::accumulate(orders_.begin(), orders_.end(), std::int64_t{0});
    }

    /// The tuple (-g_1, ..., -g_k), positions preserved.
    ElementTuple negated() const {
        std::vector<GroupElement> neg;
        neg.reserve(elements_.size());
        for (const auto& e : elements_) neg.push_back(negate(e));
        return ElementTuple(group_, std::move(neg));
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += elements_[i].to_string();
        }
        out.push_back(')');
        return out;
    }

    friend bool operator==(const ElementTuple&, const ElementTuple&) = default;

private:
    FiniteAbelianGroup group_;
    std::vector<GroupElement> elements_;
    std::vector<std::int64_t> orders_;
};

namespace detail {

// sum_j mult[j] * gs[j] == 0, computed coordinatewise with wide intermediates.
// gs need not be distinct here; the public API layers distinctness on top.
inline bool is_zero_sum_raw(const FiniteAbelianGroup& g,
                            const std::vector<GroupElement>& gs,
                            const std::vector<std::int64_t>& mult) {
    const auto& fs = g.factors();
    for (std::size_t c = 0; c < fs.size(); ++c) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < gs.size(); ++j)
            acc = (acc + mul_mod(mult[j], gs[j].residues()[c], fs[c])) % fs[c];
        if (acc != 0) return false;
    }
    return true;
}

// The candidate count for a bounded enumeration is C(max_len+k, k), the number
// of vectors in N^k with coordinate sum <= max_len. Computed with wide
// intermediates; the running product stays exact at every step.
inline bool candidates_within(std::int64_t max_len, std::size_t k, std::int64_t cap) {
    __int128 count = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        count = count * (max_len + static_cast<std::int64_t>(i)) /
                static_cast<std::int64_t>(i);
        if (count > cap) return false;
    }
    return true;
}

inline void check_enumeration_budget(std::int64_t max_len, std::size_t k,
                                     std::int64_t budget) {
    if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
    if (!candidates_within(max_len, k, budget))
        throw BudgetExceeded("enumeration of C(" + std::to_string(max_len) + "+" +
                             std::to_string(k) + ", " + std::to_string(k) +
                             ") candidate vectors exceeds the budget " +
                             std::to_string(budget));
}

// All nonzero m in N^k with |m| <= max_len and sum m_j gs[j] = 0, in
// lexicographic order. Complete enumeration: nested loops over the first k-1
// coordinates with the group sum maintained incrementally, last coordinate
// scanned.
inline std::vector<std::vector<std::int64_t>> enumerate_zero_sum_raw(
    const FiniteAbelianGroup& g, const std::vector<GroupElement>& gs,
    std::int64_t max_len, std::int64_t budget) {
    const std::size_t k = gs.size();
    check_enumeration_budget(max_len, k, budget);

    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> mult(k, 0);
    const auto& fs = g.factors();
    std::vector<std::int64_t> sum(fs.size(), 0);

    auto accumulate = [&](const GroupElement& e, std::int64_t c) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            sum[i] = (sum[i] + mul_mod(c, e.residues()[i], fs[i])) % fs[i];
    };
    auto sum_is_zero = [&] {
        return std::all_of(sum.begin(), sum.end(), [](std::int64_t x) { return x == 0; });
    };

    auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining,
                   std::int64_t used) -> void {
        if (i + 1 == k) {
            for (std::int64_t t = 0; t <= remaining; ++t) {
                if (t > 0) accumulate(gs[i], 1);
                if (used + t > 0 && sum_is_zero()) {
                    mult[i] = t;
                    out.push_back(mult);
                }
            }
            mult[i] = 0;
            accumulate(gs[i], -remaining);
            return;
        }
        for (std::int64_t t = 0; t <= remaining; ++t) {
            if (t > 0) accumulate(gs[i], 1);
            mult[i] = t;
            self(self, i + 1, remaining - t, used + t);
        }
        mult[i] = 0;
        accumulate(gs[i], -remaining);
    };
    rec(rec, 0, max_len, 0);
    return out;
}

// Componentwise-minimal nonzero vectors of the given set. Input must be the
// complete list of nonzero zero-sum vectors up to the length bound; any vector
// strictly below a member is itself a member, so pairwise comparison decides
// minimality. Input order (lexicographic) is preserved.
inline std::vector<std::vector<std::int64_t>> minimal_nonzero(
    const std::vector<std::vector<std::int64_t>>& vecs) {
    auto length_of = [](const std::vector<std::int64_t>& v) {
        return std::accumulate(v.begin(), v.end(), std::int64_t{0});
    };
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& v : vecs) {
        std::int64_t lv = length_of(v);
        bool minimal = true;
        for (const auto& u : vecs) {
            if (length_of(u) >= lv) continue;
            bool below = true;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (u[j] > v[j]) {
                    below = false;
                    break;
                }
            if (below) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(v);
    }
    return out;
}

// Greedy decomposition of a monoid member into atoms from `atoms` (each a
// member itself). Whenever the remainder is nonzero it has an atom below it,
// so the greedy step never gets stuck; returns the pieces used.
inline std::optional<std::vector<std::vector<std::int64_t>>> greedy_decompose(
    std::vector<std::int64_t> v, const std::vector<std::vector<std::int64_t>>& atoms) {
    std::vector<std::vector<std::int64_t>> pieces;
    auto nonzero = [&] {
        return std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    };
    while (nonzero()) {
        bool advanced = false;
        for (const auto& a : atoms) {
            bool fits = true;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (a[j] > v[j]) {
                    fits = false;
                    break;
                }
            if (fits) {
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= a[j];
                pieces.push_back(a);
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
    return pieces;
}

}  // namespace detail

inline bool is_zero_sum(const ElementTuple& t, const std::vector<std::int64_t>& mult) {
    if (mult.size() != t.size())
        throw std::invalid_argument("multiplicity vector size does not match the tuple");
    return detail::is_zero_sum_raw(t.group(), t.elements(), mult);
}

/// A zero-sum multiplicity vector [m_1, ..., m_k] over an ElementTuple.
/// Membership in the block monoid (all m_i >= 0, sum m_i g_i = 0) is a
/// constructor-checked invariant; only the multiplicities are stored.
class ZsVector {
public:
    ZsVector(const ElementTuple& t, std::vector<std::int64_t> mult)
        : mult_(std::move(mult)) {
        if (mult_.size() != t.size())
            throw std::invalid_argument("multiplicity vector size does not match the tuple");
        for (std::int64_t m : mult_)
            if (m < 0) throw std::invalid_argument("multiplicities must be non-negative");
        if (!detail::is_zero_sum_raw(t.group(), t.elements(), mult_))
            throw std::invalid_argument("not a zero-sum vector over the tuple");
        length_ = 0;
        for (std::int64_t m : mult_) length_ = detail::checked_add(length_, m);
    }

    const std::vector<std::int64_t>& multiplicities() const { return mult_; }
    std::int64_t length() const { return length_; }
    std::size_t size() const { return mult_.size(); }
    std::int64_t operator[](std::size_t i) const { return mult_.at(i); }
    bool is_zero() const { return length_ == 0; }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < mult_.size(); ++i)
            if (mult_[i] != 0) s.push_back(i);
        return s;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < mult_.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(mult_[i]);
        }
        out.push_back(']');
        return out;
    }

    friend bool operator==(const ZsVector& a, const ZsVector& b) {
        return a.mult_ == b.mult_;
    }
    friend std::strong_ordering operator<=>(const ZsVector& a, const ZsVector& b) {
        return std::lexicographical_compare_three_way(a.mult_.begin(), a.mult_.end(),
                                                      b.mult_.begin(), b.mult_.end());
    }

private:
    std::vector<std::int64_t> mult_;
    std::int64_t length_ = 0;
};

/// Every nonzero element of B(T) with length <= max_len, each exactly once, in
/// lexicographic order. Completeness is total (no sampling); the candidate
/// count C(max_len+k, k) is checked against the budget up front.
inline std::vector<ZsVector> enumerate_up_to(const ElementTuple& t, std::int64_t max_len,
                                             const RunConfig& cfg = {}) {
    auto raw = detail::enumerate_zero_sum_raw(t.group(), t.elements(), max_len,
                                              cfg.budget_candidates);
    std::vector<ZsVector> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(t, std::move(v));
    return out;
}

/// True iff m has no nonzero proper zero-sum sub-vector, i.e. m is not the sum
/// of two nonzero monoid elements. Decided by a direct sub-vector scan over
/// the box [0,m_1] x ... x [0,m_k] with incremental group sums.
inline bool is_atom(const ElementTuple& t, const ZsVector& m) {
    if (m.is_zero())
        throw std::invalid_argument("the zero vector is not in the domain of is_atom");
    const std::size_t k = t.size();
    const auto& fs = t.group().factors();
    std::vector<std::int64_t> sum(fs.size(), 0);

    auto accumulate = [&](const GroupElement& e, std::int64_t c) {
        for (std::size_t i = 0; i < fs.size(); ++i)
            sum[i] = (sum[i] + detail::mul_mod(c, e.residues()[i], fs[i])) % fs[i];
    };
    auto sum_is_zero = [&] {
        return std::all_of(sum.begin(), sum.end(), [](std::int64_t x) { return x == 0; });
    };

    // Returns true when a nonzero proper zero-sum sub-vector exists.
    auto rec = [&](auto&& self, std::size_t i, bool all_zero, bool all_equal) -> bool {
        if (i == k) {
            if (all_zero || all_equal) return false;
            return sum_is_zero();
        }
        for (std::int64_t v = 0; v <= m[i]; ++v) {
            if (v > 0) accumulate(t.elements()[i], 1);
            if (self(self, i + 1, all_zero && v == 0, all_equal && v == m[i])) {
                accumulate(t.elements()[i], -v);
                return true;
            }
        }
        accumulate(t.elements()[i], -m[i]);
        return false;
    };
    return !rec(rec, 0, true, true);
}

/// Exactly the atoms of B(T) with length <= max_len: the componentwise-minimal
/// nonzero elements of the complete bounded enumeration.
inline std::vector<ZsVector> atoms_up_to(const ElementTuple& t, std::int64_t max_len,
                                         const RunConfig& cfg = {}) {
    auto raw = detail::enumerate_zero_sum_raw(t.group(), t.elements(), max_len,
                                              cfg.budget_candidates);
    auto mins = detail::minimal_nonzero(raw);
    std::vector<ZsVector> out;
    out.reserve(mins.size());
    for (auto& v : mins) out.emplace_back(t, std::move(v));
    return out;
}

enum class DavenportMethod { ExactEnumeration, RankTwoFormula };

struct DavenportResult {
    FiniteAbelianGroup group;
    std::int64_t value = 0;
    DavenportMethod method = DavenportMethod::ExactEnumeration;
    std::vector<ZsVector> extremal_atoms;  // empty for the formula method
};

/// The Davenport constant D(G): the maximal atom length in B(G).
///
/// Exact path: atoms over the tuple of all nonzero elements, enumerated up to
/// length |G| (any zero-sum vector longer than |G| contains a proper nonzero
/// zero-sum sub-vector by the prefix-sum pigeonhole, so no atom exceeds |G|).
/// The identity is excluded from the tuple: its only atom is the length-1
/// vector e_0, and any longer vector using coordinate 0 is decomposable, so
/// the maximum is unaffected.
///
/// When the exact enumeration exceeds the budget and rank(G) <= 2, the known
/// closed form n_1 + n_2 - 1 is reported instead, flagged as such.
inline DavenportResult davenport(const FiniteAbelianGroup& g, const RunConfig& cfg = {}) {
    if (g.trivial())
        // No nonzero elements; the identity alone carries the length-1 atom.
        return DavenportResult{g, 1, DavenportMethod::ExactEnumeration, {}};

    const std::size_t k = static_cast<std::size_t>(g.order() - 1);
    const std::int64_t max_len = g.order();
    if (detail::candidates_within(max_len, k, cfg.budget_candidates)) {
        auto elements = enumerate_elements(g, cfg.budget_candidates);
        elements.erase(elements.begin());  // identity is first in lex order
        ElementTuple t(g, std::move(elements));
        auto atoms = atoms_up_to(t, max_len, cfg);
        std::int64_t best = 0;
        for (const auto& a : atoms) best = std::max(best, a.length());
        std::vector<ZsVector> extremal;
        for (const auto& a : atoms)
            if (a.length() == best) extremal.push_back(a);
        return DavenportResult{g, best, DavenportMethod::ExactEnumeration,
                               std::move(extremal)};
    }
    if (g.rank() <= 2) {
        std::int64_t n1 = g.factors()[0];
        std::int64_t n2 = g.rank() == 2 ? g.factors()[1] : 1;
        return DavenportResult{g, n1 + n2 - 1, DavenportMethod::RankTwoFormula, {}};
    }
    throw BudgetExceeded("exact Davenport enumeration for " + g.to_string() +
                         " exceeds the budget and no closed form applies");
}

}  // namespace zsum

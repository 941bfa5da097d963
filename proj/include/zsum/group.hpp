#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zsum/config.hpp"

namespace zsum {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact group arithmetic");
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact group arithmetic");
    return out;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// (c * a) mod n for canonical a in [0, n); c may be any integer.
inline std::int64_t mul_mod(std::int64_t c, std::int64_t a, std::int64_t n) {
    std::int64_t cr = floor_mod(c, n);
    return static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(cr) * static_cast<unsigned __int128>(a)) %
        static_cast<unsigned __int128>(n));
}

}  // namespace detail

/// A finite abelian group in invariant-factor presentation C_{n1} + ... + C_{nr}
/// with n_r | ... | n_2 | n_1 (largest factor first). The constructor accepts the
/// factors in any order and normalizes; lists that do not form a divisibility
/// chain are rejected, as are factors below 2. The empty list is the trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors) {
        std::sort(factors.begin(), factors.end(), std::greater<>());
        for (std::int64_t f : factors)
            if (f < 2)
                throw std::invalid_argument(
                    "invariant factors must be >= 2 (the trivial group is the empty list)");
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
            if (factors[i] % factors[i + 1] != 0)
                throw std::invalid_argument(
                    "factors do not form a divisibility chain n_r | ... | n_1");
        std::int64_t ord = 1;
        for (std::int64_t f : factors) ord = detail::checked_mul(ord, f);
        factors_ = std::move(factors);
        order_ = ord;
    }

    int rank() const { return static_cast<int>(factors_.size()); }
    bool trivial() const { return factors_.empty(); }
    std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.front(); }
    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& factors() const { return factors_; }

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

    /// Parses a presentation string such as "C12xC4" (case-insensitive,
    /// whitespace-insensitive). The factor list is validated as above.
    static FiniteAbelianGroup parse(std::string_view text) {
        std::string compact;
        compact.reserve(text.size());
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
        if (compact.empty()) throw std::invalid_argument("empty group presentation");

        std::vector<std::int64_t> factors;
        std::size_t pos = 0;
        while (pos < compact.size()) {
            if (compact[pos] != 'C' && compact[pos] != 'c')
                throw std::invalid_argument("expected 'C' in group presentation: " +
                                            std::string(text));
            ++pos;
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(compact.data() + pos,
                                             compact.data() + compact.size(), value);
            if (ec != std::errc() || ptr == compact.data() + pos)
                throw std::invalid_argument("expected an integer after 'C' in: " +
                                            std::string(text));
            factors.push_back(value);
            pos = static_cast<std::size_t>(ptr - compact.data());
            if (pos < compact.size()) {
                if (compact[pos] != 'x' && compact[pos] != 'X')
                    throw std::invalid_argument("expected 'x' between factors in: " +
                                                std::string(text));
                ++pos;
                if (pos == compact.size())
                    throw std::invalid_argument("trailing 'x' in group presentation: " +
                                                std::string(text));
            }
        }
        return FiniteAbelianGroup(std::move(factors));
    }

    std::string to_string() const {
        if (factors_.empty()) return "C1";
        std::string out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i > 0) out.push_back('x');
            out += "C" + std::to_string(factors_[i]);
        }
        return out;
    }

private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_ = 1;
};

/// An element of a FiniteAbelianGroup, stored as the canonical residue tuple
/// (componentwise reduced into [0, n_i)). Immutable value type; structural
/// equality includes the group presentation.
class GroupElement {
public:
    GroupElement(FiniteAbelianGroup group, std::vector<std::int64_t> residues)
        : group_(std::move(group)), residues_(std::move(residues)) {
        if (static_cast<int>(residues_.size()) != group_.rank())
            throw std::invalid_argument("residue count does not match the group rank");
        const auto& fs = group_.factors();
        for (std::size_t i = 0; i < residues_.size(); ++i)
            residues_[i] = detail::floor_mod(residues_[i], fs[i]);
    }

    static GroupElement identity(const FiniteAbelianGroup& g) {
        return GroupElement(g, std::vector<std::int64_t>(g.rank(), 0));
    }

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<std::int64_t>& residues() const { return residues_; }

    bool is_identity() const {
        return std::all_of(residues_.begin(), residues_.end(),
                           [](std::int64_t r) { return r == 0; });
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < residues_.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(residues_[i]);
        }
        out.push_back(')');
        return out;
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.group_ == b.group_ && a.residues_ == b.residues_;
    }

    // Lexicographic on residues; meaningful only within one group.
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
        return std::lexicographical_compare_three_way(
            a.residues_.begin(), a.residues_.end(), b.residues_.begin(), b.residues_.end());
    }

private:
    FiniteAbelianGroup group_;
    std::vector<std::int64_t> residues_;
};

inline void require_same_group(const GroupElement& a, const GroupElement& b) {
    if (!(a.group() == b.group()))
        throw std::invalid_argument("elements belong to different group presentations");
}

inline GroupElement add(const GroupElement& a, const GroupElement& b) {
    require_same_group(a, b);
    const auto& fs = a.group().factors();
    std::vector<std::int64_t> out(a.residues());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (out[i] + b.residues()[i]) % fs[i];
    return GroupElement(a.group(), std::move(out));
}

inline GroupElement scalar_mul(std::int64_t c, const GroupElement& a) {
    const auto& fs = a.group().factors();
    std::vector<std::int64_t> out(a.residues());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = detail::mul_mod(c, out[i], fs[i]);
    return GroupElement(a.group(), std::move(out));
}

inline GroupElement negate(const GroupElement& a) { return scalar_mul(-1, a); }

/// Least positive t with t*a = 0, computed as lcm_i of n_i / gcd(a_i, n_i).
/// Every per-coordinate term divides the group exponent, so the running lcm
/// stays within the exponent and cannot wrap.
inline std::int64_t order_of(const GroupElement& a) {
    const auto& fs = a.group().factors();
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::int64_t t = fs[i] / std::gcd(a.residues()[i], fs[i]);
        ord = std::lcm(ord, t);
    }
    return ord;
}

/// All |G| elements exactly once, in lexicographic order of residue tuples.
inline std::vector<GroupElement> enumerate_elements(
    const FiniteAbelianGroup& g,
    std::int64_t budget = RunConfig{}.budget_candidates) {
    if (g.order() > budget)
        throw BudgetExceeded("group order " + std::to_string(g.order()) +
                             " exceeds the enumeration budget " + std::to_string(budget));
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    std::vector<std::int64_t> cur(g.rank(), 0);
    const auto& fs = g.factors();
    while (true) {
        out.emplace_back(g, cur);
        int i = g.rank() - 1;
        while (i >= 0) {
            if (++cur[i] < fs[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

/// Position of an element in the enumerate_elements order (mixed radix).
inline std::int64_t element_index(const GroupElement& a) {
    const auto& fs = a.group().factors();
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) idx = idx * fs[i] + a.residues()[i];
    return idx;
}

inline GroupElement element_at(const FiniteAbelianGroup& g, std::int64_t index) {
    const auto& fs = g.factors();
    std::vector<std::int64_t> residues(fs.size(), 0);
    for (std::size_t i = fs.size(); i-- > 0;) {
        residues[i] = index % fs[i];
        index /= fs[i];
    }
    return GroupElement(g, std::move(residues));
}

inline std::int64_t least_prime_divisor(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("least_prime_divisor requires n >= 2");
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

}  // namespace zsum

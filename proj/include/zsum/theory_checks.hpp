#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zsum/block_monoid.hpp"
#include "zsum/config.hpp"
#include "zsum/group.hpp"
#include "zsum/group_atom.hpp"
#include "zsum/noether.hpp"
#include "zsum/parallel.hpp"

namespace zsum {

/// Result of one assertion sweep over enumerated data. These are checks of
/// statements on instances, not proofs; instances_checked makes vacuous passes
/// visible.
struct TheoryCheckReport {
    std::string lemma_id;
    bool applicable = true;
    std::int64_t instances_checked = 0;
    std::vector<std::string> violations;
    std::string notes;

    bool passed() const { return violations.empty(); }
};

namespace detail {

inline std::string describe(const ElementTuple& t, const ZsVector& m) {
    return "tuple " + t.to_string() + " m=" + m.to_string();
}

// kappa = gcd_i ord(g_i)/ord(sigma_i), where sigma_i is the projection of g_i
// away from the top cyclic factor. Requires rank >= 2. The subgroup generated
// by (ord(g_i)/kappa) g_i is the order-kappa subgroup of the top factor.
inline std::int64_t tuple_kappa(const FiniteAbelianGroup& g,
                                const std::vector<GroupElement>& elems) {
    const auto& fs = g.factors();
    std::int64_t kappa = 0;
    for (const auto& e : elems) {
        std::int64_t sigma_order = 1;
        for (std::size_t i = 1; i < fs.size(); ++i)
            sigma_order = std::lcm(sigma_order, fs[i] / std::gcd(e.residues()[i], fs[i]));
        kappa = std::gcd(kappa, order_of(e) / sigma_order);
    }
    return kappa;
}

// Elements sorted by (order descending, residues ascending); deterministic.
inline std::vector<GroupElement> sort_by_order_desc(std::vector<GroupElement> elems) {
    std::stable_sort(elems.begin(), elems.end(),
                     [](const GroupElement& a, const GroupElement& b) {
                         std::int64_t oa = order_of(a), ob = order_of(b);
                         if (oa != ob) return oa > ob;
                         return a < b;
                     });
    return elems;
}

inline std::vector<std::vector<std::int32_t>> triples(std::int32_t n_items) {
    return index_combinations_exact(n_items, 3);
}

}  // namespace detail

/// Length-bound check on one tuple: every group atom with |m| > max_i ord(g_i)
/// must satisfy 2|m| <= sum_i ord(g_i).
inline TheoryCheckReport check_length_bound(
    const ElementTuple& t, const std::vector<GroupAtomVerdict>& group_atoms) {
    TheoryCheckReport rep;
    rep.lemma_id = "length-bound";
    const std::int64_t max_ord = t.max_order();
    const std::int64_t ord_sum = t.order_sum();
    for (const auto& v : group_atoms) {
        if (!v.is_group_atom || v.vector.length() <= max_ord) continue;
        ++rep.instances_checked;
        if (2 * v.vector.length() > ord_sum)
            rep.violations.push_back(detail::describe(t, v.vector) +
                                     ": 2|m| exceeds the order sum");
    }
    return rep;
}

/// Length-bound sweep over all subsets of size 1..rank+1 of the nonzero
/// elements of G.
inline TheoryCheckReport run_length_bound_sweep(const FiniteAbelianGroup& g,
                                                const RunConfig& cfg = {}) {
    TheoryCheckReport rep;
    rep.lemma_id = "length-bound";
    if (g.trivial()) {
        rep.applicable = false;
        rep.notes = "trivial group";
        return rep;
    }
    auto all = enumerate_elements(g, cfg.budget_candidates);
    std::vector<GroupElement> pool(all.begin() + 1, all.end());
    const int max_size = std::min<int>(g.rank() + 1, static_cast<int>(pool.size()));
    auto combos = detail::index_combinations(static_cast<std::int32_t>(pool.size()),
                                             max_size);

    std::vector<TheoryCheckReport> partial(combos.size());
    parallel_for_index(combos.size(), cfg.effective_workers(), [&](std::size_t idx) {
        std::vector<GroupElement> elems;
        for (std::int32_t i : combos[idx]) elems.push_back(pool[static_cast<std::size_t>(i)]);
        ElementTuple t(g, std::move(elems));
        GroupAtomEvaluator ev(t, cfg);
        partial[idx] = check_length_bound(t, ev.group_atoms_above(t.max_order()));
    });
    for (const auto& p : partial) {
        rep.instances_checked += p.instances_checked;
        rep.violations.insert(rep.violations.end(), p.violations.begin(),
                              p.violations.end());
    }
    rep.notes = std::to_string(combos.size()) + " tuples swept";
    return rep;
}

namespace detail {

struct ParityCertificate {
    bool ok = false;
    std::string failure;
    std::string case_id;
    std::array<int, 3> perm{};          // position i holds the original index
    std::int64_t x = 0, y = 0, z = 0;   // proof quantities in permuted order
    std::array<std::int64_t, 3> b{};    // the all-even combination
};

// Re-derivation of the parity proposition's proof on one qualifying instance:
// permute so that m3 is even and m1 <= m2 are odd, derive x, y, z, pick the
// proof's case, and verify the resulting combination b is a monoid element
// with all coordinates even and total length < 2|m|. Combinations citing the
// vector [n, n, (l-1)n] additionally verify its decomposition into monoid
// elements of length at most l*n.
inline ParityCertificate build_parity_certificate(const FiniteAbelianGroup& g,
                                                  const std::vector<GroupElement>& elems,
                                                  const std::vector<std::int64_t>& m,
                                                  std::int64_t l, std::int64_t n,
                                                  std::int64_t budget) {
    ParityCertificate cert;
    const std::int64_t ln = l * n;

    int even_idx = -1;
    std::vector<int> odd_idx;
    for (int i = 0; i < 3; ++i) {
        if (m[static_cast<std::size_t>(i)] % 2 == 0)
            even_idx = i;
        else
            odd_idx.push_back(i);
    }
    if (odd_idx.size() != 2) {
        cert.failure = "not exactly one even coordinate";
        return cert;
    }
    if (m[static_cast<std::size_t>(odd_idx[0])] > m[static_cast<std::size_t>(odd_idx[1])])
        std::swap(odd_idx[0], odd_idx[1]);
    cert.perm = {odd_idx[0], odd_idx[1], even_idx};

    std::array<GroupElement, 3> gp = {elems[static_cast<std::size_t>(cert.perm[0])],
                                      elems[static_cast<std::size_t>(cert.perm[1])],
                                      elems[static_cast<std::size_t>(cert.perm[2])]};
    std::array<std::int64_t, 3> mp = {m[static_cast<std::size_t>(cert.perm[0])],
                                      m[static_cast<std::size_t>(cert.perm[1])],
                                      m[static_cast<std::size_t>(cert.perm[2])]};

    // x, y, z in {0,...,l-1}: [xn, n, 0], [n, yn, 0], [n, n, zn] are zero-sum.
    auto solve = [&](const GroupElement& base, const GroupElement& target,
                     std::int64_t& out) {
        for (std::int64_t c = 0; c < l; ++c)
            if (scalar_mul(c * n, base) == target) {
                out = c;
                return true;
            }
        return false;
    };
    if (!solve(gp[0], negate(scalar_mul(n, gp[1])), cert.x)) {
        cert.failure = "no x with -n g2 = x n g1";
        return cert;
    }
    if (!solve(gp[1], negate(scalar_mul(n, gp[0])), cert.y)) {
        cert.failure = "no y with -n g1 = y n g2";
        return cert;
    }
    if (!solve(gp[2], negate(add(scalar_mul(n, gp[0]), scalar_mul(n, gp[1]))), cert.z)) {
        cert.failure = "no z with -(n g1 + n g2) = z n g3";
        return cert;
    }
    if (cert.x == 0 || cert.y == 0) {
        cert.failure = "x or y vanished despite ord(g1)=ord(g2)=ln";
        return cert;
    }

    const std::int64_t x = cert.x, y = cert.y, z = cert.z;
    std::array<std::int64_t, 3>& b = cert.b;
    bool cites_long_z = false;  // combination uses [n, n, (l-1)n]

    if (x % 2 == 1) {
        cert.case_id = "1";
        b = {mp[0] + x * n, mp[1] + n, mp[2]};
    } else if (y % 2 == 1) {
        cert.case_id = "2";
        b = {mp[0] + n, mp[1] + y * n, mp[2]};
    } else if (z % 2 == 0 && z < l - 1) {
        cert.case_id = "3";
        b = {mp[0] + n, mp[1] + n, mp[2] + z * n};
    } else if (mp[0] < n && n <= mp[1]) {
        cert.case_id = "4";
        b = {mp[0] + ln - x * n, mp[1] - n, mp[2]};
    } else if (n <= mp[0]) {
        if (z % 2 == 1) {
            cert.case_id = "5a";
            b = {mp[0] - n, mp[1] - n, mp[2] + ln - z * n};
        } else {
            cert.case_id = "5b";
            b = {mp[0] - n, mp[1] - n, mp[2] + ln + n};
            cites_long_z = true;
        }
    } else {  // mp[0] <= mp[1] < n
        if (z % 2 == 1) {
            cert.case_id = "6a";
            b = {n - mp[0], n - mp[1], ln + z * n - mp[2]};
        } else if (mp[2] + n <= ln) {
            cert.case_id = "6b-i";
            b = {n - mp[0], n - mp[1], ln - n - mp[2]};
            cites_long_z = true;
        } else if (x == l - 1 || y == l - 1) {
            cert.case_id = "6b-ii-A";
            if (x != l - 1 || y != l - 1) {
                cert.failure = "x = l-1 and y = l-1 should imply each other";
                return cert;
            }
            b = {ln - mp[0], ln - 2 * n - mp[1], ln + n - mp[2]};
            cites_long_z = true;
        } else {
            cert.case_id = "6b-ii-C";
            b = {mp[0] + ln - (2 + x) * n, mp[1] + ln - (2 + y) * n, mp[2] - ln + n};
            cites_long_z = true;
        }
    }

    for (std::int64_t bi : b) {
        if (bi < 0) {
            cert.failure = "case " + cert.case_id + ": combination left the monoid";
            return cert;
        }
        if (bi % 2 != 0) {
            cert.failure = "case " + cert.case_id + ": combination has an odd coordinate";
            return cert;
        }
    }
    std::vector<GroupElement> tuple_vec(gp.begin(), gp.end());
    if (!is_zero_sum_raw(g, tuple_vec, {b[0], b[1], b[2]})) {
        cert.failure = "case " + cert.case_id + ": combination is not zero-sum";
        return cert;
    }
    const std::int64_t m_len = mp[0] + mp[1] + mp[2];
    if (b[0] + b[1] + b[2] >= 2 * m_len) {
        cert.failure = "case " + cert.case_id + ": total length not below 2|m|";
        return cert;
    }

    if (cites_long_z && z == l - 1) {
        // [n, n, (l-1)n] has length (l+1)n > ln; the lemma's hypotheses need
        // every cited element shorter than |m|, so verify it splits into
        // monoid elements of length <= ln. Working over (n g1, n g2, n g3),
        // which lie in the order-l subgroup, atoms have length <= l.
        std::vector<GroupElement> scaled = {scalar_mul(n, gp[0]), scalar_mul(n, gp[1]),
                                            scalar_mul(n, gp[2])};
        auto atoms = minimal_nonzero(enumerate_zero_sum_raw(g, scaled, l, budget));
        auto pieces = greedy_decompose({1, 1, z}, atoms);
        if (!pieces) {
            cert.failure = "case " + cert.case_id + ": [1,1,z] did not decompose";
            return cert;
        }
        for (const auto& p : *pieces) {
            if (p[0] + p[1] + p[2] > l) {
                cert.failure = "case " + cert.case_id + ": decomposition piece above l";
                return cert;
            }
        }
    }

    cert.ok = true;
    return cert;
}

}  // namespace detail

/// Parity proposition sweep over an odd-order group with l = n1/n2 > 1: over
/// every triple of elements of order l*n, every monoid element with length
/// above l*n and exactly one even coordinate must fail the group-atom test,
/// certified both by the generic lattice test and by the proof's constructed
/// all-even combination.
inline TheoryCheckReport check_parity_lemma(const FiniteAbelianGroup& g,
                                            const RunConfig& cfg = {}) {
    TheoryCheckReport rep;
    rep.lemma_id = "parity";
    if (g.order() % 2 == 0) {
        rep.applicable = false;
        rep.notes = "not applicable: group order is even";
        return rep;
    }
    if (g.rank() < 2) {
        rep.applicable = false;
        rep.notes = "not applicable: rank below two";
        return rep;
    }
    const std::int64_t n = g.factors()[1];
    const std::int64_t l = g.factors()[0] / n;
    if (l <= 1) {
        rep.applicable = false;
        rep.notes = "not applicable: l = n1/n2 equals 1";
        return rep;
    }
    const std::int64_t ln = g.factors()[0];

    std::vector<GroupElement> pool;
    for (const auto& e : enumerate_elements(g, cfg.budget_candidates))
        if (order_of(e) == ln) pool.push_back(e);
    auto combos = detail::triples(static_cast<std::int32_t>(pool.size()));

    std::vector<TheoryCheckReport> partial(combos.size());
    parallel_for_index(combos.size(), cfg.effective_workers(), [&](std::size_t idx) {
        TheoryCheckReport local;
        std::vector<GroupElement> elems;
        for (std::int32_t i : combos[idx]) elems.push_back(pool[static_cast<std::size_t>(i)]);
        ElementTuple t(g, elems);
        GroupAtomEvaluator ev(t, cfg);
        const std::int64_t bound = ev.search_bound();
        for (const auto& m : enumerate_up_to(t, bound, cfg)) {
            if (m.length() <= ln) continue;
            int evens = 0;
            for (std::int64_t c : m.multiplicities()) evens += (c % 2 == 0);
            if (evens != 1) continue;
            ++local.instances_checked;
            auto v = ev.verdict(m);
            if (v.is_group_atom)
                local.violations.push_back(detail::describe(t, m) +
                                           ": lattice test reports a group atom");
            auto cert = detail::build_parity_certificate(g, elems, m.multiplicities(), l,
                                                         n, cfg.budget_candidates);
            if (!cert.ok)
                local.violations.push_back(detail::describe(t, m) + ": " + cert.failure);
        }
        partial[idx] = std::move(local);
    });
    for (const auto& p : partial) {
        rep.instances_checked += p.instances_checked;
        rep.violations.insert(rep.violations.end(), p.violations.begin(),
                              p.violations.end());
    }
    rep.notes = std::to_string(combos.size()) + " triples of order-" +
                std::to_string(ln) + " elements swept";
    return rep;
}

/// Kappa-lemma check on one triple. Applicable when rank >= 2, l > 1, kappa > 1
/// and a group atom with |m| > ord(g_1) exists (elements taken in descending
/// order of their orders). Asserts (i) kappa - 1 >= sum of the floor
/// quantities a_i, (iii) kappa != 2 plus the sharpened length inequality, and
/// constructs the decomposition (ii) sum ord(g_i) e_i = m + m~ + m_c with all
/// of its stated properties.
inline TheoryCheckReport check_kappa_lemma(const ElementTuple& tuple,
                                           const RunConfig& cfg = {}) {
    TheoryCheckReport rep;
    rep.lemma_id = "kappa";
    const FiniteAbelianGroup& g = tuple.group();
    if (tuple.size() != 3) {
        rep.applicable = false;
        rep.notes = "not applicable: tuple size is not 3";
        return rep;
    }
    if (g.rank() < 2 || g.factors()[0] / g.factors()[1] <= 1) {
        rep.applicable = false;
        rep.notes = "not applicable: requires rank >= 2 and l > 1";
        return rep;
    }

    auto elems = detail::sort_by_order_desc(tuple.elements());
    const std::int64_t kappa = detail::tuple_kappa(g, elems);
    if (kappa <= 1) {
        rep.applicable = false;
        rep.notes = "not applicable: kappa = 1";
        return rep;
    }

    ElementTuple t(g, elems);
    const auto& ords = t.orders();
    GroupAtomEvaluator ev(t, cfg);
    auto qualifying = ev.group_atoms_above(ords[0]);
    if (qualifying.empty()) {
        rep.notes = "kappa = " + std::to_string(kappa) +
                    "; no group atom above ord(g1); vacuous pass";
        return rep;
    }

    for (std::int64_t o : ords)
        if (o % kappa != 0) {
            rep.violations.push_back(t.to_string() + ": kappa does not divide ord(g_i)");
            return rep;
        }

    // h_i = (ord(g_i)/kappa) g_i must all generate the same order-kappa subgroup.
    std::vector<GroupElement> h;
    for (std::size_t i = 0; i < 3; ++i) h.push_back(scalar_mul(ords[i] / kappa, elems[i]));
    for (const auto& hi : h)
        if (order_of(hi) != kappa) {
            rep.violations.push_back(t.to_string() + ": h_i does not have order kappa");
            return rep;
        }
    for (std::size_t i = 1; i < 3; ++i) {
        std::set<std::vector<std::int64_t>> s0, si;
        for (std::int64_t c = 0; c < kappa; ++c) {
            s0.insert(scalar_mul(c, h[0]).residues());
            si.insert(scalar_mul(c, h[i]).residues());
        }
        if (s0 != si) {
            rep.violations.push_back(t.to_string() + ": <h_i> differ");
            return rep;
        }
    }

    // Atoms of B(h1,h2,h3); repeats among the h_i are fine here. Complete up
    // to length kappa = |H| by the pigeonhole bound.
    auto h_atoms = detail::minimal_nonzero(
        detail::enumerate_zero_sum_raw(g, h, kappa, cfg.budget_candidates));

    for (const auto& verdict : qualifying) {
        ++rep.instances_checked;
        const auto& m = verdict.vector;
        const std::string who = detail::describe(t, m);

        if (kappa == 2) {
            rep.violations.push_back(who + ": kappa = 2 with a group atom above ord(g1)");
            continue;
        }
        bool coord_ok = true;
        std::array<std::int64_t, 3> a{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (m[i] >= ords[i]) {
                rep.violations.push_back(who + ": group atom coordinate >= ord(g_i)");
                coord_ok = false;
                break;
            }
            a[i] = m[i] * kappa / ords[i];
        }
        if (!coord_ok) continue;

        if (a[0] + a[1] + a[2] > kappa - 1)
            rep.violations.push_back(who + ": (i) fails, sum a_i > kappa - 1");

        if (2 * m.length() + ords[1] / kappa + (kappa - 2) * (ords[2] / kappa) >
            ords[0] + ords[1] + ords[2])
            rep.violations.push_back(who + ": (iii) inequality fails");

        // (ii): greedy construction of m_c from atoms of B(h1,h2,h3).
        std::array<std::int64_t, 3> c{};
        std::vector<std::vector<std::int64_t>> picked;
        while (true) {
            bool advanced = false;
            for (const auto& f : h_atoms) {
                if (f[0] <= kappa - a[0] - 1 - c[0] && f[1] <= kappa - a[1] - 1 - c[1] &&
                    f[2] <= kappa - a[2] - 1 - c[2]) {
                    for (std::size_t i = 0; i < 3; ++i) c[i] += f[i];
                    picked.push_back(f);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        std::int64_t residual = 0;
        for (std::size_t i = 0; i < 3; ++i) residual += kappa - a[i] - 1 - c[i];
        if (residual >= kappa)
            rep.violations.push_back(who + ": (ii) greedy stopped with >= kappa headroom");
        if (c[0] + c[1] + c[2] < kappa - 1)
            rep.violations.push_back(who + ": (ii) sum c_i < kappa - 1");

        std::array<std::int64_t, 3> m_c{};
        bool lift_ok = true;
        for (const auto& f : picked) {
            std::int64_t lift_len = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                m_c[i] += f[i] * (ords[i] / kappa);
                lift_len += f[i] * (ords[i] / kappa);
            }
            if (lift_len > ords[0]) lift_ok = false;
        }
        if (!lift_ok)
            rep.violations.push_back(who + ": (ii) a lifted atom exceeds ord(g1)");
        if (!detail::is_zero_sum_raw(g, elems, {m_c[0], m_c[1], m_c[2]}))
            rep.violations.push_back(who + ": (ii) m_c is not zero-sum");
        int supp = 0;
        for (std::int64_t v : m_c) supp += (v != 0);
        if (supp < 2) rep.violations.push_back(who + ": (ii) |supp(m_c)| < 2");

        std::array<std::int64_t, 3> m_tilde{};
        bool nonneg = true;
        for (std::size_t i = 0; i < 3; ++i) {
            m_tilde[i] = ords[i] - m[i] - m_c[i];
            if (m_tilde[i] < 0) nonneg = false;
        }
        if (!nonneg) {
            rep.violations.push_back(who + ": (ii) m~ has a negative coordinate");
            continue;
        }
        if (!detail::is_zero_sum_raw(g, elems, {m_tilde[0], m_tilde[1], m_tilde[2]}))
            rep.violations.push_back(who + ": (ii) m~ is not zero-sum");
        if (m_tilde[0] + m_tilde[1] + m_tilde[2] < m.length())
            rep.violations.push_back(who + ": (ii) |m~| < |m|");
    }
    rep.notes = "kappa = " + std::to_string(kappa) + ", " +
                std::to_string(rep.instances_checked) + " group atoms above ord(g1)";
    return rep;
}

/// Kappa-lemma sweep over all triples of nonzero elements.
inline TheoryCheckReport run_kappa_sweep(const FiniteAbelianGroup& g,
                                         const RunConfig& cfg = {}) {
    TheoryCheckReport rep;
    rep.lemma_id = "kappa";
    if (g.rank() < 2 || g.factors()[0] / g.factors()[1] <= 1) {
        rep.applicable = false;
        rep.notes = "not applicable: requires rank >= 2 and l > 1";
        return rep;
    }
    auto all = enumerate_elements(g, cfg.budget_candidates);
    std::vector<GroupElement> pool(all.begin() + 1, all.end());
    auto combos = detail::triples(static_cast<std::int32_t>(pool.size()));

    std::vector<TheoryCheckReport> partial(combos.size());
    parallel_for_index(combos.size(), cfg.effective_workers(), [&](std::size_t idx) {
        std::vector<GroupElement> elems;
        for (std::int32_t i : combos[idx]) elems.push_back(pool[static_cast<std::size_t>(i)]);
        partial[idx] = check_kappa_lemma(ElementTuple(g, std::move(elems)), cfg);
    });
    std::int64_t applicable_tuples = 0;
    for (const auto& p : partial) {
        if (!p.applicable) continue;
        ++applicable_tuples;
        rep.instances_checked += p.instances_checked;
        rep.violations.insert(rep.violations.end(), p.violations.begin(),
                              p.violations.end());
    }
    rep.notes = std::to_string(combos.size()) + " triples swept, " +
                std::to_string(applicable_tuples) + " with kappa > 1";
    return rep;
}

/// Case-theorem sweep for rank-two groups with l > 1: over every triple of
/// nonzero elements, every group atom respects |m| <= l*n + n/p, and the
/// qualifying instances of the supporting propositions hold.
inline TheoryCheckReport check_case_theorem(const FiniteAbelianGroup& g,
                                            const RunConfig& cfg = {}) {
    TheoryCheckReport rep;
    rep.lemma_id = "case-theorem";
    if (g.rank() != 2) {
        rep.applicable = false;
        rep.notes = "not applicable: rank is not two";
        return rep;
    }
    const std::int64_t n = g.factors()[1];
    const std::int64_t l = g.factors()[0] / n;
    if (l <= 1) {
        rep.applicable = false;
        rep.notes = "not applicable: l = 1 (covered by the C_n^r theorem)";
        return rep;
    }
    const std::int64_t ln = g.factors()[0];
    const std::int64_t bound = ln + n / least_prime_divisor(n);

    auto all = enumerate_elements(g, cfg.budget_candidates);
    std::vector<GroupElement> pool(all.begin() + 1, all.end());
    auto combos = detail::triples(static_cast<std::int32_t>(pool.size()));

    struct Partial {
        TheoryCheckReport rep;
        std::int64_t max_len = 0;
        std::int64_t above_ln = 0;
    };
    std::vector<Partial> partial(combos.size());
    parallel_for_index(combos.size(), cfg.effective_workers(), [&](std::size_t idx) {
        Partial local;
        std::vector<GroupElement> elems;
        for (std::int32_t i : combos[idx]) elems.push_back(pool[static_cast<std::size_t>(i)]);
        elems = detail::sort_by_order_desc(std::move(elems));
        ElementTuple t(g, elems);
        const auto& ords = t.orders();
        GroupAtomEvaluator ev(t, cfg);

        auto [max_len, extremal] = ev.max_group_atom_length();
        local.max_len = max_len;
        ++local.rep.instances_checked;
        if (max_len > bound)
            local.rep.violations.push_back(t.to_string() +
                                           ": group atom above l*n + n/p, length " +
                                           std::to_string(max_len));

        const std::int64_t kappa = detail::tuple_kappa(g, elems);
        if (ords[0] == ln && ords[1] == ln) {
            // Proposition "o>1": (i) ord(g3) not dividing n forces kappa > 1;
            // (ii) ord(g3)/kappa <= n.
            if (n % ords[2] != 0 && kappa <= 1)
                local.rep.violations.push_back(t.to_string() +
                                               ": kappa = 1 with ord(g3) not dividing n");
            if (ords[2] > kappa * n)
                local.rep.violations.push_back(t.to_string() + ": ord(g3)/kappa > n");
        }

        for (const auto& v : ev.group_atoms_above(ords[0])) {
            ++local.above_ln;
            const std::int64_t len = v.vector.length();
            const std::string who = detail::describe(t, v.vector);
            if (ords[1] < ln && len > ln)
                local.rep.violations.push_back(who + ": violates |m| <= l*n for ord(g2) < l*n");
            if (ords[0] == ln && ords[1] == ln && n % ords[2] != 0) {
                if (ords[2] != ln)
                    local.rep.violations.push_back(who + ": ord(g3) neither divides n nor equals l*n");
                else if (kappa > 1 && 2 * kappa * (len - ln) > 2 * ords[2] - ln)
                    local.rep.violations.push_back(who + ": sharpened inequality fails");
            }
            if (ln % 2 == 0 && ords[0] == ln && ords[1] == ln && ords[2] == ln &&
                len > bound)
                local.rep.violations.push_back(who + ": even-case bound fails");
        }
        partial[idx] = std::move(local);
    });

    std::int64_t attained = 0, above = 0;
    for (const auto& p : partial) {
        rep.instances_checked += p.rep.instances_checked;
        rep.violations.insert(rep.violations.end(), p.rep.violations.begin(),
                              p.rep.violations.end());
        attained = std::max(attained, p.max_len);
        above += p.above_ln;
    }
    rep.notes = std::to_string(combos.size()) + " triples swept; max group-atom length " +
                std::to_string(attained) + " against bound " + std::to_string(bound) +
                "; " + std::to_string(above) + " group atoms above ord(g1)";
    return rep;
}

/// Lower-bound check for even-rank groups: computed beta_sep must reach
/// n_1 + ... + n_s + n_{s+1}/p.
inline TheoryCheckReport check_lower_bound(const FiniteAbelianGroup& g,
                                           const RunConfig& cfg = {}) {
    TheoryCheckReport rep;
    rep.lemma_id = "lower-bound";
    auto lower = sep_lower_bound(g);
    if (!lower) {
        rep.applicable = false;
        rep.notes = "not applicable: rank is odd";
        return rep;
    }
    auto res = beta_sep(g, cfg);
    rep.instances_checked = 1;
    if (res.beta_sep < *lower)
        rep.violations.push_back(g.to_string() + ": beta_sep " +
                                 std::to_string(res.beta_sep) + " below bound " +
                                 std::to_string(*lower));
    rep.notes = "beta_sep = " + std::to_string(res.beta_sep) + ", bound = " +
                std::to_string(*lower);
    return rep;
}

/// All applicable checks for one group, in a fixed order.
inline std::vector<TheoryCheckReport> run_all_checks(const FiniteAbelianGroup& g,
                                                     const RunConfig& cfg = {}) {
    std::vector<TheoryCheckReport> reports;
    reports.push_back(run_length_bound_sweep(g, cfg));
    reports.push_back(check_parity_lemma(g, cfg));
    reports.push_back(run_kappa_sweep(g, cfg));
    reports.push_back(check_case_theorem(g, cfg));
    reports.push_back(check_lower_bound(g, cfg));
    return reports;
}

}  // namespace zsum

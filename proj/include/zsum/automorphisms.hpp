#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zsum/group.hpp"

namespace zsum {

/// All automorphisms of G, each as a permutation of element indices in the
/// enumerate_elements (lexicographic) order. Enumerated by choosing an image
/// for each canonical generator e_i among the elements annihilated by n_i and
/// keeping the bijective homomorphisms. Intended for desk-scale groups; the
/// cost is governed by |G|^(rank+1).
inline std::vector<std::vector<std::int32_t>> automorphism_index_maps(
    const FiniteAbelianGroup& g, std::int64_t budget = RunConfig{}.budget_candidates) {
    const auto elements = enumerate_elements(g, budget);
    const std::int64_t n = g.order();
    const int r = g.rank();
    const auto& fs = g.factors();

    // Candidate images for each canonical generator: elements of order dividing n_i.
    std::vector<std::vector<std::int32_t>> candidates(r);
    for (int i = 0; i < r; ++i)
        for (std::int64_t e = 0; e < n; ++e)
            if (fs[i] % order_of(elements[e]) == 0)
                candidates[i].push_back(static_cast<std::int32_t>(e));

    std::vector<std::vector<std::int32_t>> maps;
    std::vector<std::int32_t> images(r, 0);

    auto build_map = [&]() {
        // phi(x) = sum_i x_i * images[i]; reject non-bijections.
        std::vector<std::int32_t> map(static_cast<std::size_t>(n));
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (std::int64_t e = 0; e < n; ++e) {
            GroupElement img = GroupElement::identity(g);
            for (int i = 0; i < r; ++i) {
                std::int64_t xi = elements[e].residues()[i];
                if (xi != 0) img = add(img, scalar_mul(xi, elements[images[i]]));
            }
            std::int64_t idx = element_index(img);
            if (seen[static_cast<std::size_t>(idx)]) return;  // not injective
            seen[static_cast<std::size_t>(idx)] = true;
            map[static_cast<std::size_t>(e)] = static_cast<std::int32_t>(idx);
        }
        maps.push_back(std::move(map));
    };

    auto rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            build_map();
            return;
        }
        for (std::int32_t c : candidates[i]) {
            images[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (maps.empty()) throw std::logic_error("automorphism enumeration found no identity");
    return maps;
}

/// Lexicographically least image of the subset (given as sorted element
/// indices) over all automorphisms; subsets equal to their own representative
/// form a transversal of the Aut(G)-orbits.
inline std::vector<std::int32_t> orbit_representative(
    const std::vector<std::int32_t>& subset,
    const std::vector<std::vector<std::int32_t>>& maps) {
    std::vector<std::int32_t> best = subset;
    std::vector<std::int32_t> image(subset.size());
    for (const auto& map : maps) {
        for (std::size_t i = 0; i < subset.size(); ++i)
            image[i] = map[static_cast<std::size_t>(subset[i])];
        std::sort(image.begin(), image.end());
        if (image < best) best = image;
    }
    return best;
}

}  // namespace zsum

#pragma once

#include <optional>
#include <vector>

#include "vcm/complex.hpp"

namespace vcm {

struct ShellingCheck {
    bool ok = false;
    // 0-based position in the order whose prefix condition failed (>= 1);
    // -1 when the order is a shelling.
    int failure_index = -1;
};

// order is a permutation of 0..#facets-1 (indices into facets() in canonical
// order).  Requires a pure, non-void complex.  The order is a shelling iff
// for each i >= 1 the complex ⟨F_order[0..i-1]⟩ ∩ ⟨F_order[i]⟩ is pure of
// dimension dim F_order[i] - 1.
ShellingCheck is_shelling(const SimplicialComplex& complex, const std::vector<int>& order);

// Exhaustive backtracking over facet orders, earliest-candidate-first, with
// dead-prefix memoization; returns the lexicographically first shelling (in
// canonical facet order) or nothing when the complex is not shellable.
std::optional<std::vector<int>> find_shelling(const SimplicialComplex& complex);

} // namespace vcm

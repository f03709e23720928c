#include "vcm/shelling.hpp"

#include <algorithm>
#include <unordered_set>

namespace vcm {

namespace {

void require_pure(const SimplicialComplex& complex) {
    if (complex.is_void()) throw invalid_input("shelling of the void complex");
    if (!complex.is_pure()) throw invalid_input("shelling is defined for pure complexes only");
}

// ⟨prefix⟩ ∩ ⟨next⟩ pure of dimension dim(next) - 1?  The intersection's
// facets are the maximal ones among {F ∩ next : F in prefix}.
bool step_ok(const std::vector<Face>& prefix, Face next) {
    std::vector<Face> meets;
    meets.reserve(prefix.size());
    for (Face f : prefix) meets.push_back(f & next);
    for (Face m : meets) {
        bool maximal = true;
        for (Face o : meets)
            if (m != o && m.subset_of(o)) {
                maximal = false;
                break;
            }
        if (maximal && m.dim() != next.dim() - 1) return false;
    }
    return true;
}

} // namespace

ShellingCheck is_shelling(const SimplicialComplex& complex, const std::vector<int>& order) {
    require_pure(complex);
    const auto& facets = complex.facets();
    if (order.size() != facets.size()) throw invalid_input("shelling order must list every facet exactly once");
    std::vector<bool> seen(facets.size(), false);
    for (int i : order) {
        if (i < 0 || i >= static_cast<int>(facets.size()) || seen[static_cast<std::size_t>(i)])
            throw invalid_input("shelling order must be a permutation of the facet indices");
        seen[static_cast<std::size_t>(i)] = true;
    }
    std::vector<Face> prefix;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Face next = facets[static_cast<std::size_t>(order[i])];
        if (i > 0 && !step_ok(prefix, next)) return {false, static_cast<int>(i)};
        prefix.push_back(next);
    }
    return {true, -1};
}

std::optional<std::vector<int>> find_shelling(const SimplicialComplex& complex) {
    require_pure(complex);
    const auto& facets = complex.facets();
    const std::size_t n = facets.size();
    if (n == 0) return std::nullopt;
    if (n > 63) throw invalid_input("facet count too large for the shelling search");

    // Whether a partial order can be completed depends only on the set of
    // facets used so far, so dead sets are memoized.
    std::unordered_set<std::uint64_t> dead;
    std::vector<int> order;
    std::vector<Face> prefix;

    auto dfs = [&](auto&& self, std::uint64_t used) -> bool {
        if (order.size() == n) return true;
        if (dead.count(used)) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (used & (std::uint64_t{1} << i)) continue;
            if (!prefix.empty() && !step_ok(prefix, facets[i])) continue;
            order.push_back(static_cast<int>(i));
            prefix.push_back(facets[i]);
            if (self(self, used | (std::uint64_t{1} << i))) return true;
            order.pop_back();
            prefix.pop_back();
        }
        dead.insert(used);
        return false;
    };
    if (dfs(dfs, 0)) return order;
    return std::nullopt;
}

} // namespace vcm

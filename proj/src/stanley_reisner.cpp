#include "vcm/stanley_reisner.hpp"

#include <algorithm>
#include <set>

namespace vcm {

long BettiTable::total(int i) const {
    long t = 0;
    for (const auto& [key, v] : entries)
        if (key.first == i) t += v;
    return t;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, v] : entries)
        if (v > 0) pd = std::max(pd, key.first);
    return pd;
}

std::vector<long> BettiTable::totals() const {
    std::vector<long> out(static_cast<std::size_t>(projective_dimension()) + 1, 0);
    for (const auto& [key, v] : entries) out[static_cast<std::size_t>(key.first)] += v;
    return out;
}

MonomialIdeal sr_ideal(const SimplicialComplex& complex) {
    const std::size_t n = static_cast<std::size_t>(complex.vertices().size());
    if (complex.is_void())
        return MonomialIdeal::from_generators(complex.vertices(), {Monomial::unit(n)});
    // A minimal non-face is a non-face all of whose vertex-deletions are
    // faces, so every candidate is (face ∪ one extra vertex).
    std::set<Face, CanonicalFaceLess> faces;
    for (Face f : complex.all_faces()) faces.insert(f);
    std::set<Face, CanonicalFaceLess> gens;
    for (Face f : faces) {
        for (int v = 0; v < complex.vertices().size(); ++v) {
            if (f.contains(v)) continue;
            Face cand = f.with(v);
            if (faces.count(cand)) continue;
            bool minimal = true;
            for (int u : cand.indices())
                if (!faces.count(cand.without(u))) {
                    minimal = false;
                    break;
                }
            if (minimal) gens.insert(cand);
        }
    }
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    for (Face g : gens) ms.push_back(Monomial::squarefree(n, g));
    return MonomialIdeal::from_generators(complex.vertices(), std::move(ms));
}

SimplicialComplex complex_from_sr(const MonomialIdeal& ideal) {
    for (const Monomial& g : ideal.generators())
        if (!g.is_squarefree()) throw invalid_input("Stanley-Reisner generators must be square-free");
    if (ideal.is_unit()) return SimplicialComplex::from_generators(ideal.ring(), {});
    const int n = ideal.ring().size();
    // faces = supports containing no generator support; collect the maximal
    // ones by shrinking from the full set
    std::vector<Face> bad;
    for (const Monomial& g : ideal.generators()) bad.push_back(g.support());
    auto is_face = [&](Face f) {
        for (Face b : bad)
            if (b.subset_of(f)) return false;
        return true;
    };
    std::vector<Face> maximal;
    std::set<Face, CanonicalFaceLess> seen;
    std::vector<Face> frontier{Face::full(n)};
    while (!frontier.empty()) {
        std::vector<Face> next;
        for (Face f : frontier) {
            if (!seen.insert(f).second) continue;
            if (is_face(f)) {
                maximal.push_back(f);
                continue;
            }
            for (int v : f.indices()) next.push_back(f.without(v));
        }
        frontier = std::move(next);
    }
    return SimplicialComplex::from_generators(ideal.ring(), std::move(maximal));
}

BettiTable betti_hochster(const SimplicialComplex& complex, const FieldSpec& field) {
    if (complex.is_void()) throw invalid_input("Betti table of the zero ring");
    const int n = complex.vertices().size();
    BettiTable t;
    t.entries[{0, Face()}] = 1;
    // walk all square-free multidegrees sigma
    const std::uint64_t limit = (n == 64) ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t bits = 1; bits != limit; ++bits) {
        Face sigma(bits);
        SimplicialComplex restricted = complex.restriction(sigma);
        HomologyVector h = reduced_homology(restricted, field);
        for (int j = -1; j <= restricted.dimension(); ++j) {
            long dim = h.at(j);
            if (dim <= 0) continue;
            int i = sigma.size() - j - 1;
            if (i >= 1) t.entries[{i, sigma}] = dim;
        }
        if (n == 64 && bits == ~std::uint64_t{0}) break;
    }
    return t;
}

int codim(const SimplicialComplex& complex) {
    if (complex.is_void()) throw invalid_input("codimension of the zero ring");
    return complex.vertices().size() - (complex.dimension() + 1);
}

CmReport is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field) {
    if (complex.is_void()) throw invalid_input("Cohen-Macaulay test on the void complex");
    CmReport r;
    for (Face g : complex.all_faces()) {
        SimplicialComplex lk = complex.link(g);
        HomologyVector h = reduced_homology(lk, field);
        for (int i = -1; i < lk.dimension(); ++i) {
            if (h.at(i) != 0) {
                r.cohen_macaulay = false;
                r.witness_face = g;
                r.witness_degree = i;
                return r;
            }
        }
    }
    r.cohen_macaulay = true;
    return r;
}

} // namespace vcm

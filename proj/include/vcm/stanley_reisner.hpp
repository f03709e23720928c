#pragma once

#include <map>
#include <utility>

#include "vcm/complex.hpp"
#include "vcm/homology.hpp"
#include "vcm/monomial.hpp"

namespace vcm {

// Graded Betti numbers of S/I in square-free multidegrees: entry (i, σ) is
// β_{i,σ}.  Totals are b_i = Σ_σ β_{i,σ}.
struct BettiTable {
    std::map<std::pair<int, Face>, long> entries;

    long total(int i) const;
    std::vector<long> totals() const; // index 0 .. projective dimension
    int projective_dimension() const;
};

// Stanley-Reisner ideal: generated by the minimal non-faces.  The empty
// complex {∅} gives the maximal ideal, the void complex the unit ideal.
MonomialIdeal sr_ideal(const SimplicialComplex& complex);

// Inverse direction; generators must be square-free.  The unit ideal gives
// the void complex, the zero ideal the full simplex.
SimplicialComplex complex_from_sr(const MonomialIdeal& ideal);

// β_{i,σ}(S/I_Δ) = dim_K H̃_{|σ|-i-1}(Δ|_σ; K) for i >= 1, plus β_{0,∅} = 1.
BettiTable betti_hochster(const SimplicialComplex& complex, const FieldSpec& field);

// codim S/I_Δ = n - (dim Δ + 1).
int codim(const SimplicialComplex& complex);

struct CmReport {
    bool cohen_macaulay = false;
    // when not CM: a face G and degree i < dim link(G) with H̃_i(link G) ≠ 0
    Face witness_face;
    int witness_degree = 0;
};

// Full link-homology scan (every face, including ∅).  The witness is the
// first failure in canonical face order.
CmReport is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field);

} // namespace vcm

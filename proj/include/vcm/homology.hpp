#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcm/complex.hpp"
#include "vcm/exact_matrix.hpp"

namespace vcm {

// Coefficient field: the rationals or a prime field GF(p).
struct FieldSpec {
    bool rational = true;
    std::int64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime_field(std::int64_t p);
    static FieldSpec parse(const std::string& text); // "q" or "gf:<p>"

    std::string describe() const { return rational ? "q" : "gf:" + std::to_string(p); }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.rational == b.rational && (a.rational || a.p == b.p);
    }
};

// Reduced Betti numbers, degrees -1 .. dim.
struct HomologyVector {
    int first_degree = -1;
    std::vector<long> dims;

    long at(int degree) const {
        long idx = degree - first_degree;
        if (idx < 0 || idx >= static_cast<long>(dims.size())) return 0;
        return dims[static_cast<std::size_t>(idx)];
    }
    bool all_zero() const {
        for (long d : dims)
            if (d != 0) return false;
        return true;
    }
};

// One integer homology group: free rank plus invariant factors >= 2 in a
// divisibility chain.
struct IntegerSummand {
    long free_rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

struct IntegerHomologyVector {
    int first_degree = -1;
    std::vector<IntegerSummand> groups;

    const IntegerSummand& at(int degree) const {
        static const IntegerSummand zero{};
        long idx = degree - first_degree;
        if (idx < 0 || idx >= static_cast<long>(groups.size())) return zero;
        return groups[static_cast<std::size_t>(idx)];
    }
};

// Signed boundary matrix ∂_d : C_d -> C_{d-1} of the reduced chain complex
// (C_{-1} is spanned by ∅).  Rows are the (d-1)-faces, columns the d-faces,
// both in canonical order; the sign of vertex v in F is (-1)^(position of v
// in the ascending listing of F).
IntMatrix boundary_matrix(const SimplicialComplex& complex, int d);

// Reduced homology over the coefficient field; rejects the void complex.
HomologyVector reduced_homology(const SimplicialComplex& complex, const FieldSpec& field);

// Integer homology of the pair (Δ, A): chain groups are spanned by faces of Δ
// not in A.  A must be a subcomplex of Δ.  With A = {∅} this reports the
// unreduced homology of Δ (and nothing in degree -1); a void A gives reduced
// integer homology.
IntegerHomologyVector relative_homology_z(const SimplicialComplex& complex, const SimplicialComplex& rel);

} // namespace vcm

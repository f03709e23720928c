#pragma once

#include <vector>

#include "vcm/face.hpp"

namespace vcm {

// Monomial in the ambient polynomial ring, one exponent per vertex/variable.
struct Monomial {
    std::vector<unsigned> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0u) {}

    static Monomial unit(std::size_t nvars) { return Monomial(nvars); }
    static Monomial squarefree(std::size_t nvars, Face support);

    std::size_t nvars() const { return exp.size(); }
    unsigned total_degree() const;
    bool is_unit() const;
    bool is_squarefree() const;
    Face support() const;

    bool divides(const Monomial& other) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    // this / gcd(this, g): the colon quotient for a single generator pair.
    Monomial colon_by(const Monomial& g) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// (degree, lex) order on monomials; fixes generator-list serialization.
bool monomial_less(const Monomial& a, const Monomial& b);

// Monomial ideal kept as its unique minimal generating set, sorted.  The zero
// ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default; // zero ideal in a ring with no declared variables

    static MonomialIdeal from_generators(VertexLabeling ring, std::vector<Monomial> gens);

    const VertexLabeling& ring() const { return ring_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool contains(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    VertexLabeling ring_;
    std::vector<Monomial> gens_;
};

// (I : g) for a single monomial, minimalized.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& g);
// (I : J) = ∩_g (I : g) over J's generators.  J must not be the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
// Pairwise-lcm intersection.
MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b);
// Iterated colon until the minimal generating set stabilizes.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);

} // namespace vcm

#pragma once

#include <vector>

#include "vcm/complex.hpp"
#include "vcm/monomial.hpp"

namespace vcm {

// Product of projective spaces P^{n_1} x ... x P^{n_r}: the Cox variables are
// the vertices, grouped into r blocks of sizes n_i + 1.  A face is relevant
// when it meets every block.
class ToricContext {
public:
    ToricContext() = default;

    // blocks must partition 0..n-1 into nonempty parts; order of the parts is
    // the factor order and is preserved.
    static ToricContext make(VertexLabeling vertices, std::vector<std::vector<int>> blocks);

    const VertexLabeling& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int factor_count() const { return static_cast<int>(blocks_.size()); }
    Face block_face(int i) const { return block_faces_.at(static_cast<std::size_t>(i)); }
    int block_of(int v) const { return block_of_.at(static_cast<std::size_t>(v)); }

    bool is_relevant(Face f) const;

    // Facets are the block complements V∖block_i.  For one factor this is the
    // empty complex {∅}.
    SimplicialComplex irrelevant_complex() const;

    // B_X = ∩_i <block_i>; its minimal generators are the transversal
    // square-free monomials, one variable per block.
    MonomialIdeal irrelevant_ideal() const;

    // Remove one Cox variable, shrinking its factor by one (P^0 factors are
    // fine).  Dropping the last variable of a block would empty a factor and
    // is rejected.
    ToricContext drop_vertex(int v) const;

    friend bool operator==(const ToricContext& a, const ToricContext& b) {
        return a.vertices_ == b.vertices_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const ToricContext& a, const ToricContext& b) { return !(a == b); }

private:
    VertexLabeling vertices_;
    std::vector<std::vector<int>> blocks_;
    std::vector<Face> block_faces_;
    std::vector<int> block_of_;
};

} // namespace vcm

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "vcm/face.hpp"

namespace vcm {

// Dimension sentinel for the void complex (no faces at all).  The empty
// complex {∅} is different: it has the single face ∅ and dimension -1.
inline constexpr int void_dim = std::numeric_limits<int>::min();

class SimplicialComplex {
public:
    SimplicialComplex() = default; // void complex on an empty labeling

    // Maximalizes the generating faces and sorts them canonically.  An empty
    // generator list yields the void complex; a list containing only ∅ yields
    // the empty complex {∅}.
    static SimplicialComplex from_generators(VertexLabeling vertices, std::vector<Face> generators);

    // Facets given as strictly increasing index vectors (serialization form).
    static SimplicialComplex from_facet_indices(VertexLabeling vertices,
                                                const std::vector<std::vector<int>>& facets);

    const VertexLabeling& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }
    int dimension() const { return facets_.empty() ? void_dim : facets_.back().dim(); }
    bool is_pure() const;

    bool contains(Face f) const;

    // All faces in canonical order; includes ∅ unless the complex is void.
    std::vector<Face> all_faces() const;
    std::vector<Face> faces_of_dim(int d) const;

    // Union of the vertex sets of the facets (vertices that actually occur).
    Face support() const;

    // link(G) = { F : F ∩ G = ∅, F ∪ G ∈ Δ }, on the same labeling.
    // Throws if G is not a face.
    SimplicialComplex link(Face g) const;

    // Faces contained in sigma, relabeled onto sigma's vertices.
    SimplicialComplex restriction(Face sigma) const;

    // Same faces, different ambient labeling: keep_labels selects which old
    // vertices survive (all facets must be supported on them).
    SimplicialComplex relabel_onto(Face keep) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) { return !(a == b); }

private:
    VertexLabeling vertices_;
    std::vector<Face> facets_; // inclusion-incomparable, canonical order
};

// ⟨faces⟩ on the given labeling.
SimplicialComplex closure_complex(const VertexLabeling& vertices, const std::vector<Face>& faces);

// Face-wise intersection / union; both arguments must share a labeling.
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);

// True iff every face of a is a face of b (void ⊆ anything).
bool subcomplex_of(const SimplicialComplex& a, const SimplicialComplex& b);

// Vertex map between two complexes.  vertex_map[v] is the target index of
// source vertex v; construction checks the simplicial-map law (every facet
// image must be a face of the target).
class SimplicialMap {
public:
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertex_map);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    const std::vector<int>& vertex_map() const { return map_; }

    int apply(int v) const { return map_.at(static_cast<std::size_t>(v)); }
    Face image(Face f) const; // throws if f is not a face of the source

    // All source faces with image exactly f, canonical order.  Throws if f is
    // not a face of the target.
    std::vector<Face> fiber(Face f) const;

    // dim ψ(F) = dim F for every face iff it holds on facets; returns a
    // violating facet when present.
    std::optional<Face> dimension_drop_witness() const;

    // Facet of the target not hit by any source face, if one exists.
    std::optional<Face> surjectivity_gap() const;

private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::vector<int> map_;
};

} // namespace vcm

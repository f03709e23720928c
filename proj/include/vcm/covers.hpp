#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vcm/complex.hpp"
#include "vcm/homology.hpp"
#include "vcm/toric.hpp"

namespace vcm {

// A cover certificate packages a candidate witness for virtual
// Cohen-Macaulayness: a source complex Δ', a vertex map ψ onto Δ, and the
// irrelevant data the duplication condition is checked against (either a
// toric context, whose irrelevant complex is used, or an explicit complex).
struct CoverCertificate {
    SimplicialComplex delta;
    SimplicialComplex delta_prime;
    std::vector<int> vertex_map; // delta_prime vertex -> delta vertex
    std::optional<ToricContext> context;
    std::optional<SimplicialComplex> irrelevant_override;

    SimplicialMap map() const { return SimplicialMap(delta_prime, delta, vertex_map); }
    // override > context; throws when neither is present or labels mismatch.
    SimplicialComplex resolved_irrelevant() const;
};

// Adds the facet order of Δ whose lifts must shell Δ'.
struct VirtualShellingCertificate {
    CoverCertificate cover;
    std::vector<int> order; // canonical facet indices of delta
};

// Outcome of a certificate check.  condition identifies the violated clause:
// "surjective", "1" (source Cohen-Macaulay / shelling order), "2" (dimension
// preservation), "3" (duplicated face outside the irrelevant complex),
// "4" (facet fiber not a single facet), or "annihilation".
struct CoverVerdict {
    bool pass = true;
    std::string condition;
    Face witness;
    std::string witness_space; // "delta" or "delta-prime"
    int witness_degree = 0;    // homology degree for condition-1 failures
    int step = -1;             // failing position for shelling-order failures
    std::string note;
};

CoverVerdict verify_cover(const CoverCertificate& cert, const FieldSpec& field);

// Re-derives the duplication condition through the irrelevant ideal: every
// face containing the support of a minimal generator of B_X must have a
// singleton fiber.  Redundant with condition 3 on purpose; needs a toric
// context.
CoverVerdict annihilation_witness(const CoverCertificate& cert);

CoverVerdict verify_virtual_shelling(const VirtualShellingCertificate& cert, const FieldSpec& field);

// Ξ_i = faces of ⟨F_1..F_i⟩ ∩ ⟨F_{i+1}⟩ not lying in C, for i = 1..n-1
// (step is that i).  The maximal members drive the attachment conditions.
struct XiSet {
    int step = 0;
    Face attaching;
    std::vector<Face> faces;
    std::vector<Face> max_faces;
};

std::vector<XiSet> xi_sets(const SimplicialComplex& delta, const std::vector<int>& order,
                           const SimplicialComplex& c);

struct PropositionVerdict {
    bool pass = true;
    int step = -1;      // 1-based Ξ index of the first failure
    int condition = 0;  // 1: closure not pure of dimension dim Δ - 1; 2: meet escapes Ξ
    Face attaching;
    Face witness;
    std::string note;
};

// Checks the two attachment conditions for the given order and excluded
// complex C.  When a context is supplied, C must sit inside its irrelevant
// complex and no facet of Δ may lie in C.
PropositionVerdict check_proposition(const SimplicialComplex& delta, const std::vector<int>& order,
                                     const SimplicialComplex& c,
                                     const std::optional<ToricContext>& context);

// Builds the cover the attachment conditions promise: start from ⟨F_1⟩ and,
// per step, either graft a fresh vertex onto the single lifted facet of Ξ_i
// (labels "<target>#k", k counting lifts of that target) or fill in the
// unique simplex on the lifted vertices.  Refuses to run unless
// check_proposition passes.
VirtualShellingCertificate construct_cover(const SimplicialComplex& delta, const std::vector<int>& order,
                                           const SimplicialComplex& c,
                                           const std::optional<ToricContext>& context);

struct DualGraph {
    std::vector<Face> nodes; // facets, canonical order
    struct Edge {
        int a = 0, b = 0;
        Face ridge;
    };
    std::vector<Edge> edges; // pairs whose intersection is a relevant ridge
    bool connected = false;
    bool tree = false;
};

DualGraph dual_graph(const SimplicialComplex& delta, const ToricContext& context);

enum class Status { pass, fail, refuted_hypothesis, unknown, error };

// Tree-criterion pipeline: all facets relevant, dim Δ equal to the factor
// count, dual graph connected, and the top relative homology against the
// irrelevant complex zero.  On success emits a facet order grown leaf-first
// along shared relevant ridges, plus the constructed certificate.
struct CorollaryReport {
    Status status = Status::pass;
    std::string hypothesis; // failed hypothesis when refuted
    Face witness;
    DualGraph graph;
    IntegerSummand top_homology;
    bool homology_zero = false;
    std::string note; // set when tree-ness and homology disagree
    std::vector<int> order;
    PropositionVerdict proposition;
    std::optional<VirtualShellingCertificate> certificate;
};

CorollaryReport corollary_order(const SimplicialComplex& delta, const ToricContext& context);

// Splits link_Δ(x) along the vertex fiber of a verified certificate: each
// lift v contributes ψ(link_Δ'(v)) as a complex over the context with x
// removed, carrying its own induced certificate.
struct LinkComponent {
    std::string lift_label;
    SimplicialComplex component; // on the dropped context's labeling
    VirtualShellingCertificate certificate;
    CoverVerdict verdict;
};

struct LinkDecomposition {
    bool pass = true;
    ToricContext dropped;
    SimplicialComplex link; // link_Δ(x) on the dropped labeling
    std::vector<LinkComponent> components;
    bool union_matches = false;
    bool intersections_irrelevant = false;
    std::string note;
};

LinkDecomposition link_decomposition(const VirtualShellingCertificate& cert, const std::string& vertex,
                                     const FieldSpec& field);

} // namespace vcm

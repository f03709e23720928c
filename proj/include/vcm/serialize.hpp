#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcm/covers.hpp"
#include "vcm/monomial.hpp"
#include "vcm/stanley_reisner.hpp"
#include "vcm/toric.hpp"

namespace vcm {

using Json = nlohmann::json;

// All parsers throw invalid_input with a readable message on malformed
// documents; they never return partially filled values.

// A complex document: fields "vertices" (label strings), "facets" (arrays of
// strictly increasing 0-based indices), optional "blocks" (arrays of indices
// partitioning the vertices).  listed keeps the facets in file order so that
// numeric facet orders can refer to file positions.
struct ComplexDoc {
    SimplicialComplex complex;
    std::optional<ToricContext> context;
    std::vector<Face> listed;
};

Json load_json_file(const std::string& path);

VertexLabeling labeling_from_json(const Json& doc);
ComplexDoc complex_doc_from_json(const Json& doc);
ComplexDoc load_complex_doc(const std::string& path);

// Ideal document: "vertices" plus "generators", each generator an array of
// [variable index, exponent] pairs (the unit monomial is []).  May carry
// "blocks" like a complex document.
MonomialIdeal ideal_from_json(const Json& doc);
MonomialIdeal load_ideal(const std::string& path);

// Facet order: an array whose entries are either file positions into
// doc.listed or explicit facet vertex arrays.  Returns canonical facet
// indices of doc.complex.
std::vector<int> order_from_json(const Json& order, const ComplexDoc& doc);
// Comma-separated file positions, e.g. "0,2,1".
std::vector<int> order_from_csv(const std::string& csv, const ComplexDoc& doc);

// Certificate document: {"delta", "delta_prime", "psi", "order"?, "c"?}.
// psi is either {"vertex_map": [...]} or a bare array; delta's "blocks"
// provide the toric context; "c" (a complex document on delta's vertices)
// overrides the irrelevant complex for the duplication condition.
CoverCertificate cover_from_json(const Json& doc);
VirtualShellingCertificate vshelling_from_json(const Json& doc); // "order" required
CoverCertificate load_cover(const std::string& path);
VirtualShellingCertificate load_vshelling(const std::string& path);

// Emission.  Face values in verdicts are emitted as label arrays; complexes
// and certificates re-parse to equal values.
Json face_to_json(Face f, const VertexLabeling& labels);
Json complex_to_json(const SimplicialComplex& c);
Json complex_to_json(const SimplicialComplex& c, const std::optional<ToricContext>& ctx);
Json context_to_json(const ToricContext& ctx);
Json ideal_to_json(const MonomialIdeal& ideal);
Json homology_to_json(const HomologyVector& h);
Json summand_to_json(const IntegerSummand& s);
Json integer_homology_to_json(const IntegerHomologyVector& h);
Json betti_to_json(const BettiTable& t, const VertexLabeling& ring);
Json cover_to_json(const CoverCertificate& cert);
Json vshelling_to_json(const VirtualShellingCertificate& cert);
Json cover_verdict_to_json(const CoverVerdict& v, const CoverCertificate& cert);
Json proposition_to_json(const PropositionVerdict& v, const SimplicialComplex& delta);
Json xi_to_json(const XiSet& xi, const VertexLabeling& labels);
Json dual_graph_to_json(const DualGraph& g, const VertexLabeling& labels);
Json corollary_to_json(const CorollaryReport& r, const SimplicialComplex& delta);
Json link_decomposition_to_json(const LinkDecomposition& d, const VirtualShellingCertificate& cert);

const char* status_name(Status s);

} // namespace vcm

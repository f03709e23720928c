#include "vcm/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>

namespace vcm {

namespace {

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object()) throw invalid_input("expected an object document");
    auto it = doc.find(key);
    if (it == doc.end()) throw invalid_input(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw invalid_input(std::string(what) + " must contain integers");
        out.push_back(e.get<int>());
    }
    return out;
}

// cpp_int torsion values: a number when it fits, a decimal string otherwise
Json integer_to_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

} // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw invalid_input("not valid JSON: " + path);
    return doc;
}

VertexLabeling labeling_from_json(const Json& doc) {
    const Json& v = field(doc, "vertices");
    if (!v.is_array()) throw invalid_input("\"vertices\" must be an array of strings");
    std::vector<std::string> labels;
    for (const Json& e : v) {
        if (!e.is_string()) throw invalid_input("\"vertices\" must be an array of strings");
        labels.push_back(e.get<std::string>());
    }
    return VertexLabeling(std::move(labels));
}

ComplexDoc complex_doc_from_json(const Json& doc) {
    ComplexDoc out;
    VertexLabeling labels = labeling_from_json(doc);
    const Json& fs = field(doc, "facets");
    if (!fs.is_array()) throw invalid_input("\"facets\" must be an array of arrays");
    std::vector<std::vector<int>> facets;
    for (const Json& f : fs) facets.push_back(int_array(f, "facet"));
    out.complex = SimplicialComplex::from_facet_indices(labels, facets);
    for (const auto& f : facets) out.listed.push_back(Face::from_indices(f));
    if (doc.contains("blocks")) {
        const Json& bs = doc["blocks"];
        if (!bs.is_array()) throw invalid_input("\"blocks\" must be an array of arrays");
        std::vector<std::vector<int>> blocks;
        for (const Json& b : bs) blocks.push_back(int_array(b, "block"));
        out.context = ToricContext::make(labels, std::move(blocks));
    }
    return out;
}

ComplexDoc load_complex_doc(const std::string& path) { return complex_doc_from_json(load_json_file(path)); }

MonomialIdeal ideal_from_json(const Json& doc) {
    VertexLabeling ring = labeling_from_json(doc);
    const Json& gs = field(doc, "generators");
    if (!gs.is_array()) throw invalid_input("\"generators\" must be an array");
    std::vector<Monomial> gens;
    for (const Json& g : gs) {
        if (!g.is_array()) throw invalid_input("a generator must be an array of [variable, exponent] pairs");
        Monomial m = Monomial::unit(static_cast<std::size_t>(ring.size()));
        for (const Json& pair : g) {
            std::vector<int> p = int_array(pair, "generator entry");
            if (p.size() != 2) throw invalid_input("a generator entry must be a [variable, exponent] pair");
            if (p[0] < 0 || p[0] >= ring.size()) throw invalid_input("generator variable index out of range");
            if (p[1] <= 0) throw invalid_input("generator exponent must be positive");
            std::size_t var = static_cast<std::size_t>(p[0]);
            if (m.exp[var] != 0) throw invalid_input("generator repeats a variable");
            m.exp[var] = static_cast<unsigned>(p[1]);
        }
        gens.push_back(std::move(m));
    }
    return MonomialIdeal::from_generators(std::move(ring), std::move(gens));
}

MonomialIdeal load_ideal(const std::string& path) { return ideal_from_json(load_json_file(path)); }

namespace {

int canonical_facet_index(const SimplicialComplex& c, Face f, const char* what) {
    const auto& fs = c.facets();
    auto it = std::lower_bound(fs.begin(), fs.end(), f, CanonicalFaceLess{});
    if (it == fs.end() || *it != f) throw invalid_input(std::string(what) + " is not a facet of the complex");
    return static_cast<int>(it - fs.begin());
}

} // namespace

std::vector<int> order_from_json(const Json& order, const ComplexDoc& doc) {
    if (!order.is_array()) throw invalid_input("\"order\" must be an array");
    std::vector<int> out;
    for (const Json& e : order) {
        if (e.is_number_integer()) {
            int pos = e.get<int>();
            if (pos < 0 || pos >= static_cast<int>(doc.listed.size()))
                throw invalid_input("order position " + std::to_string(pos) + " outside the facet list");
            out.push_back(canonical_facet_index(doc.complex, doc.listed[static_cast<std::size_t>(pos)],
                                                "listed face"));
        } else if (e.is_array()) {
            out.push_back(canonical_facet_index(doc.complex, Face::from_indices(int_array(e, "order entry")),
                                                "order entry"));
        } else {
            throw invalid_input("order entries must be facet positions or vertex arrays");
        }
    }
    return out;
}

std::vector<int> order_from_csv(const std::string& csv, const ComplexDoc& doc) {
    Json arr = Json::array();
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        std::string tok = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw invalid_input("empty entry in order list");
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw invalid_input("");
            arr.push_back(v);
        } catch (const std::exception&) {
            throw invalid_input("order list entries must be integers: " + tok);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return order_from_json(arr, doc);
}

CoverCertificate cover_from_json(const Json& doc) {
    CoverCertificate cert;
    ComplexDoc delta = complex_doc_from_json(field(doc, "delta"));
    ComplexDoc prime = complex_doc_from_json(field(doc, "delta_prime"));
    cert.delta = delta.complex;
    cert.delta_prime = prime.complex;
    cert.context = delta.context;
    const Json& psi = field(doc, "psi");
    if (psi.is_array())
        cert.vertex_map = int_array(psi, "psi");
    else if (psi.is_object())
        cert.vertex_map = int_array(field(psi, "vertex_map"), "vertex_map");
    else
        throw invalid_input("\"psi\" must be a vertex array or an object with \"vertex_map\"");
    if (doc.contains("c")) {
        ComplexDoc c = complex_doc_from_json(doc["c"]);
        if (c.complex.vertices() != cert.delta.vertices())
            throw invalid_input("\"c\" must share the target's vertex labeling");
        cert.irrelevant_override = c.complex;
    }
    cert.map(); // validates lengths, ranges, and the simplicial-map law
    return cert;
}

VirtualShellingCertificate vshelling_from_json(const Json& doc) {
    VirtualShellingCertificate cert;
    cert.cover = cover_from_json(doc);
    if (!doc.contains("order")) throw invalid_input("certificate lacks a facet \"order\"");
    ComplexDoc delta = complex_doc_from_json(field(doc, "delta"));
    cert.order = order_from_json(doc["order"], delta);
    return cert;
}

CoverCertificate load_cover(const std::string& path) { return cover_from_json(load_json_file(path)); }

VirtualShellingCertificate load_vshelling(const std::string& path) {
    return vshelling_from_json(load_json_file(path));
}

Json face_to_json(Face f, const VertexLabeling& labels) {
    Json arr = Json::array();
    for (int v : f.indices()) arr.push_back(labels.label(v));
    return arr;
}

Json complex_to_json(const SimplicialComplex& c) {
    Json doc = Json::object();
    doc["vertices"] = c.vertices().labels();
    Json facets = Json::array();
    for (Face f : c.facets()) facets.push_back(f.indices());
    doc["facets"] = std::move(facets);
    return doc;
}

Json complex_to_json(const SimplicialComplex& c, const std::optional<ToricContext>& ctx) {
    Json doc = complex_to_json(c);
    if (ctx) doc["blocks"] = ctx->blocks();
    return doc;
}

Json context_to_json(const ToricContext& ctx) {
    Json doc = Json::object();
    doc["vertices"] = ctx.vertices().labels();
    doc["blocks"] = ctx.blocks();
    return doc;
}

Json ideal_to_json(const MonomialIdeal& ideal) {
    Json doc = Json::object();
    doc["vertices"] = ideal.ring().labels();
    Json gens = Json::array();
    for (const Monomial& m : ideal.generators()) {
        Json g = Json::array();
        for (std::size_t v = 0; v < m.exp.size(); ++v)
            if (m.exp[v] != 0) g.push_back(Json::array({static_cast<int>(v), m.exp[v]}));
        gens.push_back(std::move(g));
    }
    doc["generators"] = std::move(gens);
    return doc;
}

Json homology_to_json(const HomologyVector& h) {
    Json doc = Json::object();
    doc["first_degree"] = h.first_degree;
    doc["dims"] = h.dims;
    return doc;
}

Json summand_to_json(const IntegerSummand& s) {
    Json doc = Json::object();
    doc["rank"] = s.free_rank;
    Json tor = Json::array();
    for (const Integer& t : s.torsion) tor.push_back(integer_to_json(t));
    doc["torsion"] = std::move(tor);
    return doc;
}

Json integer_homology_to_json(const IntegerHomologyVector& h) {
    Json doc = Json::object();
    doc["first_degree"] = h.first_degree;
    Json gs = Json::array();
    for (const IntegerSummand& s : h.groups) gs.push_back(summand_to_json(s));
    doc["groups"] = std::move(gs);
    return doc;
}

Json betti_to_json(const BettiTable& t, const VertexLabeling& ring) {
    Json doc = Json::object();
    doc["totals"] = t.totals();
    doc["projective_dimension"] = t.projective_dimension();
    Json graded = Json::array();
    for (const auto& [key, value] : t.entries) {
        Json e = Json::object();
        e["i"] = key.first;
        e["degree"] = face_to_json(key.second, ring);
        e["value"] = value;
        graded.push_back(std::move(e));
    }
    doc["graded"] = std::move(graded);
    return doc;
}

Json cover_to_json(const CoverCertificate& cert) {
    Json doc = Json::object();
    doc["delta"] = complex_to_json(cert.delta, cert.context);
    doc["delta_prime"] = complex_to_json(cert.delta_prime);
    doc["psi"] = Json::object({{"vertex_map", cert.vertex_map}});
    if (cert.irrelevant_override) doc["c"] = complex_to_json(*cert.irrelevant_override);
    return doc;
}

Json vshelling_to_json(const VirtualShellingCertificate& cert) {
    Json doc = cover_to_json(cert.cover);
    Json order = Json::array();
    for (int i : cert.order) order.push_back(cert.cover.delta.facets()[static_cast<std::size_t>(i)].indices());
    doc["order"] = std::move(order);
    return doc;
}

Json cover_verdict_to_json(const CoverVerdict& v, const CoverCertificate& cert) {
    Json doc = Json::object();
    doc["status"] = v.pass ? "pass" : "fail";
    if (!v.pass) {
        doc["condition"] = v.condition;
        const VertexLabeling& labels =
            v.witness_space == "delta-prime" ? cert.delta_prime.vertices() : cert.delta.vertices();
        doc["witness"] = face_to_json(v.witness, labels);
        doc["witness_space"] = v.witness_space;
        if (v.condition == "1" && v.witness_space == "delta-prime") doc["witness_degree"] = v.witness_degree;
        if (v.step >= 0) doc["step"] = v.step;
        if (!v.note.empty()) doc["note"] = v.note;
    }
    return doc;
}

Json proposition_to_json(const PropositionVerdict& v, const SimplicialComplex& delta) {
    Json doc = Json::object();
    doc["status"] = v.pass ? "pass" : "fail";
    if (!v.pass) {
        doc["step"] = v.step;
        doc["condition"] = v.condition;
        doc["attaching"] = face_to_json(v.attaching, delta.vertices());
        doc["witness"] = face_to_json(v.witness, delta.vertices());
        if (!v.note.empty()) doc["note"] = v.note;
    }
    return doc;
}

Json xi_to_json(const XiSet& xi, const VertexLabeling& labels) {
    Json doc = Json::object();
    doc["step"] = xi.step;
    doc["attaching"] = face_to_json(xi.attaching, labels);
    Json faces = Json::array();
    for (Face f : xi.faces) faces.push_back(face_to_json(f, labels));
    doc["faces"] = std::move(faces);
    Json maxf = Json::array();
    for (Face f : xi.max_faces) maxf.push_back(face_to_json(f, labels));
    doc["maximal"] = std::move(maxf);
    return doc;
}

Json dual_graph_to_json(const DualGraph& g, const VertexLabeling& labels) {
    Json doc = Json::object();
    Json nodes = Json::array();
    for (Face f : g.nodes) nodes.push_back(face_to_json(f, labels));
    doc["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json edge = Json::object();
        edge["a"] = e.a;
        edge["b"] = e.b;
        edge["ridge"] = face_to_json(e.ridge, labels);
        edges.push_back(std::move(edge));
    }
    doc["edges"] = std::move(edges);
    doc["connected"] = g.connected;
    doc["tree"] = g.tree;
    return doc;
}

Json corollary_to_json(const CorollaryReport& r, const SimplicialComplex& delta) {
    Json doc = Json::object();
    doc["status"] = status_name(r.status);
    if (r.status == Status::refuted_hypothesis) {
        doc["hypothesis"] = r.hypothesis;
        if (!r.witness.empty()) doc["witness"] = face_to_json(r.witness, delta.vertices());
    }
    doc["dual_graph"] = dual_graph_to_json(r.graph, delta.vertices());
    doc["top_relative_homology"] = summand_to_json(r.top_homology);
    doc["homology_zero"] = r.homology_zero;
    if (!r.note.empty()) doc["note"] = r.note;
    if (r.status == Status::pass) {
        Json order = Json::array();
        for (int i : r.order) order.push_back(delta.facets()[static_cast<std::size_t>(i)].indices());
        doc["order"] = std::move(order);
        doc["proposition"] = proposition_to_json(r.proposition, delta);
        if (r.certificate) doc["certificate"] = vshelling_to_json(*r.certificate);
    }
    return doc;
}

Json link_decomposition_to_json(const LinkDecomposition& d, const VirtualShellingCertificate& cert) {
    Json doc = Json::object();
    doc["status"] = d.pass ? "pass" : "fail";
    doc["context"] = context_to_json(d.dropped);
    doc["link"] = complex_to_json(d.link);
    Json comps = Json::array();
    for (const LinkComponent& c : d.components) {
        Json e = Json::object();
        e["lift"] = c.lift_label;
        e["component"] = complex_to_json(c.component);
        e["certificate"] = vshelling_to_json(c.certificate);
        e["verdict"] = cover_verdict_to_json(c.verdict, c.certificate.cover);
        comps.push_back(std::move(e));
    }
    doc["components"] = std::move(comps);
    doc["union_matches_link"] = d.union_matches;
    doc["intersections_irrelevant"] = d.intersections_irrelevant;
    if (!d.note.empty()) doc["note"] = d.note;
    (void)cert;
    return doc;
}

const char* status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::refuted_hypothesis: return "refuted-hypothesis";
    case Status::unknown: return "unknown";
    case Status::error: return "error";
    }
    return "error";
}

} // namespace vcm

// Thin JSON-string bindings: each function takes and returns documents in the
// same format the CLI uses, so the python layer stays format-identical.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vcm/covers.hpp"
#include "vcm/serialize.hpp"
#include "vcm/shelling.hpp"
#include "vcm/stanley_reisner.hpp"

namespace py = pybind11;
using vcm::Json;

namespace {

Json parse(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw vcm::invalid_input("not valid JSON");
    return doc;
}

std::string check_cm(const std::string& complex_doc, const std::string& field_text) {
    vcm::FieldSpec field = vcm::FieldSpec::parse(field_text);
    vcm::SimplicialComplex c = vcm::complex_doc_from_json(parse(complex_doc)).complex;
    vcm::CmReport rep = vcm::is_cohen_macaulay(c, field);
    Json doc = Json::object();
    doc["cohen_macaulay"] = rep.cohen_macaulay;
    if (!rep.cohen_macaulay) {
        doc["witness"] = vcm::face_to_json(rep.witness_face, c.vertices());
        doc["witness_degree"] = rep.witness_degree;
    }
    return doc.dump();
}

std::string betti(const std::string& complex_doc, const std::string& field_text) {
    vcm::FieldSpec field = vcm::FieldSpec::parse(field_text);
    Json j = parse(complex_doc);
    vcm::SimplicialComplex c = j.contains("generators")
                                   ? vcm::complex_from_sr(vcm::ideal_from_json(j))
                                   : vcm::complex_doc_from_json(j).complex;
    Json doc = vcm::betti_to_json(vcm::betti_hochster(c, field), c.vertices());
    doc["codim"] = vcm::codim(c);
    return doc.dump();
}

std::string sr_ideal(const std::string& complex_doc) {
    vcm::SimplicialComplex c = vcm::complex_doc_from_json(parse(complex_doc)).complex;
    return vcm::ideal_to_json(vcm::sr_ideal(c)).dump();
}

std::string saturate_by_irrelevant(const std::string& ideal_doc) {
    Json j = parse(ideal_doc);
    vcm::MonomialIdeal ideal = vcm::ideal_from_json(j);
    if (!j.contains("blocks")) throw vcm::invalid_input("ideal document carries no \"blocks\"");
    std::vector<std::vector<int>> blocks;
    for (const Json& b : j["blocks"]) {
        std::vector<int> bl;
        for (const Json& e : b) bl.push_back(e.get<int>());
        blocks.push_back(std::move(bl));
    }
    vcm::ToricContext ctx = vcm::ToricContext::make(ideal.ring(), std::move(blocks));
    return vcm::ideal_to_json(vcm::saturate(ideal, ctx.irrelevant_ideal())).dump();
}

std::string homology(const std::string& complex_doc, const std::string& field_text) {
    vcm::FieldSpec field = vcm::FieldSpec::parse(field_text);
    vcm::SimplicialComplex c = vcm::complex_doc_from_json(parse(complex_doc)).complex;
    return vcm::homology_to_json(vcm::reduced_homology(c, field)).dump();
}

std::string rel_homology_z(const std::string& complex_doc) {
    vcm::ComplexDoc doc = vcm::complex_doc_from_json(parse(complex_doc));
    if (!doc.context) throw vcm::invalid_input("complex document carries no \"blocks\"");
    vcm::SimplicialComplex rel = vcm::intersect(doc.complex, doc.context->irrelevant_complex());
    return vcm::integer_homology_to_json(vcm::relative_homology_z(doc.complex, rel)).dump();
}

std::string find_shelling(const std::string& complex_doc) {
    vcm::SimplicialComplex c = vcm::complex_doc_from_json(parse(complex_doc)).complex;
    auto order = vcm::find_shelling(c);
    Json doc = Json::object();
    doc["shellable"] = order.has_value();
    if (order) {
        Json arr = Json::array();
        for (int i : *order) arr.push_back(c.facets()[static_cast<std::size_t>(i)].indices());
        doc["order"] = std::move(arr);
    }
    return doc.dump();
}

std::string cover_verify(const std::string& cert_doc, const std::string& field_text) {
    vcm::FieldSpec field = vcm::FieldSpec::parse(field_text);
    vcm::CoverCertificate cert = vcm::cover_from_json(parse(cert_doc));
    return vcm::cover_verdict_to_json(vcm::verify_cover(cert, field), cert).dump();
}

std::string vshelling_verify(const std::string& cert_doc, const std::string& field_text) {
    vcm::FieldSpec field = vcm::FieldSpec::parse(field_text);
    vcm::VirtualShellingCertificate cert = vcm::vshelling_from_json(parse(cert_doc));
    return vcm::cover_verdict_to_json(vcm::verify_virtual_shelling(cert, field), cert.cover).dump();
}

std::string construct(const std::string& complex_doc, const std::vector<int>& positions) {
    vcm::ComplexDoc doc = vcm::complex_doc_from_json(parse(complex_doc));
    if (!doc.context) throw vcm::invalid_input("complex document carries no \"blocks\"");
    Json arr = Json::array();
    for (int p : positions) arr.push_back(p);
    std::vector<int> order = vcm::order_from_json(arr, doc);
    vcm::VirtualShellingCertificate cert =
        vcm::construct_cover(doc.complex, order, doc.context->irrelevant_complex(), doc.context);
    return vcm::vshelling_to_json(cert).dump();
}

std::string corollary_order(const std::string& complex_doc) {
    vcm::ComplexDoc doc = vcm::complex_doc_from_json(parse(complex_doc));
    if (!doc.context) throw vcm::invalid_input("complex document carries no \"blocks\"");
    vcm::CorollaryReport rep = vcm::corollary_order(doc.complex, *doc.context);
    return vcm::corollary_to_json(rep, doc.complex).dump();
}

std::string link_decompose(const std::string& cert_doc, const std::string& vertex,
                           const std::string& field_text) {
    vcm::FieldSpec field = vcm::FieldSpec::parse(field_text);
    vcm::VirtualShellingCertificate cert = vcm::vshelling_from_json(parse(cert_doc));
    return vcm::link_decomposition_to_json(vcm::link_decomposition(cert, vertex, field), cert).dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "JSON-document operations on simplicial complexes over products of projective spaces";
    py::register_exception<vcm::invalid_input>(m, "InvalidInput");
    m.def("check_cm", &check_cm, py::arg("complex_doc"), py::arg("field") = "q");
    m.def("betti", &betti, py::arg("doc"), py::arg("field") = "q");
    m.def("sr_ideal", &sr_ideal, py::arg("complex_doc"));
    m.def("saturate_by_irrelevant", &saturate_by_irrelevant, py::arg("ideal_doc"));
    m.def("homology", &homology, py::arg("complex_doc"), py::arg("field") = "q");
    m.def("rel_homology_z", &rel_homology_z, py::arg("complex_doc"));
    m.def("find_shelling", &find_shelling, py::arg("complex_doc"));
    m.def("cover_verify", &cover_verify, py::arg("cert_doc"), py::arg("field") = "q");
    m.def("vshelling_verify", &vshelling_verify, py::arg("cert_doc"), py::arg("field") = "q");
    m.def("construct", &construct, py::arg("complex_doc"), py::arg("order"));
    m.def("corollary_order", &corollary_order, py::arg("complex_doc"));
    m.def("link_decompose", &link_decompose, py::arg("cert_doc"), py::arg("vertex"), py::arg("field") = "q");
}

// vcm: decide and certify (virtual) Cohen-Macaulayness of simplicial
// complexes over products of projective spaces.  Every subcommand reads the
// shared JSON formats, prints a verdict document on stdout, and exits with
// 0 (pass/true), 1 (fail/refuted/false), or 2 (input error).
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vcm/covers.hpp"
#include "vcm/serialize.hpp"
#include "vcm/shelling.hpp"
#include "vcm/stanley_reisner.hpp"

namespace {

using vcm::Json;

struct Output {
    bool pretty = false;
    std::string out_path;

    void emit(const Json& doc) const {
        std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw vcm::invalid_input("cannot write " + out_path);
            f << doc.dump(2) << "\n";
        }
    }
};

// --toric accepts either a context document {vertices, blocks} or any complex
// document carrying blocks; the input's own blocks are the fallback.
std::optional<vcm::ToricContext> resolve_context(const vcm::ComplexDoc& doc, const std::string& toric_path) {
    if (toric_path.empty()) return doc.context;
    Json j = vcm::load_json_file(toric_path);
    vcm::VertexLabeling labels = vcm::labeling_from_json(j);
    if (!j.contains("blocks")) throw vcm::invalid_input(toric_path + " carries no \"blocks\"");
    std::vector<std::vector<int>> blocks;
    for (const Json& b : j["blocks"]) {
        std::vector<int> bl;
        for (const Json& e : b) bl.push_back(e.get<int>());
        blocks.push_back(std::move(bl));
    }
    return vcm::ToricContext::make(std::move(labels), std::move(blocks));
}

vcm::SimplicialComplex resolve_excluded(const std::string& irrelevant_path,
                                        const std::optional<vcm::ToricContext>& ctx) {
    if (!irrelevant_path.empty()) return vcm::load_complex_doc(irrelevant_path).complex;
    if (ctx) return ctx->irrelevant_complex();
    throw vcm::invalid_input("no toric context: pass --toric, --irrelevant, or a \"blocks\" field");
}

// A document holding "generators" is an ideal; anything else must be a
// complex.  Both yield the complex side of the Stanley-Reisner dictionary.
vcm::SimplicialComplex complex_from_any(const Json& j) {
    if (j.is_object() && j.contains("generators")) return vcm::complex_from_sr(vcm::ideal_from_json(j));
    return vcm::complex_doc_from_json(j).complex;
}

int run_check_cm(const std::string& path, const vcm::FieldSpec& field, const Output& out) {
    vcm::SimplicialComplex c = complex_from_any(vcm::load_json_file(path));
    vcm::CmReport rep = vcm::is_cohen_macaulay(c, field);
    Json doc = Json::object();
    doc["status"] = rep.cohen_macaulay ? "pass" : "fail";
    doc["cohen_macaulay"] = rep.cohen_macaulay;
    doc["field"] = field.describe();
    if (!rep.cohen_macaulay) {
        doc["witness"] = vcm::face_to_json(rep.witness_face, c.vertices());
        doc["witness_degree"] = rep.witness_degree;
    }
    out.emit(doc);
    return rep.cohen_macaulay ? 0 : 1;
}

int run_betti(const std::string& path, const vcm::FieldSpec& field, const Output& out) {
    vcm::SimplicialComplex c = complex_from_any(vcm::load_json_file(path));
    vcm::BettiTable t = vcm::betti_hochster(c, field);
    Json doc = vcm::betti_to_json(t, c.vertices());
    doc["codim"] = vcm::codim(c);
    doc["field"] = field.describe();
    out.emit(doc);
    return 0;
}

int run_codim(const std::string& path, const Output& out) {
    vcm::SimplicialComplex c = complex_from_any(vcm::load_json_file(path));
    Json doc = Json::object();
    doc["codim"] = vcm::codim(c);
    out.emit(doc);
    return 0;
}

int run_sr_ideal(const std::string& path, const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    out.emit(vcm::ideal_to_json(vcm::sr_ideal(doc.complex)));
    return 0;
}

int run_saturate(const std::string& path, const std::string& by, const std::string& toric,
                 const std::string& equals, const Output& out) {
    Json j = vcm::load_json_file(path);
    vcm::MonomialIdeal ideal = vcm::ideal_from_json(j);
    vcm::MonomialIdeal by_ideal;
    if (by == "B_X") {
        std::optional<vcm::ToricContext> ctx;
        if (!toric.empty()) {
            ctx = resolve_context(vcm::ComplexDoc{}, toric);
        } else if (j.contains("blocks")) {
            std::vector<std::vector<int>> blocks;
            for (const Json& b : j["blocks"]) {
                std::vector<int> bl;
                for (const Json& e : b) bl.push_back(e.get<int>());
                blocks.push_back(std::move(bl));
            }
            ctx = vcm::ToricContext::make(ideal.ring(), std::move(blocks));
        }
        if (!ctx) throw vcm::invalid_input("--by B_X needs --toric or a \"blocks\" field on the ideal");
        if (ctx->vertices() != ideal.ring()) throw vcm::invalid_input("toric context ring mismatch");
        by_ideal = ctx->irrelevant_ideal();
    } else {
        by_ideal = vcm::load_ideal(by);
        if (by_ideal.ring() != ideal.ring()) throw vcm::invalid_input("--by ideal lives in a different ring");
    }
    vcm::MonomialIdeal sat = vcm::saturate(ideal, by_ideal);
    Json doc = Json::object();
    doc["ideal"] = vcm::ideal_to_json(sat);
    if (!equals.empty()) {
        vcm::MonomialIdeal expect = vcm::load_ideal(equals);
        bool same = sat == expect;
        doc["status"] = same ? "pass" : "fail";
        doc["equals"] = same;
        out.emit(doc);
        return same ? 0 : 1;
    }
    doc["status"] = "pass";
    out.emit(doc);
    return 0;
}

int run_homology(const std::string& path, const vcm::FieldSpec& field, const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    vcm::HomologyVector h = vcm::reduced_homology(doc.complex, field);
    Json j = vcm::homology_to_json(h);
    j["field"] = field.describe();
    out.emit(j);
    return 0;
}

int run_rel_homology(const std::string& path, const std::string& toric, const std::string& irrelevant,
                     const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    std::optional<vcm::ToricContext> ctx = resolve_context(doc, toric);
    vcm::SimplicialComplex b = resolve_excluded(irrelevant, ctx);
    if (b.vertices() != doc.complex.vertices())
        throw vcm::invalid_input("irrelevant complex must share the complex's vertex labeling");
    vcm::SimplicialComplex rel = vcm::intersect(doc.complex, b);
    vcm::IntegerHomologyVector h = vcm::relative_homology_z(doc.complex, rel);
    out.emit(vcm::integer_homology_to_json(h));
    return 0;
}

int run_shelling_verify(const std::string& path, const std::string& order_csv, const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    std::vector<int> order = vcm::order_from_csv(order_csv, doc);
    vcm::ShellingCheck check = vcm::is_shelling(doc.complex, order);
    Json j = Json::object();
    j["status"] = check.ok ? "pass" : "fail";
    if (!check.ok) j["failure_index"] = check.failure_index;
    out.emit(j);
    return check.ok ? 0 : 1;
}

int run_shelling_find(const std::string& path, const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    auto order = vcm::find_shelling(doc.complex);
    Json j = Json::object();
    if (order) {
        j["status"] = "pass";
        Json arr = Json::array();
        for (int i : *order) arr.push_back(doc.complex.facets()[static_cast<std::size_t>(i)].indices());
        j["order"] = std::move(arr);
    } else {
        j["status"] = "fail";
        j["note"] = "no facet order satisfies the shelling condition";
    }
    out.emit(j);
    return order ? 0 : 1;
}

int run_check_prop(const std::string& path, const std::string& order_csv, const std::string& toric,
                   const std::string& irrelevant, const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    std::optional<vcm::ToricContext> ctx = resolve_context(doc, toric);
    vcm::SimplicialComplex c = resolve_excluded(irrelevant, ctx);
    std::vector<int> order = vcm::order_from_csv(order_csv, doc);
    vcm::PropositionVerdict v = vcm::check_proposition(doc.complex, order, c, ctx);
    Json j = vcm::proposition_to_json(v, doc.complex);
    Json xis = Json::array();
    for (const vcm::XiSet& xi : vcm::xi_sets(doc.complex, order, c))
        xis.push_back(vcm::xi_to_json(xi, doc.complex.vertices()));
    j["xi"] = std::move(xis);
    out.emit(j);
    return v.pass ? 0 : 1;
}

int run_construct(const std::string& path, const std::string& order_csv, const std::string& toric,
                  const std::string& irrelevant, const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    std::optional<vcm::ToricContext> ctx = resolve_context(doc, toric);
    vcm::SimplicialComplex c = resolve_excluded(irrelevant, ctx);
    std::vector<int> order = vcm::order_from_csv(order_csv, doc);
    vcm::PropositionVerdict pre = vcm::check_proposition(doc.complex, order, c, ctx);
    if (!pre.pass) {
        Json j = vcm::proposition_to_json(pre, doc.complex);
        j["note"] = "attachment conditions fail; nothing constructed";
        out.emit(j);
        return 1;
    }
    vcm::VirtualShellingCertificate cert = vcm::construct_cover(doc.complex, order, c, ctx);
    Json j = Json::object();
    j["status"] = "pass";
    j["certificate"] = vcm::vshelling_to_json(cert);
    out.emit(j);
    return 0;
}

int run_vshelling_verify(const std::string& path, const vcm::FieldSpec& field, const Output& out) {
    vcm::VirtualShellingCertificate cert = vcm::load_vshelling(path);
    vcm::CoverVerdict v = vcm::verify_virtual_shelling(cert, field);
    out.emit(vcm::cover_verdict_to_json(v, cert.cover));
    return v.pass ? 0 : 1;
}

int run_cover_verify(const std::string& path, const vcm::FieldSpec& field, bool annihilation,
                     const Output& out) {
    vcm::CoverCertificate cert = vcm::load_cover(path);
    vcm::CoverVerdict v = vcm::verify_cover(cert, field);
    Json j = vcm::cover_verdict_to_json(v, cert);
    if (annihilation && v.pass) {
        vcm::CoverVerdict a = vcm::annihilation_witness(cert);
        j["annihilation"] = vcm::cover_verdict_to_json(a, cert);
        if (!a.pass) v.pass = false;
    }
    out.emit(j);
    return v.pass ? 0 : 1;
}

int run_link_decompose(const std::string& path, const std::string& vertex, const vcm::FieldSpec& field,
                       const Output& out) {
    vcm::VirtualShellingCertificate cert = vcm::load_vshelling(path);
    vcm::LinkDecomposition d = vcm::link_decomposition(cert, vertex, field);
    out.emit(vcm::link_decomposition_to_json(d, cert));
    return d.pass ? 0 : 1;
}

int run_corollary(const std::string& path, const std::string& toric, const Output& out) {
    vcm::ComplexDoc doc = vcm::load_complex_doc(path);
    std::optional<vcm::ToricContext> ctx = resolve_context(doc, toric);
    if (!ctx) throw vcm::invalid_input("the tree criterion needs a toric context");
    vcm::CorollaryReport rep = vcm::corollary_order(doc.complex, *ctx);
    out.emit(vcm::corollary_to_json(rep, doc.complex));
    switch (rep.status) {
    case vcm::Status::pass: return 0;
    case vcm::Status::error: return 2;
    default: return 1;
    }
}

// ---------------------------------------------------------------- fixtures

struct FixtureRow {
    std::string name;
    std::string status; // pass / fail / skip
    std::string expected;
    std::string got;
};

// Each check loads what it needs; a missing file skips the row, a parse or
// value mismatch fails it with the observed value as witness.
void run_fixture(std::vector<FixtureRow>& rows, const std::string& dir, const std::string& file,
                 const std::string& name, const std::string& expected,
                 const std::function<std::string()>& compute) {
    FixtureRow row;
    row.name = name;
    row.expected = expected;
    if (!std::filesystem::exists(std::filesystem::path(dir) / file)) {
        row.status = "skip";
        row.got = "fixture " + file + " not present";
        rows.push_back(row);
        return;
    }
    try {
        row.got = compute();
        row.status = row.got == expected ? "pass" : "fail";
    } catch (const std::exception& e) {
        row.status = "fail";
        row.got = std::string("exception: ") + e.what();
    }
    rows.push_back(row);
}

std::string join_totals(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int run_fixture_suite(const std::string& dir, const Output& out) {
    const vcm::FieldSpec q = vcm::FieldSpec::rationals();
    std::vector<FixtureRow> rows;
    auto path = [&](const std::string& f) { return (std::filesystem::path(dir) / f).string(); };

    run_fixture(rows, dir, "example14_delta.json", "example14 check-cm", "not CM, witness degree 1", [&] {
        auto doc = vcm::load_complex_doc(path("example14_delta.json"));
        auto rep = vcm::is_cohen_macaulay(doc.complex, q);
        if (rep.cohen_macaulay) return std::string("CM");
        return "not CM, witness degree " + std::to_string(rep.witness_degree);
    });
    run_fixture(rows, dir, "example14_delta.json", "example14 betti totals", "(1,4,4,1) pd 3 codim 2", [&] {
        auto doc = vcm::load_complex_doc(path("example14_delta.json"));
        auto t = vcm::betti_hochster(doc.complex, q);
        return join_totals(t.totals()) + " pd " + std::to_string(t.projective_dimension()) + " codim " +
               std::to_string(vcm::codim(doc.complex));
    });
    run_fixture(rows, dir, "example14_delta.json", "example14 sr-ideal", "x0*y1 x0*x1*y2 x1*y0*y2 y0*y1*y2",
                [&] {
                    auto doc = vcm::load_complex_doc(path("example14_delta.json"));
                    auto ideal = vcm::sr_ideal(doc.complex);
                    std::string s;
                    for (const auto& m : ideal.generators()) {
                        if (!s.empty()) s += " ";
                        std::string term;
                        for (int v : m.support().indices()) {
                            if (!term.empty()) term += "*";
                            term += ideal.ring().label(v);
                        }
                        s += term;
                    }
                    return s;
                });
    run_fixture(rows, dir, "example14_delta.json", "example14 corollary order",
                "pass tree order F1 F2 F3 F4", [&] {
                    auto doc = vcm::load_complex_doc(path("example14_delta.json"));
                    if (!doc.context) return std::string("no blocks");
                    auto rep = vcm::corollary_order(doc.complex, *doc.context);
                    if (rep.status != vcm::Status::pass) return std::string(vcm::status_name(rep.status));
                    std::string s = "pass";
                    s += rep.graph.tree ? " tree" : " not-tree";
                    s += " order";
                    for (int i : rep.order) {
                        vcm::Face f = doc.complex.facets()[static_cast<std::size_t>(i)];
                        for (std::size_t p = 0; p < doc.listed.size(); ++p)
                            if (doc.listed[p] == f) s += " F" + std::to_string(p + 1);
                    }
                    return s;
                });
    run_fixture(rows, dir, "example14_cert.json", "example14 cover verify", "pass", [&] {
        auto cert = vcm::load_cover(path("example14_cert.json"));
        auto v = vcm::verify_cover(cert, q);
        return v.pass ? std::string("pass") : "fail condition " + v.condition;
    });
    run_fixture(rows, dir, "example14_cert.json", "example14 vshelling verify", "pass", [&] {
        auto cert = vcm::load_vshelling(path("example14_cert.json"));
        auto v = vcm::verify_virtual_shelling(cert, q);
        return v.pass ? std::string("pass") : "fail condition " + v.condition;
    });
    run_fixture(rows, dir, "example14_cert.json", "example14 delta-prime shellable CM", "CM, shelling ok",
                [&] {
                    auto cert = vcm::load_vshelling(path("example14_cert.json"));
                    auto rep = vcm::is_cohen_macaulay(cert.cover.delta_prime, q);
                    auto order = vcm::find_shelling(cert.cover.delta_prime);
                    std::string s = rep.cohen_macaulay ? "CM" : "not CM";
                    s += order ? ", shelling ok" : ", not shellable";
                    return s;
                });
    run_fixture(rows, dir, "example14_cert.json", "example14 link-decompose y2", "pass 2 components", [&] {
        auto cert = vcm::load_vshelling(path("example14_cert.json"));
        auto d = vcm::link_decomposition(cert, "y2", q);
        std::string s = d.pass ? "pass" : "fail";
        s += " " + std::to_string(d.components.size()) + " components";
        return s;
    });
    run_fixture(rows, dir, "example14_delta.json", "example14 construct", "pass 6 vertices", [&] {
        auto doc = vcm::load_complex_doc(path("example14_delta.json"));
        if (!doc.context) return std::string("no blocks");
        std::vector<int> order = vcm::order_from_json(Json::array({0, 1, 2, 3}), doc);
        auto cert = vcm::construct_cover(doc.complex, order, doc.context->irrelevant_complex(), doc.context);
        auto v = vcm::verify_virtual_shelling(cert, q);
        if (!v.pass) return "fail condition " + v.condition;
        return "pass " + std::to_string(cert.cover.delta_prime.vertices().size()) + " vertices";
    });
    run_fixture(rows, dir, "remark_J.json", "remark saturation", "J:B = IDelta, stable", [&] {
        auto ideal = vcm::load_ideal(path("remark_J.json"));
        auto delta = vcm::load_complex_doc(path("example14_delta.json"));
        auto sat = vcm::saturate(ideal, delta.context->irrelevant_ideal());
        auto idelta = vcm::sr_ideal(delta.complex);
        if (sat != idelta) return std::string("saturation differs from IDelta");
        if (vcm::saturate(idelta, delta.context->irrelevant_ideal()) != idelta)
            return std::string("IDelta not saturated");
        return std::string("J:B = IDelta, stable");
    });
    run_fixture(rows, dir, "remark_J.json", "remark betti of S/J", "(1,3,2) pd 2 codim 2", [&] {
        auto ideal = vcm::load_ideal(path("remark_J.json"));
        auto cj = vcm::complex_from_sr(ideal);
        auto t = vcm::betti_hochster(cj, q);
        return join_totals(t.totals()) + " pd " + std::to_string(t.projective_dimension()) + " codim " +
               std::to_string(vcm::codim(cj));
    });
    run_fixture(rows, dir, "example3x_delta.json", "example3x link x0 homology", "h0 1", [&] {
        auto doc = vcm::load_complex_doc(path("example3x_delta.json"));
        int x0 = doc.complex.vertices().require("x0");
        auto h = vcm::reduced_homology(doc.complex.link(vcm::Face{x0}), q);
        return "h0 " + std::to_string(h.at(0));
    });
    run_fixture(rows, dir, "example3x_delta.json", "example3x corollary refuted",
                "refuted-hypothesis relative-homology-vanishes", [&] {
                    auto doc = vcm::load_complex_doc(path("example3x_delta.json"));
                    auto rep = vcm::corollary_order(doc.complex, *doc.context);
                    std::string s = vcm::status_name(rep.status);
                    if (rep.status == vcm::Status::refuted_hypothesis) s += " " + rep.hypothesis;
                    return s;
                });
    run_fixture(rows, dir, "example3x_delta.json", "example3x check-prop C=<x0>",
                "fail condition 2 step 2 witness {x0}", [&] {
                    auto doc = vcm::load_complex_doc(path("example3x_delta.json"));
                    int x0 = doc.complex.vertices().require("x0");
                    auto c = vcm::closure_complex(doc.complex.vertices(), {vcm::Face{x0}});
                    Json positions = Json::array();
                    for (int i = 0; i < static_cast<int>(doc.listed.size()); ++i) positions.push_back(i);
                    auto order = vcm::order_from_json(positions, doc);
                    auto v = vcm::check_proposition(doc.complex, order, c, doc.context);
                    if (v.pass) return std::string("pass");
                    std::string s = "fail condition " + std::to_string(v.condition) + " step " +
                                    std::to_string(v.step) + " witness {";
                    bool first = true;
                    for (int vi : v.witness.indices()) {
                        if (!first) s += ",";
                        s += doc.complex.vertices().label(vi);
                        first = false;
                    }
                    return s + "}";
                });
    run_fixture(rows, dir, "example3x_cert.json", "example3x vshelling verify", "pass", [&] {
        auto cert = vcm::load_vshelling(path("example3x_cert.json"));
        auto v = vcm::verify_virtual_shelling(cert, q);
        return v.pass ? std::string("pass") : "fail condition " + v.condition;
    });
    run_fixture(rows, dir, "example3x_cert.json", "example3x link-decompose x0", "pass 2 components", [&] {
        auto cert = vcm::load_vshelling(path("example3x_cert.json"));
        auto d = vcm::link_decomposition(cert, "x0", q);
        std::string s = d.pass ? "pass" : "fail";
        s += " " + std::to_string(d.components.size()) + " components";
        return s;
    });
    run_fixture(rows, dir, "section5_delta.json", "section5 link {x0,x1}", "2 edges, h0 1", [&] {
        auto doc = vcm::load_complex_doc(path("section5_delta.json"));
        vcm::Face g;
        g.insert(doc.complex.vertices().require("x0"));
        g.insert(doc.complex.vertices().require("x1"));
        auto link = doc.complex.link(g);
        auto h = vcm::reduced_homology(link, q);
        return std::to_string(link.facets().size()) + " edges, h0 " + std::to_string(h.at(0));
    });
    run_fixture(rows, dir, "section5_cert.json", "section5 cover verify", "pass", [&] {
        auto cert = vcm::load_cover(path("section5_cert.json"));
        auto v = vcm::verify_cover(cert, q);
        return v.pass ? std::string("pass") : "fail condition " + v.condition;
    });
    run_fixture(rows, dir, "cone_case2_delta.json", "cone construct reaches case 2", "pass, fill-in used",
                [&] {
                    auto doc = vcm::load_complex_doc(path("cone_case2_delta.json"));
                    auto c = vcm::SimplicialComplex::from_generators(doc.complex.vertices(), {vcm::Face{}});
                    Json positions = Json::array();
                    for (int i = 0; i < static_cast<int>(doc.listed.size()); ++i) positions.push_back(i);
                    auto order = vcm::order_from_json(positions, doc);
                    auto cert = vcm::construct_cover(doc.complex, order, c, doc.context);
                    auto v = vcm::verify_virtual_shelling(cert, q);
                    if (!v.pass) return "fail condition " + v.condition;
                    // a fill-in step adds a facet without adding a vertex
                    bool filled = cert.cover.delta_prime.vertices().size() <
                                  static_cast<int>(cert.cover.delta_prime.facets().size()) +
                                      doc.complex.dimension();
                    return filled ? std::string("pass, fill-in used") : std::string("pass, no fill-in");
                });

    bool any_fail = false;
    for (const FixtureRow& r : rows)
        if (r.status == "fail") any_fail = true;

    if (out.pretty) {
        std::size_t w = 0;
        for (const FixtureRow& r : rows) w = std::max(w, r.name.size());
        for (const FixtureRow& r : rows) {
            std::string line = r.name;
            line.resize(w + 2, ' ');
            line += r.status;
            if (r.status != "pass") line += "  expected [" + r.expected + "] got [" + r.got + "]";
            std::cout << line << "\n";
        }
        std::cout << (any_fail ? "FAIL" : "OK") << " (" << rows.size() << " rows)\n";
    } else {
        Json doc = Json::object();
        Json arr = Json::array();
        for (const FixtureRow& r : rows) {
            Json e = Json::object();
            e["name"] = r.name;
            e["status"] = r.status;
            e["expected"] = r.expected;
            e["got"] = r.got;
            arr.push_back(std::move(e));
        }
        doc["rows"] = std::move(arr);
        doc["status"] = any_fail ? "fail" : "pass";
        out.emit(doc);
    }
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certify combinatorial and virtual Cohen-Macaulayness over products of projective spaces"};
    app.require_subcommand(1);

    Output out;
    std::string field_text = "q";
    std::string input, toric, irrelevant, order_csv, vertex, by, equals, fixtures_dir = "fixtures";
    bool annihilation = false;

    app.add_flag("--pretty", out.pretty, "indent output for reading");
    app.add_option("--out", out.out_path, "also write the result document to this path");

    auto add_field = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_text, "coefficient field: q or gf:<p>")->default_val("q");
    };
    auto add_input = [&](CLI::App* cmd) { cmd->add_option("input", input, "input document")->required(); };

    CLI::App* check_cm = app.add_subcommand("check-cm", "Reisner link-homology test");
    add_input(check_cm);
    add_field(check_cm);

    CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers via link homology of restrictions");
    add_input(betti);
    add_field(betti);

    CLI::App* codim_cmd = app.add_subcommand("codim", "codimension of the face ring");
    add_input(codim_cmd);

    CLI::App* sr = app.add_subcommand("sr-ideal", "minimal non-face ideal of a complex");
    add_input(sr);

    CLI::App* sat = app.add_subcommand("saturate", "saturate a monomial ideal");
    add_input(sat);
    sat->add_option("--by", by, "ideal document, or B_X for the irrelevant ideal")->required();
    sat->add_option("--toric", toric, "context document for --by B_X");
    sat->add_option("--equals", equals, "compare the result against this ideal document");

    CLI::App* hom = app.add_subcommand("homology", "reduced simplicial homology");
    add_input(hom);
    add_field(hom);

    CLI::App* relhom = app.add_subcommand("rel-homology-z", "integer homology relative to the irrelevant part");
    add_input(relhom);
    relhom->add_option("--toric", toric, "context document");
    relhom->add_option("--irrelevant", irrelevant, "explicit complex to intersect against");

    CLI::App* shelling = app.add_subcommand("shelling", "shelling orders");
    shelling->require_subcommand(1);
    CLI::App* shell_verify = shelling->add_subcommand("verify", "check a facet order");
    add_input(shell_verify);
    shell_verify->add_option("--order", order_csv, "comma-separated facet positions")->required();
    CLI::App* shell_find = shelling->add_subcommand("find", "search for a shelling order");
    add_input(shell_find);

    CLI::App* vshell = app.add_subcommand("vshelling", "virtual shelling certificates");
    vshell->require_subcommand(1);
    CLI::App* vs_prop = vshell->add_subcommand("check-prop", "attachment conditions for an order");
    add_input(vs_prop);
    vs_prop->add_option("--order", order_csv, "comma-separated facet positions")->required();
    vs_prop->add_option("--toric", toric, "context document");
    vs_prop->add_option("--irrelevant", irrelevant, "excluded complex (defaults to the irrelevant complex)");
    CLI::App* vs_construct = vshell->add_subcommand("construct", "build a cover from a passing order");
    add_input(vs_construct);
    vs_construct->add_option("--order", order_csv, "comma-separated facet positions")->required();
    vs_construct->add_option("--toric", toric, "context document");
    vs_construct->add_option("--irrelevant", irrelevant, "excluded complex");
    CLI::App* vs_verify = vshell->add_subcommand("verify", "verify a certificate with order");
    add_input(vs_verify);
    add_field(vs_verify);

    CLI::App* cover = app.add_subcommand("cover", "cover certificates");
    cover->require_subcommand(1);
    CLI::App* cover_verify = cover->add_subcommand("verify", "verify a cover certificate");
    add_input(cover_verify);
    add_field(cover_verify);
    cover_verify->add_flag("--annihilation", annihilation, "also run the redundant irrelevant-ideal check");

    CLI::App* linkdec = app.add_subcommand("link-decompose", "split a link along a certificate's fibers");
    add_input(linkdec);
    linkdec->add_option("--vertex", vertex, "vertex label")->required();
    add_field(linkdec);

    CLI::App* corollary = app.add_subcommand("corollary", "tree criterion");
    corollary->require_subcommand(1);
    CLI::App* cor_order = corollary->add_subcommand("order", "derive a facet order from the facet tree");
    add_input(cor_order);
    cor_order->add_option("--toric", toric, "context document");

    CLI::App* fixtures = app.add_subcommand("fixtures", "bundled example corpus");
    fixtures->require_subcommand(1);
    CLI::App* fix_run = fixtures->add_subcommand("run", "run every example check");
    fix_run->add_option("--fixtures", fixtures_dir, "fixture directory")->default_val("fixtures");

    // let --pretty / --out / --field appear after the subcommand too
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        vcm::FieldSpec field = vcm::FieldSpec::parse(field_text);
        if (check_cm->parsed()) return run_check_cm(input, field, out);
        if (betti->parsed()) return run_betti(input, field, out);
        if (codim_cmd->parsed()) return run_codim(input, out);
        if (sr->parsed()) return run_sr_ideal(input, out);
        if (sat->parsed()) return run_saturate(input, by, toric, equals, out);
        if (hom->parsed()) return run_homology(input, field, out);
        if (relhom->parsed()) return run_rel_homology(input, toric, irrelevant, out);
        if (shell_verify->parsed()) return run_shelling_verify(input, order_csv, out);
        if (shell_find->parsed()) return run_shelling_find(input, out);
        if (vs_prop->parsed()) return run_check_prop(input, order_csv, toric, irrelevant, out);
        if (vs_construct->parsed()) return run_construct(input, order_csv, toric, irrelevant, out);
        if (vs_verify->parsed()) return run_vshelling_verify(input, field, out);
        if (cover_verify->parsed()) return run_cover_verify(input, field, annihilation, out);
        if (linkdec->parsed()) return run_link_decompose(input, vertex, field, out);
        if (cor_order->parsed()) return run_corollary(input, toric, out);
        if (fix_run->parsed()) return run_fixture_suite(fixtures_dir, out);
        std::cerr << "no subcommand dispatched\n";
        return 2;
    } catch (const vcm::invalid_input& e) {
        Json doc = Json::object();
        doc["status"] = "error";
        doc["note"] = e.what();
        std::cout << doc.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json doc = Json::object();
        doc["status"] = "error";
        doc["note"] = e.what();
        std::cout << doc.dump() << "\n";
        return 2;
    }
}

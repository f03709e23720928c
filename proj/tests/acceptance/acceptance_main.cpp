// End-to-end acceptance run over the bundled fixtures.  Usage:
//   acceptance <fixtures-dir> <path-to-vcm-binary>
// Prints one PASS/FAIL line per criterion; exit code is the failure count.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "vcm/covers.hpp"
#include "vcm/serialize.hpp"
#include "vcm/shelling.hpp"
#include "vcm/stanley_reisner.hpp"

using vcm::Face;
using vcm::FieldSpec;
using vcm::Json;
using vcm::SimplicialComplex;
using vcm::ToricContext;
using vcm::VertexLabeling;

namespace {

std::string g_fixtures;
std::string g_cli;
int g_failures = 0;

std::string fx(const std::string& name) { return g_fixtures + "/" + name; }

// exit code of the vcm binary; stdout/stderr are discarded
int cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return 127;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return 128;
}

void criterion(int n, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

const FieldSpec Q = FieldSpec::rationals();

VertexLabeling letters(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
    return VertexLabeling{v};
}

// same corpus as the unit property suite: pure, <= 7 vertices
SimplicialComplex random_pure(std::mt19937_64& rng) {
    int n = 3 + static_cast<int>(rng() % 5);
    int d = 1 + static_cast<int>(rng() % 3);
    if (d + 1 > n) d = n - 1;
    int k = 2 + static_cast<int>(rng() % 5);
    std::vector<Face> gens;
    for (int i = 0; i < k; ++i) {
        Face f;
        while (f.size() < d + 1) f.insert(static_cast<int>(rng() % n));
        gens.push_back(f);
    }
    return SimplicialComplex::from_generators(letters(n), gens);
}

constexpr std::uint64_t corpus_seed = 20240823;
constexpr int corpus_size = 200;

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <fixtures-dir> <vcm-binary>\n";
        return 64;
    }
    g_fixtures = argv[1];
    g_cli = argv[2];

    criterion(1, "running example refutes Cohen-Macaulayness with resolution (1,4,4,1), pd 3, codim 2", [] {
        auto doc = vcm::load_complex_doc(fx("example14_delta.json"));
        auto rep = vcm::is_cohen_macaulay(doc.complex, Q);
        auto t = vcm::betti_hochster(doc.complex, Q);
        bool ok = !rep.cohen_macaulay;
        ok = ok && t.totals() == std::vector<long>{1, 4, 4, 1};
        ok = ok && t.projective_dimension() == 3;
        ok = ok && vcm::codim(doc.complex) == 2;
        ok = ok && cli("check-cm " + fx("example14_delta.json")) == 1;
        ok = ok && cli("betti " + fx("example14_delta.json")) == 0;
        ok = ok && cli("codim " + fx("example14_delta.json")) == 0;
        return ok;
    });

    criterion(2, "doubled-vertex certificate passes both verifiers and its source is shellable and CM", [] {
        auto cert = vcm::load_vshelling(fx("example14_cert.json"));
        bool ok = vcm::verify_cover(cert.cover, Q).pass;
        ok = ok && vcm::verify_virtual_shelling(cert, Q).pass;
        const SimplicialComplex& dp = cert.cover.delta_prime;
        ok = ok && vcm::is_cohen_macaulay(dp, Q).cohen_macaulay;
        ok = ok && vcm::is_shelling(dp, cert.order).ok;
        ok = ok && cli("cover verify " + fx("example14_cert.json")) == 0;
        ok = ok && cli("vshelling verify " + fx("example14_cert.json")) == 0;
        ok = ok && cli("check-cm " + fx("example14_delta_prime.json")) == 0;
        ok = ok && cli("shelling verify " + fx("example14_delta_prime.json") + " --order 0,1,2,3") == 0;
        return ok;
    });

    criterion(3, "presentation ideal saturates to the face ideal and already resolves in codimension length", [] {
        auto j = vcm::load_ideal(fx("remark_J.json"));
        auto doc = vcm::load_complex_doc(fx("example14_delta.json"));
        if (!doc.context) return false;
        auto b = doc.context->irrelevant_ideal();
        auto i_delta = vcm::sr_ideal(doc.complex);
        bool ok = vcm::saturate(j, b) == i_delta;
        ok = ok && vcm::saturate(i_delta, b) == i_delta;
        auto cj = vcm::complex_from_sr(j);
        auto t = vcm::betti_hochster(cj, Q);
        ok = ok && t.projective_dimension() == 2 && vcm::codim(cj) == 2;
        ok = ok && cli("saturate " + fx("remark_J.json") + " --by B_X --equals " +
                       fx("example14_IDelta_sat.json")) == 0;
        return ok;
    });

    criterion(4, "extended example: disconnected vertex link, passing certificate, and the small excluded set "
                 "breaks attachment condition 2", [] {
        auto doc = vcm::load_complex_doc(fx("example3x_delta.json"));
        int x0 = doc.complex.vertices().require("x0");
        auto h = vcm::reduced_homology(doc.complex.link(Face{x0}), Q);
        bool ok = h.at(0) == 1;

        auto cert = vcm::load_vshelling(fx("example3x_cert.json"));
        ok = ok && vcm::verify_virtual_shelling(cert, Q).pass;
        ok = ok && cli("vshelling verify " + fx("example3x_cert.json")) == 0;

        auto c = vcm::closure_complex(doc.complex.vertices(), {Face{x0}});
        Json positions = Json::array();
        for (int i = 0; i < static_cast<int>(doc.listed.size()); ++i) positions.push_back(i);
        auto order = vcm::order_from_json(positions, doc);
        auto v = vcm::check_proposition(doc.complex, order, c, doc.context);
        int y0 = doc.complex.vertices().require("y0");
        int y2 = doc.complex.vertices().require("y2");
        ok = ok && !v.pass && v.condition == 2 && v.step == 2;
        ok = ok && v.attaching == Face::from_indices({x0, y0, y2});

        std::string tmp = (std::filesystem::temp_directory_path() / "vcm_acceptance_c.json").string();
        {
            std::ofstream out(tmp);
            out << vcm::complex_to_json(c).dump(2) << "\n";
        }
        ok = ok && cli("vshelling check-prop " + fx("example3x_delta.json") +
                       " --order 0,1,2,3,4,5,6,7,8,9,10 --irrelevant " + tmp) == 1;
        std::filesystem::remove(tmp);
        return ok;
    });

    criterion(5, "edge link splits into two opposite edges and the companion certificate verifies", [] {
        auto doc = vcm::load_complex_doc(fx("section5_delta.json"));
        Face g;
        g.insert(doc.complex.vertices().require("x0"));
        g.insert(doc.complex.vertices().require("x1"));
        auto link = doc.complex.link(g);
        auto expect = vcm::closure_complex(
            doc.complex.vertices(),
            {Face::from_indices({doc.complex.vertices().require("y0"), doc.complex.vertices().require("y1")}),
             Face::from_indices({doc.complex.vertices().require("y2"), doc.complex.vertices().require("y3")})});
        bool ok = link == expect;
        auto cert = vcm::load_cover(fx("section5_cert.json"));
        ok = ok && vcm::verify_cover(cert, Q).pass;
        ok = ok && cli("cover verify " + fx("section5_cert.json")) == 0;
        return ok;
    });

    criterion(6, "attachment conditions pass against the irrelevant complex and the built cover verifies "
                 "on six vertices", [] {
        auto doc = vcm::load_complex_doc(fx("example14_delta.json"));
        if (!doc.context) return false;
        auto irr = doc.context->irrelevant_complex();
        Json positions = Json::array({0, 1, 2, 3});
        auto order = vcm::order_from_json(positions, doc);

        auto labels = doc.complex.vertices();
        int x0 = labels.require("x0"), x1 = labels.require("x1");
        int y0 = labels.require("y0"), y1 = labels.require("y1");
        auto xis = vcm::xi_sets(doc.complex, order, irr);
        bool ok = xis.size() == 3;
        ok = ok && xis[0].faces == std::vector<Face>{Face::from_indices({x0, y0})};
        ok = ok && xis[1].faces == std::vector<Face>{Face::from_indices({x1, y0})};
        ok = ok && xis[2].faces == std::vector<Face>{Face::from_indices({x1, y1})};

        ok = ok && vcm::check_proposition(doc.complex, order, irr, doc.context).pass;
        auto cert = vcm::construct_cover(doc.complex, order, irr, doc.context);
        ok = ok && cert.cover.delta_prime.vertices().size() == 6;
        ok = ok && vcm::verify_cover(cert.cover, Q).pass;
        ok = ok && vcm::verify_virtual_shelling(cert, Q).pass;
        ok = ok && cli("vshelling construct " + fx("example14_delta.json") + " --order 0,1,2,3") == 0;
        return ok;
    });

    criterion(7, "facet tree criterion emits a certified order on the running example and refutes the "
                 "extended one", [] {
        auto doc = vcm::load_complex_doc(fx("example14_delta.json"));
        if (!doc.context) return false;
        auto rep = vcm::corollary_order(doc.complex, *doc.context);
        bool ok = rep.status == vcm::Status::pass;
        ok = ok && rep.graph.connected && rep.graph.tree;
        ok = ok && rep.top_homology.trivial() && rep.homology_zero;
        ok = ok && rep.order.size() == doc.complex.facets().size();
        ok = ok && rep.certificate.has_value();
        if (ok) {
            ok = vcm::verify_cover(rep.certificate->cover, Q).pass &&
                 vcm::verify_virtual_shelling(*rep.certificate, Q).pass;
        }

        auto doc3 = vcm::load_complex_doc(fx("example3x_delta.json"));
        if (!doc3.context) return false;
        auto rep3 = vcm::corollary_order(doc3.complex, *doc3.context);
        ok = ok && rep3.status == vcm::Status::refuted_hypothesis;
        ok = ok && rep3.hypothesis == "relative-homology-vanishes";

        ok = ok && cli("corollary order " + fx("example14_delta.json")) == 0;
        ok = ok && cli("corollary order " + fx("example3x_delta.json")) == 1;
        return ok;
    });

    criterion(8, "random corpus: shellable implies CM, Reisner matches resolution length, boundary and Euler "
                 "identities hold, passing orders always construct verifying covers", [] {
        bool ok = true;

        {
            std::mt19937_64 rng(corpus_seed);
            int shellable = 0;
            for (int t = 0; t < corpus_size; ++t) {
                SimplicialComplex c = random_pure(rng);
                if (c.is_void() || !c.is_pure()) return false;
                bool cm = vcm::is_cohen_macaulay(c, Q).cohen_macaulay;
                if (vcm::find_shelling(c)) {
                    ++shellable;
                    ok = ok && cm;
                }
                ok = ok && (cm == (vcm::betti_hochster(c, Q).projective_dimension() == vcm::codim(c)));
            }
            ok = ok && shellable > 0;
        }

        {
            std::mt19937_64 rng(corpus_seed);
            for (int t = 0; t < corpus_size; ++t) {
                SimplicialComplex c = random_pure(rng);
                for (int d = 0; d <= c.dimension(); ++d) {
                    vcm::IntMatrix a = vcm::boundary_matrix(c, d);
                    vcm::IntMatrix b = vcm::boundary_matrix(c, d + 1);
                    if (a.cols() == 0 || b.cols() == 0) continue;
                    for (std::size_t i = 0; i < a.rows(); ++i)
                        for (std::size_t j = 0; j < b.cols(); ++j) {
                            vcm::Integer s = 0;
                            for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
                            if (s != 0) return false;
                        }
                }
                auto h = vcm::reduced_homology(c, Q);
                long alt = 0, chi = 0;
                for (int d = -1; d <= c.dimension(); ++d) alt += (d & 1) ? -h.at(d) : h.at(d);
                for (Face f : c.all_faces()) chi += (f.dim() & 1) ? -1 : 1;
                ok = ok && alt == chi;
            }
            auto simplex = SimplicialComplex::from_generators(letters(5), {Face{0, 1, 2, 3, 4}});
            ok = ok && vcm::reduced_homology(simplex, Q).all_zero();
            auto rim = SimplicialComplex::from_generators(letters(3), {Face{0, 1}, Face{0, 2}, Face{1, 2}});
            ok = ok && vcm::reduced_homology(rim, Q).at(1) == 1;
        }

        {
            std::mt19937_64 rng(corpus_seed);
            int passed = 0;
            for (int trial = 0; trial < 60; ++trial) {
                int n = 4 + static_cast<int>(rng() % 4);
                int split = 1 + static_cast<int>(rng() % (n - 1));
                std::vector<std::vector<int>> blocks(2);
                for (int v = 0; v < n; ++v) blocks[v < split ? 0 : 1].push_back(v);
                int d = 1 + static_cast<int>(rng() % 2);
                if (d + 1 > n) d = n - 1;
                int k = 2 + static_cast<int>(rng() % 4);
                std::vector<Face> gens;
                for (int i = 0; i < k; ++i) {
                    Face f;
                    f.insert(static_cast<int>(rng() % split));
                    f.insert(split + static_cast<int>(rng() % (n - split)));
                    while (f.size() < d + 1) f.insert(static_cast<int>(rng() % n));
                    if (f.size() == d + 1) gens.push_back(f);
                }
                if (gens.empty()) continue;
                auto lab = letters(n);
                SimplicialComplex delta = SimplicialComplex::from_generators(lab, gens);
                ToricContext ctx = ToricContext::make(lab, blocks);
                SimplicialComplex irr = ctx.irrelevant_complex();
                std::vector<int> order(delta.facets().size());
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                auto prop = vcm::check_proposition(delta, order, irr, ctx);
                if (!prop.pass) continue;
                ++passed;
                auto cert = vcm::construct_cover(delta, order, irr, ctx);
                ok = ok && vcm::verify_virtual_shelling(cert, Q).pass;
                ok = ok && vcm::verify_cover(cert.cover, Q).pass;
            }
            auto doc = vcm::load_complex_doc(fx("example14_delta.json"));
            if (!doc.context) return false;
            auto order = vcm::order_from_json(Json::array({0, 1, 2, 3}), doc);
            auto prop = vcm::check_proposition(doc.complex, order, doc.context->irrelevant_complex(),
                                               doc.context);
            ok = ok && prop.pass;
            if (prop.pass) {
                auto cert = vcm::construct_cover(doc.complex, order, doc.context->irrelevant_complex(),
                                                 doc.context);
                ok = ok && vcm::verify_virtual_shelling(cert, Q).pass;
                ok = ok && vcm::verify_cover(cert.cover, Q).pass;
                ++passed;
            }
            ok = ok && passed >= 1;
        }

        return ok;
    });

    criterion(9, "links at duplicated vertices split into one certified component per lift", [] {
        auto check = [](const std::string& cert_file, const std::string& vertex) {
            auto cert = vcm::load_vshelling(fx(cert_file));
            int x = cert.cover.delta.vertices().require(vertex);
            auto fiber = cert.cover.map().fiber(Face{x});
            auto dec = vcm::link_decomposition(cert, vertex, Q);
            bool ok = dec.pass;
            ok = ok && dec.components.size() == fiber.size();
            ok = ok && dec.union_matches && dec.intersections_irrelevant;
            for (const auto& comp : dec.components) ok = ok && comp.verdict.pass;
            return ok;
        };
        bool ok = check("example14_cert.json", "y2");
        ok = ok && check("example3x_cert.json", "x0");
        ok = ok && cli("link-decompose " + fx("example14_cert.json") + " --vertex y2") == 0;
        ok = ok && cli("link-decompose " + fx("example3x_cert.json") + " --vertex x0") == 0;
        return ok;
    });

    std::cout << (g_failures == 0 ? "OK" : "FAILURES: " + std::to_string(g_failures)) << std::endl;
    return g_failures;
}

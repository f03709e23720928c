#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vcm/stanley_reisner.hpp"

using vcm::Face;
using vcm::FieldSpec;
using vcm::IntMatrix;
using vcm::Monomial;
using vcm::MonomialIdeal;
using vcm::SimplicialComplex;
using vcm::VertexLabeling;

namespace {

VertexLabeling letters(int n) {
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
    return VertexLabeling{v};
}

// P^1 x P^2 running example: not CM, pd 3 over codim 2
SimplicialComplex running_example() {
    VertexLabeling lab{{"x0", "x1", "y0", "y1", "y2"}};
    return SimplicialComplex::from_generators(
        lab, {Face{0, 2, 4}, Face{0, 1, 2}, Face{1, 2, 3}, Face{1, 3, 4}});
}

Monomial mono(std::vector<unsigned> exp) {
    Monomial m;
    m.exp = std::move(exp);
    return m;
}

// direct scan for minimal non-faces: a non-face all of whose vertex
// deletions are faces
std::vector<Face> brute_min_nonfaces(const SimplicialComplex& c) {
    const int n = c.vertices().size();
    std::vector<Face> out;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        Face f(bits);
        if (c.contains(f)) continue;
        bool minimal = true;
        for (int v : f.indices())
            if (!c.contains(f.without(v))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), vcm::canonical_face_less);
    return out;
}

// Betti numbers of S/I from the Taylor complex: the free module in step i has
// one basis element per i-subset of the minimal generators, and after killing
// the variables a differential entry survives (as +-1) exactly when dropping
// that generator keeps the subset lcm.  Independent of any homology code
// except the plain rank routines.
std::vector<long> taylor_betti(const MonomialIdeal& ideal, const FieldSpec& field) {
    const auto& gens = ideal.generators();
    const int m = static_cast<int>(gens.size());
    REQUIRE(m <= 10);
    REQUIRE(!ideal.is_unit());

    const std::uint32_t total = std::uint32_t{1} << m;
    std::vector<Monomial> L(total, Monomial::unit(ideal.ring().size()));
    for (std::uint32_t s = 1; s < total; ++s) {
        int g = std::countr_zero(s);
        L[s] = lcm(L[s & (s - 1)], gens[static_cast<std::size_t>(g)]);
    }

    std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(m) + 1);
    std::vector<std::size_t> pos(total);
    for (std::uint32_t s = 0; s < total; ++s) {
        auto& bucket = by_size[static_cast<std::size_t>(std::popcount(s))];
        pos[s] = bucket.size();
        bucket.push_back(s);
    }

    std::vector<std::size_t> rank(static_cast<std::size_t>(m) + 2, 0);
    for (int i = 1; i <= m; ++i) {
        IntMatrix d(by_size[static_cast<std::size_t>(i - 1)].size(),
                    by_size[static_cast<std::size_t>(i)].size());
        for (std::size_t col = 0; col < d.cols(); ++col) {
            std::uint32_t s = by_size[static_cast<std::size_t>(i)][col];
            int k = 0;
            for (std::uint32_t rest = s; rest; rest &= rest - 1, ++k) {
                std::uint32_t t = s & ~(rest & (~rest + 1));
                if (L[s] == L[t]) d.at(pos[t], col) = (k % 2 == 0) ? 1 : -1;
            }
        }
        rank[static_cast<std::size_t>(i)] =
            field.rational ? vcm::rank_over_q(d) : vcm::rank_mod_p(d, field.p);
    }

    std::vector<long> betti;
    long choose = 1; // C(m, i), updated incrementally
    for (int i = 0; i <= m; ++i) {
        betti.push_back(choose - static_cast<long>(rank[static_cast<std::size_t>(i)]) -
                        static_cast<long>(rank[static_cast<std::size_t>(i) + 1]));
        choose = choose * (m - i) / (i + 1);
    }
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    return betti;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n, int k) {
    std::vector<Face> gens;
    for (int i = 0; i < k; ++i) gens.push_back(Face(rng() & ((std::uint64_t{1} << n) - 1)));
    return SimplicialComplex::from_generators(letters(n), gens);
}

} // namespace

TEST_CASE("minimal non-faces of the running example, in serialization order") {
    auto ideal = vcm::sr_ideal(running_example());
    const auto& g = ideal.generators();
    REQUIRE(g.size() == 4);
    CHECK(g[0] == mono({1, 0, 0, 1, 0})); // x0*y1
    CHECK(g[1] == mono({1, 1, 0, 0, 1})); // x0*x1*y2
    CHECK(g[2] == mono({0, 1, 1, 0, 1})); // x1*y0*y2
    CHECK(g[3] == mono({0, 0, 1, 1, 1})); // y0*y1*y2
}

TEST_CASE("generators agree with a brute non-face scan") {
    std::mt19937_64 rng(8675309);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        auto c = random_complex(rng, n, 4);
        if (c.is_void()) continue;
        auto ideal = vcm::sr_ideal(c);
        std::vector<Face> supports;
        for (const Monomial& m : ideal.generators()) {
            CHECK(m.is_squarefree());
            supports.push_back(m.support());
        }
        std::sort(supports.begin(), supports.end(), vcm::canonical_face_less);
        CHECK(supports == brute_min_nonfaces(c));
    }
}

TEST_CASE("ideal and complex round-trip through each other") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        auto c = random_complex(rng, 4 + static_cast<int>(rng() % 3), 3);
        if (c.is_void()) continue;
        CHECK(vcm::complex_from_sr(vcm::sr_ideal(c)) == c);
    }

    auto lab = letters(3);
    auto void_c = SimplicialComplex::from_generators(lab, {});
    CHECK(vcm::sr_ideal(void_c).is_unit());
    CHECK(vcm::complex_from_sr(vcm::sr_ideal(void_c)).is_void());

    auto empty_c = SimplicialComplex::from_generators(lab, {Face{}});
    CHECK(vcm::sr_ideal(empty_c).generators().size() == 3); // the maximal ideal
    CHECK(vcm::complex_from_sr(vcm::sr_ideal(empty_c)) == empty_c);

    auto full = SimplicialComplex::from_generators(lab, {Face{0, 1, 2}});
    CHECK(vcm::sr_ideal(full).is_zero());
    CHECK(vcm::complex_from_sr(vcm::sr_ideal(full)) == full);

    auto bad = MonomialIdeal::from_generators(lab, {mono({2, 0, 0})});
    CHECK_THROWS_AS(vcm::complex_from_sr(bad), vcm::invalid_input);
}

TEST_CASE("graded Betti numbers of the running example") {
    auto c = running_example();
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(2)}) {
        auto table = vcm::betti_hochster(c, f);
        CHECK(table.totals() == std::vector<long>{1, 4, 4, 1});
        CHECK(table.projective_dimension() == 3);
    }
    CHECK(vcm::codim(c) == 2);

    // degree-one entries sit exactly on the minimal non-faces
    auto table = vcm::betti_hochster(c, FieldSpec::rationals());
    CHECK(table.entries.at({1, Face{0, 3}}) == 1);
    CHECK(table.entries.at({1, Face{0, 1, 4}}) == 1);
    CHECK(table.entries.at({1, Face{1, 2, 4}}) == 1);
    CHECK(table.entries.at({1, Face{2, 3, 4}}) == 1);
    CHECK(table.total(1) == 4);
}

TEST_CASE("Betti totals match the Taylor complex") {
    FieldSpec q = FieldSpec::rationals();

    auto c = running_example();
    CHECK(taylor_betti(vcm::sr_ideal(c), q) == std::vector<long>{1, 4, 4, 1});
    CHECK(taylor_betti(vcm::sr_ideal(c), FieldSpec::prime_field(2)) ==
          std::vector<long>{1, 4, 4, 1});

    // quotient by three of the four generators: resolves with totals (1,3,2)
    VertexLabeling lab{{"x0", "x1", "y0", "y1", "y2"}};
    auto j = MonomialIdeal::from_generators(
        lab, {mono({1, 0, 0, 1, 0}), mono({1, 1, 0, 0, 1}), mono({0, 1, 1, 0, 1})});
    auto cj = vcm::complex_from_sr(j);
    REQUIRE(cj.facets().size() == 5);
    CHECK(taylor_betti(j, q) == std::vector<long>{1, 3, 2});
    CHECK(vcm::betti_hochster(cj, q).totals() == std::vector<long>{1, 3, 2});
    CHECK(vcm::betti_hochster(cj, q).projective_dimension() == vcm::codim(cj));

    std::mt19937_64 rng(271828);
    int covered = 0;
    for (int trial = 0; trial < 60 && covered < 25; ++trial) {
        auto rc = random_complex(rng, 4 + static_cast<int>(rng() % 3), 4);
        if (rc.is_void()) continue;
        auto ideal = vcm::sr_ideal(rc);
        if (ideal.generators().size() > 9) continue;
        ++covered;
        if (ideal.is_zero()) {
            CHECK(vcm::betti_hochster(rc, q).totals() == std::vector<long>{1});
            continue;
        }
        CHECK(vcm::betti_hochster(rc, q).totals() == taylor_betti(ideal, q));
        CHECK(vcm::betti_hochster(rc, FieldSpec::prime_field(2)).totals() ==
              taylor_betti(ideal, FieldSpec::prime_field(2)));
    }
    CHECK(covered >= 10);
}

TEST_CASE("first Betti total counts the minimal generators") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = random_complex(rng, 5, 4);
        if (c.is_void()) continue;
        auto table = vcm::betti_hochster(c, FieldSpec::rationals());
        CHECK(table.total(0) == 1);
        CHECK(table.total(1) == static_cast<long>(vcm::sr_ideal(c).generators().size()));
    }
}

TEST_CASE("codimension bookkeeping") {
    CHECK(vcm::codim(running_example()) == 2);
    auto lab = letters(4);
    auto sphere = SimplicialComplex::from_generators(
        lab, {Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 3}, Face{1, 2, 3}});
    CHECK(vcm::codim(sphere) == 1);
    CHECK(vcm::codim(SimplicialComplex::from_generators(lab, {Face{0, 1, 2, 3}})) == 0);
    CHECK(vcm::codim(SimplicialComplex::from_generators(lab, {Face{}})) == 4);
    CHECK_THROWS_AS(vcm::codim(SimplicialComplex::from_generators(lab, {})), vcm::invalid_input);
}

TEST_CASE("link criterion refutes the running example at the empty face") {
    auto r = vcm::is_cohen_macaulay(running_example(), FieldSpec::rationals());
    CHECK(!r.cohen_macaulay);
    CHECK(r.witness_face == Face{});
    CHECK(r.witness_degree == 1);
}

TEST_CASE("link criterion on the four-facet cone over a strip") {
    VertexLabeling lab{{"x0", "x1", "y0", "y1", "y2", "y3"}};
    auto c = SimplicialComplex::from_generators(
        lab, {Face{0, 1, 2, 3}, Face{0, 2, 3, 4}, Face{0, 3, 4, 5}, Face{0, 1, 4, 5}});
    auto r = vcm::is_cohen_macaulay(c, FieldSpec::rationals());
    CHECK(!r.cohen_macaulay);
    CHECK(r.witness_face == Face{0});
    CHECK(r.witness_degree == 1);

    // the two-vertex link that disconnects
    auto lk = c.link(Face{0, 1});
    REQUIRE(lk.facets().size() == 2);
    CHECK(vcm::reduced_homology(lk, FieldSpec::rationals()).at(0) == 1);
}

TEST_CASE("spheres and cones are Cohen-Macaulay") {
    auto lab = letters(4);
    auto sphere = SimplicialComplex::from_generators(
        lab, {Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 3}, Face{1, 2, 3}});
    CHECK(vcm::is_cohen_macaulay(sphere, FieldSpec::rationals()).cohen_macaulay);
    CHECK(vcm::betti_hochster(sphere, FieldSpec::rationals()).totals() ==
          std::vector<long>{1, 1});

    auto solid = SimplicialComplex::from_generators(lab, {Face{0, 1, 2, 3}});
    CHECK(vcm::is_cohen_macaulay(solid, FieldSpec::rationals()).cohen_macaulay);
}

TEST_CASE("link criterion matches the resolution-length criterion") {
    std::mt19937_64 rng(1618);
    FieldSpec q = FieldSpec::rationals();
    for (int trial = 0; trial < 30; ++trial) {
        auto c = random_complex(rng, 4 + static_cast<int>(rng() % 2), 3);
        if (c.is_void()) continue;
        auto r = vcm::is_cohen_macaulay(c, q);
        bool pd_matches = vcm::betti_hochster(c, q).projective_dimension() == vcm::codim(c);
        CHECK(r.cohen_macaulay == pd_matches);
        if (!r.cohen_macaulay) {
            auto lk = c.link(r.witness_face);
            CHECK(r.witness_degree < lk.dimension());
            CHECK(vcm::reduced_homology(lk, q).at(r.witness_degree) != 0);
        }
    }
}

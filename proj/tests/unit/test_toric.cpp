#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "vcm/monomial.hpp"
#include "vcm/toric.hpp"

using vcm::Face;
using vcm::Monomial;
using vcm::MonomialIdeal;
using vcm::ToricContext;
using vcm::VertexLabeling;

namespace {

// P^1 x P^2 with Cox variables x0,x1 | y0,y1,y2
ToricContext p1xp2() {
    VertexLabeling lab{{"x0", "x1", "y0", "y1", "y2"}};
    return ToricContext::make(lab, {{0, 1}, {2, 3, 4}});
}

} // namespace

TEST_CASE("block data round trips") {
    ToricContext ctx = p1xp2();
    CHECK(ctx.factor_count() == 2);
    CHECK(ctx.block_face(0) == Face{0, 1});
    CHECK(ctx.block_face(1) == Face{2, 3, 4});
    CHECK(ctx.block_of(0) == 0);
    CHECK(ctx.block_of(4) == 1);
}

TEST_CASE("blocks must partition the vertex set") {
    VertexLabeling lab{{"a", "b", "c"}};
    CHECK_THROWS_AS(ToricContext::make(lab, {{0, 1}}), vcm::invalid_input);          // misses c
    CHECK_THROWS_AS(ToricContext::make(lab, {{0, 1}, {1, 2}}), vcm::invalid_input);  // b twice
    CHECK_THROWS_AS(ToricContext::make(lab, {{0, 1, 2}, {}}), vcm::invalid_input);   // empty part
    CHECK_THROWS_AS(ToricContext::make(lab, {{0, 1}, {3}}), vcm::invalid_input);     // out of range
    CHECK_NOTHROW(ToricContext::make(lab, {{0, 2}, {1}}));
}

TEST_CASE("a face is relevant iff it meets every block") {
    ToricContext ctx = p1xp2();
    CHECK(ctx.is_relevant(Face{0, 2}));
    CHECK(ctx.is_relevant(Face{1, 2, 3}));
    CHECK_FALSE(ctx.is_relevant(Face{0, 1}));
    CHECK_FALSE(ctx.is_relevant(Face{2, 3, 4}));
    CHECK_FALSE(ctx.is_relevant(Face{}));
}

TEST_CASE("irrelevant complex is generated by the block complements") {
    ToricContext ctx = p1xp2();
    auto b = ctx.irrelevant_complex();
    REQUIRE(b.facets().size() == 2);
    CHECK(b.facets()[0] == Face{0, 1});    // complement of the y block
    CHECK(b.facets()[1] == Face{2, 3, 4}); // complement of the x block
    CHECK(b.contains(Face{0}));
    CHECK(b.contains(Face{3, 4}));
    CHECK_FALSE(b.contains(Face{0, 2}));

    // consistency with is_relevant across every subset
    for (std::uint64_t s = 0; s < 32; ++s) CHECK(b.contains(Face(s)) == !ctx.is_relevant(Face(s)));

    // one factor: only the empty face is irrelevant
    VertexLabeling lab{{"a", "b"}};
    auto single = ToricContext::make(lab, {{0, 1}}).irrelevant_complex();
    CHECK(single.is_empty_complex());
}

TEST_CASE("irrelevant ideal is the transversal monomial ideal") {
    ToricContext ctx = p1xp2();
    MonomialIdeal b = ctx.irrelevant_ideal();
    REQUIRE(b.generators().size() == 6); // one variable from each block, 2*3 picks
    for (const Monomial& g : b.generators()) {
        CHECK(g.is_squarefree());
        CHECK(g.total_degree() == 2);
        CHECK(ctx.is_relevant(g.support()));
    }

    // oracle: B = (x0,x1) ∩ (y0,y1,y2), computed by pairwise lcm
    auto var = [&](int v) { return Monomial::squarefree(5, Face{v}); };
    MonomialIdeal xs = MonomialIdeal::from_generators(ctx.vertices(), {var(0), var(1)});
    MonomialIdeal ys = MonomialIdeal::from_generators(ctx.vertices(), {var(2), var(3), var(4)});
    CHECK(b == vcm::intersect_ideals(xs, ys));
}

TEST_CASE("dropping a vertex shrinks its factor") {
    ToricContext ctx = p1xp2();

    ToricContext no_y2 = ctx.drop_vertex(4);
    CHECK(no_y2.vertices().labels() == std::vector<std::string>{"x0", "x1", "y0", "y1"});
    CHECK(no_y2.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    // P^0 factors are allowed
    ToricContext no_x0 = ctx.drop_vertex(0);
    CHECK(no_x0.vertices().labels() == std::vector<std::string>{"x1", "y0", "y1", "y2"});
    CHECK(no_x0.blocks() == std::vector<std::vector<int>>{{0}, {1, 2, 3}});

    // a factor may not lose its last variable
    CHECK_THROWS_AS(no_x0.drop_vertex(0), vcm::invalid_input);
    CHECK_THROWS_AS(ctx.drop_vertex(9), vcm::invalid_input);
}

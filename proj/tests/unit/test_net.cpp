#include "doctest.h"

#include "lnet/error.hpp"
#include "lnet/fixtures.hpp"
#include "lnet/net.hpp"
#include "support.hpp"

using namespace lnet;
using namespace lnet::net;
using zq::ClosedSet;

namespace {

const Field Q = Field::rationals();
const Vertex U({0, 0});
const Vertex W({1, 0});

// n = 1 window {(0,0),(1,0),(0,1)} of dimension 1 with every arrow carrying `value`.
WindowNet tiny_line_net(int value) {
    std::vector<Vertex> vs{Vertex({0, 0}), Vertex({1, 0}), Vertex({0, 1})};
    std::map<Vertex, std::size_t> dims;
    for (const auto& v : vs) dims[v] = 1;
    std::map<ArrowKey, Matrix> arrows;
    for (const auto& v : vs)
        for (ArrowType a = 0; a <= 1; ++a)
            if (dims.count(zq::step(v, a))) {
                Matrix m(Q, 1, 1);
                m(0, 0) = Q.from_int(value);
                arrows.emplace(ArrowKey{v, a}, m);
            }
    return WindowNet(Q, 1, dims, std::move(arrows));
}

}  // namespace

// Arrows closing a circuit through the generator must vanish; every other arrow is the identity.
TEST_CASE("expanding a singleton presentation") {
    NetPresentation p{Q, 2, ClosedSet::hull_of(std::vector<Vertex>{Vertex::origin(2)}), {{Vertex::origin(2), 2}}, {}};
    auto net = expand(p, 1);
    CHECK(net.vertices().size() == 7);
    for (const auto& v : net.vertices()) {
        CHECK(net.dim(v) == 2);
        for (ArrowType a = 0; a <= 2; ++a)
            if (net.has_arrow(v, a)) {
                const bool through = zq::admissible_through(Vertex::origin(2), v, zq::step(v, a));
                CHECK(net.arrow(v, a) == (through ? Matrix::identity(Q, 2) : Matrix(Q, 2, 2)));
            }
    CHECK(check_weakly_linked(net).passed);
    }
    CHECK(expand(p, 0).vertices().size() == 1);
}

TEST_CASE("SEG2 passes every axiom check") {
    auto seg = fixtures::seg2(Q);
    CHECK(check_weakly_linked(seg).passed);
    CHECK(check_linked(seg).passed);
    CHECK(check_exact(seg).passed);
    CHECK(check_pure(seg).passed);
    auto report = check_weakly_linked(seg);
    CHECK(report.path_bound == 2);
    CHECK(report.checked > 0);
}

TEST_CASE("SEG2 matrices between the generators") {
    auto seg = fixtures::seg2(Q);
    auto uv = class_map(seg, U, W);
    auto vu = class_map(seg, W, U);
    CHECK(uv.rows() == 2);
    CHECK(uv(0, 0) == Q.one());
    CHECK(uv(1, 1).is_zero());
    CHECK(vu(0, 0).is_zero());
    CHECK(vu(1, 1) == Q.one());
    CHECK((vu * uv).is_zero());
    CHECK(class_map(seg, U, U) == Matrix::identity(Q, 2));
    auto pres = fixtures::seg2_presentation(Q);
    CHECK(pres.cross_maps.at({U, W}) == uv);
}

TEST_CASE("a nonzero circuit breaks weak linkedness") {
    auto net = tiny_line_net(1);
    auto r = check_weakly_linked(net);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("the zero net is weakly linked but not linked") {
    auto net = tiny_line_net(0);
    CHECK(check_weakly_linked(net).passed);
    CHECK_FALSE(check_linked(net).passed);
}

TEST_CASE("exactness and purity failures") {
    auto seg = fixtures::seg2(Q);
    std::map<ArrowKey, Matrix> arrows;
    std::map<Vertex, std::size_t> dims;
    for (const auto& v : seg.vertices()) {
        dims[v] = seg.dim(v);
        for (ArrowType a = 0; a <= 1; ++a)
            if (seg.has_arrow(v, a)) arrows.emplace(ArrowKey{v, a}, seg.arrow(v, a));
    }
    // Shrinking the u -> v arrow makes its image smaller than the kernel of the way back.
    arrows.at(ArrowKey{U, 0}) = Matrix(Q, 2, 2);
    WindowNet shrunk(Q, 1, dims, arrows);
    CHECK_FALSE(check_exact(shrunk).passed);

    std::vector<Vertex> vs{Vertex({0, 0}), Vertex({1, 0})};
    std::map<Vertex, std::size_t> mixed{{vs[0], 2}, {vs[1], 1}};
    std::map<ArrowKey, Matrix> none;
    none.emplace(ArrowKey{vs[0], 0}, Matrix(Q, 1, 2));
    none.emplace(ArrowKey{vs[1], 1}, Matrix(Q, 2, 1));
    CHECK_FALSE(check_pure(WindowNet(Q, 1, mixed, none)).passed);
}

TEST_CASE("wrong matrix shapes are rejected") {
    std::map<Vertex, std::size_t> dims{{Vertex({0, 0}), 1}, {Vertex({1, 0}), 1}};
    std::map<ArrowKey, Matrix> arrows;
    arrows.emplace(ArrowKey{Vertex({0, 0}), 0}, Matrix(Q, 2, 1));
    arrows.emplace(ArrowKey{Vertex({1, 0}), 1}, Matrix(Q, 1, 1));
    CHECK_THROWS_AS(WindowNet(Q, 1, dims, arrows), Error);
}

TEST_CASE("generators of SEG2") {
    auto seg = fixtures::seg2(Q);
    CHECK(minimal_one_generators(seg) == VertexSet{U, W});
    CHECK(is_generated_by(seg, VertexSet{U, W}));
    CHECK_FALSE(is_generated_by(seg, VertexSet{U}));
    CHECK(is_generated_by(seg, seg.vertex_set()));
    ClassMaps maps(seg);
    CHECK(related(maps, U, W));
    CHECK_THROWS_AS(related(maps, Vertex({0, 0}), Vertex({2, 0})), Error);
}

TEST_CASE("an exact simple net is generated by one vertex") {
    std::vector<Vertex> g{Vertex({1, 0, 0})};
    auto net = expand(fixtures::exact_sum_presentation(Q, 2, g), 3);
    CHECK(minimal_one_generators(net) == VertexSet{g[0]});
    ClassMaps maps(net);
    for (const auto& u : net.vertices())
        for (const auto& v : net.vertices())
            if (u != v && zq::are_neighbors(u, v)) CHECK(related(maps, u, v));
}

TEST_CASE("generators of a simple net are mutually unrelated") {
    lnet::testing::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = lnet::testing::random_simple_net(rng, 2, 3);
        auto gens = minimal_one_generators(s.net.net());
        CHECK(gens == VertexSet(s.polygon.begin(), s.polygon.end()));
        ClassMaps maps(s.net.net());
        for (const auto& a : gens)
            for (const auto& b : gens)
                if (a != b) CHECK(maps.at(a, b).is_zero());
    }
}

TEST_CASE("Grothendieck identity on SEG2") {
    auto seg = fixtures::seg2(Q);
    auto o = zq::orient_polygon(fixtures::seg2_hull(), U);
    CHECK(grothendieck_sum(seg, o) == 2);
    CHECK(polygon_kernel_dimension_identity(seg, o));
}

TEST_CASE("decomposition of SEG2 and TRI3") {
    auto seg = fixtures::seg2(Q);
    auto d = decompose_polygon_generated(seg, fixtures::seg2_hull(), U);
    CHECK(d.summands.size() == 2);
    CHECK(d.block_sizes == std::vector<std::size_t>{1, 1});
    auto tri = fixtures::tri3(Q);
    auto h = fixtures::tri3_hull();
    auto dt = decompose_polygon_generated(tri, h, h[0]);
    CHECK(dt.block_sizes == std::vector<std::size_t>{1, 1, 1});
    ClassMaps maps(tri);
    for (const auto& x : tri.vertices()) CHECK(exactla::rank(propagated_basis(tri, maps, dt, x)) == 3);
}

TEST_CASE("decomposition of a non-exact net fails") {
    lnet::testing::Rng rng(2);
    auto s = lnet::testing::random_simple_net(rng, 2, 3);
    while (s.polygon.size() < 2) s = lnet::testing::random_simple_net(rng, 2, 3);
    CHECK_THROWS_AS(decompose_polygon_generated(s.net.net(), s.polygon, s.polygon[0]), Error);
}

TEST_CASE("subnets generated by one vector") {
    auto seg = fixtures::seg2(Q);
    Vector e2{Q.zero(), Q.one()};
    auto sub = subnet_generated(seg, U, e2);
    CHECK(sub.at(U).dim() == 1);
    CHECK(sub.at(W).dim() == 0);
    CHECK(is_closed_under_arrows(seg, sub.spaces()));
    Vector scaled{Q.zero(), Q.from_int(-4)};
    CHECK(subnet_generated(seg, U, scaled).spaces() == sub.spaces());

    std::vector<Vertex> g{Vertex({0, 0, 0})};
    auto simple = expand(fixtures::exact_sum_presentation(Q, 2, g), 2);
    auto all = subnet_generated(simple, g[0], Vector{Q.one()});
    for (const auto& v : simple.vertices()) CHECK(all.at(v).dim() == 1);
}

TEST_CASE("presentations round trip through expansion") {
    auto seg = fixtures::seg2(Q, 2);
    auto h = ClosedSet::hull_of(fixtures::seg2_hull());
    auto again = expand(presentation_of(seg, h), 2);
    for (const auto& v : seg.vertices())
        for (ArrowType a = 0; a <= 1; ++a)
            if (seg.has_arrow(v, a)) CHECK(again.arrow(v, a) == seg.arrow(v, a));
}

TEST_CASE("shadow nets of SEG2") {
    auto seg = fixtures::seg2(Q);
    auto h = ClosedSet::hull_of(fixtures::seg2_hull());
    CHECK(check_shadow_net(seg, h).passed);
    auto single = ClosedSet::hull_of(std::vector<Vertex>{U});
    auto sh = shadow_net(seg, single);
    CHECK(check_weakly_linked(sh).passed);
    CHECK(is_generated_by(sh, VertexSet{U}));
}

TEST_CASE("reduction and change of basis keep the axioms") {
    lnet::testing::Rng rng(8);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 1 + trial % 2;
        auto sample = lnet::testing::random_exact_net(rng, n, 2, 2);
        CHECK(check_weakly_linked(sample.net).passed);
        CHECK(check_linked(sample.net).passed);
        CHECK(check_exact(sample.net).passed);
        CHECK(check_pure(sample.net).passed);
        CHECK(is_generated_by(sample.net, VertexSet(sample.polygon.begin(), sample.polygon.end())));
        if (sample.polygon.size() >= 2)
            CHECK(polygon_kernel_dimension_identity(sample.net, zq::orient_polygon(sample.polygon, sample.polygon[0])));
        auto mod = reduce_mod(sample.net, 101);
        CHECK(check_weakly_linked(mod).passed);
    }
}

#include "doctest.h"

#include <algorithm>

#include "lnet/error.hpp"
#include "lnet/zquiver.hpp"
#include "support.hpp"

using namespace lnet;
using namespace lnet::zq;
using lnet::testing::Rng;

namespace {

Vertex V(std::vector<int> c) { return Vertex(std::move(c)); }

}  // namespace

TEST_CASE("normalization subtracts the minimum") {
    CHECK(V({2, 2, 2}) == Vertex::origin(2));
    CHECK(V({3, 1, 2}).coords() == std::vector<int>{2, 0, 1});
    CHECK(V({-1, 0, 0}).coords() == std::vector<int>{0, 1, 1});
}

TEST_CASE("arrow targets") {
    CHECK(step(V({0, 0, 0}), 0) == V({1, 0, 0}));
    CHECK(step(V({0, 1, 1}), 0) == Vertex::origin(2));
    CHECK(step(V({2, 0, 1}), 2) == V({2, 0, 2}));
    CHECK(step_back(step(V({2, 0, 1}), 1), 1) == V({2, 0, 1}));
}

TEST_CASE("path classes") {
    Path p{Vertex::origin(2), {0, 1}};
    CHECK(is_admissible(p.type()));
    CHECK(is_simple(p.type()));
    Path c{Vertex::origin(2), {0, 1, 2}};
    CHECK(is_minimal_circuit(c.type()));
    CHECK(c.target() == c.source);
    Path o{Vertex::origin(2), {0, 0, 1, 2}};
    CHECK_FALSE(is_admissible(o.type()));
    CHECK_FALSE(is_simple(o.type()));
    CHECK(total_length(o.type()) == 4);
}

TEST_CASE("canonical admissible paths") {
    CHECK(canonical_path(V({0, 0, 0}), V({1, 0, 0})).steps == std::vector<ArrowType>{0});
    CHECK(canonical_path(V({1, 0, 0}), V({0, 0, 0})).steps == std::vector<ArrowType>{1, 2});
    CHECK(canonical_path(V({0, 0, 0}), V({0, 0, 0})).steps.empty());
    CHECK(admissible_length(V({1, 0, 0}), V({0, 0, 0})) == 2);
}

TEST_CASE("neighbor types") {
    CHECK(are_neighbors(V({0, 0, 0}), V({1, 1, 0})));
    CHECK(neighbor_type(V({0, 0, 0}), V({1, 1, 0})).members() == std::vector<ArrowType>{0, 1});
    CHECK_FALSE(are_neighbors(V({0, 0, 0}), V({2, 0, 0})));
    CHECK(neighbor_type(V({1, 1, 0}), V({0, 0, 0})).members() == std::vector<ArrowType>{2});
}

TEST_CASE("orienting polygons") {
    std::vector<Vertex> tri{V({0, 0, 0}), V({1, 0, 0}), V({1, 1, 0})};
    auto o = orient_polygon(tri, V({0, 0, 0}));
    CHECK(o.vertices == tri);
    REQUIRE(o.steps.size() == 3);
    CHECK(o.steps[0] == TypeSet::single(0));
    CHECK(o.steps[1] == TypeSet::single(1));
    CHECK(o.steps[2] == TypeSet::single(2));

    std::vector<Vertex> one{Vertex::origin(2)};
    CHECK(orient_polygon(one, Vertex::origin(2)).vertices == one);

    std::vector<Vertex> seg{V({0, 0, 0}), V({1, 0, 0})};
    auto s = orient_polygon(seg, V({1, 0, 0}));
    CHECK(s.vertices == std::vector<Vertex>{V({1, 0, 0}), V({0, 0, 0})});
    CHECK(s.steps[0].members() == std::vector<ArrowType>{1, 2});

    std::vector<Vertex> bad{V({0, 0, 0}), V({2, 0, 0})};
    CHECK_THROWS_AS(orient_polygon(bad, bad[0]), Error);
}

TEST_CASE("hull examples") {
    std::vector<Vertex> single{V({1, 0, 2})};
    CHECK(hull(single) == VertexSet{V({1, 0, 2})});
    std::vector<Vertex> pair{V({0, 0}), V({2, 0})};
    CHECK(hull(pair) == VertexSet{V({0, 0}), V({1, 0}), V({2, 0})});
    std::vector<Vertex> diag{V({0, 0, 0}), V({1, 1, 0})};
    auto p = hull(diag);
    CHECK(hull(p) == p);
    CHECK(p == lnet::testing::hull_oracle(diag, 2));
}

TEST_CASE("shadows") {
    auto h = ClosedSet::hull_of(std::vector<Vertex>{V({0, 0}), V({1, 0})});
    CHECK(shadow(V({3, 0}), h) == V({1, 0}));
    CHECK(shadow(V({0, 0}), h) == V({0, 0}));
    CHECK(shadow(V({0, 3}), h) == V({0, 0}));
    CHECK_THROWS_AS(ClosedSet::of(VertexSet{V({0, 0}), V({2, 0})}), Error);

    auto tri = ClosedSet::hull_of(std::vector<Vertex>{V({0, 0, 0}), V({1, 0, 0}), V({1, 1, 0})});
    CHECK(shadow(V({5, 0, 0}), tri) == V({1, 0, 0}));
    CHECK(shadow(V({0, 0, 4}), tri) == V({0, 0, 0}));
    CHECK(shadow(V({3, 4, 0}), tri) == V({1, 1, 0}));
}

TEST_CASE("shadow regions partition the window") {
    auto tri = ClosedSet::hull_of(std::vector<Vertex>{V({0, 0, 0}), V({1, 0, 0}), V({1, 1, 0})});
    auto w = window(tri.list(), 3);
    auto regions = shadow_regions(tri, w);
    CHECK(regions.size() == 3);
    std::size_t total = 0;
    for (const auto& [m, r] : regions) {
        total += r.size();
        CHECK(r.count(m) == 1);
        for (const auto& x : r) CHECK(shadow(x, tri) == m);
    }
    CHECK(total == w.size());

    auto one = ClosedSet::hull_of(std::vector<Vertex>{Vertex::origin(2)});
    CHECK(shadow_regions(one, w).begin()->second == w);
}

TEST_CASE("windows") {
    std::vector<Vertex> o1{Vertex::origin(1)};
    CHECK(window(o1, 0) == VertexSet{Vertex::origin(1)});
    CHECK(window(o1, 1) == VertexSet{V({0, 0}), V({1, 0}), V({0, 1})});
    std::vector<Vertex> o2{Vertex::origin(2)};
    CHECK(window(o2, 2).size() == 19);
}

TEST_CASE("bridges") {
    auto w = window(std::vector<Vertex>{Vertex::origin(2)}, 3);
    CHECK(bridges(V({0, 0, 0}), V({1, 0, 0}), w) == VertexSet{V({0, 0, 0}), V({1, 0, 0})});
    CHECK(bridges(V({1, 0, 0}), V({0, 1, 0}), w).count(Vertex::origin(2)) == 1);
}

TEST_CASE("quiver laws on random paths") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + trial % 3;
        auto u = lnet::testing::random_vertex(rng, n, 3);
        auto a = lnet::testing::random_path(rng, u, rng() % 7);
        auto b = lnet::testing::random_path(rng, u, rng() % 7);
        CHECK(a.target() == lnet::testing::walk(u, a.steps));
        std::vector<int> d(u.width());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.type()[k] - b.type()[k];
        const bool constant = std::all_of(d.begin(), d.end(), [&](int x) { return x == d[0]; });
        CHECK((a.target() == b.target()) == constant);
        for (ArrowType t = 0; t <= n; ++t) CHECK(step(u, t) != u);
    }
}

TEST_CASE("hull is idempotent and monotone") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 3;
        auto h = lnet::testing::random_vertices(rng, n, 1 + rng() % 3, 2);
        auto p = hull(h);
        for (const auto& v : h) CHECK(p.count(v) == 1);
        CHECK(hull(p) == p);
        auto bigger = h;
        bigger.push_back(lnet::testing::random_vertex(rng, n, 2));
        auto q = hull(bigger);
        CHECK(std::includes(q.begin(), q.end(), p.begin(), p.end()));
    }
}

TEST_CASE("oriented polygons cover every type once") {
    Rng rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 3;
        auto poly = lnet::testing::random_polygon(rng, lnet::testing::random_vertex(rng, n, 2), 2 + rng() % n);
        CHECK(is_polygon(poly));
        auto o = orient_polygon(poly, poly.back());
        TypeSet all;
        for (auto s : o.steps) {
            CHECK(all.disjoint(s));
            CHECK_FALSE(s.empty());
            all = all | s;
        }
        CHECK(all == TypeSet::all(n));
        CHECK(lnet::testing::forms_oriented_polygon(o.vertices));
    }
}

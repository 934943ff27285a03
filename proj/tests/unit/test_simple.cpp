#include "doctest.h"

#include "lnet/error.hpp"
#include "lnet/fixtures.hpp"
#include "lnet/simple.hpp"
#include "support.hpp"

using namespace lnet;
using namespace lnet::simple;
using lnet::testing::figures;
using lnet::testing::planar_node;

namespace {

const net::Field Q = net::Field::rationals();

std::vector<Vertex> orange_of(const lnet::testing::Figure& f) {
    std::vector<Vertex> out;
    for (auto [i, j] : f.orange) out.push_back(planar_node(i, j));
    return out;
}

std::vector<Vertex> swap01(const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (const auto& v : vs) out.push_back(Vertex({v[1], v[0], v[2]}));
    return out;
}

Z2Tag tag_of(const std::string& s) {
    for (auto t : {Z2Tag::Exact, Z2Tag::I, Z2Tag::II, Z2Tag::III, Z2Tag::IV, Z2Tag::V})
        if (to_string(t) == s) return t;
    FAIL("unknown tag " << s);
    return Z2Tag::Exact;
}

}  // namespace

TEST_CASE("figure transcriptions are polygon-generated simple nets") {
    REQUIRE(figures().size() == 5);
    for (const auto& fig : figures()) {
        CAPTURE(fig.tag);
        auto orange = orange_of(fig);
        auto s = generated_by_polygon(Q, orange, 4);
        for (const auto& e : fig.edges) {
            auto from = planar_node(e.from.first, e.from.second);
            auto to = planar_node(e.to.first, e.to.second);
            REQUIRE(zq::are_neighbors(from, to));
            auto types = zq::neighbor_type(from, to).members();
            REQUIRE(types.size() == 1);
            REQUIRE(s.has_arrow(from, types[0]));
            CHECK(s.nonzero(from, types[0]) == e.blue);
        }
    }
}

TEST_CASE("the five figures classify with their orange generators") {
    for (const auto& fig : figures()) {
        CAPTURE(fig.tag);
        auto orange = orange_of(fig);
        auto s = generated_by_polygon(Q, orange, 4);
        auto t = classify_z2(s);
        CHECK(t.tag == tag_of(fig.tag));
        CHECK(t.generators == VertexSet(orange.begin(), orange.end()));
        CHECK(minimal_generating_polygon(s) == t.generators);
        CHECK(max_unrelated_polygon(s).size() == orange.size());
        net::ClassMaps maps(s.net());
        for (const auto& a : t.generators)
            for (const auto& b : t.generators)
                if (a != b) CHECK(maps.at(a, b).is_zero());
    }
}

TEST_CASE("exact simple nets classify as Exact") {
    std::vector<Vertex> one{Vertex({1, 0, 2})};
    auto s = generated_by_polygon(Q, one, 3);
    auto t = classify_z2(s);
    CHECK(t.tag == Z2Tag::Exact);
    CHECK(t.generators == VertexSet{one[0]});
    CHECK(max_unrelated_polygon(s).size() == 1);
}

TEST_CASE("swapping two arrow types exchanges types I and II, fixes III and flips triangles") {
    for (const auto& fig : figures()) {
        auto orange = swap01(orange_of(fig));
        auto t = classify_z2(generated_by_polygon(Q, orange, 4)).tag;
        const auto original = tag_of(fig.tag);
        if (orange.size() == 2) {
            const auto expected = original == Z2Tag::I ? Z2Tag::II : original == Z2Tag::II ? Z2Tag::I : Z2Tag::III;
            CHECK(t == expected);
        } else {
            CHECK(t == (original == Z2Tag::IV ? Z2Tag::V : Z2Tag::IV));
        }
    }
}

TEST_CASE("classification needs n = 2") {
    auto s = generated_by_polygon(Q, fixtures::seg2_hull(), 3);
    CHECK_THROWS_AS(classify_z2(s), Error);
}

TEST_CASE("generators on the window boundary are refused") {
    auto s = generated_by_polygon(Q, orange_of(figures()[0]), 0);
    CHECK_THROWS_AS(minimal_generating_polygon(s), Error);
}

TEST_CASE("shifts") {
    auto s = generated_by_polygon(Q, orange_of(figures()[0]), 4);
    auto start = initial_circuit(s);
    CHECK(zq::is_minimal_circuit(start.circuit.type()));
    auto trace = shift_to_generators(s);
    auto marked = trace.final_state.marked_vertices();
    CHECK(marked.size() == 2);
    VertexSet ends(marked.begin(), marked.end());
    CHECK(ends == minimal_generating_polygon(s));

    // At a generator every arriving arrow is zero, so no shift applies there.
    auto gens = minimal_generating_polygon(s);
    const Vertex g = *gens.begin();
    zq::Path circuit{g, {0, 1, 2}};
    auto state = circuit_state(s, circuit);
    for (zq::ArrowType b = 0; b <= 2; ++b) CHECK_THROWS_AS(b_shift(s, state, b), Error);
    auto rotated = rotate(s, state, 1);
    CHECK(rotated.circuit.source == zq::step(g, 0));
}

TEST_CASE("shift sequences terminate on every figure") {
    for (const auto& fig : figures()) {
        auto s = generated_by_polygon(Q, orange_of(fig), 5);
        auto trace = shift_to_generators(s);
        auto gens = minimal_generating_polygon(s);
        auto marked = trace.final_state.marked_vertices();
        CHECK(VertexSet(marked.begin(), marked.end()) == gens);
    }
}

TEST_CASE("DOT rendering") {
    auto fig = figures()[3];
    auto s = generated_by_polygon(Q, orange_of(fig), 2);
    auto gens = minimal_generating_polygon(s);
    auto dot = render_dot(s.net(), gens);
    CHECK(dot == render_dot(s.net(), gens));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("fillcolor=orange") != std::string::npos);
    CHECK(dot.find("color=red") != std::string::npos);
    CHECK(dot.find("color=blue") != std::string::npos);
}

TEST_CASE("random simple nets: generators, polygons and unrelated sets agree") {
    lnet::testing::Rng rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 3;
        auto sample = lnet::testing::random_simple_net(rng, n, n + 1);
        auto gens = minimal_generating_polygon(sample.net);
        CHECK(gens == VertexSet(sample.polygon.begin(), sample.polygon.end()));
        CHECK(gens == net::minimal_one_generators(sample.net.net()));
        std::vector<Vertex> list(gens.begin(), gens.end());
        CHECK(zq::is_polygon(list));
        CHECK(max_unrelated_polygon(sample.net).size() == gens.size());
    }
}

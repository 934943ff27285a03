#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lnet/net.hpp"
#include "lnet/simple.hpp"

namespace lnet::testing {

using exactla::Field;
using net::WindowNet;
using zq::PathType;
using zq::Vertex;
using zq::VertexSet;

using Rng = std::mt19937_64;

Vertex random_vertex(Rng& rng, int n, int spread);
std::vector<Vertex> random_vertices(Rng& rng, int n, std::size_t count, int spread);
// Random ordered partition of the arrow types into `parts` nonempty blocks.
std::vector<zq::TypeSet> random_partition(Rng& rng, int n, std::size_t parts);
// Oriented polygon with `size` vertices starting at `start`.
std::vector<Vertex> random_polygon(Rng& rng, const Vertex& start, std::size_t size);
zq::Path random_path(Rng& rng, const Vertex& source, std::size_t length);

// Direct sum of simple exact summands generated on a random polygon, in a random basis at every vertex.
struct ExactSample {
    WindowNet net;
    std::vector<Vertex> polygon;  // the polygon the summands were drawn from
    std::vector<Vertex> generators;
};
ExactSample random_exact_net(Rng& rng, int n, std::size_t dim, int radius);

struct SimpleSample {
    simple::SimpleNet net;
    std::vector<Vertex> polygon;
};
SimpleSample random_simple_net(Rng& rng, int n, int radius);

exactla::Matrix random_invertible(Rng& rng, const Field& field, std::size_t size);

// ---- oracles written straight from the definitions

// Unnormalized difference v - z has type i among its minima.
bool in_argmin(const Vertex& z, const Vertex& v, int i);
// P(H) by scanning the normalized box [0, M + margin]^{n+1}.
VertexSet hull_oracle(const std::vector<Vertex>& h, int margin);
Vertex shadow_oracle(const Vertex& v, const VertexSet& h);
// Some choice of disjoint type sets, empty ones allowed, carries each w_i to w_{i+1} cyclically.
bool forms_oriented_polygon(const std::vector<Vertex>& w);
// Target reached by walking the steps.
Vertex walk(const Vertex& source, const std::vector<zq::ArrowType>& steps);
bool admissible_type(const PathType& t);

// Every smallest set of window vertices whose nonzero class maps reach every window vertex of a simple net.
std::vector<VertexSet> minimum_covers(const WindowNet& net, std::size_t max_size);

// Points of LP over a prime field: tuples of lines at the hull vertices mapped into each other by the
// class maps, counted by direct enumeration.
std::size_t lp_point_oracle(const WindowNet& net, const zq::ClosedSet& h);

// ---- figures of the five Z^2 types, transcribed edge by edge

struct FigureEdge {
    std::pair<int, int> from;
    std::pair<int, int> to;
    bool blue;
};

struct Figure {
    std::string tag;
    std::vector<std::pair<int, int>> orange;
    std::vector<FigureEdge> edges;
};

// Lattice vertex of the planar node (i, j): columns i, rows j alternating between the two offsets.
Vertex planar_node(int i, int j);
const std::vector<Figure>& figures();

}  // namespace lnet::testing

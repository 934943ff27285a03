#pragma once

#include <string>
#include <vector>

#include "lnet/net.hpp"

namespace lnet::simple {

using net::WindowNet;
using zq::Vertex;
using zq::VertexSet;

// A window net of dimension 1 everywhere that passes the linked-net checks.
class SimpleNet {
public:
    explicit SimpleNet(WindowNet net);

    const WindowNet& net() const noexcept { return net_; }
    int n() const noexcept { return net_.n(); }
    bool has_arrow(const Vertex& v, zq::ArrowType a) const { return net_.has_arrow(v, a); }
    // Arrow a leaving v carries a nonzero scalar.
    bool nonzero(const Vertex& v, zq::ArrowType a) const { return !net_.arrow(v, a).is_zero(); }

private:
    WindowNet net_;
};

// The simple net S_D minimally generated by the polygon D: an arrow is nonzero exactly when an
// admissible path from the shadow of its source passes through it.
net::NetPresentation polygon_presentation(net::Field field, std::span<const Vertex> polygon);
// Expanded over the hull of the radius ball around the polygon.
SimpleNet generated_by_polygon(net::Field field, std::span<const Vertex> polygon, int radius);

// Interior vertices at which every arriving arrow is zero; verified to 1-generate the net.
VertexSet minimal_generating_polygon(const SimpleNet& s);

// A largest polygon of pairwise unrelated window vertices, lexicographically least among those.
VertexSet max_unrelated_polygon(const SimpleNet& s);

enum class Z2Tag { Exact, I, II, III, IV, V };
std::string to_string(Z2Tag tag);

struct Z2Type {
    Z2Tag tag;
    VertexSet generators;
};

// Type read off a generating polygon of a Z^2-quiver net.
Z2Tag classify_generators(const VertexSet& generators);
Z2Type classify_z2(const SimpleNet& s);

// Red arrows carry zero, blue ones a nonzero scalar, generators are filled orange.
std::string render_dot(const WindowNet& net, const VertexSet& generators);

// A minimal circuit with the positions of the vertices whose arriving circuit arrow is zero.
struct MinimalCircuitState {
    zq::Path circuit;
    std::vector<std::size_t> marked;

    std::vector<Vertex> marked_vertices() const;
};

MinimalCircuitState circuit_state(const SimpleNet& s, zq::Path circuit);
// Same circuit read from position k.
MinimalCircuitState rotate(const SimpleNet& s, const MinimalCircuitState& state, std::size_t k);
// Shift centred at the circuit's source along the arrow of type b arriving there.
MinimalCircuitState b_shift(const SimpleNet& s, const MinimalCircuitState& state, zq::ArrowType b);

// Circuit through a maximum unrelated polygon, steps of each segment in ascending type order.
MinimalCircuitState initial_circuit(const SimpleNet& s);

struct ShiftTrace {
    MinimalCircuitState final_state;
    std::size_t shifts = 0;
};

// Shift at marked vertices until every arrow arriving at them is zero.
ShiftTrace shift_to_generators(const SimpleNet& s, MinimalCircuitState start, std::size_t max_shifts = 10000);
inline ShiftTrace shift_to_generators(const SimpleNet& s) { return shift_to_generators(s, initial_circuit(s)); }

}  // namespace lnet::simple

#include "lnet/simple.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <sstream>

#include "lnet/error.hpp"

namespace lnet::simple {

using zq::ArrowType;
using zq::Path;
using zq::TypeSet;

SimpleNet::SimpleNet(WindowNet net) : net_(std::move(net)) {
    for (const auto& v : net_.vertices())
        if (net_.dim(v) != 1) fail(ErrorCode::NotSimple, "dimension " + std::to_string(net_.dim(v)) + " at " + v.to_string());
    auto weak = net::check_weakly_linked(net_);
    if (!weak.passed) fail(ErrorCode::NotLinked, weak.violations.front());
    auto linked = net::check_linked(net_);
    if (!linked.passed) fail(ErrorCode::NotLinked, linked.violations.front());
}

net::NetPresentation polygon_presentation(net::Field field, std::span<const Vertex> polygon) {
    if (polygon.empty() || !zq::is_polygon(polygon)) fail(ErrorCode::NotAPolygon, "generators do not form a polygon");
    auto h = zq::ClosedSet::hull_of(polygon);
    if (h.size() != VertexSet(polygon.begin(), polygon.end()).size())
        fail(ErrorCode::NotAPolygon, "polygon is not equal to its hull");
    net::NetPresentation p{field, polygon.front().n(), h, {}, {}};
    for (const auto& v : h.members()) p.dims[v] = 1;
    for (const auto& u : h.members())
        for (const auto& v : h.members())
            if (u != v) p.cross_maps.emplace(std::make_pair(u, v), net::Matrix(field, 1, 1));
    return p;
}

SimpleNet generated_by_polygon(net::Field field, std::span<const Vertex> polygon, int radius) {
    // The bare ball leaves boundary vertices whose nonzero arriving arrows start outside it; its hull
    // keeps every admissible path between members inside, so generators can be told apart.
    return SimpleNet(net::expand(polygon_presentation(field, polygon), zq::hull(zq::window(polygon, radius))));
}

VertexSet minimal_generating_polygon(const SimpleNet& s) {
    const auto& net = s.net();
    VertexSet generators;
    std::vector<Vertex> boundary;
    for (const auto& v : net.vertices()) {
        bool all_zero = true;
        bool complete = true;
        for (ArrowType a = 0; a <= net.n(); ++a) {
            auto from = zq::step_back(v, a);
            if (!net.has_arrow(from, a)) {
                complete = false;
                continue;
            }
            if (s.nonzero(from, a)) all_zero = false;
        }
        if (!all_zero) continue;
        if (!complete || !net.is_interior(v))
            boundary.push_back(v);
        else
            generators.insert(v);
    }
    // A boundary vertex may look like a generator only because its nonzero arriving arrows start
    // outside the window; it is harmless when an interior generator already reaches it.
    net::ClassMaps maps(net);
    for (const auto& b : boundary) {
        const bool reached = std::any_of(generators.begin(), generators.end(), [&](const Vertex& g) {
            const auto& m = maps.find(g, b);
            return m && !m->is_zero();
        });
        if (!reached) fail(ErrorCode::WindowTooSmall, "possible generator on the window boundary at " + b.to_string());
    }
    auto report = net::check_one_generated_by(net, generators);
    if (!report.passed) fail(ErrorCode::NotOneGenerated, report.violations.front());
    std::vector<Vertex> list(generators.begin(), generators.end());
    if (!zq::is_polygon(list)) fail(ErrorCode::NotAPolygon, "minimal generators do not form a polygon");
    return generators;
}

VertexSet max_unrelated_polygon(const SimpleNet& s) {
    const auto& net = s.net();
    const int n = net.n();
    net::ClassMaps maps(net);
    auto unrelated = [&](const Vertex& u, const Vertex& v) {
        const auto& uv = maps.find(u, v);
        const auto& vu = maps.find(v, u);
        return uv && vu && uv->is_zero() && vu->is_zero();
    };

    std::vector<Vertex> best;
    std::vector<Vertex> current;
    std::function<void(const std::vector<Vertex>&)> extend = [&](const std::vector<Vertex>& candidates) {
        if (current.size() > best.size()) best = current;
        if (current.size() == static_cast<std::size_t>(n + 1)) return;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto& c = candidates[i];
            std::vector<Vertex> rest;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (zq::are_neighbors(c, candidates[j]) && unrelated(c, candidates[j])) rest.push_back(candidates[j]);
            current.push_back(c);
            extend(rest);
            current.pop_back();
        }
    };

    for (const auto& v : net.vertices()) {
        std::vector<Vertex> candidates;
        const auto full = TypeSet::all(n).bits();
        for (std::uint64_t bits = 1; bits < full; ++bits) {
            auto u = zq::apply(TypeSet::from_bits(bits), v);
            if (v < u && net.contains(u) && unrelated(v, u)) candidates.push_back(u);
        }
        std::sort(candidates.begin(), candidates.end());
        current = {v};
        extend(candidates);
    }
    return {best.begin(), best.end()};
}

std::string to_string(Z2Tag tag) {
    switch (tag) {
    case Z2Tag::Exact: return "Exact";
    case Z2Tag::I: return "I";
    case Z2Tag::II: return "II";
    case Z2Tag::III: return "III";
    case Z2Tag::IV: return "IV";
    case Z2Tag::V: return "V";
    }
    return "?";
}

Z2Tag classify_generators(const VertexSet& generators) {
    std::vector<Vertex> list(generators.begin(), generators.end());
    if (list.empty() || list.front().n() != 2) fail(ErrorCode::NotClassifiable, "needs generators in a Z^2-quiver");
    if (!zq::is_polygon(list)) fail(ErrorCode::NotClassifiable, "generators do not form a polygon");
    if (list.size() == 1) return Z2Tag::Exact;
    auto oriented = zq::orient_polygon(list, list.front());
    if (list.size() == 2) {
        // The single-type side of the segment decides among I, II and III.
        for (auto step : oriented.steps)
            if (step.size() == 1) return std::array{Z2Tag::I, Z2Tag::II, Z2Tag::III}[static_cast<std::size_t>(step.members().front())];
        fail(ErrorCode::NotClassifiable, "segment without a single-type side");
    }
    for (std::size_t i = 0; i < oriented.steps.size(); ++i) {
        if (oriented.steps[i] != TypeSet::single(0)) continue;
        auto next = oriented.steps[(i + 1) % oriented.steps.size()];
        if (next == TypeSet::single(1)) return Z2Tag::IV;
        if (next == TypeSet::single(2)) return Z2Tag::V;
    }
    fail(ErrorCode::NotClassifiable, "triangle without a type-0 side");
}

Z2Type classify_z2(const SimpleNet& s) {
    if (s.n() != 2) fail(ErrorCode::PreconditionViolation, "classification needs n = 2");
    auto generators = minimal_generating_polygon(s);
    return {classify_generators(generators), generators};
}

namespace {

std::string dot_id(const Vertex& v) {
    std::string id;
    for (std::size_t i = 0; i < v.width(); ++i) id += (i ? "," : "") + std::to_string(v[i]);
    return "\"" + id + "\"";
}

}  // namespace

std::string render_dot(const WindowNet& net, const VertexSet& generators) {
    std::ostringstream out;
    out << "digraph net {\n";
    if (!net.vertices().empty()) out << "  node [shape=circle];\n";
    for (const auto& v : net.vertices()) {
        out << "  " << dot_id(v);
        if (generators.count(v)) out << " [style=filled, fillcolor=orange]";
        out << ";\n";
    }
    for (const auto& v : net.vertices())
        for (ArrowType a = 0; a <= net.n(); ++a) {
            if (!net.has_arrow(v, a)) continue;
            out << "  " << dot_id(v) << " -> " << dot_id(zq::step(v, a)) << " [color=" << (net.arrow(v, a).is_zero() ? "red" : "blue")
                << ", label=\"" << a << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

// ---- shifts along minimal circuits

std::vector<Vertex> MinimalCircuitState::marked_vertices() const {
    auto vs = circuit.vertices();
    std::vector<Vertex> out;
    for (auto k : marked) out.push_back(vs[k]);
    return out;
}

namespace {

// Whether the circuit arrow arriving at position k is zero; positions wrap around.
bool arriving_zero(const SimpleNet& s, const Path& circuit, const std::vector<Vertex>& vs, std::size_t k) {
    const std::size_t len = circuit.steps.size();
    const std::size_t prev = (k + len - 1) % len;
    return !s.nonzero(vs[prev], circuit.steps[prev]);
}

TypeSet zero_types(const SimpleNet& s, const MinimalCircuitState& state) {
    TypeSet out;
    auto vs = state.circuit.vertices();
    for (std::size_t i = 0; i < state.circuit.steps.size(); ++i)
        if (!s.nonzero(vs[i], state.circuit.steps[i])) out.insert(state.circuit.steps[i]);
    return out;
}

}  // namespace

MinimalCircuitState circuit_state(const SimpleNet& s, Path circuit) {
    if (!zq::is_minimal_circuit(circuit.type())) fail(ErrorCode::PreconditionViolation, "not a minimal circuit");
    auto vs = circuit.vertices();
    for (std::size_t i = 0; i < circuit.steps.size(); ++i)
        if (!s.has_arrow(vs[i], circuit.steps[i])) fail(ErrorCode::WindowTooSmall, "circuit leaves the window at " + vs[i].to_string());
    MinimalCircuitState state{std::move(circuit), {}};
    for (std::size_t k = 0; k < state.circuit.steps.size(); ++k)
        if (arriving_zero(s, state.circuit, vs, k)) state.marked.push_back(k);
    return state;
}

MinimalCircuitState rotate(const SimpleNet& s, const MinimalCircuitState& state, std::size_t k) {
    const auto& steps = state.circuit.steps;
    Path p{state.circuit.vertices().at(k), {}};
    for (std::size_t i = 0; i < steps.size(); ++i) p.steps.push_back(steps[(k + i) % steps.size()]);
    return circuit_state(s, std::move(p));
}

MinimalCircuitState b_shift(const SimpleNet& s, const MinimalCircuitState& state, ArrowType b) {
    const auto& steps = state.circuit.steps;
    const Vertex& center = state.circuit.source;
    if (b < 0 || b > s.n()) fail(ErrorCode::PreconditionViolation, "arrow type out of range");
    if (b == steps.back()) fail(ErrorCode::PreconditionViolation, "shift type equals the final circuit type");
    const Vertex from = zq::step_back(center, b);
    if (!s.has_arrow(from, b)) fail(ErrorCode::WindowTooSmall, "arrow arriving at " + center.to_string() + " leaves the window");
    if (!s.nonzero(from, b)) fail(ErrorCode::ShiftNotApplicable, "arrow of type " + std::to_string(b) + " arriving at " + center.to_string() + " is zero");

    const auto j = static_cast<std::size_t>(std::find(steps.begin(), steps.end(), b) - steps.begin());
    Path shifted{from, {b}};
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (i != j) shifted.steps.push_back(steps[i]);
    auto next = circuit_state(s, std::move(shifted));
    if (zero_types(s, next) != zero_types(s, state))
        fail(ErrorCode::PreconditionViolation, "shift changed the types of the zero arrows");
    return next;
}

MinimalCircuitState initial_circuit(const SimpleNet& s) {
    auto polygon = max_unrelated_polygon(s);
    std::vector<Vertex> list(polygon.begin(), polygon.end());
    Path circuit{list.front(), {}};
    if (list.size() == 1) {
        for (ArrowType a = 0; a <= s.n(); ++a) circuit.steps.push_back(a);
    } else {
        auto oriented = zq::orient_polygon(list, list.front());
        for (auto step : oriented.steps)
            for (auto a : step.members()) circuit.steps.push_back(a);
    }
    auto state = circuit_state(s, std::move(circuit));
    if (state.marked.size() != polygon.size())
        fail(ErrorCode::PreconditionViolation, "zero arrows on the circuit differ from the unrelated polygon size");
    return state;
}

ShiftTrace shift_to_generators(const SimpleNet& s, MinimalCircuitState start, std::size_t max_shifts) {
    const auto& net = s.net();
    ShiftTrace trace{std::move(start), 0};
    auto nonzero_incoming = [&](const Vertex& v) -> std::optional<ArrowType> {
        if (!net.is_interior(v)) fail(ErrorCode::WindowTooSmall, "circuit reached the window boundary at " + v.to_string());
        for (ArrowType a = 0; a <= net.n(); ++a)
            if (s.nonzero(zq::step_back(v, a), a)) return a;
        return std::nullopt;
    };
    for (;;) {
        auto& state = trace.final_state;
        auto vs = state.circuit.vertices();
        std::optional<std::pair<std::size_t, ArrowType>> move;
        for (auto k : state.marked)
            if (auto b = nonzero_incoming(vs[k])) {
                move = std::make_pair(k, *b);
                break;
            }
        if (!move) return trace;
        if (trace.shifts == max_shifts) fail(ErrorCode::BudgetExceeded, "shift sequence did not terminate");
        state = b_shift(s, rotate(s, state, move->first), move->second);
        ++trace.shifts;
    }
}

}  // namespace lnet::simple

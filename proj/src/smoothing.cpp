#include "lnet/smoothing.hpp"

#include <algorithm>
#include <numeric>

#include "lnet/error.hpp"

namespace lnet::smoothing {

using exactla::Field;
using exactla::Matrix;
using net::ArrowKey;
using zq::ArrowType;

namespace {

std::string describe(const zq::Path& p) {
    std::string out = p.source.to_string() + "[";
    for (std::size_t i = 0; i < p.steps.size(); ++i) out += (i ? "," : "") + std::to_string(p.steps[i]);
    return out + "]";
}

std::map<Vertex, std::size_t> dims_of(const WindowNet& net) {
    std::map<Vertex, std::size_t> dims;
    for (const auto& v : net.vertices()) dims[v] = net.dim(v);
    return dims;
}

}  // namespace

CheckReport check_general_linked(const WindowNet& net) {
    CheckReport r{"general linked", true, net.n() + 1, 0, 0, {}};
    for (const auto& v : net.vertices())
        for (ArrowType a = 0; a <= net.n(); ++a) {
            if (!net.has_arrow(v, a)) continue;
            ++r.checked;
            if (!exactla::is_iso(net.arrow(v, a))) r.violation("arrow " + v.to_string() + "+" + std::to_string(a) + " is not invertible");
        }
    for (const auto& u : net.vertices())
        for (const auto& [target, paths] : net::paths_from(net, u, net.n() + 1))
            for (std::size_t k = 1; k < paths.size(); ++k) {
                ++r.checked;
                auto c = exactla::scalar_multiple_of(paths[k].map, paths[0].map);
                if (!c || c->is_zero() || paths[0].map.is_zero())
                    r.violation("paths " + describe(paths[k].path) + " and " + describe(paths[0].path) + " are not proportional");
            }
    return r;
}

WindowNet specialize(const WindowNet& net) {
    if (net.field().kind() != exactla::FieldKind::RationalFunctions) fail(ErrorCode::FieldMismatch, "specialization needs a net over Q(t)");
    std::map<ArrowKey, Matrix> arrows;
    for (const auto& v : net.vertices())
        for (ArrowType a = 0; a <= net.n(); ++a)
            if (net.has_arrow(v, a)) arrows.emplace(ArrowKey{v, a}, exactla::specialize_t0(net.arrow(v, a)));
    return WindowNet(Field::rationals(), net.n(), dims_of(net), std::move(arrows));
}

CheckReport check_circuits_divisible_by_t(const WindowNet& net) {
    CheckReport r{"circuits divisible by t", true, net.n() + 1, 0, 0, {}};
    std::vector<ArrowType> order(static_cast<std::size_t>(net.n()) + 1);
    std::iota(order.begin(), order.end(), 0);
    for (const auto& v : net.vertices()) {
        auto steps = order;
        do {
            zq::Path p{v, steps};
            auto m = net.try_compose(p);
            if (!m) {
                ++r.skipped;
                continue;
            }
            ++r.checked;
            if (!exactla::specialize_t0(*m).is_zero()) r.violation("circuit " + describe(p) + " survives t = 0");
        } while (std::next_permutation(steps.begin(), steps.end()));
    }
    return r;
}

Smoothing construct_monomial_smoothing(const WindowNet& net, const VertexSet& polygon) {
    if (net.field().kind() != exactla::FieldKind::Rationals) fail(ErrorCode::FieldMismatch, "smoothings are built for nets over Q");
    std::vector<Vertex> list(polygon.begin(), polygon.end());
    if (list.empty()) fail(ErrorCode::NotAPolygon, "empty polygon");
    net::Decomposition d;
    try {
        d = net::decompose_polygon_generated(net, list, list.front());
    } catch (const Error& e) {
        fail(ErrorCode::SmoothingInvalid, e.what());
    }

    net::ClassMaps maps(net);
    std::map<Vertex, Matrix> basis;
    std::map<Vertex, Matrix> basis_inverse;
    for (const auto& x : net.vertices()) {
        Matrix b = net::propagated_basis(net, maps, d, x);
        if (exactla::rank(b) != net.dim(x)) fail(ErrorCode::SmoothingInvalid, "summands do not span the space at " + x.to_string());
        basis_inverse.emplace(x, exactla::inverse(b));
        basis.emplace(x, std::move(b));
    }

    const Field qt = Field::rational_functions();
    const auto t = exactla::Scalar(exactla::RatFunc::t());
    std::map<ArrowKey, Matrix> arrows;
    for (const auto& x : net.vertices())
        for (ArrowType a = 0; a <= net.n(); ++a) {
            if (!net.has_arrow(x, a)) continue;
            const Vertex y = zq::step(x, a);
            Matrix diagonal = basis_inverse.at(y) * net.arrow(x, a) * basis.at(x);
            Matrix lifted = exactla::lift_to_rational_functions(diagonal);
            for (std::size_t i = 0; i < diagonal.rows(); ++i)
                for (std::size_t k = 0; k < diagonal.cols(); ++k) {
                    if (i != k && !diagonal(i, k).is_zero())
                        fail(ErrorCode::SmoothingInvalid, "arrow " + x.to_string() + "+" + std::to_string(a) + " is not diagonal in the summand basis");
                    if (i == k && diagonal(i, k).is_zero()) lifted(i, k) = t;
                }
            arrows.emplace(ArrowKey{x, a}, exactla::lift_to_rational_functions(basis.at(y)) * lifted *
                                               exactla::lift_to_rational_functions(basis_inverse.at(x)));
        }

    Smoothing out{WindowNet(qt, net.n(), dims_of(net), std::move(arrows)), std::move(d), {}};
    auto generic = check_general_linked(out.generic);
    out.report.generic_ok = generic.passed;
    for (auto& v : generic.violations) out.report.failures.push_back(v);

    auto special = specialize(out.generic);
    out.report.special_matches = true;
    for (const auto& x : net.vertices())
        for (ArrowType a = 0; a <= net.n(); ++a)
            if (net.has_arrow(x, a) && !(special.arrow(x, a) == net.arrow(x, a))) {
                out.report.special_matches = false;
                out.report.failures.push_back("t = 0 differs from the input at " + x.to_string() + "+" + std::to_string(a));
            }

    auto circuits = check_circuits_divisible_by_t(out.generic);
    out.report.circuits_vanish = circuits.passed;
    for (auto& v : circuits.violations) out.report.failures.push_back(v);
    return out;
}

std::vector<DegenerationRow> degeneration_evidence(const WindowNet& special, const WindowNet& generic, const zq::ClosedSet& h, int bound) {
    auto special_table = lp::hilbert_table(lp::lp_equations(special, h), bound);
    auto generic_table = lp::hilbert_table(lp::lp_equations(generic, h), bound);
    const std::size_t r = special.dim(*h.members().begin());
    std::vector<DegenerationRow> rows;
    for (std::size_t i = 0; i < special_table.size(); ++i)
        rows.push_back({special_table[i].degree, special_table[i].dimension, generic_table.at(i).dimension,
                        lp::diagonal_hilbert(special_table[i].degree, r)});
    return rows;
}

}  // namespace lnet::smoothing

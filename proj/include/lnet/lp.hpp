#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lnet/net.hpp"
#include "lnet/polynomial.hpp"

namespace lnet::lp {

using exactla::Field;
using exactla::Matrix;
using exactla::Polynomial;
using exactla::Scalar;
using exactla::Vector;
using net::WindowNet;
using zq::Vertex;
using zq::VertexSet;

// One line per hull vertex, each with first nonzero coordinate 1.
using LPPoint = std::vector<Vector>;
std::string to_string(const LPPoint& p);

// Quadrics cutting LP_H inside the product of the projective spaces P(V_v), v in H.
struct MinorSystem {
    Field field;
    std::vector<Vertex> hull;
    std::vector<std::size_t> offsets;  // first variable of each block
    std::vector<std::size_t> sizes;
    std::size_t variables = 0;
    std::vector<Polynomial> equations;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // the two blocks of each equation
    std::vector<std::string> names;

    std::size_t block_of(const Vertex& v) const;
    Vector flatten(const LPPoint& p) const;
    bool satisfied_by(const LPPoint& p) const;
};

// 2x2 minors of [class(v,w) s_v | s_w] over ordered pairs of H, deduplicated up to a scalar.
MinorSystem lp_equations(const WindowNet& net, const zq::ClosedSet& h);

// Points of P^{d-1} over a prime field in lexicographic order of their canonical representatives.
std::vector<Vector> projective_points(const Field& field, std::size_t d);

inline constexpr std::uint64_t default_budget = 2'000'000;
std::vector<LPPoint> enumerate_points(const MinorSystem& sys, std::uint64_t budget = default_budget);

// Hull vertices not reached by the class maps from the other lines of the point: the
// minimal 1-generating set of the subnet the point spans.
VertexSet point_generators(const net::ClassMaps& maps, const MinorSystem& sys, const LPPoint& p);
std::map<VertexSet, std::vector<LPPoint>> stratify(const WindowNet& net, const MinorSystem& sys, const std::vector<LPPoint>& points);
// Lines at v whose images under the class maps to every member of H are nonzero.
std::size_t stratum_param_count(const WindowNet& net, const Vertex& v, const zq::ClosedSet& h);

// Transport of a point on LP_{H1} to the lines t_v = class(shadow(v,H1), v) s_shadow for v in H2.
LPPoint psi(const WindowNet& net, const MinorSystem& from, const MinorSystem& to, const LPPoint& p);

// Rank at the point of the Jacobian of the equations.
std::size_t jacobian_rank(std::span<const Polynomial> equations, std::span<const Scalar> point);
std::size_t jacobian_rank(const MinorSystem& sys, const LPPoint& p);
// Codimension of an (r-1)-dimensional locus in the product of the P(V_v).
std::size_t expected_codimension(const MinorSystem& sys);
inline bool is_smooth_point(const MinorSystem& sys, const LPPoint& p) { return jacobian_rank(sys, p) == expected_codimension(sys); }

struct HilbertEntry {
    std::vector<int> degree;
    std::size_t dimension;
};
using HilbertTable = std::vector<HilbertEntry>;

// Dimensions of the multigraded pieces with total degree at most `bound`.
HilbertTable hilbert_table(const MinorSystem& sys, int bound, std::uint64_t budget = default_budget);
// Multigraded Hilbert function of the small diagonal of (P^{r-1})^k.
std::size_t diagonal_hilbert(const std::vector<int>& degree, std::size_t r);
std::string hilbert_csv(const HilbertTable& table);

// ---- local charts of an exact pure net generated by a polygon

struct ChartSystem {
    std::size_t rotation = 0;          // block playing the role of block 0
    std::vector<std::size_t> p;        // p_0..p_n in rotated labels, p_0 = 1
    std::vector<std::size_t> j;        // summand index inside block p_i
    std::vector<std::size_t> normalized;  // per polygon vertex, the coordinate set to 1
    std::vector<std::size_t> y;        // per polygon vertex, the coordinate playing y_i
    bool first_map_vanishes = false;   // p_1 = 1: x_0 lies in block 1 and no product equation
    std::vector<Polynomial> equations;  // substitutions first, then the product of the y_i

    bool contains(std::span<const Scalar> x) const;
};

struct ChartAtlas {
    explicit ChartAtlas(Field f) : field(std::move(f)) {}

    Field field;
    int n = 0;
    std::size_t r = 0;
    std::vector<Vertex> polygon;           // oriented, padded to n+1 vertices
    std::vector<std::size_t> block_sizes;  // r_l
    std::vector<Matrix> bases;             // adapted basis at each polygon vertex
    std::vector<Matrix> cycle_maps;        // M_i
    std::vector<ChartSystem> charts;
    std::vector<std::string> names;

    std::size_t variable(std::size_t i, std::size_t l, std::size_t k) const;
};

// Polygon completed to an oriented (n+1)-gon by splitting every side into single-type steps.
std::vector<Vertex> pad_polygon(const VertexSet& polygon);
ChartAtlas charts(const WindowNet& net, const VertexSet& polygon);

struct AgreementReport {
    bool agree = true;
    std::size_t points = 0;
    std::size_t chart_points = 0;
    std::size_t disagreements = 0;
    std::size_t uncovered = 0;
    std::vector<std::string> witnesses;
};

// Exhaustive comparison over the product of projective spaces of a prime field: on every chart,
// the chart equations and the minors of `sys` (hull equal to the padded polygon) cut the same points,
// and every point of the minor locus lies on some chart.
AgreementReport chart_vs_minor_agreement(const ChartAtlas& atlas, const MinorSystem& sys, std::uint64_t budget = default_budget);

}  // namespace lnet::lp

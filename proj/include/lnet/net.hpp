#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lnet/matrix.hpp"
#include "lnet/zquiver.hpp"

namespace lnet::net {

using exactla::Field;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Subspace;
using exactla::Vector;
using zq::ArrowType;
using zq::Path;
using zq::Vertex;
using zq::VertexSet;

using ArrowKey = std::pair<Vertex, ArrowType>;

// A representation of the Z^n-quiver restricted to a finite vertex window.
// Every arrow with both ends in the window carries a matrix.
class WindowNet {
public:
    WindowNet(Field field, int n, const std::map<Vertex, std::size_t>& dims, std::map<ArrowKey, Matrix> arrows);

    const Field& field() const noexcept { return field_; }
    int n() const noexcept { return n_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    VertexSet vertex_set() const { return {vertices_.begin(), vertices_.end()}; }
    bool contains(const Vertex& v) const { return index_.count(v) > 0; }
    std::size_t dim(const Vertex& v) const;
    bool has_arrow(const Vertex& source, ArrowType a) const;
    const Matrix& arrow(const Vertex& source, ArrowType a) const;
    // All arrows arriving at v and leaving v stay inside the window.
    bool is_interior(const Vertex& v) const;

    std::optional<Matrix> try_compose(const Path& p) const;
    Matrix compose(const Path& p) const;

private:
    std::size_t slot(const Vertex& v) const;

    Field field_;
    int n_;
    std::vector<Vertex> vertices_;
    std::map<Vertex, std::size_t> index_;
    std::vector<std::size_t> dims_;
    std::vector<std::optional<Matrix>> arrows_;
};

// An admissible path from u to v inside the window: the canonical ordering when it fits,
// otherwise the lexicographically first ordering that does.
std::optional<Path> admissible_path_in_window(const WindowNet& net, const Vertex& u, const Vertex& v);

// Memoized class maps of one net.
class ClassMaps {
public:
    explicit ClassMaps(const WindowNet& net) : net_(&net) {}
    const std::optional<Matrix>& find(const Vertex& u, const Vertex& v) const;
    const Matrix& at(const Vertex& u, const Vertex& v) const;
    const WindowNet& net() const noexcept { return *net_; }

private:
    const WindowNet* net_;
    mutable std::map<std::pair<Vertex, Vertex>, std::optional<Matrix>> cache_;
};

Matrix class_map(const WindowNet& net, const Vertex& u, const Vertex& v);

struct WalkedPath {
    Path path;
    Matrix map;
};

// Paths from u of length at most `bound` inside the window with their composites, keyed by target.
std::map<Vertex, std::vector<WalkedPath>> paths_from(const WindowNet& net, const Vertex& u, int bound);

struct CheckReport {
    std::string property;
    bool passed = true;
    int path_bound = 0;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<std::string> violations;

    void violation(std::string what);
};

CheckReport check_weakly_linked(const WindowNet& net);
CheckReport check_linked(const WindowNet& net);
CheckReport check_exact(const WindowNet& net);
CheckReport check_pure(const WindowNet& net);
// Every path of length bound+1 arriving at a window vertex composes to zero.
CheckReport check_locally_finite(const WindowNet& net, int bound);

// One of the two class maps between u and v is nonzero.
bool related(const ClassMaps& maps, const Vertex& u, const Vertex& v);

CheckReport check_one_generated_by(const WindowNet& net, const VertexSet& h);
CheckReport check_generated_by(const WindowNet& net, const VertexSet& h);
inline bool is_one_generated_by(const WindowNet& net, const VertexSet& h) { return check_one_generated_by(net, h).passed; }
inline bool is_generated_by(const WindowNet& net, const VertexSet& h) { return check_generated_by(net, h).passed; }

// Unique minimal set of vertices 1-generating a pure weakly linked net.
VertexSet minimal_one_generators(const WindowNet& net);

// A family of subspaces closed under the arrow maps.
class Subnet {
public:
    Subnet(const WindowNet& net, std::map<Vertex, Subspace> spaces);
    const Subspace& at(const Vertex& v) const { return spaces_.at(v); }
    const std::map<Vertex, Subspace>& spaces() const noexcept { return spaces_; }
    const WindowNet& net() const noexcept { return *net_; }
    // Restriction of the ambient net, in the echelon-canonical bases of the subspaces.
    WindowNet as_net() const;

private:
    const WindowNet* net_;
    std::map<Vertex, Subspace> spaces_;
};

bool is_closed_under_arrows(const WindowNet& net, const std::map<Vertex, Subspace>& spaces);
// Least subnet of the window containing `seed` at v.
Subnet subnet_generated(const WindowNet& net, const Vertex& v, std::span<const Scalar> seed);

// Data from which a net is rebuilt by spreading the spaces at H over the shadow regions.
struct NetPresentation {
    Field field;
    int n;
    zq::ClosedSet hull;
    std::map<Vertex, std::size_t> dims;
    std::map<std::pair<Vertex, Vertex>, Matrix> cross_maps;
};

NetPresentation presentation_of(const WindowNet& net, const zq::ClosedSet& h);
WindowNet expand(const NetPresentation& p, const VertexSet& window);
WindowNet expand(const NetPresentation& p, int radius);
// Net with V_v := V_{shadow(v)} and arrows given by class maps between shadows.
WindowNet shadow_net(const WindowNet& net, const zq::ClosedSet& h);
// The shadow net is weakly linked and generated by H, inherits purity and exactness from the input,
// and is linked when the input is and H contains the bridges of its weakly neighboring members.
CheckReport check_shadow_net(const WindowNet& net, const zq::ClosedSet& h);

// Composite along the segment of an oriented polygon, circuit included for a single vertex.
Matrix segment_map(const WindowNet& net, const Vertex& from, zq::TypeSet types);
// Sum over the cycle of kernel dimensions of the segment maps.
std::size_t grothendieck_sum(const WindowNet& net, const zq::OrientedPolygon& polygon);
// The kernel dimensions around the polygon add up to the dimension at each of its vertices.
bool polygon_kernel_dimension_identity(const WindowNet& net, const zq::OrientedPolygon& polygon);

struct Summand {
    Vertex generator;
    Vector seed;
};

// Splitting of an exact pure net generated by a polygon into simple summands.
struct Decomposition {
    zq::OrientedPolygon polygon;
    std::vector<std::size_t> block_sizes;  // summands generated at each polygon vertex
    std::vector<Summand> summands;         // grouped by polygon vertex, in polygon order
    std::vector<Matrix> bases;             // per polygon vertex: images of the seeds along the cycle
    std::vector<Matrix> cycle_maps;        // segment maps in those bases
};

Decomposition decompose_polygon_generated(const WindowNet& net, std::span<const Vertex> polygon, const Vertex& start);

// Images of the summand seeds at x via class maps; columns ordered like the summands.
Matrix propagated_basis(const WindowNet& net, const ClassMaps& maps, const Decomposition& d, const Vertex& x);

// Reduction modulo p of a rational net.
WindowNet reduce_mod(const WindowNet& net, std::uint32_t p);
// Same net with each V_v re-coordinatised by the invertible matrix at v.
WindowNet change_basis(const WindowNet& net, const std::map<Vertex, Matrix>& bases);

}  // namespace lnet::net

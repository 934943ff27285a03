#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lnet::zq {

// Vertex of the Z^n-quiver: an (n+1)-tuple of integers modulo the all-ones vector,
// stored with minimum coordinate 0.
class Vertex {
public:
    Vertex() = default;
    explicit Vertex(std::vector<int> coords);
    static Vertex origin(int n) { return Vertex(std::vector<int>(static_cast<std::size_t>(n) + 1, 0)); }

    int n() const noexcept { return static_cast<int>(coords_.size()) - 1; }
    std::size_t width() const noexcept { return coords_.size(); }
    const std::vector<int>& coords() const noexcept { return coords_; }
    int operator[](std::size_t i) const { return coords_[i]; }
    std::string to_string() const;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
    friend bool operator==(const Vertex&, const Vertex&) = default;

private:
    std::vector<int> coords_;
};

using ArrowType = int;
using VertexSet = std::set<Vertex>;

// Subset of the arrow types {0..n}.
class TypeSet {
public:
    TypeSet() = default;
    static TypeSet from_bits(std::uint64_t bits) { TypeSet s; s.bits_ = bits; return s; }
    static TypeSet all(int n) { return from_bits((std::uint64_t(1) << (n + 1)) - 1); }
    static TypeSet single(ArrowType a) { return from_bits(std::uint64_t(1) << a); }

    bool contains(ArrowType a) const noexcept { return (bits_ >> a) & 1U; }
    void insert(ArrowType a) noexcept { bits_ |= std::uint64_t(1) << a; }
    int size() const noexcept { return __builtin_popcountll(bits_); }
    bool empty() const noexcept { return bits_ == 0; }
    std::uint64_t bits() const noexcept { return bits_; }
    std::vector<ArrowType> members() const;
    bool disjoint(TypeSet o) const noexcept { return (bits_ & o.bits_) == 0; }
    TypeSet operator|(TypeSet o) const noexcept { return from_bits(bits_ | o.bits_); }
    TypeSet operator&(TypeSet o) const noexcept { return from_bits(bits_ & o.bits_); }
    TypeSet minus(TypeSet o) const noexcept { return from_bits(bits_ & ~o.bits_); }
    std::string to_string() const;

    friend auto operator<=>(const TypeSet&, const TypeSet&) = default;

private:
    std::uint64_t bits_ = 0;
};

// Counts of each arrow type along a path.
using PathType = std::vector<int>;

struct Path {
    Vertex source;
    std::vector<ArrowType> steps;

    Vertex target() const;
    PathType type() const;
    std::size_t length() const { return steps.size(); }
    // Vertices visited, source first.
    std::vector<Vertex> vertices() const;
};

std::vector<int> normalized(std::vector<int> v);
Vertex step(const Vertex& v, ArrowType a);
Vertex step_back(const Vertex& v, ArrowType a);
Vertex apply(TypeSet types, const Vertex& v);

bool is_admissible(const PathType& t);
bool is_simple(const PathType& t);
bool is_minimal_circuit(const PathType& t);
TypeSet essential_type(const PathType& t);
int total_length(const PathType& t);

// Type of the admissible paths from u to v.
PathType admissible_type(const Vertex& u, const Vertex& v);
int admissible_length(const Vertex& u, const Vertex& v);
// Arrow types in ascending order, each repeated by its count.
std::vector<ArrowType> canonical_steps(const PathType& t);
Path canonical_path(const Vertex& u, const Vertex& v);

// Some admissible path from z to v passes through w.
bool admissible_through(const Vertex& z, const Vertex& w, const Vertex& v);

bool are_neighbors(const Vertex& u, const Vertex& v);
// I with v = I.u, when u and v are neighbors.
TypeSet neighbor_type(const Vertex& u, const Vertex& v);

bool is_polygon(std::span<const Vertex> vertices);

struct OrientedPolygon {
    std::vector<Vertex> vertices;
    // steps[i] carries vertices[i] to vertices[i+1]; the last one closes the cycle.
    std::vector<TypeSet> steps;
};

OrientedPolygon orient_polygon(std::span<const Vertex> vertices, const Vertex& start);

// Vertices v such that every arrow type is avoided by some admissible path from H to v.
VertexSet hull(std::span<const Vertex> generators);
inline VertexSet hull(const VertexSet& generators) {
    std::vector<Vertex> g(generators.begin(), generators.end());
    return hull(g);
}

// A vertex set equal to its own hull.
class ClosedSet {
public:
    static ClosedSet of(VertexSet members);
    static ClosedSet hull_of(std::span<const Vertex> generators);

    const VertexSet& members() const noexcept { return members_; }
    std::vector<Vertex> list() const { return {members_.begin(), members_.end()}; }
    bool contains(const Vertex& v) const { return members_.count(v) > 0; }
    std::size_t size() const noexcept { return members_.size(); }

private:
    explicit ClosedSet(VertexSet m) : members_(std::move(m)) {}
    VertexSet members_;
};

Vertex shadow(const Vertex& v, const ClosedSet& h);
std::map<Vertex, VertexSet> shadow_regions(const ClosedSet& h, const VertexSet& window);

VertexSet bridges(const Vertex& v1, const Vertex& v2, const VertexSet& window);

// Hull of the seed plus everything within `radius` steps of it, steps taken in either direction.
VertexSet window(std::span<const Vertex> seed, int radius);

// Lattice reachability by forward or backward arrow steps.
int undirected_distance(const Vertex& u, const Vertex& v);

}  // namespace lnet::zq

#include "lnet/zquiver.hpp"

#include <algorithm>
#include <deque>

#include "lnet/error.hpp"

namespace lnet::zq {

std::vector<int> normalized(std::vector<int> v) {
    if (v.empty()) return v;
    int m = *std::min_element(v.begin(), v.end());
    for (auto& x : v) x -= m;
    return v;
}

Vertex::Vertex(std::vector<int> coords) : coords_(normalized(std::move(coords))) {
    if (coords_.size() < 2) fail(ErrorCode::PreconditionViolation, "vertex needs at least two coordinates");
}

std::string Vertex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

std::vector<ArrowType> TypeSet::members() const {
    std::vector<ArrowType> out;
    for (int a = 0; a < 64; ++a)
        if (contains(a)) out.push_back(a);
    return out;
}

std::string TypeSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto a : members()) {
        if (!first) s += ',';
        s += std::to_string(a);
        first = false;
    }
    return s + "}";
}

Vertex step(const Vertex& v, ArrowType a) {
    std::vector<int> c = v.coords();
    c.at(static_cast<std::size_t>(a)) += 1;
    return Vertex(std::move(c));
}

Vertex step_back(const Vertex& v, ArrowType a) {
    std::vector<int> c = v.coords();
    c.at(static_cast<std::size_t>(a)) -= 1;
    return Vertex(std::move(c));
}

Vertex apply(TypeSet types, const Vertex& v) {
    std::vector<int> c = v.coords();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (types.contains(static_cast<ArrowType>(i))) c[i] += 1;
    return Vertex(std::move(c));
}

Vertex Path::target() const {
    std::vector<int> c = source.coords();
    for (auto a : steps) c.at(static_cast<std::size_t>(a)) += 1;
    return Vertex(std::move(c));
}

PathType Path::type() const {
    PathType t(source.width(), 0);
    for (auto a : steps) t.at(static_cast<std::size_t>(a)) += 1;
    return t;
}

std::vector<Vertex> Path::vertices() const {
    std::vector<Vertex> out{source};
    for (auto a : steps) out.push_back(step(out.back(), a));
    return out;
}

bool is_admissible(const PathType& t) { return std::find(t.begin(), t.end(), 0) != t.end(); }

bool is_simple(const PathType& t) {
    return std::all_of(t.begin(), t.end(), [](int x) { return x <= 1; });
}

bool is_minimal_circuit(const PathType& t) {
    return std::all_of(t.begin(), t.end(), [](int x) { return x == 1; });
}

TypeSet essential_type(const PathType& t) {
    TypeSet s;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] > 0) s.insert(static_cast<ArrowType>(i));
    return s;
}

int total_length(const PathType& t) {
    int s = 0;
    for (auto x : t) s += x;
    return s;
}

PathType admissible_type(const Vertex& u, const Vertex& v) {
    if (u.width() != v.width()) fail(ErrorCode::DimensionMismatch, "vertices of different quivers");
    std::vector<int> d(u.width());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = v[i] - u[i];
    return normalized(std::move(d));
}

int admissible_length(const Vertex& u, const Vertex& v) { return total_length(admissible_type(u, v)); }

std::vector<ArrowType> canonical_steps(const PathType& t) {
    std::vector<ArrowType> steps;
    for (std::size_t a = 0; a < t.size(); ++a)
        for (int k = 0; k < t[a]; ++k) steps.push_back(static_cast<ArrowType>(a));
    return steps;
}

Path canonical_path(const Vertex& u, const Vertex& v) { return Path{u, canonical_steps(admissible_type(u, v))}; }

bool admissible_through(const Vertex& z, const Vertex& w, const Vertex& v) {
    PathType first = admissible_type(z, w);
    PathType second = admissible_type(w, v);
    for (std::size_t i = 0; i < first.size(); ++i)
        if (first[i] == 0 && second[i] == 0) return true;
    return false;
}

bool are_neighbors(const Vertex& u, const Vertex& v) {
    if (u == v) return false;
    PathType d = admissible_type(u, v);
    return std::all_of(d.begin(), d.end(), [](int x) { return x <= 1; });
}

TypeSet neighbor_type(const Vertex& u, const Vertex& v) {
    if (!are_neighbors(u, v)) fail(ErrorCode::PreconditionViolation, "vertices are not neighbors");
    return essential_type(admissible_type(u, v));
}

bool is_polygon(std::span<const Vertex> vertices) {
    if (vertices.empty()) return false;
    if (static_cast<int>(vertices.size()) > vertices.front().n() + 1) return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!are_neighbors(vertices[i], vertices[j])) return false;
    return true;
}

OrientedPolygon orient_polygon(std::span<const Vertex> vertices, const Vertex& start) {
    if (!is_polygon(vertices)) fail(ErrorCode::NotAPolygon, "vertices do not form a polygon");
    if (std::find(vertices.begin(), vertices.end(), start) == vertices.end())
        fail(ErrorCode::PreconditionViolation, "start vertex is not in the polygon");
    const int n = start.n();
    std::vector<std::pair<TypeSet, Vertex>> ranked;
    for (const auto& v : vertices) ranked.emplace_back(essential_type(admissible_type(start, v)), v);
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    OrientedPolygon out;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        out.vertices.push_back(ranked[i].second);
        if (i == 0) continue;
        TypeSet prev = ranked[i - 1].first, cur = ranked[i].first;
        if (cur.size() <= prev.size() || (prev.bits() & ~cur.bits()) != 0)
            fail(ErrorCode::OrderingInconsistent, "polygon vertices do not form a nested chain");
        out.steps.push_back(cur.minus(prev));
    }
    out.steps.push_back(TypeSet::all(n).minus(ranked.back().first));
    return out;
}

namespace {

// Vertices with minimum 0 and all coordinates at most `bound`.
std::vector<Vertex> box(int n, int bound) {
    std::vector<Vertex> out;
    std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
        if (std::find(c.begin(), c.end(), 0) != c.end()) out.emplace_back(c);
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
    }
    return out;
}

bool in_hull(const Vertex& v, std::span<const Vertex> generators) {
    for (std::size_t i = 0; i < v.width(); ++i) {
        bool avoided = false;
        for (const auto& z : generators)
            if (admissible_type(z, v)[i] == 0) {
                avoided = true;
                break;
            }
        if (!avoided) return false;
    }
    return true;
}

}  // namespace

VertexSet hull(std::span<const Vertex> generators) {
    if (generators.empty()) return {};
    const int n = generators.front().n();
    int bound = 0;
    for (const auto& z : generators) {
        if (z.n() != n) fail(ErrorCode::DimensionMismatch, "generators from different quivers");
        bound = std::max(bound, *std::max_element(z.coords().begin(), z.coords().end()));
    }
    VertexSet out;
    for (const auto& v : box(n, bound))
        if (in_hull(v, generators)) out.insert(v);
    return out;
}

ClosedSet ClosedSet::of(VertexSet members) {
    if (members.empty()) fail(ErrorCode::PreconditionViolation, "empty vertex set");
    if (hull(members) != members) fail(ErrorCode::HullNotClosed, "vertex set is not its own hull");
    return ClosedSet(std::move(members));
}

ClosedSet ClosedSet::hull_of(std::span<const Vertex> generators) {
    if (generators.empty()) fail(ErrorCode::PreconditionViolation, "empty vertex set");
    return ClosedSet(hull(generators));
}

Vertex shadow(const Vertex& v, const ClosedSet& h) {
    const Vertex* found = nullptr;
    int count = 0;
    for (const auto& w : h.members()) {
        bool ok = true;
        for (const auto& z : h.members())
            if (!admissible_through(z, w, v)) {
                ok = false;
                break;
            }
        if (ok) {
            found = &w;
            ++count;
        }
    }
    if (count != 1) fail(ErrorCode::NonUniqueShadow, "vertex " + v.to_string() + " has " + std::to_string(count) + " shadow candidates");
    return *found;
}

std::map<Vertex, VertexSet> shadow_regions(const ClosedSet& h, const VertexSet& window) {
    std::map<Vertex, VertexSet> out;
    for (const auto& w : h.members()) out[w];
    for (const auto& v : window) out[shadow(v, h)].insert(v);
    return out;
}

VertexSet bridges(const Vertex& v1, const Vertex& v2, const VertexSet& window) {
    if (v1 == v2) fail(ErrorCode::PreconditionViolation, "bridges need distinct vertices");
    VertexSet out;
    for (const auto& v : window) {
        PathType t1 = admissible_type(v, v1), t2 = admissible_type(v, v2);
        if (is_simple(t1) && is_simple(t2) && essential_type(t1).disjoint(essential_type(t2))) out.insert(v);
    }
    return out;
}

VertexSet window(std::span<const Vertex> seed, int radius) {
    if (seed.empty()) fail(ErrorCode::PreconditionViolation, "empty window seed");
    if (radius < 0) fail(ErrorCode::PreconditionViolation, "negative window radius");
    VertexSet out = hull(seed);
    std::deque<std::pair<Vertex, int>> queue;
    for (const auto& v : out) queue.emplace_back(v, 0);
    const int n = seed.front().n();
    while (!queue.empty()) {
        auto [v, d] = queue.front();
        queue.pop_front();
        if (d == radius) continue;
        for (ArrowType a = 0; a <= n; ++a)
            for (const auto& next : {step(v, a), step_back(v, a)})
                if (out.insert(next).second) queue.emplace_back(next, d + 1);
    }
    return out;
}

int undirected_distance(const Vertex& u, const Vertex& v) {
    std::vector<int> d(u.width());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = v[i] - u[i];
    std::vector<int> sorted = d;
    std::sort(sorted.begin(), sorted.end());
    int c = sorted[sorted.size() / 2];
    int s = 0;
    for (auto x : d) s += std::abs(x - c);
    return s;
}

}  // namespace lnet::zq

#include "lnet/net.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "lnet/error.hpp"

namespace lnet::net {

using zq::PathType;
using zq::TypeSet;

WindowNet::WindowNet(Field field, int n, const std::map<Vertex, std::size_t>& dims, std::map<ArrowKey, Matrix> arrows)
    : field_(field), n_(n) {
    if (n < 1) fail(ErrorCode::PreconditionViolation, "quiver rank must be positive");
    if (dims.empty()) fail(ErrorCode::PreconditionViolation, "empty window");
    for (const auto& [v, d] : dims) {
        if (v.n() != n) fail(ErrorCode::DimensionMismatch, "vertex " + v.to_string() + " has the wrong width");
        index_.emplace(v, vertices_.size());
        vertices_.push_back(v);
        dims_.push_back(d);
    }
    arrows_.resize(vertices_.size() * static_cast<std::size_t>(n + 1));
    for (auto& [key, m] : arrows) {
        const auto& [source, a] = key;
        if (a < 0 || a > n) fail(ErrorCode::PreconditionViolation, "arrow type out of range");
        Vertex target = zq::step(source, a);
        if (!contains(source) || !contains(target))
            fail(ErrorCode::PreconditionViolation, "arrow " + source.to_string() + "+" + std::to_string(a) + " leaves the window");
        if (m.field() != field) fail(ErrorCode::FieldMismatch, "arrow matrix over another field");
        if (m.rows() != dim(target) || m.cols() != dim(source))
            fail(ErrorCode::DimensionMismatch, "arrow " + source.to_string() + "+" + std::to_string(a) + " has the wrong shape");
        arrows_[index_.at(source) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(a)] = std::move(m);
    }
    for (const auto& v : vertices_)
        for (ArrowType a = 0; a <= n; ++a)
            if (contains(zq::step(v, a)) && !arrows_[slot(v) + static_cast<std::size_t>(a)])
                fail(ErrorCode::PreconditionViolation, "missing arrow " + v.to_string() + "+" + std::to_string(a));
}

std::size_t WindowNet::slot(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) fail(ErrorCode::PathLeavesWindow, "vertex " + v.to_string() + " is outside the window");
    return it->second * static_cast<std::size_t>(n_ + 1);
}

std::size_t WindowNet::dim(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) fail(ErrorCode::PathLeavesWindow, "vertex " + v.to_string() + " is outside the window");
    return dims_[it->second];
}

bool WindowNet::has_arrow(const Vertex& source, ArrowType a) const {
    auto it = index_.find(source);
    return it != index_.end() && arrows_[it->second * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(a)].has_value();
}

const Matrix& WindowNet::arrow(const Vertex& source, ArrowType a) const {
    const auto& m = arrows_[slot(source) + static_cast<std::size_t>(a)];
    if (!m) fail(ErrorCode::PathLeavesWindow, "arrow " + source.to_string() + "+" + std::to_string(a) + " leaves the window");
    return *m;
}

bool WindowNet::is_interior(const Vertex& v) const {
    if (!contains(v)) return false;
    for (ArrowType a = 0; a <= n_; ++a)
        if (!contains(zq::step(v, a)) || !contains(zq::step_back(v, a))) return false;
    return true;
}

std::optional<Matrix> WindowNet::try_compose(const Path& p) const {
    if (!contains(p.source)) return std::nullopt;
    Vertex at = p.source;
    Matrix m = Matrix::identity(field_, dim(at));
    for (auto a : p.steps) {
        if (!has_arrow(at, a)) return std::nullopt;
        m = arrow(at, a) * m;
        at = zq::step(at, a);
    }
    return m;
}

Matrix WindowNet::compose(const Path& p) const {
    auto m = try_compose(p);
    if (!m) fail(ErrorCode::PathLeavesWindow, "path from " + p.source.to_string() + " leaves the window");
    return *m;
}

namespace {

// Some ordering of the multiset `remaining` of steps from `source` that stays in the window.
std::optional<Path> ordering_in_window(const WindowNet& net, const Vertex& source, PathType remaining) {
    std::vector<ArrowType> canonical = zq::canonical_steps(remaining);
    Path p{source, canonical};
    if (net.try_compose(p)) return p;
    std::set<std::pair<Vertex, PathType>> dead;
    std::vector<ArrowType> steps;
    std::function<bool(const Vertex&, PathType&)> dfs = [&](const Vertex& at, PathType& rest) -> bool {
        if (zq::total_length(rest) == 0) return true;
        if (dead.count({at, rest})) return false;
        for (ArrowType a = 0; a <= net.n(); ++a) {
            if (rest[static_cast<std::size_t>(a)] == 0 || !net.has_arrow(at, a)) continue;
            --rest[static_cast<std::size_t>(a)];
            steps.push_back(a);
            if (dfs(zq::step(at, a), rest)) return true;
            steps.pop_back();
            ++rest[static_cast<std::size_t>(a)];
        }
        dead.insert({at, rest});
        return false;
    };
    if (!net.contains(source) || !dfs(source, remaining)) return std::nullopt;
    return Path{source, steps};
}

}  // namespace

std::optional<Path> admissible_path_in_window(const WindowNet& net, const Vertex& u, const Vertex& v) {
    return ordering_in_window(net, u, zq::admissible_type(u, v));
}

const std::optional<Matrix>& ClassMaps::find(const Vertex& u, const Vertex& v) const {
    auto key = std::make_pair(u, v);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::optional<Matrix> m;
    if (auto p = admissible_path_in_window(*net_, u, v)) m = net_->compose(*p);
    return cache_.emplace(key, std::move(m)).first->second;
}

const Matrix& ClassMaps::at(const Vertex& u, const Vertex& v) const {
    const auto& m = find(u, v);
    if (!m) fail(ErrorCode::PathLeavesWindow, "no admissible path " + u.to_string() + " -> " + v.to_string() + " inside the window");
    return *m;
}

Matrix class_map(const WindowNet& net, const Vertex& u, const Vertex& v) {
    auto p = admissible_path_in_window(net, u, v);
    if (!p) fail(ErrorCode::PathLeavesWindow, "no admissible path " + u.to_string() + " -> " + v.to_string() + " inside the window");
    return net.compose(*p);
}

void CheckReport::violation(std::string what) {
    passed = false;
    if (violations.size() < 20) violations.push_back(std::move(what));
}

namespace {

std::string path_string(const Path& p) {
    std::string s = p.source.to_string() + ":";
    for (auto a : p.steps) s += std::to_string(a);
    return s;
}

}  // namespace

std::map<Vertex, std::vector<WalkedPath>> paths_from(const WindowNet& net, const Vertex& u, int bound) {
    std::map<Vertex, std::vector<WalkedPath>> out;
    std::vector<WalkedPath> frontier{{Path{u, {}}, Matrix::identity(net.field(), net.dim(u))}};
    for (int len = 0; len <= bound; ++len) {
        std::vector<WalkedPath> next;
        for (auto& w : frontier) {
            Vertex at = w.path.target();
            if (len < bound)
                for (ArrowType a = 0; a <= net.n(); ++a) {
                    if (!net.has_arrow(at, a)) continue;
                    Path p = w.path;
                    p.steps.push_back(a);
                    next.push_back({std::move(p), net.arrow(at, a) * w.map});
                }
            out[at].push_back(std::move(w));
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

std::vector<TypeSet> proper_subsets(int n) {
    std::vector<TypeSet> out;
    const std::uint64_t full = (std::uint64_t(1) << (n + 1)) - 1;
    for (std::uint64_t b = 1; b < full; ++b) out.push_back(TypeSet::from_bits(b));
    return out;
}

}  // namespace

CheckReport check_weakly_linked(const WindowNet& net) {
    CheckReport r{"weakly linked", true, net.n() + 1, 0, 0, {}};
    for (const auto& u : net.vertices()) {
        auto groups = paths_from(net, u, net.n() + 1);
        for (const auto& [target, paths] : groups) {
            for (const auto& g2 : paths) {
                if (!zq::is_admissible(g2.path.type())) continue;
                for (const auto& g1 : paths) {
                    if (&g1 == &g2) continue;
                    ++r.checked;
                    if (!exactla::scalar_multiple_of(g1.map, g2.map))
                        r.violation("path " + path_string(g1.path) + " is not a multiple of admissible " + path_string(g2.path));
                }
            }
            for (const auto& g : paths) {
                if (!zq::is_minimal_circuit(g.path.type())) continue;
                ++r.checked;
                if (!g.map.is_zero()) r.violation("minimal circuit " + path_string(g.path) + " is nonzero");
            }
        }
    }
    return r;
}

CheckReport check_linked(const WindowNet& net) {
    CheckReport r{"linked", true, net.n(), 0, 0, {}};
    auto subsets = proper_subsets(net.n());
    for (const auto& u : net.vertices()) {
        std::map<std::uint64_t, std::optional<Matrix>> maps;
        for (auto s : subsets)
            if (auto p = admissible_path_in_window(net, u, zq::apply(s, u))) maps[s.bits()] = net.compose(*p);
        for (auto i : subsets)
            for (auto j : subsets) {
                if (i.bits() >= j.bits() || !i.disjoint(j)) continue;
                const auto& a = maps[i.bits()];
                const auto& b = maps[j.bits()];
                if (!a || !b) {
                    ++r.skipped;
                    continue;
                }
                ++r.checked;
                if (exactla::rank(a->vconcat(*b)) != net.dim(u))
                    r.violation("kernels along " + i.to_string() + " and " + j.to_string() + " meet at " + u.to_string());
            }
    }
    return r;
}

CheckReport check_exact(const WindowNet& net) {
    CheckReport r{"exact", true, net.n(), 0, 0, {}};
    ClassMaps maps(net);
    for (const auto& u : net.vertices())
        for (auto s : proper_subsets(net.n())) {
            Vertex v = zq::apply(s, u);
            if (!net.contains(v)) continue;
            const auto& forward = maps.find(u, v);
            const auto& back = maps.find(v, u);
            if (!forward || !back) {
                ++r.skipped;
                continue;
            }
            ++r.checked;
            if (!(exactla::image_space(*forward) == exactla::kernel_space(*back)))
                r.violation("image of " + u.to_string() + "->" + v.to_string() + " differs from the kernel of the way back");
        }
    return r;
}

CheckReport check_pure(const WindowNet& net) {
    CheckReport r{"pure", true, 0, 0, 0, {}};
    const std::size_t d = net.dim(net.vertices().front());
    for (const auto& v : net.vertices()) {
        ++r.checked;
        if (net.dim(v) != d) r.violation("dimension at " + v.to_string() + " differs");
    }
    return r;
}

CheckReport check_locally_finite(const WindowNet& net, int bound) {
    CheckReport r{"locally finite", true, bound + 1, 0, 0, {}};
    std::map<Vertex, Subspace> reach;
    for (const auto& v : net.vertices()) reach.emplace(v, Subspace::full(net.field(), net.dim(v)));
    for (int k = 0; k <= bound; ++k) {
        std::map<Vertex, Subspace> next;
        for (const auto& y : net.vertices()) {
            Subspace acc = Subspace::zero(net.field(), net.dim(y));
            for (ArrowType a = 0; a <= net.n(); ++a) {
                Vertex x = zq::step_back(y, a);
                if (net.has_arrow(x, a)) acc = acc + reach.at(x).image(net.arrow(x, a));
            }
            next.emplace(y, std::move(acc));
        }
        reach = std::move(next);
    }
    for (const auto& [v, s] : reach) {
        ++r.checked;
        if (s.dim() != 0) r.violation("a path of length " + std::to_string(bound + 1) + " into " + v.to_string() + " is nonzero");
    }
    return r;
}

bool related(const ClassMaps& maps, const Vertex& u, const Vertex& v) {
    if (u == v || !zq::are_neighbors(u, v)) fail(ErrorCode::NotNeighbors, u.to_string() + " and " + v.to_string());
    return !maps.at(u, v).is_zero() || !maps.at(v, u).is_zero();
}

CheckReport check_one_generated_by(const WindowNet& net, const VertexSet& h) {
    CheckReport r{"1-generated", true, 0, 0, 0, {}};
    ClassMaps maps(net);
    for (const auto& v : net.vertices()) {
        ++r.checked;
        bool covered = false;
        for (const auto& g : h) {
            if (!net.contains(g)) continue;
            const auto& m = maps.find(g, v);
            if (m && exactla::is_epi(*m)) {
                covered = true;
                break;
            }
        }
        if (!covered) r.violation("no epimorphic class map reaches " + v.to_string());
    }
    return r;
}

CheckReport check_generated_by(const WindowNet& net, const VertexSet& h) {
    CheckReport r{"generated", true, 0, 0, 0, {}};
    ClassMaps maps(net);
    for (const auto& v : net.vertices()) {
        ++r.checked;
        Subspace acc = Subspace::zero(net.field(), net.dim(v));
        for (const auto& g : h) {
            if (!net.contains(g)) continue;
            if (const auto& m = maps.find(g, v)) acc = acc + exactla::image_space(*m);
        }
        if (acc.dim() != net.dim(v)) r.violation("images do not span the space at " + v.to_string());
    }
    return r;
}

VertexSet minimal_one_generators(const WindowNet& net) {
    ClassMaps maps(net);
    VertexSet candidates;
    for (const auto& v : net.vertices()) {
        bool reached = false;
        for (const auto& u : net.vertices()) {
            if (u == v || net.dim(u) < net.dim(v)) continue;
            const auto& m = maps.find(u, v);
            if (m && exactla::is_epi(*m)) {
                reached = true;
                break;
            }
        }
        if (!reached) candidates.insert(v);
    }
    auto report = check_one_generated_by(net, candidates);
    if (!report.passed) fail(ErrorCode::NotOneGenerated, report.violations.front());
    return candidates;
}

// ---- subnets

bool is_closed_under_arrows(const WindowNet& net, const std::map<Vertex, Subspace>& spaces) {
    for (const auto& v : net.vertices())
        for (ArrowType a = 0; a <= net.n(); ++a) {
            if (!net.has_arrow(v, a)) continue;
            if (!spaces.at(zq::step(v, a)).contains(spaces.at(v).image(net.arrow(v, a)))) return false;
        }
    return true;
}

Subnet::Subnet(const WindowNet& net, std::map<Vertex, Subspace> spaces) : net_(&net), spaces_(std::move(spaces)) {
    for (const auto& v : net.vertices()) {
        auto it = spaces_.find(v);
        if (it == spaces_.end() || it->second.ambient() != net.dim(v))
            fail(ErrorCode::DimensionMismatch, "subnet space at " + v.to_string());
    }
    if (!is_closed_under_arrows(net, spaces_)) fail(ErrorCode::PreconditionViolation, "subspaces are not closed under the arrows");
}

WindowNet Subnet::as_net() const {
    std::map<Vertex, std::size_t> dims;
    std::map<Vertex, Matrix> bases;
    for (const auto& [v, s] : spaces_) {
        dims[v] = s.dim();
        bases.emplace(v, s.basis());
    }
    std::map<ArrowKey, Matrix> arrows;
    for (const auto& v : net_->vertices())
        for (ArrowType a = 0; a <= net_->n(); ++a) {
            if (!net_->has_arrow(v, a)) continue;
            const Matrix& target = bases.at(zq::step(v, a));
            arrows.emplace(ArrowKey{v, a}, exactla::solve(target, net_->arrow(v, a) * bases.at(v)));
        }
    return WindowNet(net_->field(), net_->n(), dims, std::move(arrows));
}

Subnet subnet_generated(const WindowNet& net, const Vertex& v, std::span<const Scalar> seed) {
    std::map<Vertex, Subspace> spaces;
    for (const auto& x : net.vertices()) spaces.emplace(x, Subspace::zero(net.field(), net.dim(x)));
    Vector s(seed.begin(), seed.end());
    spaces.at(v) = Subspace::span(net.field(), net.dim(v), std::span<const Vector>(&s, 1));
    std::deque<Vertex> queue{v};
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (ArrowType a = 0; a <= net.n(); ++a) {
            if (!net.has_arrow(x, a)) continue;
            Vertex y = zq::step(x, a);
            Subspace grown = spaces.at(y) + spaces.at(x).image(net.arrow(x, a));
            if (grown.dim() > spaces.at(y).dim()) {
                spaces.at(y) = std::move(grown);
                queue.push_back(y);
            }
        }
    }
    return Subnet(net, std::move(spaces));
}

// ---- conversions

WindowNet reduce_mod(const WindowNet& net, std::uint32_t p) {
    std::map<Vertex, std::size_t> dims;
    std::map<ArrowKey, Matrix> arrows;
    for (const auto& v : net.vertices()) {
        dims[v] = net.dim(v);
        for (ArrowType a = 0; a <= net.n(); ++a)
            if (net.has_arrow(v, a)) arrows.emplace(ArrowKey{v, a}, exactla::reduce_mod(net.arrow(v, a), p));
    }
    return WindowNet(Field::prime(p), net.n(), dims, std::move(arrows));
}

WindowNet change_basis(const WindowNet& net, const std::map<Vertex, Matrix>& bases) {
    std::map<Vertex, std::size_t> dims;
    std::map<Vertex, Matrix> inverses;
    for (const auto& v : net.vertices()) {
        dims[v] = net.dim(v);
        inverses.emplace(v, exactla::inverse(bases.at(v)));
    }
    std::map<ArrowKey, Matrix> arrows;
    for (const auto& v : net.vertices())
        for (ArrowType a = 0; a <= net.n(); ++a)
            if (net.has_arrow(v, a))
                arrows.emplace(ArrowKey{v, a}, inverses.at(zq::step(v, a)) * net.arrow(v, a) * bases.at(v));
    return WindowNet(net.field(), net.n(), dims, std::move(arrows));
}

// ---- polygon segments

Matrix segment_map(const WindowNet& net, const Vertex& from, TypeSet types) {
    PathType t(static_cast<std::size_t>(net.n()) + 1, 0);
    for (auto a : types.members()) t[static_cast<std::size_t>(a)] = 1;
    auto p = ordering_in_window(net, from, t);
    if (!p) fail(ErrorCode::PathLeavesWindow, "segment from " + from.to_string() + " leaves the window");
    return net.compose(*p);
}

std::size_t grothendieck_sum(const WindowNet& net, const zq::OrientedPolygon& polygon) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
        Matrix m = segment_map(net, polygon.vertices[i], polygon.steps[i]);
        sum += m.cols() - exactla::rank(m);
    }
    return sum;
}

bool polygon_kernel_dimension_identity(const WindowNet& net, const zq::OrientedPolygon& polygon) {
    const std::size_t sum = grothendieck_sum(net, polygon);
    return std::all_of(polygon.vertices.begin(), polygon.vertices.end(), [&](const Vertex& v) { return net.dim(v) == sum; });
}

}  // namespace lnet::net

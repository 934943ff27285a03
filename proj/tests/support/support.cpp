#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "lnet/fixtures.hpp"

namespace lnet::testing {

using exactla::Matrix;
using exactla::Scalar;
using exactla::Vector;
using zq::ArrowType;
using zq::TypeSet;

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Vertex random_vertex(Rng& rng, int n, int spread) {
    std::vector<int> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = uniform(rng, 0, spread);
    return Vertex(std::move(c));
}

std::vector<Vertex> random_vertices(Rng& rng, int n, std::size_t count, int spread) {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_vertex(rng, n, spread));
    return out;
}

std::vector<TypeSet> random_partition(Rng& rng, int n, std::size_t parts) {
    std::vector<ArrowType> types(static_cast<std::size_t>(n) + 1);
    std::iota(types.begin(), types.end(), 0);
    std::shuffle(types.begin(), types.end(), rng);
    // Cut points split the shuffled types into `parts` nonempty runs.
    std::vector<std::size_t> cuts(types.size() - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(types.size());
    std::vector<TypeSet> out;
    std::size_t begin = 0;
    for (auto end : cuts) {
        TypeSet s;
        for (std::size_t k = begin; k < end; ++k) s.insert(types[k]);
        out.push_back(s);
        begin = end;
    }
    return out;
}

std::vector<Vertex> random_polygon(Rng& rng, const Vertex& start, std::size_t size) {
    auto parts = random_partition(rng, start.n(), size);
    std::vector<Vertex> out{start};
    for (std::size_t i = 0; i + 1 < size; ++i) out.push_back(zq::apply(parts[i], out.back()));
    return out;
}

zq::Path random_path(Rng& rng, const Vertex& source, std::size_t length) {
    zq::Path p{source, {}};
    for (std::size_t i = 0; i < length; ++i) p.steps.push_back(uniform(rng, 0, source.n()));
    return p;
}

Matrix random_invertible(Rng& rng, const Field& field, std::size_t size) {
    for (;;) {
        Matrix m(field, size, size);
        for (std::size_t r = 0; r < size; ++r)
            for (std::size_t c = 0; c < size; ++c) m(r, c) = field.from_int(uniform(rng, -2, 2));
        if (exactla::rank(m) == size) return m;
    }
}

ExactSample random_exact_net(Rng& rng, int n, std::size_t dim, int radius) {
    const Field q = Field::rationals();
    auto polygon = random_polygon(rng, Vertex::origin(n), static_cast<std::size_t>(uniform(rng, 1, n + 1)));
    std::vector<Vertex> generators;
    for (std::size_t k = 0; k < dim; ++k) generators.push_back(polygon[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(polygon.size()) - 1))]);
    auto base = net::expand(fixtures::exact_sum_presentation(q, n, generators), radius);
    std::map<Vertex, Matrix> bases;
    for (const auto& v : base.vertices()) bases.emplace(v, random_invertible(rng, q, dim));
    return {net::change_basis(base, bases), std::move(polygon), std::move(generators)};
}

SimpleSample random_simple_net(Rng& rng, int n, int radius) {
    auto polygon = random_polygon(rng, Vertex::origin(n), static_cast<std::size_t>(uniform(rng, 1, n + 1)));
    return {simple::generated_by_polygon(Field::rationals(), polygon, radius), std::move(polygon)};
}

// ---- oracles

bool in_argmin(const Vertex& z, const Vertex& v, int i) {
    std::vector<int> d(v.width());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = v[k] - z[k];
    return d[static_cast<std::size_t>(i)] == *std::min_element(d.begin(), d.end());
}

VertexSet hull_oracle(const std::vector<Vertex>& h, int margin) {
    const int n = h.front().n();
    int top = 0;
    for (const auto& v : h)
        for (int c : v.coords()) top = std::max(top, c);
    top += margin;
    VertexSet out;
    std::vector<int> c(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(std::size_t)> scan = [&](std::size_t k) {
        if (k == c.size()) {
            if (*std::min_element(c.begin(), c.end()) != 0) return;
            Vertex v(c);
            for (int i = 0; i <= n; ++i)
                if (std::none_of(h.begin(), h.end(), [&](const Vertex& z) { return in_argmin(z, v, i); })) return;
            out.insert(v);
            return;
        }
        for (int x = 0; x <= top; ++x) {
            c[k] = x;
            scan(k + 1);
        }
    };
    scan(0);
    return out;
}

Vertex shadow_oracle(const Vertex& v, const VertexSet& h) {
    std::vector<Vertex> found;
    for (const auto& w : h) {
        bool through_all = true;
        for (const auto& z : h) {
            bool shared = false;
            for (int i = 0; i <= v.n(); ++i) shared |= in_argmin(z, w, i) && in_argmin(w, v, i);
            through_all &= shared;
        }
        if (through_all) found.push_back(w);
    }
    if (found.size() != 1) throw std::logic_error("shadow oracle found " + std::to_string(found.size()) + " candidates");
    return found.front();
}

bool forms_oriented_polygon(const std::vector<Vertex>& w) {
    const std::size_t n1 = w.front().width();
    std::vector<bool> used(n1, false);
    bool any = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Vertex& a = w[i];
        const Vertex& b = w[(i + 1) % w.size()];
        std::vector<int> d(n1);
        for (std::size_t k = 0; k < n1; ++k) d[k] = b[k] - a[k];
        const int lo = *std::min_element(d.begin(), d.end());
        for (std::size_t k = 0; k < n1; ++k) {
            const int e = d[k] - lo;
            if (e > 1) return false;
            if (e == 1) {
                if (used[k]) return false;
                used[k] = true;
                any = true;
            }
        }
    }
    return !any || std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

Vertex walk(const Vertex& source, const std::vector<ArrowType>& steps) {
    std::vector<int> c = source.coords();
    for (auto a : steps) ++c[static_cast<std::size_t>(a)];
    return Vertex(std::move(c));
}

bool admissible_type(const PathType& t) { return std::find(t.begin(), t.end(), 0) != t.end(); }

std::vector<VertexSet> minimum_covers(const WindowNet& net, std::size_t max_size) {
    const auto& vs = net.vertices();
    const std::size_t count = vs.size();
    net::ClassMaps maps(net);
    std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
    std::vector<std::vector<std::size_t>> coverers(count);
    for (std::size_t u = 0; u < count; ++u)
        for (std::size_t v = 0; v < count; ++v) {
            const auto& m = maps.find(vs[u], vs[v]);
            if (m && !m->is_zero()) {
                reach[u][v] = true;
                coverers[v].push_back(u);
            }
        }
    std::set<VertexSet> found;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> search = [&](std::size_t budget) {
        std::size_t target = count;
        for (std::size_t v = 0; v < count; ++v) {
            const bool covered = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return reach[u][v]; });
            if (!covered && (target == count || coverers[v].size() < coverers[target].size())) target = v;
        }
        if (target == count) {
            VertexSet s;
            for (auto u : chosen) s.insert(vs[u]);
            found.insert(s);
            return;
        }
        if (budget == 0) return;
        for (auto u : coverers[target]) {
            chosen.push_back(u);
            search(budget - 1);
            chosen.pop_back();
        }
    };
    for (std::size_t k = 1; k <= max_size && found.empty(); ++k) search(k);
    std::vector<VertexSet> out;
    const std::size_t best = found.empty() ? 0 : std::min_element(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); })->size();
    for (const auto& s : found)
        if (s.size() == best) out.push_back(s);
    return out;
}

std::size_t lp_point_oracle(const WindowNet& net, const zq::ClosedSet& h) {
    const Field& field = net.field();
    const std::uint32_t p = field.characteristic();
    auto lines = [&](std::size_t d) {
        std::vector<Vector> out;
        std::vector<std::uint32_t> digits(d, 0);
        for (;;) {
            auto lead = std::find_if(digits.begin(), digits.end(), [](std::uint32_t x) { return x != 0; });
            if (lead != digits.end() && *lead == 1) {
                Vector v;
                for (auto x : digits) v.push_back(field.from_int(x));
                out.push_back(std::move(v));
            }
            std::size_t k = 0;
            while (k < d && ++digits[k] == p) digits[k++] = 0;
            if (k == d) break;
        }
        return out;
    };
    auto members = h.list();
    net::ClassMaps maps(net);
    std::vector<std::vector<Vector>> choices;
    for (const auto& v : members) choices.push_back(lines(net.dim(v)));
    std::vector<std::size_t> idx(members.size(), 0);
    std::size_t total = 0;
    for (;;) {
        bool ok = true;
        for (std::size_t a = 0; a < members.size() && ok; ++a)
            for (std::size_t b = 0; b < members.size() && ok; ++b) {
                if (a == b) continue;
                Vector image = maps.at(members[a], members[b]).apply(choices[a][idx[a]]);
                Matrix pair = Matrix::from_columns(field, image.size(), std::vector<Vector>{image, choices[b][idx[b]]});
                ok = exactla::rank(pair) <= 1;
            }
        total += ok;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return total;
}

// ---- figures

Vertex planar_node(int i, int j) {
    const int even = j % 2 == 0 ? 1 : 0;
    return Vertex({(2 * i + even + j - 1) / 2, (j - 1 - 2 * i - even) / 2, 0});
}

const std::vector<Figure>& figures() {
    static const std::vector<Figure> all = {
    {"I",
     {{0, 2}, {0, 1}},
     {{{0, 3}, {0, 1}, false},
             {{-1, 4}, {-1, 2}, false},
             {{-1, 3}, {-1, 4}, false},
             {{-1, 2}, {0, 3}, false},
             {{0, 1}, {0, 2}, false},
             {{0, -1}, {0, 0}, false},
             {{0, -3}, {0, -2}, false},
             {{0, 0}, {0, 1}, false},
             {{0, -2}, {0, -1}, false},
             {{0, 0}, {0, -2}, true},
             {{0, 1}, {0, -1}, true},
             {{0, 2}, {0, 0}, true},
             {{0, -1}, {0, -3}, true},
             {{0, 3}, {-1, 4}, true},
             {{0, 2}, {0, 3}, true},
             {{0, 1}, {-1, 2}, true},
             {{-1, 2}, {-1, 3}, true},
             {{0, 2}, {1, 3}, true}}},
    {"II",
     {{0, 0}, {0, 1}},
     {{{0, 2}, {0, 0}, false},
             {{1, 3}, {1, 1}, false},
             {{0, -1}, {0, 0}, false},
             {{0, -3}, {0, -2}, false},
             {{0, 0}, {0, 1}, false},
             {{0, -2}, {0, -1}, false},
             {{0, -4}, {0, -3}, false},
             {{1, 1}, {0, 2}, false},
             {{1, 2}, {1, 3}, false},
             {{0, 0}, {0, -2}, true},
             {{0, -2}, {0, -4}, true},
             {{0, 1}, {0, -1}, true},
             {{0, -1}, {0, -3}, true},
             {{0, 1}, {-1, 2}, true},
             {{0, 0}, {1, 1}, true},
             {{1, 1}, {1, 2}, true},
             {{0, 1}, {0, 2}, true},
             {{0, 2}, {1, 3}, true}}},
    {"III",
     {{0, -1}, {0, 1}},
     {{{0, 2}, {0, 0}, false},
             {{1, 3}, {1, 1}, false},
             {{0, 1}, {0, -1}, false},
             {{-1, 2}, {-1, 0}, false},
             {{-1, 3}, {-1, 1}, false},
             {{-1, 1}, {-1, 2}, false},
             {{-1, 0}, {0, 1}, false},
             {{0, 0}, {0, 1}, false},
             {{1, 1}, {0, 2}, false},
             {{0, -1}, {0, -3}, true},
             {{0, 1}, {-1, 2}, true},
             {{-1, 2}, {-1, 3}, true},
             {{0, -1}, {-1, 0}, true},
             {{-1, 0}, {-1, 1}, true},
             {{0, -1}, {0, 0}, true},
             {{0, 0}, {1, 1}, true},
             {{0, 1}, {0, 2}, true},
             {{0, 2}, {1, 3}, true}}},
    {"IV",
     {{0, 2}, {0, 1}, {0, 3}},
     {{{1, 5}, {1, 3}, false},
             {{-1, 5}, {-1, 3}, false},
             {{0, 4}, {0, 2}, false},
             {{0, 3}, {0, 1}, false},
             {{-1, 4}, {-1, 2}, false},
             {{-1, 3}, {-1, 4}, false},
             {{-1, 2}, {0, 3}, false},
             {{0, 1}, {0, 2}, false},
             {{0, -1}, {0, 0}, false},
             {{0, -3}, {0, -2}, false},
             {{1, 4}, {1, 5}, false},
             {{1, 3}, {0, 4}, false},
             {{0, 2}, {0, 3}, false},
             {{0, 0}, {0, 1}, false},
             {{0, -2}, {0, -1}, false},
             {{0, 0}, {0, -2}, true},
             {{0, 1}, {0, -1}, true},
             {{0, 2}, {0, 0}, true},
             {{0, -1}, {0, -3}, true},
             {{0, 3}, {-1, 4}, true},
             {{-1, 4}, {-1, 5}, true},
             {{0, 1}, {-1, 2}, true},
             {{-1, 2}, {-1, 3}, true},
             {{0, 4}, {1, 5}, true},
             {{0, 3}, {0, 4}, true},
             {{1, 3}, {1, 4}, true},
             {{0, 2}, {1, 3}, true}}},
    {"V",
     {{0, 2}, {0, 4}, {0, 3}},
     {{{1, 6}, {1, 4}, false},
             {{1, 5}, {1, 3}, false},
             {{0, 5}, {0, 3}, false},
             {{0, 4}, {0, 2}, false},
             {{-1, 6}, {-1, 4}, false},
             {{-1, 5}, {-1, 6}, false},
             {{-1, 4}, {0, 5}, false},
             {{0, 1}, {0, 2}, false},
             {{0, -1}, {0, 0}, false},
             {{0, 3}, {0, 4}, false},
             {{1, 4}, {1, 5}, false},
             {{1, 3}, {0, 4}, false},
             {{0, 2}, {0, 3}, false},
             {{0, 0}, {0, 1}, false},
             {{0, -2}, {0, -1}, false},
             {{0, 0}, {0, -2}, true},
             {{0, 1}, {0, -1}, true},
             {{0, 2}, {0, 0}, true},
             {{0, 3}, {0, 1}, true},
             {{0, 3}, {-1, 4}, true},
             {{-1, 4}, {-1, 5}, true},
             {{0, 5}, {-1, 6}, true},
             {{0, 4}, {0, 5}, true},
             {{0, 4}, {1, 5}, true},
             {{0, 2}, {1, 3}, true},
             {{1, 3}, {1, 4}, true},
             {{1, 5}, {1, 6}, true}}}
    };
    return all;
}

}  // namespace lnet::testing

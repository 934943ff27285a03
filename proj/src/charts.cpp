#include <algorithm>
#include <functional>
#include <set>

#include "lnet/error.hpp"
#include "lnet/lp.hpp"

namespace lnet::lp {

using exactla::Exponents;

std::size_t ChartAtlas::variable(std::size_t i, std::size_t l, std::size_t k) const {
    std::size_t offset = 0;
    for (std::size_t b = 0; b < l; ++b) offset += block_sizes[b];
    return i * r + offset + k;
}

bool ChartSystem::contains(std::span<const Scalar> x) const {
    return std::none_of(normalized.begin(), normalized.end(), [&](std::size_t v) { return x[v].is_zero(); });
}

std::vector<Vertex> pad_polygon(const VertexSet& polygon) {
    if (polygon.empty()) fail(ErrorCode::NotAPolygon, "empty polygon");
    std::vector<Vertex> list(polygon.begin(), polygon.end());
    const int n = list.front().n();
    auto oriented = zq::orient_polygon(list, list.front());
    std::vector<zq::TypeSet> sides = oriented.steps;
    if (list.size() == 1) sides = {zq::TypeSet::all(n)};
    std::vector<Vertex> padded;
    for (std::size_t i = 0; i < oriented.vertices.size(); ++i) {
        Vertex v = oriented.vertices[i];
        auto types = sides[i].members();
        padded.push_back(v);
        // Every type but the last one leads to an inserted vertex.
        for (std::size_t k = 0; k + 1 < types.size(); ++k) {
            v = zq::step(v, types[k]);
            padded.push_back(v);
        }
    }
    return padded;
}

namespace {

Polynomial var_or_one(const ChartAtlas& atlas, std::size_t var, const std::set<std::size_t>& ones) {
    const std::size_t total = (static_cast<std::size_t>(atlas.n) + 1) * atlas.r;
    if (ones.count(var)) return Polynomial::constant(atlas.field, total, atlas.field.one());
    return Polynomial::variable(atlas.field, total, var);
}

void check_cycle_pattern(const ChartAtlas& atlas) {
    const std::size_t count = atlas.polygon.size();
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t killed = (i + 1) % count;
        const Matrix& m = atlas.cycle_maps[i];
        for (std::size_t a = 0; a < atlas.r; ++a)
            for (std::size_t b = 0; b < atlas.r; ++b) {
                bool in_killed = atlas.variable(0, killed, 0) <= a && a < atlas.variable(0, killed, 0) + atlas.block_sizes[killed];
                bool expect_one = a == b && !in_killed;
                if (m(a, b) != (expect_one ? atlas.field.one() : atlas.field.zero()))
                    fail(ErrorCode::DecompositionFailed, "cycle map " + std::to_string(i) + " is not in the expected diagonal form");
            }
    }
}

}  // namespace

ChartAtlas charts(const WindowNet& net, const VertexSet& polygon) {
    auto padded = pad_polygon(polygon);
    net::Decomposition d;
    try {
        d = net::decompose_polygon_generated(net, padded, padded.front());
    } catch (const Error& e) {
        fail(ErrorCode::NotPolygonGenerated, e.what());
    }
    ChartAtlas atlas{net.field()};
    atlas.n = net.n();
    atlas.r = d.summands.size();
    atlas.polygon = d.polygon.vertices;
    atlas.block_sizes = d.block_sizes;
    atlas.bases = d.bases;
    atlas.cycle_maps = d.cycle_maps;
    const std::size_t count = atlas.polygon.size();
    if (count != static_cast<std::size_t>(atlas.n) + 1) fail(ErrorCode::NotPolygonGenerated, "padding did not reach n+1 vertices");
    check_cycle_pattern(atlas);

    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t l = 0; l < count; ++l)
            for (std::size_t k = 0; k < atlas.block_sizes[l]; ++k)
                atlas.names.push_back("x" + std::to_string(i) + "_" + std::to_string(l) + "_" + std::to_string(k));

    const std::size_t n = count - 1;
    for (std::size_t rot = 0; rot < count; ++rot) {
        auto actual = [&](std::size_t label) { return (label + rot) % count; };
        auto size = [&](std::size_t label) { return atlas.block_sizes[actual(label)]; };
        auto var = [&](std::size_t i, std::size_t l, std::size_t k) { return atlas.variable(actual(i), actual(l), k); };
        if (size(1 % count) == 0) continue;

        // Choices of p_n, ..., p_1 with p_n in {0,1} and p_s in {s+1, p_{s+1}}.
        std::vector<std::vector<std::size_t>> choices;
        std::vector<std::size_t> p(count + 1, 0);
        p[0] = 1 % count;
        std::function<void(std::size_t)> choose = [&](std::size_t s) {
            if (s == 0) {
                choices.push_back(p);
                return;
            }
            std::set<std::size_t> options = s == n ? std::set<std::size_t>{0, 1 % count} : std::set<std::size_t>{s + 1, p[s + 1]};
            for (auto o : options) {
                p[s] = o;
                choose(s - 1);
            }
        };
        if (n == 0) choices.push_back(p);
        else choose(n);

        for (auto& pc : choices) {
            pc[count] = pc[0];
            std::vector<std::size_t> j(count, 0);
            std::function<void(std::size_t)> pick = [&](std::size_t i) {
                if (i == count) {
                    ChartSystem chart;
                    chart.rotation = rot;
                    chart.p.assign(pc.begin(), pc.begin() + static_cast<std::ptrdiff_t>(count));
                    chart.j = j;
                    std::set<std::size_t> ones;
                    for (std::size_t a = 0; a < count; ++a) {
                        chart.normalized.push_back(var(a, pc[a], j[a]));
                        ones.insert(chart.normalized.back());
                    }
                    for (std::size_t a = 0; a < count; ++a) chart.y.push_back(var(a, pc[a + 1], j[(a + 1) % count]));
                    // With p_1 = 1 the pivot of x_1 lies in the block M_0 kills, so M_0 x_0 = 0 there.
                    chart.first_map_vanishes = pc[1] == 1 % count;
                    Polynomial product = Polynomial::constant(atlas.field, count * atlas.r, atlas.field.one());
                    if (chart.first_map_vanishes)
                        for (std::size_t l = 0; l < count; ++l)
                            if (l != 1 % count)
                                for (std::size_t k = 0; k < size(l); ++k) chart.equations.push_back(var_or_one(atlas, var(0, l, k), ones));
                    for (std::size_t a = chart.first_map_vanishes ? 1 : 0; a < count; ++a) {
                        const std::size_t next = (a + 1) % count;
                        const auto y = var_or_one(atlas, chart.y[a], ones);
                        product = product * y;
                        for (std::size_t l = 0; l < count; ++l) {
                            if (l == next) continue;
                            for (std::size_t k = 0; k < size(l); ++k) {
                                if (l == pc[a + 1] && k == j[next]) continue;
                                chart.equations.push_back(var_or_one(atlas, var(a, l, k), ones) - y * var_or_one(atlas, var(next, l, k), ones));
                            }
                        }
                    }
                    if (!chart.first_map_vanishes) chart.equations.push_back(product);
                    if (chart.equations.size() != n * atlas.r - n)
                        fail(ErrorCode::PreconditionViolation, "chart has " + std::to_string(chart.equations.size()) + " equations");
                    atlas.charts.push_back(std::move(chart));
                    return;
                }
                for (std::size_t k = 0; k < size(pc[i]); ++k) {
                    j[i] = k;
                    pick(i + 1);
                }
            };
            pick(0);
        }
    }
    return atlas;
}

AgreementReport chart_vs_minor_agreement(const ChartAtlas& atlas, const MinorSystem& sys, std::uint64_t budget) {
    const std::size_t count = atlas.polygon.size();
    if (VertexSet(sys.hull.begin(), sys.hull.end()) != VertexSet(atlas.polygon.begin(), atlas.polygon.end()))
        fail(ErrorCode::PreconditionViolation, "minor system hull differs from the chart polygon");
    std::vector<std::size_t> block(count);
    for (std::size_t i = 0; i < count; ++i) block[i] = sys.block_of(atlas.polygon[i]);

    auto factor = projective_points(atlas.field, atlas.r);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < count; ++i) {
        if (total > budget / std::max<std::uint64_t>(factor.size(), 1)) fail(ErrorCode::BudgetExceeded, "chart comparison exceeds the budget");
        total *= factor.size();
    }

    AgreementReport report;
    std::vector<std::size_t> idx(count, 0);
    for (;;) {
        Vector x;
        LPPoint s(count);
        for (std::size_t i = 0; i < count; ++i) {
            const auto& xi = factor[idx[i]];
            x.insert(x.end(), xi.begin(), xi.end());
            s[block[i]] = atlas.bases[i].apply(xi);
        }
        ++report.points;
        const bool on_minors = sys.satisfied_by(s);
        bool covered = false;
        for (const auto& chart : atlas.charts) {
            if (!chart.contains(x)) continue;
            ++report.chart_points;
            Vector affine = x;
            for (auto pivot : chart.normalized) {
                const std::size_t first = pivot - pivot % atlas.r;
                const Scalar scale = x[pivot].inverse();
                for (std::size_t c = 0; c < atlas.r; ++c) affine[first + c] *= scale;
            }
            const bool on_chart = std::all_of(chart.equations.begin(), chart.equations.end(),
                                              [&](const Polynomial& e) { return e.evaluate(affine).is_zero(); });
            if (on_chart != on_minors) {
                ++report.disagreements;
                if (report.witnesses.size() < 10) report.witnesses.push_back("chart disagrees at " + to_string(s));
            }
            covered |= on_minors;
        }
        if (on_minors && !covered) {
            ++report.uncovered;
            if (report.witnesses.size() < 10) report.witnesses.push_back("no chart contains " + to_string(s));
        }
        std::size_t pos = count;
        while (pos > 0 && ++idx[pos - 1] == factor.size()) idx[--pos] = 0;
        if (pos == 0) break;
    }
    report.agree = report.disagreements == 0 && report.uncovered == 0;
    return report;
}

}  // namespace lnet::lp

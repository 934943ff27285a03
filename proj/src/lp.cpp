#include "lnet/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "lnet/error.hpp"

namespace lnet::lp {

using exactla::Exponents;

std::string to_string(const LPPoint& p) {
    std::string out = "(";
    for (std::size_t b = 0; b < p.size(); ++b) {
        if (b) out += ", ";
        out += "[";
        for (std::size_t i = 0; i < p[b].size(); ++i) out += (i ? ":" : "") + p[b][i].to_string();
        out += "]";
    }
    return out + ")";
}

std::size_t MinorSystem::block_of(const Vertex& v) const {
    auto it = std::find(hull.begin(), hull.end(), v);
    if (it == hull.end()) fail(ErrorCode::PreconditionViolation, v.to_string() + " is not in the hull");
    return static_cast<std::size_t>(it - hull.begin());
}

Vector MinorSystem::flatten(const LPPoint& p) const {
    if (p.size() != hull.size()) fail(ErrorCode::DimensionMismatch, "point has the wrong number of blocks");
    Vector flat;
    for (std::size_t b = 0; b < p.size(); ++b) {
        if (p[b].size() != sizes[b]) fail(ErrorCode::DimensionMismatch, "point block has the wrong length");
        flat.insert(flat.end(), p[b].begin(), p[b].end());
    }
    return flat;
}

bool MinorSystem::satisfied_by(const LPPoint& p) const {
    auto flat = flatten(p);
    return std::all_of(equations.begin(), equations.end(), [&](const Polynomial& e) { return e.evaluate(flat).is_zero(); });
}

namespace {

std::string block_name(std::size_t b) {
    if (b < 26) return std::string(1, static_cast<char>('a' + b));
    return "s" + std::to_string(b) + "_";
}

Polynomial linear_form(const MinorSystem& sys, std::size_t block, std::span<const Scalar> coeffs) {
    Polynomial out(sys.field, sys.variables);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(sys.variables, 0);
        e[sys.offsets[block] + i] = 1;
        out.add_term(e, coeffs[i]);
    }
    return out;
}

}  // namespace

MinorSystem lp_equations(const WindowNet& net, const zq::ClosedSet& h) {
    MinorSystem sys{net.field(), h.list(), {}, {}, 0, {}, {}, {}};
    for (std::size_t b = 0; b < sys.hull.size(); ++b) {
        sys.offsets.push_back(sys.variables);
        sys.sizes.push_back(net.dim(sys.hull[b]));
        sys.variables += sys.sizes.back();
        for (std::size_t i = 0; i < sys.sizes.back(); ++i) sys.names.push_back(block_name(b) + std::to_string(i));
    }
    net::ClassMaps maps(net);
    std::set<std::string> seen;
    for (std::size_t bv = 0; bv < sys.hull.size(); ++bv)
        for (std::size_t bw = 0; bw < sys.hull.size(); ++bw) {
            if (bv == bw) continue;
            const Matrix& m = maps.at(sys.hull[bv], sys.hull[bw]);
            if (m.is_zero()) continue;
            // Coordinates of class(v,w) s_v as linear forms in block v, and of s_w in block w.
            std::vector<Polynomial> image;
            std::vector<Polynomial> target;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                image.push_back(linear_form(sys, bv, m.row(i)));
                Vector unit(m.rows(), sys.field.zero());
                unit[i] = sys.field.one();
                target.push_back(linear_form(sys, bw, unit));
            }
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t k = i + 1; k < m.rows(); ++k) {
                    auto minor = image[i] * target[k] - image[k] * target[i];
                    if (minor.is_zero()) continue;
                    auto canonical = minor.monic();
                    if (!seen.insert(canonical.to_string(sys.names)).second) continue;
                    sys.equations.push_back(std::move(minor));
                    sys.blocks.emplace_back(std::min(bv, bw), std::max(bv, bw));
                }
        }
    return sys;
}

std::vector<Vector> projective_points(const Field& field, std::size_t d) {
    if (field.kind() != exactla::FieldKind::PrimeField) fail(ErrorCode::PreconditionViolation, "points are enumerated over prime fields");
    const std::uint32_t q = field.characteristic();
    std::vector<Vector> out;
    // Leading 1 at position lead, zeros before, anything after.
    for (std::size_t lead = 0; lead < d; ++lead) {
        const std::size_t free = d - lead - 1;
        std::vector<std::uint32_t> digits(free, 0);
        for (;;) {
            Vector v(d, field.zero());
            v[lead] = field.one();
            for (std::size_t i = 0; i < free; ++i) v[lead + 1 + i] = field.from_int(digits[i]);
            out.push_back(std::move(v));
            std::size_t pos = free;
            while (pos > 0 && ++digits[pos - 1] == q) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto x = a[i].residue().value(), y = b[i].residue().value();
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

namespace {

std::uint64_t checked_product(const std::vector<std::uint64_t>& counts, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (auto c : counts) {
        if (c != 0 && total > budget / c) fail(ErrorCode::BudgetExceeded, "search space exceeds the budget of " + std::to_string(budget));
        total *= c;
    }
    if (total > budget) fail(ErrorCode::BudgetExceeded, "search space exceeds the budget of " + std::to_string(budget));
    return total;
}

// Calls visit on every tuple of the product of the given point lists, first block slowest.
void for_each_tuple(const std::vector<std::vector<Vector>>& factors, const std::function<void(const LPPoint&)>& visit) {
    if (factors.empty()) return;
    for (const auto& f : factors)
        if (f.empty()) return;
    std::vector<std::size_t> idx(factors.size(), 0);
    LPPoint point(factors.size());
    for (;;) {
        for (std::size_t b = 0; b < factors.size(); ++b) point[b] = factors[b][idx[b]];
        visit(point);
        std::size_t pos = factors.size();
        while (pos > 0 && ++idx[pos - 1] == factors[pos - 1].size()) idx[--pos] = 0;
        if (pos == 0) return;
    }
}

}  // namespace

std::vector<LPPoint> enumerate_points(const MinorSystem& sys, std::uint64_t budget) {
    std::vector<std::vector<Vector>> factors;
    std::vector<std::uint64_t> counts;
    for (auto size : sys.sizes) {
        std::uint64_t q = sys.field.characteristic(), count = 0, power = 1;
        for (std::size_t i = 0; i < size; ++i) count += power, power *= q;
        counts.push_back(count);
    }
    checked_product(counts, budget);
    for (auto size : sys.sizes) factors.push_back(projective_points(sys.field, size));
    std::vector<LPPoint> out;
    for_each_tuple(factors, [&](const LPPoint& p) {
        if (sys.satisfied_by(p)) out.push_back(p);
    });
    return out;
}

VertexSet point_generators(const net::ClassMaps& maps, const MinorSystem& sys, const LPPoint& p) {
    VertexSet out;
    for (std::size_t bv = 0; bv < sys.hull.size(); ++bv) {
        bool reached = false;
        for (std::size_t bu = 0; bu < sys.hull.size() && !reached; ++bu)
            if (bu != bv) reached = !exactla::is_zero_vector(maps.at(sys.hull[bu], sys.hull[bv]).apply(p[bu]));
        if (!reached) out.insert(sys.hull[bv]);
    }
    return out;
}

std::map<VertexSet, std::vector<LPPoint>> stratify(const WindowNet& net, const MinorSystem& sys, const std::vector<LPPoint>& points) {
    net::ClassMaps maps(net);
    std::map<VertexSet, std::vector<LPPoint>> strata;
    for (const auto& p : points) {
        auto key = point_generators(maps, sys, p);
        std::vector<Vertex> list(key.begin(), key.end());
        if (list.empty() || !zq::is_polygon(list)) fail(ErrorCode::StratumNotPolygon, "stratum of " + to_string(p));
        strata[key].push_back(p);
    }
    return strata;
}

std::size_t stratum_param_count(const WindowNet& net, const Vertex& v, const zq::ClosedSet& h) {
    net::ClassMaps maps(net);
    std::size_t count = 0;
    for (const auto& s : projective_points(net.field(), net.dim(v))) {
        bool open = true;
        for (const auto& u : h.members())
            if (exactla::is_zero_vector(maps.at(v, u).apply(s))) open = false;
        if (open) ++count;
    }
    return count;
}

LPPoint psi(const WindowNet& net, const MinorSystem& from, const MinorSystem& to, const LPPoint& p) {
    auto h1 = zq::ClosedSet::of(VertexSet(from.hull.begin(), from.hull.end()));
    net::ClassMaps maps(net);
    LPPoint out;
    for (const auto& v : to.hull) {
        auto w = zq::shadow(v, h1);
        auto t = maps.at(w, v).apply(p[from.block_of(w)]);
        if (exactla::is_zero_vector(t)) fail(ErrorCode::ZeroImage, "line at " + w.to_string() + " dies at " + v.to_string());
        out.push_back(exactla::projective_normal_form(t));
    }
    return out;
}

std::size_t jacobian_rank(std::span<const Polynomial> equations, std::span<const Scalar> point) {
    if (equations.empty()) return 0;
    const Field& field = equations.front().field();
    for (const auto& e : equations)
        if (!e.evaluate(point).is_zero()) fail(ErrorCode::PointNotOnVariety, "equation does not vanish at the point");
    Matrix jac(field, equations.size(), point.size());
    for (std::size_t r = 0; r < equations.size(); ++r)
        for (std::size_t c = 0; c < point.size(); ++c) jac(r, c) = equations[r].derivative(c).evaluate(point);
    return exactla::rank(jac);
}

std::size_t jacobian_rank(const MinorSystem& sys, const LPPoint& p) { return jacobian_rank(sys.equations, sys.flatten(p)); }

std::size_t expected_codimension(const MinorSystem& sys) {
    std::size_t ambient = 0;
    for (auto s : sys.sizes) ambient += s - 1;
    const std::size_t r = sys.sizes.empty() ? 1 : sys.sizes.front();
    return ambient - (r - 1);
}

// ---- Hilbert functions

namespace {

// Exponent vectors of length len summing to total, in lexicographic order.
void compositions(std::size_t len, int total, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (current.size() + 1 == len) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        current.push_back(k);
        compositions(len, total - k, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> compositions(std::size_t len, int total) {
    std::vector<std::vector<int>> out;
    if (len == 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    std::vector<int> current;
    compositions(len, total, current, out);
    return out;
}

// Monomials of the given multidegree, as full exponent vectors.
std::vector<Exponents> monomials(const MinorSystem& sys, const std::vector<int>& degree) {
    std::vector<Exponents> out{Exponents(sys.variables, 0)};
    for (std::size_t b = 0; b < sys.sizes.size(); ++b) {
        std::vector<Exponents> next;
        for (const auto& part : compositions(sys.sizes[b], degree[b]))
            for (auto e : out) {
                for (std::size_t i = 0; i < part.size(); ++i) e[sys.offsets[b] + i] = part[i];
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> multidegree(const MinorSystem& sys, const Exponents& e) {
    std::vector<int> d(sys.sizes.size(), 0);
    for (std::size_t b = 0; b < sys.sizes.size(); ++b)
        for (std::size_t i = 0; i < sys.sizes[b]; ++i) d[b] += e[sys.offsets[b] + i];
    return d;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

HilbertTable hilbert_table(const MinorSystem& sys, int bound, std::uint64_t budget) {
    const std::size_t k = sys.hull.size();
    std::vector<std::vector<int>> degrees;
    for (int total = 0; total <= bound; ++total)
        for (auto& d : compositions(k, total)) degrees.push_back(std::move(d));

    HilbertTable table;
    for (const auto& d : degrees) {
        auto basis = monomials(sys, d);
        std::map<Exponents, std::size_t> column;
        for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
        std::vector<std::vector<Scalar>> rows;
        for (const auto& g : sys.equations) {
            auto gd = multidegree(sys, g.terms().begin()->first);
            std::vector<int> rest(k);
            bool fits = true;
            for (std::size_t b = 0; b < k; ++b) fits &= (rest[b] = d[b] - gd[b]) >= 0;
            if (!fits) continue;
            for (const auto& m : monomials(sys, rest)) {
                std::vector<Scalar> row(basis.size(), sys.field.zero());
                for (const auto& [e, c] : g.terms()) {
                    Exponents prod = e;
                    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += m[i];
                    row[column.at(prod)] = c;
                }
                rows.push_back(std::move(row));
                if (rows.size() * basis.size() > budget) fail(ErrorCode::BudgetExceeded, "Hilbert matrix exceeds the budget");
            }
        }
        std::size_t rank = rows.empty() ? 0 : exactla::rank(Matrix::from_rows(sys.field, rows, basis.size()));
        table.push_back({d, basis.size() - rank});
    }
    return table;
}

std::size_t diagonal_hilbert(const std::vector<int>& degree, std::size_t r) {
    std::size_t total = 0;
    for (int d : degree) total += static_cast<std::size_t>(d);
    return binomial(total + r - 1, r - 1);
}

std::string hilbert_csv(const HilbertTable& table) {
    std::ostringstream out;
    const std::size_t k = table.empty() ? 0 : table.front().degree.size();
    for (std::size_t b = 0; b < k; ++b) out << "d" << b << ",";
    out << "dimension\n";
    for (const auto& e : table) {
        for (int d : e.degree) out << d << ",";
        out << e.dimension << "\n";
    }
    return out.str();
}

}  // namespace lnet::lp

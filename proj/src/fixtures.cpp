#include "lnet/fixtures.hpp"

#include "lnet/error.hpp"

namespace lnet::fixtures {

using zq::Vertex;

net::NetPresentation exact_sum_presentation(net::Field field, int n, std::span<const Vertex> generators) {
    if (generators.empty()) fail(ErrorCode::PreconditionViolation, "no generators");
    auto hull = zq::ClosedSet::hull_of(generators);
    const std::size_t r = generators.size();
    net::NetPresentation p{field, n, hull, {}, {}};
    for (const auto& v : hull.members()) p.dims[v] = r;
    for (const auto& u : hull.members())
        for (const auto& v : hull.members()) {
            if (u == v) continue;
            net::Matrix m(field, r, r);
            for (std::size_t j = 0; j < r; ++j)
                if (zq::admissible_through(generators[j], u, v)) m(j, j) = field.one();
            p.cross_maps.emplace(std::make_pair(u, v), std::move(m));
        }
    return p;
}

std::vector<Vertex> seg2_hull() { return {Vertex({0, 0}), Vertex({1, 0})}; }

net::NetPresentation seg2_presentation(net::Field field) {
    auto g = seg2_hull();
    return exact_sum_presentation(field, 1, g);
}

net::WindowNet seg2(net::Field field, int radius) { return net::expand(seg2_presentation(field), radius); }

std::vector<Vertex> tri3_hull() { return {Vertex({0, 0, 0}), Vertex({1, 0, 0}), Vertex({1, 1, 0})}; }

net::NetPresentation tri3_presentation(net::Field field) {
    auto g = tri3_hull();
    return exact_sum_presentation(field, 2, g);
}

net::WindowNet tri3(net::Field field, int radius) { return net::expand(tri3_presentation(field), radius); }

}  // namespace lnet::fixtures

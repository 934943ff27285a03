#include "lnet/error.hpp"
#include "lnet/net.hpp"

namespace lnet::net {

NetPresentation presentation_of(const WindowNet& net, const zq::ClosedSet& h) {
    NetPresentation p{net.field(), net.n(), h, {}, {}};
    ClassMaps maps(net);
    for (const auto& u : h.members()) {
        if (!net.contains(u)) fail(ErrorCode::PathLeavesWindow, "hull vertex " + u.to_string() + " is outside the window");
        p.dims[u] = net.dim(u);
    }
    for (const auto& u : h.members())
        for (const auto& v : h.members())
            if (u != v) p.cross_maps.emplace(std::make_pair(u, v), maps.at(u, v));
    return p;
}

WindowNet expand(const NetPresentation& p, const VertexSet& window) {
    std::map<Vertex, Vertex> shadows;
    std::map<Vertex, std::size_t> dims;
    for (const auto& v : window) {
        Vertex w = zq::shadow(v, p.hull);
        dims[v] = p.dims.at(w);
        shadows.emplace(v, std::move(w));
    }
    std::map<ArrowKey, Matrix> arrows;
    for (const auto& v : window)
        for (ArrowType a = 0; a <= p.n; ++a) {
            Vertex target = zq::step(v, a);
            if (!window.count(target)) continue;
            const Vertex& w1 = shadows.at(v);
            const Vertex& w2 = shadows.at(target);
            Matrix m(p.field, dims.at(target), dims.at(v));
            if (zq::admissible_through(w1, v, target)) {
                if (w1 == w2) {
                    m = Matrix::identity(p.field, dims.at(v));
                } else {
                    auto it = p.cross_maps.find({w1, w2});
                    if (it == p.cross_maps.end())
                        fail(ErrorCode::PreconditionViolation, "missing cross map " + w1.to_string() + " -> " + w2.to_string());
                    m = it->second;
                }
            }
            arrows.emplace(ArrowKey{v, a}, std::move(m));
        }
    return WindowNet(p.field, p.n, dims, std::move(arrows));
}

WindowNet expand(const NetPresentation& p, int radius) {
    return expand(p, zq::window(p.hull.list(), radius));
}

WindowNet shadow_net(const WindowNet& net, const zq::ClosedSet& h) {
    return expand(presentation_of(net, h), net.vertex_set());
}

CheckReport check_shadow_net(const WindowNet& net, const zq::ClosedSet& h) {
    CheckReport r{"shadow net", true, net.n() + 1, 0, 0, {}};
    const WindowNet shadow = shadow_net(net, h);
    auto absorb = [&](const CheckReport& c, const std::string& what) {
        ++r.checked;
        r.skipped += c.skipped;
        if (!c.passed) r.violation(what + ": " + (c.violations.empty() ? c.property : c.violations.front()));
    };
    absorb(check_weakly_linked(shadow), "not weakly linked");
    absorb(check_generated_by(shadow, h.members()), "not generated by H");
    if (check_pure(net).passed) absorb(check_pure(shadow), "purity lost");
    if (check_exact(net).passed) absorb(check_exact(shadow), "exactness lost");
    bool bridges_inside = true;
    const auto window = net.vertex_set();
    for (const auto& u : h.members())
        for (const auto& v : h.members())
            if (u < v)
                for (const auto& b : zq::bridges(u, v, window)) bridges_inside &= h.contains(b);
    if (bridges_inside && check_linked(net).passed) absorb(check_linked(shadow), "linkedness lost");
    return r;
}

}  // namespace lnet::net

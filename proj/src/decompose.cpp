#include "lnet/error.hpp"
#include "lnet/net.hpp"

namespace lnet::net {

Decomposition decompose_polygon_generated(const WindowNet& net, std::span<const Vertex> polygon, const Vertex& start) {
    Decomposition d;
    d.polygon = zq::orient_polygon(polygon, start);
    const auto& vs = d.polygon.vertices;
    const std::size_t m = vs.size();
    const std::size_t r = net.dim(vs.front());
    for (const auto& v : vs)
        if (net.dim(v) != r) fail(ErrorCode::DecompositionFailed, "polygon vertices carry different dimensions");

    ClassMaps maps(net);
    std::vector<Matrix> segments;
    for (std::size_t i = 0; i < m; ++i) segments.push_back(segment_map(net, vs[i], d.polygon.steps[i]));

    // Seeds at each vertex: a complement of everything arriving from the other polygon vertices.
    std::vector<std::size_t> owner;
    for (std::size_t l = 0; l < m; ++l) {
        Subspace incoming = Subspace::zero(net.field(), r);
        for (std::size_t k = 0; k < m; ++k)
            if (k != l) incoming = incoming + exactla::image_space(maps.at(vs[k], vs[l]));
        auto seeds = exactla::standard_complement(incoming);
        d.block_sizes.push_back(seeds.size());
        for (auto& s : seeds) {
            d.summands.push_back({vs[l], std::move(s)});
            owner.push_back(l);
        }
    }
    if (d.summands.size() != r) fail(ErrorCode::DecompositionFailed, "seed count differs from the dimension");

    // Push every seed around the cycle; the last segment back to its generator must kill it.
    std::vector<std::vector<Vector>> columns(m, std::vector<Vector>(r));
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t at = owner[j];
        Vector v = d.summands[j].seed;
        columns[at][j] = v;
        for (std::size_t step = 1; step < m; ++step) {
            v = segments[at].apply(v);
            at = (at + 1) % m;
            if (exactla::is_zero_vector(v)) fail(ErrorCode::DecompositionFailed, "seed dies before closing the cycle");
            columns[at][j] = v;
        }
        if (!exactla::is_zero_vector(segments[at].apply(v)))
            fail(ErrorCode::DecompositionFailed, "seed survives the full cycle");
    }
    for (std::size_t i = 0; i < m; ++i) {
        Matrix b = Matrix::from_columns(net.field(), r, columns[i]);
        if (exactla::rank(b) != r) fail(ErrorCode::DecompositionFailed, "images of the seeds are dependent at " + vs[i].to_string());
        d.bases.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < m; ++i)
        d.cycle_maps.push_back(exactla::inverse(d.bases[(i + 1) % m]) * segments[i] * d.bases[i]);
    return d;
}

Matrix propagated_basis(const WindowNet& net, const ClassMaps& maps, const Decomposition& d, const Vertex& x) {
    std::vector<Vector> cols;
    for (const auto& s : d.summands) cols.push_back(maps.at(s.generator, x).apply(s.seed));
    return Matrix::from_columns(net.field(), net.dim(x), cols);
}

}  // namespace lnet::net

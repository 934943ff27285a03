#pragma once

#include <span>

#include "lnet/net.hpp"

namespace lnet::fixtures {

// Direct sum of the simple exact nets generated at each listed vertex (repeats allowed),
// in the standard basis, presented over the hull of the generators.
net::NetPresentation exact_sum_presentation(net::Field field, int n, std::span<const zq::Vertex> generators);

// n = 1, u = (0,0), v = (1,0), dimension 2: one simple exact summand generated at each vertex.
net::NetPresentation seg2_presentation(net::Field field);
net::WindowNet seg2(net::Field field, int radius = 3);
std::vector<zq::Vertex> seg2_hull();

// n = 2, triangle (0,0,0), (1,0,0), (1,1,0), dimension 3: one summand per triangle vertex.
net::NetPresentation tri3_presentation(net::Field field);
net::WindowNet tri3(net::Field field, int radius = 3);
std::vector<zq::Vertex> tri3_hull();

}  // namespace lnet::fixtures

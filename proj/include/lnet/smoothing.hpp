#pragma once

#include <optional>
#include <vector>

#include "lnet/lp.hpp"
#include "lnet/net.hpp"

namespace lnet::smoothing {

using net::CheckReport;
using net::WindowNet;
using zq::Vertex;
using zq::VertexSet;

// Every arrow is invertible and all same-endpoint paths of length <= n+1 are proportional.
CheckReport check_general_linked(const WindowNet& net);

// Entrywise t = 0 of a net over Q(t).
WindowNet specialize(const WindowNet& net);

// Every minimal circuit inside the window composes to a matrix divisible by t.
CheckReport check_circuits_divisible_by_t(const WindowNet& net);

struct SmoothingReport {
    bool generic_ok = false;
    bool special_matches = false;
    bool circuits_vanish = false;
    std::vector<std::string> failures;

    bool ok() const { return generic_ok && special_matches && circuits_vanish; }
};

struct Smoothing {
    WindowNet generic;  // over Q(t)
    net::Decomposition decomposition;
    SmoothingReport report;
};

// In the basis propagated from the summand seeds, zero arrows become t and nonzero ones keep their
// scalar; the result is conjugated back to the original basis so that t = 0 returns the input.
Smoothing construct_monomial_smoothing(const WindowNet& net, const VertexSet& polygon);

struct DegenerationRow {
    std::vector<int> degree;
    std::size_t special = 0;
    std::size_t generic = 0;
    std::size_t diagonal = 0;

    bool equal() const { return special == generic && generic == diagonal; }
};

// Hilbert functions of LP_H of the special net, of the generic net, and of the small diagonal.
std::vector<DegenerationRow> degeneration_evidence(const WindowNet& special, const WindowNet& generic, const zq::ClosedSet& h, int bound);

}  // namespace lnet::smoothing

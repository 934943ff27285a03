#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lnet/net.hpp"

namespace lnet::cli {

using net::NetPresentation;
using net::WindowNet;
using zq::Vertex;
using zq::VertexSet;

inline constexpr int format_version = 1;

enum class Mode { Hull, Window };

// Auxiliary fixture annotations: filled vertices and the expected type label.
struct Colors {
    VertexSet orange;
    std::string type;
};

// A net on disk: hull data to be spread over a window, or an explicit window.
class NetDocument {
public:
    explicit NetDocument(NetPresentation presentation, std::optional<Colors> colors = {});
    explicit NetDocument(WindowNet window, std::optional<Colors> colors = {});

    Mode mode() const noexcept { return presentation_ ? Mode::Hull : Mode::Window; }
    const exactla::Field& field() const;
    int n() const;
    int default_radius() const { return n() + 2; }
    const std::optional<NetPresentation>& presentation() const noexcept { return presentation_; }
    const std::optional<WindowNet>& window() const noexcept { return window_; }
    const std::optional<Colors>& colors() const noexcept { return colors_; }

    // The net over the window of the given radius around the hull; explicit windows are returned as stored.
    WindowNet realize(int radius) const;

private:
    std::optional<NetPresentation> presentation_;
    std::optional<WindowNet> window_;
    std::optional<Colors> colors_;
};

// Any malformed or inconsistent content raises ParseError.
NetDocument parse_document(std::string_view text);
NetDocument load_document(const std::string& path);

// Canonical form: sorted vertices, sorted maps, scalars as strings, fixed key order.
std::string serialize(const NetDocument& doc);

}  // namespace lnet::cli

#include "lnet/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lnet/error.hpp"

namespace lnet::cli {

using exactla::Field;
using exactla::FieldKind;
using exactla::Matrix;
using exactla::Scalar;
using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

NetDocument::NetDocument(NetPresentation presentation, std::optional<Colors> colors)
    : presentation_(std::move(presentation)), colors_(std::move(colors)) {}

NetDocument::NetDocument(WindowNet window, std::optional<Colors> colors) : window_(std::move(window)), colors_(std::move(colors)) {}

const Field& NetDocument::field() const { return presentation_ ? presentation_->field : window_->field(); }

int NetDocument::n() const { return presentation_ ? presentation_->n : window_->n(); }

WindowNet NetDocument::realize(int radius) const {
    if (window_) return *window_;
    return net::expand(*presentation_, radius);
}

// ---- parsing

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& member(const Json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing key '") + key + "'");
    return obj.at(key);
}

void only_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known |= key == a;
        if (!known) bad("unknown key '" + key + "' in " + where);
    }
}

long long integer(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) bad(what + " must be an integer");
    return j.get<long long>();
}

std::size_t count(const Json& j, const std::string& what) {
    long long v = integer(j, what);
    if (v < 0 || v > 1'000'000) bad(what + " out of range");
    return static_cast<std::size_t>(v);
}

Field parse_field(const Json& j) {
    if (!j.is_object()) bad("field must be an object");
    only_keys(j, {"kind", "p"}, "field");
    const Json& kind = member(j, "kind");
    if (!kind.is_string()) bad("field kind must be a string");
    const auto name = kind.get<std::string>();
    if (name == "rationals") return Field::rationals();
    if (name == "rational_functions") return Field::rational_functions();
    if (name == "prime") {
        long long p = integer(member(j, "p"), "field p");
        if (p < 2 || p > 65521 || !exactla::is_prime(static_cast<std::uint64_t>(p))) bad("field p must be a prime below 65536");
        return Field::prime(static_cast<std::uint32_t>(p));
    }
    bad("unknown field kind '" + name + "'");
}

Vertex parse_vertex(const Json& j, int n) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(n) + 1) bad("vertex must be an array of n+1 integers");
    std::vector<int> coords;
    for (const auto& c : j) {
        long long v = integer(c, "vertex coordinate");
        if (v < -100000 || v > 100000) bad("vertex coordinate out of range");
        coords.push_back(static_cast<int>(v));
    }
    return Vertex(std::move(coords));
}

Scalar parse_scalar(const Json& j, const Field& field) {
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
    if (j.is_string()) return field.parse(j.get<std::string>());
    bad("matrix entries must be strings or integers");
}

Matrix parse_matrix(const Json& j, const Field& field, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) bad("matrix must have " + std::to_string(rows) + " rows");
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols) bad("matrix row must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(row[c], field);
    }
    return m;
}

std::map<Vertex, std::size_t> parse_dims(const Json& block, int n, const std::string& where) {
    const Json& vertices = member(block, "vertices");
    const Json& dims = member(block, "dims");
    if (!vertices.is_array() || !dims.is_array() || vertices.size() != dims.size())
        bad(where + " vertices and dims must be arrays of equal length");
    std::map<Vertex, std::size_t> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!out.emplace(parse_vertex(vertices[i], n), count(dims[i], "dimension")).second) bad("repeated vertex in " + where);
    if (out.empty()) bad(where + " has no vertices");
    return out;
}

NetPresentation parse_hull(const Json& block, const Field& field, int n) {
    only_keys(block, {"vertices", "dims", "cross_maps"}, "hull");
    auto dims = parse_dims(block, n, "hull");
    VertexSet members;
    for (const auto& [v, d] : dims) members.insert(v);
    NetPresentation p{field, n, zq::ClosedSet::of(members), dims, {}};
    const Json& maps = member(block, "cross_maps");
    if (!maps.is_array()) bad("cross_maps must be an array");
    for (const auto& entry : maps) {
        only_keys(entry, {"from", "to", "matrix"}, "cross map");
        Vertex from = parse_vertex(member(entry, "from"), n);
        Vertex to = parse_vertex(member(entry, "to"), n);
        if (from == to || !dims.count(from) || !dims.count(to)) bad("cross map between " + from.to_string() + " and " + to.to_string() + " is not a pair of hull vertices");
        auto m = parse_matrix(member(entry, "matrix"), field, dims.at(to), dims.at(from));
        if (!p.cross_maps.emplace(std::make_pair(from, to), std::move(m)).second) bad("repeated cross map");
    }
    if (p.cross_maps.size() != dims.size() * (dims.size() - 1)) bad("cross_maps must list every ordered pair of hull vertices");
    return p;
}

WindowNet parse_window(const Json& block, const Field& field, int n) {
    only_keys(block, {"vertices", "dims", "arrows"}, "window");
    auto dims = parse_dims(block, n, "window");
    const Json& arrows = member(block, "arrows");
    if (!arrows.is_array()) bad("arrows must be an array");
    std::map<net::ArrowKey, Matrix> maps;
    for (const auto& entry : arrows) {
        only_keys(entry, {"source", "type", "matrix"}, "arrow");
        Vertex source = parse_vertex(member(entry, "source"), n);
        long long type = integer(member(entry, "type"), "arrow type");
        if (type < 0 || type > n) bad("arrow type out of range");
        const auto a = static_cast<zq::ArrowType>(type);
        Vertex target = zq::step(source, a);
        if (!dims.count(source) || !dims.count(target)) bad("arrow " + source.to_string() + "+" + std::to_string(a) + " leaves the window");
        auto m = parse_matrix(member(entry, "matrix"), field, dims.at(target), dims.at(source));
        if (!maps.emplace(net::ArrowKey{source, a}, std::move(m)).second) bad("repeated arrow");
    }
    return WindowNet(field, n, dims, std::move(maps));
}

Colors parse_colors(const Json& block, int n) {
    only_keys(block, {"orange", "type"}, "colors");
    Colors c;
    if (block.contains("orange")) {
        const Json& orange = block.at("orange");
        if (!orange.is_array()) bad("orange must be an array of vertices");
        for (const auto& v : orange) c.orange.insert(parse_vertex(v, n));
    }
    if (block.contains("type")) {
        if (!block.at("type").is_string()) bad("colors type must be a string");
        c.type = block.at("type").get<std::string>();
    }
    return c;
}

NetDocument parse_root(const Json& root) {
    if (!root.is_object()) bad("document must be a JSON object");
    only_keys(root, {"format_version", "field", "n", "mode", "hull", "window", "colors"}, "document");
    if (integer(member(root, "format_version"), "format_version") != format_version)
        bad("unsupported format_version");
    Field field = parse_field(member(root, "field"));
    long long n = integer(member(root, "n"), "n");
    if (n < 1 || n > 8) bad("n must lie in 1..8");
    const Json& mode = member(root, "mode");
    if (!mode.is_string()) bad("mode must be a string");
    std::optional<Colors> colors;
    if (root.contains("colors")) colors = parse_colors(root.at("colors"), static_cast<int>(n));
    const auto m = mode.get<std::string>();
    if (m == "hull") {
        if (root.contains("window")) bad("hull documents carry no window block");
        return NetDocument(parse_hull(member(root, "hull"), field, static_cast<int>(n)), std::move(colors));
    }
    if (m == "window") {
        if (root.contains("hull")) bad("window documents carry no hull block");
        return NetDocument(parse_window(member(root, "window"), field, static_cast<int>(n)), std::move(colors));
    }
    bad("mode must be \"hull\" or \"window\"");
}

}  // namespace

NetDocument parse_document(std::string_view text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_root(root);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        bad(e.what());
    } catch (const Json::exception& e) {
        bad(e.what());
    }
}

NetDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document(text.str());
}

// ---- serialization

namespace {

OrderedJson vertex_json(const Vertex& v) { return OrderedJson(v.coords()); }

OrderedJson matrix_json(const Matrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson field_json(const Field& f) {
    OrderedJson j;
    switch (f.kind()) {
    case FieldKind::Rationals: j["kind"] = "rationals"; break;
    case FieldKind::PrimeField:
        j["kind"] = "prime";
        j["p"] = f.characteristic();
        break;
    case FieldKind::RationalFunctions: j["kind"] = "rational_functions"; break;
    }
    return j;
}

bool is_flat(const OrderedJson& j) {
    return std::none_of(j.begin(), j.end(), [](const OrderedJson& e) { return e.is_structured(); });
}

// Two-space indentation with arrays of scalars kept on one line.
void render(const OrderedJson& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string inner(static_cast<std::size_t>(indent) + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) out += ",\n";
            first = false;
            out += inner + OrderedJson(key).dump() + ": ";
            render(value, indent + 2, out);
        }
        out += "\n" + pad + "}";
    } else if (j.is_array()) {
        if (j.empty() || is_flat(j)) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ",\n";
            out += inner;
            render(j[i], indent + 2, out);
        }
        out += "\n" + pad + "]";
    } else {
        out += j.dump();
    }
}

OrderedJson dims_block(const std::map<Vertex, std::size_t>& dims, OrderedJson& block) {
    OrderedJson vertices = OrderedJson::array();
    OrderedJson sizes = OrderedJson::array();
    for (const auto& [v, d] : dims) {
        vertices.push_back(vertex_json(v));
        sizes.push_back(d);
    }
    block["vertices"] = std::move(vertices);
    block["dims"] = std::move(sizes);
    return block;
}

}  // namespace

std::string serialize(const NetDocument& doc) {
    OrderedJson root;
    root["format_version"] = format_version;
    root["field"] = field_json(doc.field());
    root["n"] = doc.n();
    if (const auto& p = doc.presentation()) {
        root["mode"] = "hull";
        OrderedJson block;
        dims_block(p->dims, block);
        OrderedJson maps = OrderedJson::array();
        for (const auto& [pair, m] : p->cross_maps) {
            OrderedJson entry;
            entry["from"] = vertex_json(pair.first);
            entry["to"] = vertex_json(pair.second);
            entry["matrix"] = matrix_json(m);
            maps.push_back(std::move(entry));
        }
        block["cross_maps"] = std::move(maps);
        root["hull"] = std::move(block);
    } else {
        const auto& w = *doc.window();
        root["mode"] = "window";
        OrderedJson block;
        std::map<Vertex, std::size_t> dims;
        for (const auto& v : w.vertices()) dims[v] = w.dim(v);
        dims_block(dims, block);
        OrderedJson arrows = OrderedJson::array();
        for (const auto& v : w.vertices())
            for (zq::ArrowType a = 0; a <= w.n(); ++a) {
                if (!w.has_arrow(v, a)) continue;
                OrderedJson entry;
                entry["source"] = vertex_json(v);
                entry["type"] = a;
                entry["matrix"] = matrix_json(w.arrow(v, a));
                arrows.push_back(std::move(entry));
            }
        block["arrows"] = std::move(arrows);
        root["window"] = std::move(block);
    }
    if (const auto& c = doc.colors()) {
        OrderedJson colors;
        OrderedJson orange = OrderedJson::array();
        for (const auto& v : c->orange) orange.push_back(vertex_json(v));
        colors["orange"] = std::move(orange);
        colors["type"] = c->type;
        root["colors"] = std::move(colors);
    }
    std::string out;
    render(root, 0, out);
    return out + "\n";
}

}  // namespace lnet::cli

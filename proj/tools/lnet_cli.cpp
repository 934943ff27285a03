#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lnet/document.hpp"
#include "lnet/error.hpp"
#include "lnet/lp.hpp"
#include "lnet/simple.hpp"
#include "lnet/smoothing.hpp"

namespace {

using namespace lnet;
using Json = nlohmann::ordered_json;
using net::WindowNet;
using zq::Vertex;
using zq::VertexSet;

enum Exit { Ok = 0, ChecksFailed = 1, BadInput = 2, OverBudget = 3 };

struct Options {
    std::string file;
    std::optional<int> radius;
    bool json = false;
    std::uint64_t budget = lp::default_budget;
    std::vector<std::string> checks{"weakly-linked", "linked", "exact", "pure", "locally-finite"};
    std::vector<std::string> vertices;
    std::string vertex;
    std::string out;
    std::uint32_t q = 0;
    int bound = 2;
    bool csv = false;
};

// A loaded document realized over its window, plus the header every command prints.
struct Loaded {
    cli::NetDocument doc;
    WindowNet net;
    std::optional<int> radius;
    Json header;
};

Loaded load(const std::string& command, const Options& opt) {
    auto doc = cli::load_document(opt.file);
    std::optional<int> radius;
    if (doc.mode() == cli::Mode::Hull) {
        radius = opt.radius.value_or(doc.default_radius());
        if (*radius < 0) fail(ErrorCode::PreconditionViolation, "radius must be nonnegative");
    }
    WindowNet net = doc.realize(radius.value_or(0));
    Json header;
    header["command"] = command;
    header["file"] = std::filesystem::path(opt.file).filename().string();
    header["field"] = doc.field().name();
    header["n"] = doc.n();
    Json window;
    window["radius"] = radius ? Json(*radius) : Json(nullptr);
    window["vertices"] = net.vertices().size();
    header["window"] = std::move(window);
    return {std::move(doc), std::move(net), radius, std::move(header)};
}

std::string header_text(const Json& h) {
    std::ostringstream out;
    out << "# lnet " << h["command"].get<std::string>() << "\n";
    out << "# file: " << h["file"].get<std::string>() << "\n";
    out << "# field: " << h["field"].get<std::string>() << "\n";
    out << "# n: " << h["n"].get<int>() << "\n";
    const auto& w = h["window"];
    if (w["radius"].is_null()) out << "# window: explicit, " << w["vertices"].get<std::size_t>() << " vertices\n";
    else out << "# window: radius " << w["radius"].get<int>() << ", " << w["vertices"].get<std::size_t>() << " vertices\n";
    return out.str();
}

Json vertex_json(const Vertex& v) { return Json(v.coords()); }

Json vertices_json(const VertexSet& s) {
    Json out = Json::array();
    for (const auto& v : s) out.push_back(vertex_json(v));
    return out;
}

std::string vertices_text(const VertexSet& s) {
    std::string out;
    for (const auto& v : s) out += (out.empty() ? "" : " ") + v.to_string();
    return out;
}

Vertex parse_vertex(const std::string& text, int n) {
    std::vector<int> coords;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            coords.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            fail(ErrorCode::ParseError, "bad vertex '" + text + "'");
        }
    }
    if (coords.size() != static_cast<std::size_t>(n) + 1) fail(ErrorCode::ParseError, "vertex '" + text + "' needs n+1 coordinates");
    return Vertex(std::move(coords));
}

// H used by hull-based commands: the document's hull, or the hull of the minimal generators.
zq::ClosedSet working_hull(const Loaded& in) {
    if (const auto& p = in.doc.presentation()) return p->hull;
    auto gens = net::minimal_one_generators(in.net);
    std::vector<Vertex> list(gens.begin(), gens.end());
    return zq::ClosedSet::hull_of(list);
}

int emit(const Options& opt, const Json& result, const std::string& text, int code) {
    if (opt.json) std::cout << result.dump(2) << "\n";
    else std::cout << header_text(result) << text;
    return code;
}

Json merged(const Loaded& in, Json body) {
    Json out = in.header;
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
}

// ---- commands

Json report_json(const net::CheckReport& r) {
    Json j;
    j["property"] = r.property;
    j["passed"] = r.passed;
    j["path_bound"] = r.path_bound;
    j["checked"] = r.checked;
    j["skipped"] = r.skipped;
    j["violations"] = r.violations;
    return j;
}

std::string report_text(const net::CheckReport& r) {
    std::ostringstream out;
    out << r.property << ": " << (r.passed ? "pass" : "FAIL") << " (path bound " << r.path_bound << ", " << r.checked << " checked, "
        << r.skipped << " skipped)\n";
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) out << "  witness: " << r.violations[i] << "\n";
    if (r.violations.size() > 5) out << "  ... " << r.violations.size() - 5 << " more\n";
    return out.str();
}

// Longest admissible path between two window vertices.
int window_span(const WindowNet& net) {
    int best = 0;
    for (const auto& u : net.vertices())
        for (const auto& v : net.vertices()) best = std::max(best, zq::admissible_length(u, v));
    return best;
}

int cmd_validate(const Options& opt) {
    auto in = load("validate", opt);
    std::vector<net::CheckReport> reports;
    for (const auto& c : opt.checks) {
        if (c == "weakly-linked") reports.push_back(net::check_weakly_linked(in.net));
        else if (c == "linked") reports.push_back(net::check_linked(in.net));
        else if (c == "exact") reports.push_back(net::check_exact(in.net));
        else if (c == "pure") reports.push_back(net::check_pure(in.net));
        else if (c == "locally-finite") reports.push_back(net::check_locally_finite(in.net, window_span(in.net)));
        else fail(ErrorCode::ParseError, "unknown check '" + c + "'");
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    Json body;
    body["checks"] = Json::array();
    std::string text;
    for (const auto& r : reports) {
        body["checks"].push_back(report_json(r));
        text += report_text(r);
    }
    body["passed"] = ok;
    text += std::string("result: ") + (ok ? "pass" : "FAIL") + "\n";
    return emit(opt, merged(in, body), text, ok ? Ok : ChecksFailed);
}

int cmd_min_gens(const Options& opt) {
    auto in = load("min-gens", opt);
    auto gens = net::minimal_one_generators(in.net);
    Json body;
    body["generators"] = vertices_json(gens);
    std::string text = "generators: " + std::to_string(gens.size()) + "\n";
    for (const auto& v : gens) text += "  " + v.to_string() + "\n";
    return emit(opt, merged(in, body), text, Ok);
}

int cmd_classify2(const Options& opt) {
    auto in = load("classify2", opt);
    simple::SimpleNet s(in.net);
    auto type = simple::classify_z2(s);
    Json body;
    body["type"] = simple::to_string(type.tag);
    body["generators"] = vertices_json(type.generators);
    std::string text = "type: " + simple::to_string(type.tag) + "\ngenerators: " + vertices_text(type.generators) + "\n";
    if (const auto& c = in.doc.colors(); c && !c->type.empty()) {
        const bool agrees = c->type == simple::to_string(type.tag) && c->orange == type.generators;
        body["matches_colors"] = agrees;
        text += std::string("matches colors block: ") + (agrees ? "yes" : "no") + "\n";
        return emit(opt, merged(in, body), text, agrees ? Ok : ChecksFailed);
    }
    return emit(opt, merged(in, body), text, Ok);
}

int cmd_hull(const Options& opt) {
    auto in = load("hull", opt);
    std::vector<Vertex> gens;
    if (opt.vertices.empty()) {
        auto m = net::minimal_one_generators(in.net);
        gens.assign(m.begin(), m.end());
    } else {
        for (const auto& t : opt.vertices) gens.push_back(parse_vertex(t, in.net.n()));
    }
    auto h = zq::hull(gens);
    VertexSet from(gens.begin(), gens.end());
    Json body;
    body["generators"] = vertices_json(from);
    body["hull"] = vertices_json(h);
    std::string text = "generators: " + vertices_text(from) + "\nhull: " + std::to_string(h.size()) + " vertices\n";
    for (const auto& v : h) text += "  " + v.to_string() + "\n";
    return emit(opt, merged(in, body), text, Ok);
}

int cmd_shadow(const Options& opt) {
    auto in = load("shadow", opt);
    auto h = working_hull(in);
    Vertex v = parse_vertex(opt.vertex, in.net.n());
    Vertex w = zq::shadow(v, h);
    auto regions = zq::shadow_regions(h, in.net.vertex_set());
    Json body;
    body["hull"] = vertices_json(h.members());
    body["vertex"] = vertex_json(v);
    body["shadow"] = vertex_json(w);
    Json sizes = Json::array();
    std::string text = "hull: " + vertices_text(h.members()) + "\nshadow of " + v.to_string() + ": " + w.to_string() + "\nregions in window:\n";
    for (const auto& [member, region] : regions) {
        Json r;
        r["member"] = vertex_json(member);
        r["size"] = region.size();
        sizes.push_back(std::move(r));
        text += "  " + member.to_string() + ": " + std::to_string(region.size()) + " vertices\n";
    }
    body["regions"] = std::move(sizes);
    return emit(opt, merged(in, body), text, Ok);
}

int cmd_render(const Options& opt) {
    auto in = load("render", opt);
    auto dot = simple::render_dot(in.net, net::minimal_one_generators(in.net));
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) fail(ErrorCode::PreconditionViolation, "cannot write " + opt.out);
        f << dot;
    }
    if (opt.json) {
        Json body;
        body["dot"] = dot;
        std::cout << merged(in, body).dump(2) << "\n";
    } else if (opt.out.empty()) {
        std::cout << dot;
    } else {
        std::cout << header_text(in.header) << "wrote: " << std::filesystem::path(opt.out).filename().string() << "\n";
    }
    return Ok;
}

// ---- lp

Json equation_json(const lp::MinorSystem& sys, const exactla::Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [exps, c] : p.terms()) {
        Json factors = Json::array();
        for (std::size_t var = 0; var < exps.size(); ++var) {
            if (exps[var] == 0) continue;
            std::size_t b = 0;
            while (b + 1 < sys.offsets.size() && sys.offsets[b + 1] <= var) ++b;
            Json f;
            f["block"] = b;
            f["index"] = var - sys.offsets[b];
            f["power"] = exps[var];
            factors.push_back(std::move(f));
        }
        Json t;
        t["coefficient"] = c.to_string();
        t["factors"] = std::move(factors);
        terms.push_back(std::move(t));
    }
    return terms;
}

std::string blocks_text(const lp::MinorSystem& sys) {
    std::string text;
    for (std::size_t b = 0; b < sys.hull.size(); ++b) {
        text += "block " + std::to_string(b) + " " + sys.hull[b].to_string() + ":";
        for (std::size_t i = 0; i < sys.sizes[b]; ++i) text += " " + sys.names[sys.offsets[b] + i];
        text += "\n";
    }
    return text;
}

Json blocks_json(const lp::MinorSystem& sys) {
    Json blocks = Json::array();
    for (std::size_t b = 0; b < sys.hull.size(); ++b) {
        Json j;
        j["vertex"] = vertex_json(sys.hull[b]);
        j["variables"] = std::vector<std::string>(sys.names.begin() + static_cast<std::ptrdiff_t>(sys.offsets[b]),
                                                  sys.names.begin() + static_cast<std::ptrdiff_t>(sys.offsets[b] + sys.sizes[b]));
        blocks.push_back(std::move(j));
    }
    return blocks;
}

// The net over F_q: reduced from Q, or taken as is over F_q itself.
WindowNet over_prime(const WindowNet& net, std::uint32_t q) {
    if (!exactla::is_prime(q)) fail(ErrorCode::PreconditionViolation, "q must be prime");
    switch (net.field().kind()) {
    case exactla::FieldKind::Rationals: return net::reduce_mod(net, q);
    case exactla::FieldKind::PrimeField:
        if (net.field().characteristic() != q) fail(ErrorCode::FieldMismatch, "net is over " + net.field().name());
        return net;
    default: fail(ErrorCode::FieldMismatch, "point counts need a net over Q or F_q");
    }
}

int cmd_lp_eqs(const Options& opt) {
    auto in = load("lp eqs", opt);
    auto sys = lp::lp_equations(in.net, working_hull(in));
    Json body;
    body["blocks"] = blocks_json(sys);
    Json eqs = Json::array();
    std::string text = blocks_text(sys) + "equations: " + std::to_string(sys.equations.size()) + "\n";
    for (const auto& e : sys.equations) {
        Json j;
        j["text"] = e.to_string(sys.names);
        j["terms"] = equation_json(sys, e);
        eqs.push_back(std::move(j));
        text += "  " + e.to_string(sys.names) + "\n";
    }
    body["equations"] = std::move(eqs);
    return emit(opt, merged(in, body), text, Ok);
}

int cmd_lp_count(const Options& opt) {
    auto in = load("lp count", opt);
    auto net = over_prime(in.net, opt.q);
    auto points = lp::enumerate_points(lp::lp_equations(net, working_hull(in)), opt.budget);
    Json body;
    body["q"] = opt.q;
    body["points"] = points.size();
    return emit(opt, merged(in, body), "q: " + std::to_string(opt.q) + "\npoints: " + std::to_string(points.size()) + "\n", Ok);
}

int cmd_lp_strata(const Options& opt) {
    auto in = load("lp strata", opt);
    auto net = over_prime(in.net, opt.q);
    auto h = working_hull(in);
    auto sys = lp::lp_equations(net, h);
    auto points = lp::enumerate_points(sys, opt.budget);
    auto strata = lp::stratify(net, sys, points);
    Json body;
    body["q"] = opt.q;
    body["points"] = points.size();
    Json rows = Json::array();
    std::string text = "q: " + std::to_string(opt.q) + "\npoints: " + std::to_string(points.size()) + "\n";
    bool ok = true;
    for (const auto& [key, members] : strata) {
        Json row;
        row["generators"] = vertices_json(key);
        row["points"] = members.size();
        text += "stratum " + vertices_text(key) + ": " + "size " + std::to_string(members.size());
        if (key.size() == 1) {
            const auto expected = lp::stratum_param_count(net, *key.begin(), h);
            row["expected"] = expected;
            ok &= expected == members.size();
            text += " (expected " + std::to_string(expected) + ")";
        }
        text += "\n";
        rows.push_back(std::move(row));
    }
    body["strata"] = std::move(rows);
    body["matches_expected"] = ok;
    return emit(opt, merged(in, body), text, ok ? Ok : ChecksFailed);
}

int cmd_lp_charts(const Options& opt) {
    auto in = load("lp charts", opt);
    auto polygon = net::minimal_one_generators(in.net);
    auto atlas = lp::charts(in.net, polygon);
    Json body;
    body["polygon"] = Json::array();
    std::string text = "padded polygon:";
    for (const auto& v : atlas.polygon) {
        body["polygon"].push_back(vertex_json(v));
        text += " " + v.to_string();
    }
    body["block_sizes"] = atlas.block_sizes;
    text += "\nblock sizes:";
    for (auto s : atlas.block_sizes) text += " " + std::to_string(s);
    text += "\ncycle maps:\n";
    Json maps = Json::array();
    for (std::size_t i = 0; i < atlas.cycle_maps.size(); ++i) {
        maps.push_back(atlas.cycle_maps[i].to_string());
        text += "  M" + std::to_string(i) + " = " + atlas.cycle_maps[i].to_string() + "\n";
    }
    body["cycle_maps"] = std::move(maps);
    text += "charts: " + std::to_string(atlas.charts.size()) + "\n";
    Json charts = Json::array();
    for (std::size_t c = 0; c < atlas.charts.size(); ++c) {
        const auto& chart = atlas.charts[c];
        Json j;
        j["rotation"] = chart.rotation;
        j["p"] = chart.p;
        j["j"] = chart.j;
        j["first_map_vanishes"] = chart.first_map_vanishes;
        std::vector<std::string> eqs;
        for (const auto& e : chart.equations) eqs.push_back(e.to_string(atlas.names));
        text += "chart " + std::to_string(c) + ": rotation " + std::to_string(chart.rotation) + ", p =";
        for (auto p : chart.p) text += " " + std::to_string(p);
        text += ", j =";
        for (auto k : chart.j) text += " " + std::to_string(k);
        text += ", " + std::to_string(eqs.size()) + " equations\n";
        for (const auto& e : eqs) text += "  " + e + "\n";
        j["equations"] = std::move(eqs);
        charts.push_back(std::move(j));
    }
    body["charts"] = std::move(charts);
    return emit(opt, merged(in, body), text, Ok);
}

int cmd_lp_jacobian(const Options& opt) {
    auto in = load("lp jacobian", opt);
    auto net = over_prime(in.net, opt.q);
    auto h = working_hull(in);
    auto sys = lp::lp_equations(net, h);
    auto points = lp::enumerate_points(sys, opt.budget);
    net::ClassMaps maps(net);
    const auto expected = lp::expected_codimension(sys);
    Json body;
    body["q"] = opt.q;
    body["expected_rank"] = expected;
    Json rows = Json::array();
    std::string text = "q: " + std::to_string(opt.q) + "\nexpected rank: " + std::to_string(expected) + "\n";
    std::size_t smooth = 0;
    bool ok = true;
    for (const auto& p : points) {
        const auto rank = lp::jacobian_rank(sys, p);
        const bool is_smooth = rank == expected;
        const bool exact_point = lp::point_generators(maps, sys, p).size() == 1;
        smooth += is_smooth;
        ok &= is_smooth == exact_point;
        Json row;
        row["point"] = lp::to_string(p);
        row["rank"] = rank;
        row["smooth"] = is_smooth;
        rows.push_back(std::move(row));
        text += lp::to_string(p) + " rank " + std::to_string(rank) + (is_smooth ? " smooth" : " singular") + "\n";
    }
    body["points"] = std::move(rows);
    body["smooth_points"] = smooth;
    body["smooth_iff_exact"] = ok;
    text += "smooth points: " + std::to_string(smooth) + " of " + std::to_string(points.size()) + "\n";
    text += std::string("smooth exactly at single-generator points: ") + (ok ? "yes" : "no") + "\n";
    return emit(opt, merged(in, body), text, ok ? Ok : ChecksFailed);
}

int cmd_lp_hilbert(const Options& opt) {
    auto in = load("lp hilbert", opt);
    auto table = lp::hilbert_table(lp::lp_equations(in.net, working_hull(in)), opt.bound, opt.budget);
    Json body;
    body["bound"] = opt.bound;
    Json rows = Json::array();
    for (const auto& e : table) {
        Json row;
        row["degree"] = e.degree;
        row["dimension"] = e.dimension;
        rows.push_back(std::move(row));
    }
    body["table"] = std::move(rows);
    return emit(opt, merged(in, body), "bound: " + std::to_string(opt.bound) + "\n" + lp::hilbert_csv(table), Ok);
}

// ---- smooth

Json smoothing_json(const smoothing::SmoothingReport& r) {
    Json j;
    j["generic_general_linked"] = r.generic_ok;
    j["special_matches_input"] = r.special_matches;
    j["circuits_divisible_by_t"] = r.circuits_vanish;
    j["failures"] = r.failures;
    return j;
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string smoothing_text(const smoothing::SmoothingReport& r) {
    std::string text = "generic general linked: " + flag(r.generic_ok) + "\nspecial fiber equals input: " + flag(r.special_matches) +
                       "\ncircuits divisible by t: " + flag(r.circuits_vanish) + "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) text += "  failure: " + r.failures[i] + "\n";
    return text;
}

smoothing::Smoothing build_smoothing(const Loaded& in) {
    return smoothing::construct_monomial_smoothing(in.net, net::minimal_one_generators(in.net));
}

int cmd_smooth_build(const Options& opt) {
    auto in = load("smooth build", opt);
    auto sm = build_smoothing(in);
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) fail(ErrorCode::PreconditionViolation, "cannot write " + opt.out);
    f << cli::serialize(cli::NetDocument(sm.generic));
    Json body = smoothing_json(sm.report);
    body["output"] = std::filesystem::path(opt.out).filename().string();
    return emit(opt, merged(in, body), smoothing_text(sm.report) + "wrote: " + body["output"].get<std::string>() + "\n",
                sm.report.ok() ? Ok : ChecksFailed);
}

int cmd_smooth_check(const Options& opt) {
    auto in = load("smooth check", opt);
    smoothing::SmoothingReport r;
    if (in.net.field().kind() == exactla::FieldKind::RationalFunctions) {
        auto generic = smoothing::check_general_linked(in.net);
        auto circuits = smoothing::check_circuits_divisible_by_t(in.net);
        auto special = smoothing::specialize(in.net);
        auto special_ok = net::check_weakly_linked(special);
        r.generic_ok = generic.passed;
        r.circuits_vanish = circuits.passed;
        r.special_matches = special_ok.passed;
        for (const auto* c : {&generic, &circuits, &special_ok})
            for (const auto& v : c->violations) r.failures.push_back(v);
        Json body = smoothing_json(r);
        body.erase("special_matches_input");
        body["special_fiber_weakly_linked"] = r.special_matches;
        std::string text = "generic general linked: " + flag(r.generic_ok) + "\nspecial fiber weakly linked: " + flag(r.special_matches) +
                           "\ncircuits divisible by t: " + flag(r.circuits_vanish) + "\n";
        for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) text += "  failure: " + r.failures[i] + "\n";
        return emit(opt, merged(in, body), text, r.ok() ? Ok : ChecksFailed);
    }
    r = build_smoothing(in).report;
    return emit(opt, merged(in, smoothing_json(r)), smoothing_text(r), r.ok() ? Ok : ChecksFailed);
}

int cmd_smooth_degeneration(const Options& opt) {
    auto in = load("smooth degeneration", opt);
    auto sm = build_smoothing(in);
    auto rows = smoothing::degeneration_evidence(in.net, sm.generic, working_hull(in), opt.bound);
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.equal(); });
    Json body;
    body["bound"] = opt.bound;
    Json table = Json::array();
    std::ostringstream text;
    text << "bound: " << opt.bound << "\n";
    auto degree = [](const std::vector<int>& d) {
        std::string s = "(";
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
        return s + ")";
    };
    if (opt.csv) {
        for (std::size_t b = 0; b < (rows.empty() ? 0 : rows.front().degree.size()); ++b) text << "d" << b << ",";
        text << "special,generic,diagonal,equal\n";
    } else {
        text << std::left << std::setw(12) << "degree" << std::setw(9) << "special" << std::setw(9) << "generic" << std::setw(10) << "diagonal"
             << "equal\n";
    }
    for (const auto& r : rows) {
        Json j;
        j["degree"] = r.degree;
        j["special"] = r.special;
        j["generic"] = r.generic;
        j["diagonal"] = r.diagonal;
        j["equal"] = r.equal();
        table.push_back(std::move(j));
        if (opt.csv) {
            for (int d : r.degree) text << d << ",";
            text << r.special << "," << r.generic << "," << r.diagonal << "," << (r.equal() ? "yes" : "no") << "\n";
        } else {
            text << std::left << std::setw(12) << degree(r.degree) << std::setw(9) << r.special << std::setw(9) << r.generic << std::setw(10)
                 << r.diagonal << (r.equal() ? "yes" : "no") << "\n";
        }
    }
    body["rows"] = std::move(table);
    body["all_equal"] = ok;
    text << "all equal: " << (ok ? "yes" : "no") << "\n";
    return emit(opt, merged(in, body), text.str(), ok ? Ok : ChecksFailed);
}

// ---- wiring

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.file, "net document (JSON)")->required();
    cmd->add_option("--radius", opt.radius, "window radius around the hull (default n+2)");
    cmd->add_flag("--json", opt.json, "machine-readable output");
    cmd->add_option("--budget", opt.budget, "enumeration budget");
}

int exit_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::ParseError: return BadInput;
    case ErrorCode::BudgetExceeded: return OverBudget;
    default: return ChecksFailed;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linked nets over Z^n-quivers: checks, generators, LP equations, charts and smoothings"};
    app.require_subcommand(1);
    Options opt;
    std::function<int(const Options&)> run;
    auto bind = [&](CLI::App* cmd, int (*fn)(const Options&)) {
        add_common(cmd, opt);
        cmd->callback([&run, fn] { run = fn; });
        return cmd;
    };

    bind(app.add_subcommand("validate", "run the net axiom checks on the window"), cmd_validate)
        ->add_option("--checks", opt.checks, "comma-separated subset of weakly-linked,linked,exact,pure,locally-finite")
        ->delimiter(',');
    bind(app.add_subcommand("min-gens", "minimal 1-generating vertex set"), cmd_min_gens);
    bind(app.add_subcommand("classify2", "type of a simple linked net over the Z^2-quiver"), cmd_classify2);
    bind(app.add_subcommand("hull", "hull of the minimal generators or of --vertex list"), cmd_hull)
        ->add_option("--vertex", opt.vertices, "generator as comma-separated coordinates (repeatable)");
    bind(app.add_subcommand("shadow", "shadow of a vertex in the working hull"), cmd_shadow)
        ->add_option("vertex", opt.vertex, "comma-separated coordinates")
        ->required();
    bind(app.add_subcommand("render", "DOT drawing of the window net"), cmd_render)->add_option("-o,--out", opt.out, "output file");

    auto* lp_cmd = app.add_subcommand("lp", "linked projective space");
    lp_cmd->require_subcommand(1);
    bind(lp_cmd->add_subcommand("eqs", "2x2 minor equations"), cmd_lp_eqs);
    bind(lp_cmd->add_subcommand("count", "number of F_q points"), cmd_lp_count)->add_option("--q", opt.q, "prime")->required();
    bind(lp_cmd->add_subcommand("strata", "points grouped by generating polygon"), cmd_lp_strata)->add_option("--q", opt.q, "prime")->required();
    bind(lp_cmd->add_subcommand("charts", "local chart equations"), cmd_lp_charts);
    bind(lp_cmd->add_subcommand("jacobian", "Jacobian rank at every F_q point"), cmd_lp_jacobian)->add_option("--q", opt.q, "prime")->required();
    bind(lp_cmd->add_subcommand("hilbert", "multigraded Hilbert function as CSV"), cmd_lp_hilbert)->add_option("--bound", opt.bound, "total degree bound");

    auto* smooth_cmd = app.add_subcommand("smooth", "monomial smoothing over Q(t)");
    smooth_cmd->require_subcommand(1);
    bind(smooth_cmd->add_subcommand("build", "write the smoothing as a Q(t) document"), cmd_smooth_build)
        ->add_option("-o,--out", opt.out, "output file")
        ->required();
    bind(smooth_cmd->add_subcommand("check", "verify a smoothing"), cmd_smooth_check);
    auto* degen = bind(smooth_cmd->add_subcommand("degeneration", "Hilbert functions of special, generic and diagonal"), cmd_smooth_degeneration);
    degen->add_option("--bound", opt.bound, "total degree bound");
    degen->add_flag("--csv", opt.csv, "CSV instead of an aligned table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }
    try {
        return run(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    }
}

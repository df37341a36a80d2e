#pragma once

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hilmet/hilbert.hpp"
#include "hilmet/hyperbolic.hpp"
#include "hilmet/presets.hpp"
#include "hilmet/related_metrics.hpp"
#include "hilmet/special_functions.hpp"
#include "hilmet/svg.hpp"
#include "hilmet/verify.hpp"

namespace hilmet::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 domain or geometry error.
struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int ball_dim = 0;
    std::string polygon_file;
    std::string preset;
    std::string a_str, b_str;
    double t = 1.0;
    double R = 1.0;
    double K = 1.0;
    int ndirs = 180;
    int budget = 10000;
    int samples = 0;
    std::uint64_t seed = 20260819ull;
    std::string map_name;
    std::string suite;
    std::string format;
    std::string out_path;
};

namespace detail {

// Rounds to 12 significant digits so JSON output matches the text formatting.
inline double r12(double v) { return std::strtod(fmt_g(v, 12).c_str(), nullptr); }

inline Vec parse_point(const std::string& s, int dim, const std::string& name) {
    Vec out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (tok.empty() || end != tok.c_str() + tok.size() || !std::isfinite(v))
            throw Usage("point " + name + ": '" + s + "' is not a comma-separated decimal list");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() == 1 && dim > 1) out.resize(static_cast<std::size_t>(dim), 0.0);
    if (static_cast<int>(out.size()) != dim)
        throw Usage("point " + name + ": expected " + std::to_string(dim) +
                    " coordinates, got " + std::to_string(out.size()));
    return out;
}

inline ConvexDomain resolve_domain(const RunConfig& cfg) {
    const int given = (cfg.ball_dim > 0 ? 1 : 0) + (cfg.polygon_file.empty() ? 0 : 1) +
                      (cfg.preset.empty() ? 0 : 1);
    if (given > 1) throw Usage("choose exactly one of --ball, --polygon, --preset");
    if (cfg.ball_dim > 0) {
        if (cfg.ball_dim < 2 || cfg.ball_dim > 16)
            throw Usage("--ball dimension must be between 2 and 16");
        return BallDomain{cfg.ball_dim};
    }
    if (!cfg.polygon_file.empty()) return ConvexPolygon::from_file(cfg.polygon_file);
    if (!cfg.preset.empty()) {
        if (cfg.preset != "square" && cfg.preset != "triangle" && cfg.preset != "sector")
            throw Usage("unknown preset '" + cfg.preset + "' (square, triangle, sector)");
        return preset_domain(cfg.preset);
    }
    return BallDomain{2};
}

inline std::string domain_label(const RunConfig& cfg, const ConvexDomain& D) {
    if (is_ball(D)) return "ball(" + std::to_string(domain_dim(D)) + ")";
    const auto& poly = std::get<ConvexPolygon>(D);
    const std::string src = !cfg.preset.empty() ? cfg.preset : cfg.polygon_file;
    return "polygon(" + src + ", " + std::to_string(poly.size()) + " vertices)";
}

inline std::string require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    const std::string def = *allowed.begin();
    if (cfg.format.empty()) return def;
    for (const char* a : allowed)
        if (cfg.format == a) return cfg.format;
    std::string msg = "--format " + cfg.format + " is not valid here (use";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw Usage(msg + ")");
}

inline void emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw Usage("cannot open output file '" + cfg.out_path + "'");
    f << payload;
}

}  // namespace detail

// ===== dist =====

inline int cmd_dist(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const std::string fmt = detail::require_format(cfg, {"text", "json"});
    const ConvexDomain D = detail::resolve_domain(cfg);
    const int dim = domain_dim(D);
    const Vec a = detail::parse_point(cfg.a_str, dim, "a");
    const Vec b = detail::parse_point(cfg.b_str, dim, "b");
    require_interior(D, a, "a");
    require_interior(D, b, "b");

    const bool same = dist(a, b) < eps_degenerate;
    const double h = hilbert_distance(D, a, b);
    const double alpha = apollonian(D, a, b);
    const double delta = same ? 0.0 : mobius_delta(D, a, b, cfg.budget);

    std::vector<std::pair<std::string, double>> rows;
    rows.emplace_back("h", h);
    if (is_ball(D)) {
        const double rho = rho_ball(a, b);
        rows.emplace_back("rho", rho);
        rows.emplace_back("alpha", alpha);
        rows.emplace_back("delta", delta);
        if (!same) {
            const double m = dist_origin_line(a, b);
            rows.emplace_back("margin_rho_minus_h", rho - h);
            rows.emplace_back("margin_upper_minus_rho",
                              h / std::sqrt((1.0 - m) * (1.0 + m)) - rho);
        } else {
            rows.emplace_back("margin_rho_minus_h", 0.0);
            rows.emplace_back("margin_upper_minus_rho", 0.0);
        }
    } else {
        rows.emplace_back("alpha", alpha);
        rows.emplace_back("delta", delta);
        rows.emplace_back("margin_delta_minus_alpha", delta - alpha);
        rows.emplace_back("margin_log_minus_delta", std::log(std::exp(alpha) + 2.0) - delta);
    }

    if (fmt == "json") {
        nlohmann::json j;
        j["domain"] = detail::domain_label(cfg, D);
        j["a"] = a;
        j["b"] = b;
        for (const auto& [k, v] : rows) j[k] = detail::r12(v);
        detail::emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::string s = "domain: " + detail::domain_label(cfg, D) + "\n";
        s += "a: " + fmt_point(a) + "\nb: " + fmt_point(b) + "\n";
        for (const auto& [k, v] : rows) s += k + ": " + fmt_g(v, 12) + "\n";
        detail::emit(cfg, s, out);
    }
    return 0;
}

// ===== ball =====

inline int cmd_ball(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string fmt = detail::require_format(cfg, {"csv", "svg", "json"});
    if (cfg.ndirs < 8) throw Usage("--ndirs must be at least 8");
    const ConvexDomain D = detail::resolve_domain(cfg);
    if (domain_dim(D) != 2) throw Usage("ball boundaries are planar; use --ball 2 or a polygon");
    const Vec av = detail::parse_point(cfg.a_str, 2, "a");
    const cplx z = to_cplx(av);
    if (!(cfg.t > 0.0)) throw Usage("-t radius must be positive");
    const Polyline poly = hilbert_ball_boundary(D, z, cfg.t, cfg.ndirs);

    if (const auto* P = std::get_if<ConvexPolygon>(&D)) {
        const double fit = polyline_sector_fit(*P, z, poly);
        err << "sector_fit_residual: " << fmt_g(fit, 12) << "\n";
    }

    if (fmt == "csv") {
        std::string s = "theta,x,y\n";
        for (std::size_t j = 0; j < poly.points.size(); ++j) {
            const double th = 2.0 * M_PI * static_cast<double>(j) /
                              static_cast<double>(poly.points.size());
            s += fmt_g(th, 12) + "," + fmt_g(poly.points[j].real(), 12) + "," +
                 fmt_g(poly.points[j].imag(), 12) + "\n";
        }
        detail::emit(cfg, s, out);
    } else if (fmt == "json") {
        nlohmann::json j;
        j["domain"] = detail::domain_label(cfg, D);
        j["center"] = av;
        j["radius"] = detail::r12(cfg.t);
        auto& pts = j["points"] = nlohmann::json::array();
        for (std::size_t k = 0; k < poly.points.size(); ++k) {
            const double th = 2.0 * M_PI * static_cast<double>(k) /
                              static_cast<double>(poly.points.size());
            pts.push_back({detail::r12(th), detail::r12(poly.points[k].real()),
                           detail::r12(poly.points[k].imag())});
        }
        detail::emit(cfg, j.dump(2) + "\n", out);
    } else {
        double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
        if (const auto* P = std::get_if<ConvexPolygon>(&D)) {
            xmin = ymin = 1e300;
            xmax = ymax = -1e300;
            for (const cplx& v : P->vertices()) {
                xmin = std::min(xmin, v.real());
                xmax = std::max(xmax, v.real());
                ymin = std::min(ymin, v.imag());
                ymax = std::max(ymax, v.imag());
            }
        }
        const double pad = 0.08 * std::max(xmax - xmin, ymax - ymin);
        SvgWriter svg(xmin - pad, xmax + pad, ymin - pad, ymax + pad, 640);
        if (const auto* P = std::get_if<ConvexPolygon>(&D)) {
            svg.polyline(P->vertices(), true, SvgWriter::Style::domain);
            for (const cplx& v : P->vertices()) svg.segment(v, z, SvgWriter::Style::guide);
        } else {
            svg.circle({0.0, 0.0}, 1.0, SvgWriter::Style::domain);
        }
        svg.polyline(poly.points, true, SvgWriter::Style::curve);
        svg.dot(z);
        detail::emit(cfg, svg.str(), out);
    }
    return 0;
}

// ===== sphere =====

inline int cmd_sphere(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const std::string fmt = detail::require_format(cfg, {"text", "json"});
    if (cfg.ball_dim == 0 && (!cfg.polygon_file.empty() || !cfg.preset.empty()))
        throw Usage("sphere works on the unit ball only; use --ball N");
    const int dim = cfg.ball_dim > 0 ? cfg.ball_dim : 2;
    if (dim < 2 || dim > 16) throw Usage("--ball dimension must be between 2 and 16");
    const Vec c = detail::parse_point(cfg.a_str, dim, "a");
    if (!(cfg.R > 0.0)) throw Usage("-R radius must be positive");
    const EllipsoidSpec e = hilbert_sphere_ellipsoid(c, cfg.R);

    Rng rng = Rng(cfg.seed).split("sphere");
    double worst_h = 0.0, worst_id = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        const Vec w = rng.unit_orthogonal(e.axis);
        const Vec x = ellipsoid_point(e, phi, w);
        worst_h = std::max(worst_h, std::fabs(h_ball(x, c) - cfg.R));
        worst_id = std::max(worst_id, std::fabs(sphere_identity_residual(c, cfg.R, x)));
    }

    if (fmt == "json") {
        nlohmann::json j;
        j["dim"] = e.dim;
        j["center"] = c;
        j["radius"] = detail::r12(cfg.R);
        j["ellipsoid_center"] = e.center;
        j["axis"] = e.axis;
        j["a_min"] = detail::r12(e.a_min);
        j["a_max"] = detail::r12(e.a_max);
        j["surface_distance_residual"] = detail::r12(worst_h);
        j["sphere_identity_residual"] = detail::r12(worst_id);
        detail::emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::string s;
        s += "dim: " + std::to_string(e.dim) + "\n";
        s += "center: " + fmt_point(c) + "\n";
        s += "radius: " + fmt_g(cfg.R, 12) + "\n";
        s += "ellipsoid_center: " + fmt_point(e.center) + "\n";
        s += "axis: " + fmt_point(e.axis) + "\n";
        s += "a_min: " + fmt_g(e.a_min, 12) + "\n";
        s += "a_max: " + fmt_g(e.a_max, 12) + "\n";
        s += "surface_distance_residual: " + fmt_g(worst_h, 12) + "\n";
        s += "sphere_identity_residual: " + fmt_g(worst_id, 12) + "\n";
        detail::emit(cfg, s, out);
    }
    return 0;
}

// ===== holder =====

inline QCMapSpec parse_map(const std::string& name, double K) {
    QCMapSpec spec;
    const std::size_t colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (head == "identity") {
        spec.kind = MapKind::identity;
    } else if (head == "mobius") {
        spec.kind = MapKind::mobius;
        spec.a = {0.3, 0.0};
        if (!arg.empty()) {
            const Vec v = detail::parse_point(arg, 2, "mobius parameter");
            spec.a = to_cplx(v);
        }
        if (std::abs(spec.a) >= 1.0 - 1e-6 || std::abs(spec.a) < eps_degenerate)
            throw Usage("mobius parameter must satisfy 0 < |a| < 1");
    } else if (head == "power") {
        spec.kind = MapKind::power;
        spec.m = 2;
        if (!arg.empty()) {
            spec.m = std::atoi(arg.c_str());
            if (spec.m < 1 || spec.m > 16) throw Usage("power exponent must be in [1, 16]");
        }
    } else if (head == "radial-stretch") {
        spec.kind = MapKind::radial_stretch;
        spec.K = K;
    } else {
        throw Usage("unknown map '" + name +
                    "' (identity, mobius[:x,y], power[:m], radial-stretch)");
    }
    return spec;
}

inline int cmd_holder(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const std::string fmt = detail::require_format(cfg, {"text", "json"});
    if (!(cfg.K >= 1.0)) throw Usage("-K must be at least 1");
    const HolderBounds hb = holder_constant_bounds(cfg.K);

    std::vector<std::pair<std::string, double>> rows = {
        {"K", hb.K},
        {"chain_linear_lower", hb.linear_lower},
        {"chain_cosh_lower", hb.cosh_lower},
        {"c_K", hb.value},
        {"chain_linear_upper", hb.linear_upper},
    };
    std::vector<std::pair<std::string, std::string>> text_rows;

    if (!cfg.map_name.empty()) {
        const QCMapSpec spec = parse_map(cfg.map_name, cfg.K);
        const int pairs = cfg.samples > 0 ? cfg.samples : 10000;
        const MetricReport rep = holder_verify(spec, cfg.K, pairs, cfg.seed);
        text_rows.emplace_back("map", qc_map_name(spec));
        rows.emplace_back("pairs", rep.get("pairs"));
        rows.emplace_back("min_margin", rep.get("min_margin"));
        rows.emplace_back("halved_bound_failures", rep.get("halved_bound_failures"));
    } else if (!cfg.a_str.empty() && !cfg.b_str.empty()) {
        const Vec a = detail::parse_point(cfg.a_str, 2, "a");
        const Vec b = detail::parse_point(cfg.b_str, 2, "b");
        const ConvexDomain disk = BallDomain{2};
        require_interior(disk, a, "a");
        require_interior(disk, b, "b");
        rows.emplace_back("rhs", holder_bound_rhs(to_cplx(a), to_cplx(b), cfg.K, hb.value));
    }

    if (fmt == "json") {
        nlohmann::json j;
        for (const auto& [k, v] : text_rows) j[k] = v;
        for (const auto& [k, v] : rows) j[k] = detail::r12(v);
        detail::emit(cfg, j.dump(2) + "\n", out);
    } else {
        std::string s;
        for (const auto& [k, v] : text_rows) s += k + ": " + v + "\n";
        for (const auto& [k, v] : rows) s += k + ": " + fmt_g(v, 12) + "\n";
        detail::emit(cfg, s, out);
    }
    return 0;
}

// ===== verify =====

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const std::string fmt = detail::require_format(cfg, {"text", "json"});
    if (!cfg.suite.empty()) {
        bool known = false;
        for (const SuiteEntry& e : verify_registry()) known = known || cfg.suite == e.name;
        if (!known) {
            std::string names;
            for (const SuiteEntry& e : verify_registry()) names += std::string(" ") + e.name;
            throw Usage("no verification suite named '" + cfg.suite + "' (suites:" + names + ")");
        }
    }
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    opt.budget = cfg.budget;
    const std::vector<SuiteResult> results = run_verify(opt, cfg.suite);
    bool all = true;
    for (const SuiteResult& s : results) all = all && s.pass;

    if (fmt == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const SuiteResult& s : results) {
            nlohmann::json js;
            js["suite"] = s.name;
            js["what"] = s.what;
            js["pass"] = s.pass;
            auto& checks = js["checks"] = nlohmann::json::array();
            for (const CheckLine& c : s.checks) {
                nlohmann::json jc;
                jc["name"] = c.name;
                jc["value"] = detail::r12(c.value);
                jc["tol"] = c.tol;
                if (c.count > 0) jc["n"] = c.count;
                checks.push_back(jc);
            }
            if (!s.notes.empty()) js["notes"] = s.notes;
            j.push_back(js);
        }
        detail::emit(cfg, j.dump(2) + "\n", out);
    } else {
        detail::emit(cfg, verify_to_text(results), out);
    }
    return all ? 0 : 1;
}

// ===== front end =====

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert-metric geometry toolkit: distances, balls, spheres, bounds"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_domain = [&](CLI::App* sub) {
        sub->add_option("--ball", cfg.ball_dim, "unit ball domain of this dimension");
        sub->add_option("--polygon", cfg.polygon_file, "convex polygon domain from a vertex file");
        sub->add_option("--preset", cfg.preset, "builtin domain: square, triangle, sector");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "random seed for sampled reports");
        sub->add_option("--format", cfg.format, "output format");
        sub->add_option("-o,--output", cfg.out_path, "write output to this file");
    };

    CLI::App* dist = app.add_subcommand("dist", "metric distances between two points");
    add_domain(dist);
    add_common(dist);
    dist->add_option("-a", cfg.a_str, "first point, e.g. 0.1,0.2")->required();
    dist->add_option("-b", cfg.b_str, "second point")->required();
    dist->add_option("--budget", cfg.budget, "boundary-pair search budget for delta");

    CLI::App* ball = app.add_subcommand("ball", "Hilbert ball boundary polyline");
    add_domain(ball);
    add_common(ball);
    ball->add_option("-a", cfg.a_str, "center point")->default_val("0,0");
    ball->add_option("-t", cfg.t, "Hilbert radius")->default_val(1.0);
    ball->add_option("--ndirs", cfg.ndirs, "number of boundary directions")->default_val(180);

    CLI::App* sphere = app.add_subcommand("sphere", "Hilbert sphere of the unit ball");
    sphere->add_option("--ball", cfg.ball_dim, "ball dimension");
    sphere->add_option("--polygon", cfg.polygon_file)->group("");
    sphere->add_option("--preset", cfg.preset)->group("");
    add_common(sphere);
    sphere->add_option("-a", cfg.a_str, "sphere center")->default_val("0,0");
    sphere->add_option("-R", cfg.R, "Hilbert radius")->default_val(1.0);

    CLI::App* holder = app.add_subcommand("holder", "Hölder constant, bounds, and map checks");
    add_common(holder);
    holder->add_option("-K", cfg.K, "distortion parameter, K >= 1")->default_val(1.0);
    holder->add_option("--map", cfg.map_name, "identity | mobius[:x,y] | power[:m] | radial-stretch");
    holder->add_option("--samples", cfg.samples, "sampled pairs for --map");
    holder->add_option("--pairs", cfg.samples)->group("");
    holder->add_option("-a", cfg.a_str, "first point for a single bound evaluation");
    holder->add_option("-b", cfg.b_str, "second point");

    CLI::App* verify = app.add_subcommand("verify", "run the property verification suites");
    add_common(verify);
    verify->add_option("--suite", cfg.suite, "run a single named suite");
    verify->add_option("--samples", cfg.samples, "override per-suite sample counts");
    verify->add_option("--pairs", cfg.samples)->group("");
    verify->add_option("--budget", cfg.budget, "boundary-pair search budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dist->parsed()) return cmd_dist(cfg, out, err);
        if (ball->parsed()) return cmd_ball(cfg, out, err);
        if (sphere->parsed()) return cmd_sphere(cfg, out, err);
        if (holder->parsed()) return cmd_holder(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace hilmet::cli

// Command-line front end: every module behind one binary, organized around
// the zetetic / poristic / exegetic pipeline. Exit 0 on success, 1 on domain
// errors, 2 on usage errors.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vieta/vieta.hpp"

namespace {

int g_digits = 12;

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, g_digits);
    return std::string(buf, res.ptr);
}

std::string fmt(long double v) { return fmt(static_cast<double>(v)); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

vieta::Rational parse_rational(const std::string& token) {
    const std::string t = token;
    if (t.empty()) throw vieta::Error(vieta::ErrorKind::parse, "empty number");
    if (t.find('/') != std::string::npos) {
        auto parts = split(t, '/');
        if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
            throw vieta::Error(vieta::ErrorKind::parse, "bad fraction \"" + t + "\"");
        try {
            return vieta::Rational(boost::multiprecision::cpp_int(parts[0]),
                                   boost::multiprecision::cpp_int(parts[1]));
        } catch (const std::exception&) {
            throw vieta::Error(vieta::ErrorKind::parse, "bad fraction \"" + t + "\"");
        }
    }
    if (t.find('.') == std::string::npos && t.find('e') == std::string::npos &&
        t.find('E') == std::string::npos) {
        try {
            return vieta::Rational(boost::multiprecision::cpp_int(t));
        } catch (const std::exception&) {
            throw vieta::Error(vieta::ErrorKind::parse, "bad integer \"" + t + "\"");
        }
    }
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == nullptr || *end != '\0' || !std::isfinite(v))
        throw vieta::Error(vieta::ErrorKind::parse, "bad number \"" + t + "\"");
    return vieta::rational_from_double(v);
}

double parse_double(const std::string& token) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == nullptr || *end != '\0' || token.empty())
        throw vieta::Error(vieta::ErrorKind::parse, "bad number \"" + token + "\"");
    return v;
}

std::string render_monic(const vieta::Polynomial& p, const std::string& var) {
    const auto& c = p.coefficients();
    std::string out;
    for (std::size_t k = p.degree() + 1; k-- > 0;) {
        if (c[k] == 0 && p.degree() > 0) continue;
        std::string mag = vieta::to_string(c[k] < 0 ? -c[k] : c[k]);
        std::string body;
        if (k == 0 || mag != "1") body = mag;
        if (k > 0) {
            body += var;
            if (k > 1) body += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (c[k] < 0 ? "-" : "") + body;
        else
            out += (c[k] < 0 ? " - " : " + ") + body;
    }
    if (out.empty()) out = "0";
    return out + " = 0";
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// --- subcommand bodies -----------------------------------------------------

int run_roots(const std::string& arg, bool json) {
    std::vector<vieta::Rational> roots;
    for (const auto& tok : split(arg, ',')) roots.push_back(parse_rational(tok));
    if (roots.empty())
        throw vieta::Error(vieta::ErrorKind::degenerate_input, "no roots given");

    vieta::Polynomial poly({vieta::Rational(1)});
    for (const auto& r : roots) poly = poly * vieta::Polynomial({-r, vieta::Rational(1)});
    vieta::SymmetricValues sym = vieta::vieta_from_coefficients(poly);

    // Re-accumulate the elementary symmetric functions from the roots in
    // reverse order and compare exactly against the coefficient route.
    const std::size_t n = roots.size();
    std::vector<vieta::Rational> elem(n + 1, vieta::Rational(0));
    elem[0] = 1;
    std::size_t used = 0;
    for (std::size_t i = n; i-- > 0;) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) elem[k] += roots[i] * elem[k - 1];
    }
    bool all_exact = true;
    for (std::size_t j = 1; j <= n; ++j)
        if (sym.value(j) != elem[j]) all_exact = false;

    if (json) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : poly.coefficients()) coeffs.push_back(vieta::to_string(c));
        nlohmann::json s = nlohmann::json::array();
        for (const auto& v : sym.s) s.push_back(vieta::to_string(v));
        emit_json({{"degree", poly.degree()},
                   {"polynomial", render_monic(poly, "x")},
                   {"coefficients", coeffs},
                   {"symmetric", s},
                   {"exact", all_exact}});
        return 0;
    }
    std::cout << "degree: " << poly.degree() << "\n";
    std::cout << "polynomial: " << render_monic(poly, "x") << "\n";
    for (std::size_t j = 1; j <= sym.size(); ++j)
        std::cout << "s_" << j << ": " << vieta::to_string(sym.value(j)) << "\n";
    std::cout << "vieta check: " << (all_exact ? "exact" : "FAILED") << "\n";
    return all_exact ? 0 : 1;
}

int run_species_parse(const std::string& text, bool json) {
    vieta::SpeciesEquation eq = vieta::parse_species(text);
    vieta::Dimension dim = vieta::check_homogeneity(eq);
    auto unknowns = eq.unknowns();
    std::string unknown = unknowns.empty() ? "" : std::string(1, unknowns.front());
    if (json) {
        emit_json({{"species", vieta::to_species_text(eq)},
                   {"dimension", dim.value},
                   {"unknown", unknown}});
        return 0;
    }
    std::cout << "species: " << vieta::to_species_text(eq) << "\n";
    std::cout << "dimension: " << dim.value << "\n";
    if (!unknown.empty()) std::cout << "unknown: " << unknown << "\n";
    return 0;
}

int run_species_modern(const std::string& text, bool json) {
    vieta::SpeciesEquation eq = vieta::parse_species(text);
    vieta::ModernForm modern = vieta::to_modern(eq);
    if (json) {
        emit_json({{"species", vieta::to_species_text(eq)},
                   {"modern", modern.text},
                   {"normal_form", modern.normal_form.render()}});
        return 0;
    }
    std::cout << "modern: " << modern.text << "\n";
    std::cout << "normal form: " << modern.normal_form.render() << "\n";
    return 0;
}

int run_pi_viete(int terms, bool json, bool csv) {
    vieta::ApproximationSeries series = vieta::viete_product(terms);
    if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& e : series.entries) {
            nlohmann::json row{{"k", e.k},
                               {"value", static_cast<double>(e.value)},
                               {"abs_error", static_cast<double>(e.abs_error)}};
            if (e.error_ratio) row["error_ratio"] = *e.error_ratio;
            rows.push_back(std::move(row));
        }
        emit_json({{"terms", terms},
                   {"entries", std::move(rows)},
                   {"pi", static_cast<double>(series.entries.back().value)}});
        return 0;
    }
    if (csv) {
        std::cout << "k,value,abs_error,error_ratio\n";
        for (const auto& e : series.entries)
            std::cout << e.k << "," << fmt(e.value) << "," << fmt(e.abs_error) << ","
                      << (e.error_ratio ? fmt(*e.error_ratio) : std::string()) << "\n";
        return 0;
    }
    for (const auto& e : series.entries) {
        std::cout << "k=" << e.k << "  value=" << fmt(e.value)
                  << "  abs_error=" << fmt(e.abs_error);
        if (e.error_ratio) std::cout << "  ratio=" << fmt(*e.error_ratio);
        std::cout << "\n";
    }
    std::cout << "pi ~ " << fmt(series.entries.back().value) << "\n";
    return 0;
}

int run_pi_polygon(int doublings, bool json, bool csv) {
    auto rows = vieta::archimedes_series(doublings);
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& b : rows)
            out.push_back({{"k", b.k},
                           {"sides", b.sides},
                           {"lower", static_cast<double>(b.lower)},
                           {"upper", static_cast<double>(b.upper)},
                           {"midpoint", static_cast<double>(b.midpoint())}});
        emit_json({{"doublings", doublings},
                   {"rows", std::move(out)},
                   {"sides", rows.back().sides},
                   {"midpoint", static_cast<double>(rows.back().midpoint())}});
        return 0;
    }
    if (csv) {
        std::cout << "k,sides,lower,upper,midpoint\n";
        for (const auto& b : rows)
            std::cout << b.k << "," << b.sides << "," << fmt(b.lower) << "," << fmt(b.upper)
                      << "," << fmt(b.midpoint()) << "\n";
        return 0;
    }
    for (const auto& b : rows)
        std::cout << "k=" << b.k << "  n=" << b.sides << "  lower=" << fmt(b.lower)
                  << "  upper=" << fmt(b.upper) << "  midpoint=" << fmt(b.midpoint()) << "\n";
    std::cout << "n=" << rows.back().sides << "  midpoint=" << fmt(rows.back().midpoint())
              << "\n";
    return 0;
}

int run_vanroomen(double c, bool json) {
    auto roots = vieta::van_roomen_positive_roots(c);
    if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : roots)
            list.push_back({{"k", r.k},
                            {"value", r.value},
                            {"angle_deg", r.angle * 180.0 / 3.14159265358979323846},
                            {"multiplicity", r.multiplicity},
                            {"residual", r.residual}});
        emit_json({{"c", c}, {"count", roots.size()}, {"roots", std::move(list)}});
        return 0;
    }
    std::cout << "positive roots: " << roots.size() << "\n";
    for (const auto& r : roots)
        std::cout << "k=" << r.k << "  x=" << fmt(r.value)
                  << "  angle_deg=" << fmt(r.angle * 180.0 / 3.14159265358979323846)
                  << "  multiplicity=" << r.multiplicity << "  residual=" << fmt(r.residual)
                  << "\n";
    return 0;
}

int run_cubic(const std::string& coeffs_arg, bool json) {
    auto parts = split(coeffs_arg, ',');
    if (parts.size() != 3)
        throw vieta::Error(vieta::ErrorKind::parse,
                           "--coeffs expects exactly a2,a1,a0");
    const double a2 = parse_double(parts[0]);
    const double a1 = parse_double(parts[1]);
    const double a0 = parse_double(parts[2]);
    vieta::CubicSolution sol = vieta::solve_cubic_general(vieta::CubicProblem::monic(a2, a1, a0));
    if (json) {
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& r : sol.roots)
            roots.push_back({{"re", r.real()}, {"im", r.imag()}});
        nlohmann::json j{{"method", vieta::to_string(sol.method)},
                         {"roots", std::move(roots)},
                         {"real_roots", sol.real_roots}};
        if (sol.trace) j["trace"] = sol.trace->to_json();
        emit_json(j);
        return 0;
    }
    std::cout << "method: " << vieta::to_string(sol.method) << "\n";
    for (const auto& r : sol.roots) {
        std::cout << "root: " << fmt(r.real());
        if (r.imag() != 0.0) std::cout << (r.imag() < 0 ? " - " : " + ")
                                       << fmt(std::abs(r.imag())) << "i";
        std::cout << "\n";
    }
    return 0;
}

int run_trisect(double deg, bool json) {
    const double rad = deg * 3.14159265358979323846 / 180.0;
    vieta::TrisectionResult res = vieta::trisect_angle(rad);
    const double to_deg = 180.0 / 3.14159265358979323846;
    if (json) {
        emit_json({{"angle_deg", deg},
                   {"third_deg", res.analytic * to_deg},
                   {"geometric_deg", res.geometric * to_deg},
                   {"analytic_deg", res.analytic * to_deg},
                   {"difference", res.difference},
                   {"trace", res.trace.to_json()}});
        return 0;
    }
    std::cout << "angle: " << fmt(deg) << "\n";
    std::cout << "third: " << fmt(res.analytic * to_deg) << "\n";
    std::cout << "geometric: " << fmt(res.geometric * to_deg) << "\n";
    std::cout << "difference: " << fmt(res.difference) << "\n";
    return 0;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw vieta::Error(vieta::ErrorKind::construction_failure,
                           "cannot write \"" + path + "\"");
    out << body;
}

int run_heptagon(const std::string& svg_path, bool json) {
    vieta::HeptagonResult hep = vieta::heptagon_construct(vieta::Circle{{0.0, 0.0}, 1.0});
    vieta::CyclotomicReport cyc = vieta::heptagon_cyclotomic_check();

    if (!svg_path.empty()) {
        vieta::SvgFigure fig;
        fig.add_circle(vieta::Circle{{0.0, 0.0}, 1.0}, "#999999");
        std::vector<vieta::Point> ring(hep.vertices.begin(), hep.vertices.end());
        fig.add_polygon(ring, "#1f77b4");
        for (std::size_t k = 0; k < ring.size(); ++k)
            fig.add_point(ring[k], "V" + std::to_string(k));
        fig.add_segment(hep.vertices[0], vieta::Point{1.0, 0.0}, "#bbbbbb");
        fig.add_point(hep.d, "D", "#2ca02c");
        fig.add_point(hep.e, "E", "#2ca02c");
        fig.add_point(hep.f, "F", "#2ca02c");
        write_file(svg_path, fig.render());
    }

    if (json) {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : hep.vertices) verts.push_back({{"x", v.x}, {"y", v.y}});
        emit_json({{"side", hep.side},
                   {"central_angle", hep.central_angle},
                   {"neusis_x", hep.first.x},
                   {"neusis_x_analytic", hep.first.x_analytic},
                   {"cyclotomic_y", cyc.y},
                   {"cyclotomic_residual", cyc.residual},
                   {"vertices", std::move(verts)},
                   {"trace", hep.trace.to_json()}});
        return 0;
    }
    std::cout << "side: " << fmt(hep.side) << "\n";
    std::cout << "central angle: " << fmt(hep.central_angle) << "\n";
    std::cout << "neusis x: " << fmt(hep.first.x) << "\n";
    std::cout << "cyclotomic y: " << fmt(cyc.y) << "  residual: " << fmt(cyc.residual) << "\n";
    std::cout << "trace steps: " << hep.trace.steps().size()
              << (hep.trace.verified() ? " (verified)" : " (NOT verified)") << "\n";
    return 0;
}

int run_apollonius(const std::string& input_path, const std::string& svg_path, bool json) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in)
        throw vieta::Error(vieta::ErrorKind::parse, "cannot read \"" + input_path + "\"");
    nlohmann::json parsed;
    try {
        in >> parsed;
    } catch (const nlohmann::json::exception& e) {
        throw vieta::Error(vieta::ErrorKind::parse,
                           "invalid JSON in \"" + input_path + "\": " + e.what());
    }
    auto circles = vieta::apollonius_from_json(parsed);
    auto solutions = vieta::solve_ccc(circles[0], circles[1], circles[2]);

    if (!svg_path.empty()) {
        vieta::SvgFigure fig;
        for (const auto& c : circles) {
            fig.add_circle(c, "#222222");
            fig.add_point(c.center, "", "#222222");
        }
        const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
        for (std::size_t i = 0; i < solutions.size(); ++i)
            fig.add_circle(solutions[i].circle, palette[i % 8]);
        write_file(svg_path, fig.render());
    }

    if (json) {
        emit_json(vieta::apollonius_to_json(solutions));
        return 0;
    }
    auto report = vieta::classify_configuration(circles[0], circles[1], circles[2]);
    std::cout << "configuration: " << report.note << "\n";
    auto centers = vieta::all_similitude_centers(circles[0], circles[1], circles[2]);
    const char* pair_names[3] = {"(1,2)", "(1,3)", "(2,3)"};
    for (std::size_t k = 0; k < 3; ++k) {
        auto describe = [&](const vieta::SimilitudeResult& r) -> std::string {
            if (const auto* at = std::get_if<vieta::SimilitudeAtInfinity>(&r))
                return "at infinity along (" + fmt(at->direction.x) + ", " +
                       fmt(at->direction.y) + ")";
            const auto& c = std::get<vieta::SimilitudeCenter>(r);
            return "(" + fmt(c.point.x) + ", " + fmt(c.point.y) + ")";
        };
        std::cout << "similitude " << pair_names[k] << ": external " << describe(centers[k].external)
                  << ", internal " << describe(centers[k].internal) << "\n";
    }
    std::cout << "solutions: " << solutions.size() << "\n";
    for (const auto& s : solutions) {
        std::cout << "  (" << fmt(s.circle.center.x) << ", " << fmt(s.circle.center.y)
                  << ") r=" << fmt(s.circle.radius) << "  orientations:";
        for (const auto& o : s.orientations)
            std::cout << " [" << o.signs[0] << "," << o.signs[1] << "," << o.signs[2] << "]";
        std::cout << "\n";
    }
    return 0;
}

int run_solve(const std::string& text, const std::string& given, bool json) {
    vieta::PipelineRequest request;
    request.species_text = text;
    request.output = json ? vieta::OutputFormat::json : vieta::OutputFormat::table;
    if (!given.empty()) {
        for (const auto& item : split(given, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw vieta::Error(vieta::ErrorKind::parse,
                                   "--given expects L=V pairs, got \"" + item + "\"");
            std::string letter = item.substr(0, eq);
            if (letter.size() != 1 || !std::isalpha(static_cast<unsigned char>(letter[0])))
                throw vieta::Error(vieta::ErrorKind::parse,
                                   "binding letter must be a single letter, got \"" + letter +
                                       "\"");
            request.bindings[static_cast<char>(
                std::toupper(static_cast<unsigned char>(letter[0])))] =
                parse_rational(item.substr(eq + 1));
        }
    }
    vieta::PipelineReport report = vieta::run_pipeline(request);
    if (json) {
        emit_json(vieta::pipeline_to_json(report));
        return 0;
    }
    std::cout << "zetetic:\n";
    std::cout << "  species: " << report.zetetic.species_text << "\n";
    std::cout << "  modern: " << report.zetetic.modern_text << "\n";
    std::cout << "  normal form: " << report.zetetic.normal_form << "\n";
    std::cout << "  bound: " << render_monic(report.zetetic.polynomial, "x") << "\n";
    std::cout << "poristic:\n";
    std::cout << "  degree: " << report.poristic.degree << "\n";
    std::cout << "  route: " << report.poristic.route << "\n";
    if (report.poristic.exact_root)
        std::cout << "  exact root: " << vieta::to_string(*report.poristic.exact_root) << "\n";
    std::cout << "exegetic:\n";
    for (const auto& r : report.exegetic.roots) {
        std::cout << "  root: " << fmt(r.real());
        if (r.imag() != 0.0) std::cout << (r.imag() < 0 ? " - " : " + ")
                                       << fmt(std::abs(r.imag())) << "i";
        std::cout << "\n";
    }
    std::cout << "  note: " << report.exegetic.note << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("VIETA_PRECISION")) {
        int digits = 0;
        auto res = std::from_chars(env, env + std::string(env).size(), digits);
        if (res.ec != std::errc{} || *res.ptr != '\0' || digits < 4 || digits > 17) {
            std::cerr << "VIETA_PRECISION must be an integer in 4..17\n";
            return 2;
        }
        g_digits = digits;
    }

    CLI::App app{"Species logistic, chord equations, neusis constructions, and the\n"
                 "tangency problem of Apollonius, behind one binary."};
    app.fallthrough();

    std::string roots_arg;
    app.add_option("--roots", roots_arg, "comma-separated roots; prints the monic polynomial "
                                         "and its root sums/products");
    bool json = false, csv = false;
    app.add_flag("--json", json, "emit JSON");
    app.add_flag("--csv", csv, "emit CSV (tables only)");

    // species
    auto* species = app.add_subcommand("species", "parse or transliterate species notation");
    species->require_subcommand(1);
    std::string species_text;
    auto* species_parse = species->add_subcommand("parse", "parse and homogeneity-check");
    species_parse->add_option("text", species_text, "species equation")->required();
    auto* species_modern = species->add_subcommand("modern", "transliterate to modern form");
    species_modern->add_option("text", species_text, "species equation")->required();

    // pi
    auto* pi = app.add_subcommand("pi", "approximations of pi");
    pi->require_subcommand(1);
    int terms = 18, doublings = 16;
    auto* pi_viete = pi->add_subcommand("viete", "nested-radical infinite product");
    pi_viete->add_option("--terms", terms, "number of product terms")->required();
    auto* pi_polygon = pi->add_subcommand("polygon", "inscribed/circumscribed polygon doubling");
    pi_polygon->add_option("--doublings", doublings, "number of doublings from the hexagon")
        ->required();

    // vanroomen
    auto* vanroomen = app.add_subcommand("vanroomen", "positive roots of the degree-45 chord equation");
    double c_value = 0.0;
    vanroomen->add_option("--c", c_value, "right-hand side, 0 < c <= 2")->required();

    // cubic
    auto* cubic = app.add_subcommand("cubic", "solve x^3 + a2 x^2 + a1 x + a0 = 0");
    std::string coeffs_arg;
    cubic->add_option("--coeffs", coeffs_arg, "a2,a1,a0")->required();

    // trisect
    auto* trisect = app.add_subcommand("trisect", "trisect an angle by neusis");
    double deg = 0.0;
    trisect->add_option("--deg", deg, "angle in degrees, 0 < deg < 180")->required();

    // heptagon
    auto* heptagon = app.add_subcommand("heptagon", "regular heptagon by neusis");
    std::string heptagon_svg;
    heptagon->add_option("--svg", heptagon_svg, "write an SVG figure to this path");

    // apollonius
    auto* apollonius = app.add_subcommand("apollonius", "circles tangent to three given circles");
    std::string apollonius_input, apollonius_svg;
    apollonius->add_option("--input", apollonius_input, "JSON file with three circles")
        ->required();
    apollonius->add_option("--svg", apollonius_svg, "write an SVG figure to this path");

    // solve
    auto* solve = app.add_subcommand("solve", "zetetic/poristic/exegetic pipeline");
    std::string solve_species, solve_given;
    solve->add_option("--species", solve_species, "species equation")->required();
    solve->add_option("--given", solve_given, "bindings L=V,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (species_parse->parsed()) return run_species_parse(species_text, json);
        if (species_modern->parsed()) return run_species_modern(species_text, json);
        if (pi_viete->parsed()) return run_pi_viete(terms, json, csv);
        if (pi_polygon->parsed()) return run_pi_polygon(doublings, json, csv);
        if (vanroomen->parsed()) return run_vanroomen(c_value, json);
        if (cubic->parsed()) return run_cubic(coeffs_arg, json);
        if (trisect->parsed()) return run_trisect(deg, json);
        if (heptagon->parsed()) return run_heptagon(heptagon_svg, json);
        if (apollonius->parsed()) return run_apollonius(apollonius_input, apollonius_svg, json);
        if (solve->parsed()) return run_solve(solve_species, solve_given, json);
        if (!roots_arg.empty()) return run_roots(roots_arg, json);
    } catch (const vieta::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cerr << app.help();
    return 2;
}

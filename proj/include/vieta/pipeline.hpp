#pragma once

// The three-stage analytic pipeline: zetetic (set up the equation in species
// and bind the given magnitudes), poristic (route the bound polynomial to the
// solver its degree admits), exegetic (exhibit the roots numerically or by a
// verified construction).

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vieta/error.hpp"
#include "vieta/polynomial.hpp"
#include "vieta/quadratic.hpp"
#include "vieta/rational.hpp"
#include "vieta/species.hpp"
#include "vieta/trisection.hpp"

namespace vieta {

enum class OutputFormat { table, json, csv, svg };

struct PipelineRequest {
    std::string species_text;
    std::map<char, Rational> bindings;  // consonant letter -> given magnitude
    OutputFormat output = OutputFormat::table;
};

struct ZeteticStage {
    SpeciesEquation equation;
    std::string species_text;  // canonical species rendering
    std::string modern_text;   // transliterated equation
    std::string normal_form;   // P(x) = 0 with symbolic coefficients
    Polynomial polynomial;     // exact coefficients after binding
};

struct PoristicStage {
    std::size_t degree = 0;
    std::string route;  // which solver the degree admits
    std::vector<std::complex<double>> roots;  // ascending by (re, im)
    std::optional<Rational> exact_root;       // degree 1 only
    std::optional<CubicSolution> cubic;       // degree 3 only
};

struct ExegeticStage {
    std::vector<std::complex<double>> roots;  // same order as poristic
    std::optional<ConstructionTrace> trace;   // three-real cubic case
    std::string note;
};

struct PipelineReport {
    PipelineRequest request;
    ZeteticStage zetetic;
    PoristicStage poristic;
    ExegeticStage exegetic;
};

namespace detail {

inline void sort_roots(std::vector<std::complex<double>>& roots) {
    std::sort(roots.begin(), roots.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  return a.imag() < b.imag();
              });
}

}  // namespace detail

inline PipelineReport run_pipeline(const PipelineRequest& request) {
    PipelineReport report;
    report.request = request;

    // Zetetic: from the stated question to a bound polynomial.
    ZeteticStage& zet = report.zetetic;
    zet.equation = parse_species(request.species_text);
    zet.species_text = to_species_text(zet.equation);
    ModernForm modern = to_modern(zet.equation);
    zet.modern_text = modern.text;
    zet.normal_form = modern.normal_form.render();
    zet.polynomial = bind_values(zet.equation, request.bindings);

    // Poristic: the degree decides which construction is possible.
    PoristicStage& por = report.poristic;
    por.degree = zet.polynomial.degree();
    const auto& coeffs = zet.polynomial.coefficients();
    switch (por.degree) {
        case 0:
            throw Error(ErrorKind::degenerate_input,
                        "poristic stage: the equation binds to a constant, nothing to solve");
        case 1: {
            por.route = "linear division";
            por.exact_root = -coeffs[0] / coeffs[1];
            por.roots.emplace_back(to_double(*por.exact_root), 0.0);
            break;
        }
        case 2: {
            por.route = "canonical quadratic (completing the square)";
            const double b = to_double(coeffs[1] / coeffs[2]);
            const double c = to_double(-coeffs[0] / coeffs[2]);
            auto real_roots = solve_quadratic_canonical(b, c);
            if (!real_roots.empty()) {
                for (const auto& r : real_roots) por.roots.emplace_back(r.value, 0.0);
            } else {
                const double half = std::sqrt(-(b * b + 4.0 * c)) / 2.0;
                por.roots.emplace_back(-b / 2.0, -half);
                por.roots.emplace_back(-b / 2.0, half);
            }
            break;
        }
        case 3: {
            por.route = "general cubic";
            const double a3 = to_double(coeffs[3]);
            por.cubic = solve_cubic_general(CubicProblem::general(
                a3, to_double(coeffs[2]), to_double(coeffs[1]), to_double(coeffs[0])));
            por.roots.assign(por.cubic->roots.begin(), por.cubic->roots.end());
            break;
        }
        default:
            throw Error(ErrorKind::unsupported_degree,
                        "poristic stage: degree " + std::to_string(por.degree) +
                            " admits no quadratic or cubic construction");
    }
    detail::sort_roots(por.roots);

    // Exegetic: exhibit the solution.
    ExegeticStage& exe = report.exegetic;
    exe.roots = por.roots;
    if (por.cubic && por.cubic->trace) {
        exe.trace = por.cubic->trace;
        exe.note = "three real roots exhibited by angle trisection";
    } else if (por.degree == 3) {
        exe.note = std::string("cubic resolved by ") + to_string(por.cubic->method);
    } else if (por.degree == 2) {
        exe.note = por.roots.front().imag() == 0.0 ? "two roots by completing the square"
                                                   : "conjugate pair; no real construction";
    } else {
        exe.note = "the unknown equals the bound ratio";
    }
    return report;
}

inline nlohmann::json pipeline_to_json(const PipelineReport& report) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : report.exegetic.roots)
        roots.push_back({{"re", r.real()}, {"im", r.imag()}});

    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : report.zetetic.polynomial.coefficients())
        coeffs.push_back(to_string(c));

    nlohmann::json j{
        {"zetetic",
         {{"species", report.zetetic.species_text},
          {"modern", report.zetetic.modern_text},
          {"normal_form", report.zetetic.normal_form},
          {"coefficients", std::move(coeffs)}}},
        {"poristic",
         {{"degree", report.poristic.degree}, {"route", report.poristic.route}}},
        {"exegetic", {{"roots", std::move(roots)}, {"note", report.exegetic.note}}}};
    if (report.poristic.exact_root)
        j["poristic"]["exact_root"] = to_string(*report.poristic.exact_root);
    if (report.poristic.cubic)
        j["poristic"]["method"] = to_string(report.poristic.cubic->method);
    if (report.exegetic.trace) j["exegetic"]["trace"] = report.exegetic.trace->to_json();
    return j;
}

}  // namespace vieta

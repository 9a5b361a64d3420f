#pragma once

// Audit trail for geometric constructions. Every step carries a named
// assertion with a measured residual; a residual above its tolerance is an
// error, not a warning.

#include <charconv>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "error.hpp"
#include "geometry.hpp"

namespace vieta {

namespace detail {

inline std::string full_digits(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace detail

struct TraceStep {
    std::string name;
    std::vector<std::pair<std::string, std::string>> objects;  // label -> rendered value
    std::string assertion;
    double residual = 0.0;
    double tolerance = 0.0;
};

class ConstructionTrace {
public:
    class StepBuilder {
    public:
        StepBuilder(ConstructionTrace& trace, std::string name)
            : trace_(trace) {
            step_.name = std::move(name);
        }

        StepBuilder& object(const std::string& label, const Point& p) {
            step_.objects.emplace_back(
                label, "(" + detail::full_digits(p.x) + ", " + detail::full_digits(p.y) + ")");
            return *this;
        }

        StepBuilder& object(const std::string& label, const Circle& c) {
            step_.objects.emplace_back(label, "circle center (" + detail::full_digits(c.center.x) +
                                                  ", " + detail::full_digits(c.center.y) +
                                                  ") radius " + detail::full_digits(c.radius));
            return *this;
        }

        StepBuilder& object(const std::string& label, double v) {
            step_.objects.emplace_back(label, detail::full_digits(v));
            return *this;
        }

        StepBuilder& object(const std::string& label, const std::string& text) {
            step_.objects.emplace_back(label, text);
            return *this;
        }

        // Records the step and enforces its tolerance.
        void assert_residual(const std::string& assertion, double residual, double tolerance) {
            step_.assertion = assertion;
            step_.residual = std::abs(residual);
            step_.tolerance = tolerance;
            trace_.commit(std::move(step_));
        }

    private:
        ConstructionTrace& trace_;
        TraceStep step_;
    };

    StepBuilder step(std::string name) { return StepBuilder(*this, std::move(name)); }

    const std::vector<TraceStep>& steps() const { return steps_; }
    bool verified() const { return verified_ && !steps_.empty(); }

    double max_residual_ratio() const {
        double worst = 0.0;
        for (const auto& s : steps_)
            if (s.tolerance > 0.0) worst = std::max(worst, s.residual / s.tolerance);
        return worst;
    }

    nlohmann::json to_json() const {
        nlohmann::json out;
        out["steps"] = nlohmann::json::array();
        for (const auto& s : steps_) {
            nlohmann::json objs = nlohmann::json::object();
            for (const auto& [label, value] : s.objects) objs[label] = value;
            out["steps"].push_back({{"name", s.name},
                                    {"objects", objs},
                                    {"assertion", s.assertion},
                                    {"residual", s.residual},
                                    {"tol", s.tolerance}});
        }
        out["verified"] = verified();
        return out;
    }

private:
    void commit(TraceStep&& step) {
        if (!(step.residual <= step.tolerance)) {
            std::ostringstream msg;
            msg << "construction step \"" << step.name << "\" failed: " << step.assertion
                << " has residual " << step.residual << " > tolerance " << step.tolerance;
            verified_ = false;
            throw Error(ErrorKind::trace_verification, msg.str());
        }
        steps_.push_back(std::move(step));
        verified_ = true;
    }

    std::vector<TraceStep> steps_;
    bool verified_ = false;
};

}  // namespace vieta

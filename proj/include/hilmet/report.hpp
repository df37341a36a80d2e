#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hilmet/numeric.hpp"

namespace hilmet {

// Named quantities produced by a check or a metric evaluation, with pass state.
// Values keep insertion order so text and JSON renderings are stable.
struct MetricReport {
    std::string title;
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::pair<std::string, std::string>> notes;
    bool pass = true;

    void put(const std::string& key, double value) { values.emplace_back(key, value); }

    void note(const std::string& key, const std::string& text) { notes.emplace_back(key, text); }

    // Records a named residual and folds |residual| <= tol into the pass flag.
    void check(const std::string& key, double residual, double tol) {
        values.emplace_back(key, residual);
        if (!(std::fabs(residual) <= tol)) pass = false;
    }

    double get(const std::string& key) const {
        for (const auto& [k, v] : values)
            if (k == key) return v;
        throw Error("report '" + title + "' has no value named '" + key + "'");
    }

    std::string to_text(int digits = 12) const {
        std::string out = title + "\n";
        for (const auto& [k, v] : notes) out += "  " + k + ": " + v + "\n";
        for (const auto& [k, v] : values) out += "  " + k + ": " + fmt_g(v, digits) + "\n";
        out += std::string("  pass: ") + (pass ? "true" : "false") + "\n";
        return out;
    }
};

}  // namespace hilmet

#pragma once

#include "cqg/calculus.hpp"

namespace cqg {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Run configuration shared by every suite.
struct SuiteConfig {
    std::vector<std::string> palette = {"lambda", "mu"};
    /// Colours pinned to exact rational values; the rest stay symbolic.
    std::map<std::string, Rational> fixed_colours;
    /// Extra exact q values at which symbolic zeros are re-evaluated.
    std::vector<Rational> q_specializations;
    /// Colour assignments used together with q_specializations.
    std::vector<std::map<std::string, Rational>> colour_specializations;
    std::string c_plus = "1";
    std::string c_minus = "1";
    std::string order = "deglex";
    long step_budget = 100000;
    std::vector<std::string> rll_variants = {"first-colour", "second-colour"};

    Palette make_palette() const;
};

/// Key-value config file, one `key = value` per line, `#` comments.
/// Unknown keys and invalid values raise ValidationError; malformed lines
/// raise ParseError with the line number.
SuiteConfig parse_config(const std::string& path);

/// Stable fingerprint of everything that influences suite results.
std::string config_hash(const SuiteConfig& cfg);

struct ReportEntry {
    std::string id;
    std::string status;  // pass | fail | reported
    std::size_t residual_terms = 0;
    std::string anchor;
    long long ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::string config_hash;
    std::vector<ReportEntry> checks;

    /// Exit-code gate: reported entries never count.
    bool gate_ok() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

const std::vector<std::string>& suite_names();  // ybe rtt hopf duality rll calculus all

/// Execute one suite (or all of them, in registry order) under the given
/// configuration.  Check failures are report content, never exceptions.
VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// Serialize a report; format is "json" or "text".  The JSON layout is
/// {suite, config_hash, checks:[{id, status, anchor, residual_terms, ms}]}
/// and is byte-stable for a fixed config once the ms fields are masked.
std::string emit_report(const VerificationReport& r, const std::string& format);

/// Defining relations of the palette in the scalar/word grammar.
std::string render_relations(const Palette& p);

/// The four coefficient tables of the calculus (one-form commutation,
/// vector-field values, convolutions, exterior derivatives), one line per
/// entry, coefficients as scalar strings.
std::string render_tables(const Palette& p);

}  // namespace cqg

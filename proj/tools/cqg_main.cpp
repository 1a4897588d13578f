#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "cqg/report.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string format = "text";
    std::vector<std::string> q_values;
    std::vector<std::string> colour_pins;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "configuration file (key = value lines)");
    cmd->add_option("--format", o.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--q", o.q_values, "extra exact q value for cross-evaluation");
    cmd->add_option("--colour", o.colour_pins,
                    "pin a palette colour to an exact value, name=value");
}

cqg::SuiteConfig load_config(const CommonOpts& o) {
    cqg::SuiteConfig cfg;
    if (!o.config_path.empty()) cfg = cqg::parse_config(o.config_path);
    for (const std::string& v : o.q_values)
        cfg.q_specializations.push_back(cqg::Rational(v));
    for (const std::string& pin : o.colour_pins) {
        std::size_t eq = pin.find('=');
        if (eq == std::string::npos)
            throw cqg::ValidationError("--colour expects name=value: " + pin);
        cfg.fixed_colours[pin.substr(0, eq)] = cqg::Rational(pin.substr(eq + 1));
    }
    if (const char* env = std::getenv("CQG_STEP_BUDGET")) {
        long budget = std::stol(env);
        if (budget <= 0)
            throw cqg::ValidationError("CQG_STEP_BUDGET must be positive");
        cfg.step_budget = budget;
    }
    return cfg;
}

int emit_and_gate(const cqg::VerificationReport& rep, const std::string& format,
                  const cqg::Palette& palette, bool with_tables) {
    std::cout << cqg::emit_report(rep, format);
    if (with_tables && format == "text") std::cout << "\n" << cqg::render_tables(palette);
    return rep.gate_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic verification workbench for the coloured deformation"};
    app.require_subcommand(1);

    CommonOpts verify_opts, dump_opts, limits_opts;
    std::string suite, what;

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(cqg::suite_names()));
    add_common(verify, verify_opts);

    CLI::App* dump = app.add_subcommand("dump", "print relations or calculus tables");
    dump->add_option("what", what, "relations or tables")
        ->required()
        ->check(CLI::IsMember({"relations", "tables"}));
    add_common(dump, dump_opts);

    CLI::App* limits =
        app.add_subcommand("limits", "re-run every suite in the degenerate palettes");
    add_common(limits, limits_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            cqg::SuiteConfig cfg = load_config(verify_opts);
            cqg::VerificationReport rep = cqg::run_suite(suite, cfg);
            bool tables = suite == "calculus" || suite == "all";
            return emit_and_gate(rep, verify_opts.format, cfg.make_palette(), tables);
        }
        if (dump->parsed()) {
            cqg::SuiteConfig cfg = load_config(dump_opts);
            cqg::Palette p = cfg.make_palette();
            std::cout << (what == "relations" ? cqg::render_relations(p)
                                              : cqg::render_tables(p));
            return 0;
        }
        // limits: a single zero colour, then a shared symbolic colour
        cqg::SuiteConfig base = load_config(limits_opts);
        int rc = 0;
        for (const char* mode : {"colourless", "monochromatic"}) {
            cqg::SuiteConfig cfg = base;
            cfg.q_specializations.clear();
            cfg.colour_specializations.clear();
            if (std::string(mode) == "colourless") {
                cfg.palette = {"c0"};
                cfg.fixed_colours = {{"c0", cqg::Rational(0)}};
            } else {
                cfg.palette = {"c"};
                cfg.fixed_colours.clear();
            }
            std::cout << "== " << mode << " ==\n";
            cqg::VerificationReport rep = cqg::run_suite("all", cfg);
            std::cout << cqg::emit_report(rep, limits_opts.format);
            if (!rep.gate_ok()) rc = 1;
        }
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

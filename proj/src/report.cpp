#include "cqg/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace cqg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Rational parse_rational(const std::string& text, const std::string& key) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw ValidationError("invalid rational '" + text + "' for key " + key);
    }
}

std::map<std::string, Rational> parse_assignment(const std::string& group,
                                                 const std::string& key) {
    std::map<std::string, Rational> out;
    std::stringstream ss(group);
    std::string pair;
    while (ss >> pair) {
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw ValidationError("expected name=value in key " + key + ": " + pair);
        out[pair.substr(0, eq)] = parse_rational(pair.substr(eq + 1), key);
    }
    return out;
}

}  // namespace

Palette SuiteConfig::make_palette() const {
    Palette p;
    p.names = palette;
    for (const std::string& n : palette) {
        auto it = fixed_colours.find(n);
        p.values.push_back(it == fixed_colours.end() ? Exponent::sym(n)
                                                     : Exponent::constant(it->second));
    }
    return p;
}

SuiteConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file " + path);
    SuiteConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "palette") {
            cfg.palette = split(value, ',');
            if (cfg.palette.empty()) throw ValidationError("palette must not be empty");
        } else if (key == "step_budget") {
            try {
                cfg.step_budget = std::stol(value);
            } catch (const std::exception&) {
                throw ValidationError("invalid integer for key step_budget");
            }
            if (cfg.step_budget <= 0)
                throw ValidationError("step_budget must be positive");
        } else if (key == "c_plus") {
            cfg.c_plus = value;
        } else if (key == "c_minus") {
            cfg.c_minus = value;
        } else if (key == "order") {
            if (value != "deglex")
                throw ValidationError("unsupported order '" + value + "'");
            cfg.order = value;
        } else if (key == "q_specializations") {
            cfg.q_specializations.clear();
            for (const std::string& v : split(value, ','))
                cfg.q_specializations.push_back(parse_rational(v, key));
        } else if (key == "colour_specializations") {
            cfg.colour_specializations.clear();
            for (const std::string& g : split(value, ';'))
                cfg.colour_specializations.push_back(parse_assignment(g, key));
        } else if (key == "fixed_colours") {
            cfg.fixed_colours = parse_assignment(value, key);
        } else if (key == "rll_variants") {
            cfg.rll_variants = split(value, ',');
        } else {
            throw ValidationError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

std::string config_hash(const SuiteConfig& cfg) {
    std::string canon = "palette:";
    for (const auto& n : cfg.palette) canon += n + ",";
    canon += ";fixed:";
    for (const auto& [n, v] : cfg.fixed_colours) canon += n + "=" + v.str() + ",";
    canon += ";q:";
    for (const auto& v : cfg.q_specializations) canon += v.str() + ",";
    canon += ";colspec:";
    for (const auto& a : cfg.colour_specializations) {
        for (const auto& [n, v] : a) canon += n + "=" + v.str() + ",";
        canon += ";";
    }
    canon += ";c+:" + cfg.c_plus + ";c-:" + cfg.c_minus + ";order:" + cfg.order;
    canon += ";budget:" + std::to_string(cfg.step_budget) + ";rll:";
    for (const auto& v : cfg.rll_variants) canon += v + ",";

    // FNV-1a, 64 bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

long long since_ms(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

void push_entry(VerificationReport& out, std::string id, std::string status,
                std::size_t residual, std::string anchor, long long ms) {
    out.checks.push_back(
        {std::move(id), std::move(status), residual, std::move(anchor), ms});
}

void append_report(VerificationReport& out, const CheckReport& rep,
                   const std::string& anchor, long long ms) {
    for (const CheckResult& c : rep.checks)
        push_entry(out, c.id, c.advisory ? "reported" : (c.pass ? "pass" : "fail"),
                   c.residual_terms, anchor, ms);
}

// Exact rational square root, when one exists; lets half-integer exponents
// evaluate at perfect-square q values.
std::optional<Rational> exact_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    Int num = boost::multiprecision::sqrt(numerator(v));
    Int den = boost::multiprecision::sqrt(denominator(v));
    if (num * num != numerator(v) || den * den != denominator(v)) return std::nullopt;
    return Rational(num, den);
}

// Three pairwise distinct colour exponents: the palette's own, extended with
// fresh symbols when it is too small.
std::vector<Exponent> three_colours(const Palette& p) {
    std::vector<Exponent> cols;
    for (int i = 0; i < p.size() && cols.size() < 3; ++i) cols.push_back(p.value(i));
    for (const char* extra : {"nu", "xi"}) {
        if (cols.size() >= 3) break;
        std::string name = extra;
        while (std::find(p.names.begin(), p.names.end(), name) != p.names.end())
            name += "_";
        cols.push_back(Exponent::sym(name));
    }
    return cols;
}

void run_ybe(VerificationReport& out, const SuiteConfig& cfg) {
    Palette p = cfg.make_palette();
    std::vector<Exponent> c = three_colours(p);
    const std::string anchor = "braid identity of the coloured matrix";

    auto t0 = Clock::now();
    ScalarMatrix res = check_cqybe(c[0], c[1], c[2]);
    push_entry(out, "coloured-ybe", res.is_zero() ? "pass" : "fail",
               static_cast<std::size_t>(res.nonzero_count()), anchor, since_ms(t0));

    t0 = Clock::now();
    ScalarMatrix bres = check_braided_ybe(c[0], c[1], c[2]);
    push_entry(out, "braided-ybe", bres.is_zero() ? "pass" : "fail",
               static_cast<std::size_t>(bres.nonzero_count()), anchor, since_ms(t0));
}

void run_rtt(VerificationReport& out, const SuiteConfig& cfg) {
    Palette p = cfg.make_palette();
    const std::string anchor = "defining exchange relations";

    // the single-colour zero-value run reproduces the classical relation
    // set: every classical relation appears verbatim (the extraction also
    // emits the a-d exchange in its second, equivalent form), and everything
    // extracted lies in the classical ideal
    auto t0 = Clock::now();
    Palette cl = Palette::colourless();
    std::vector<NCPoly> extracted = all_relations(cl);
    std::vector<NCPoly> standard = standard_glq2_relations(0);
    RewriteSystem std_rs = build_rewrite_system(standard, cfg.step_budget);
    std::size_t mism = 0;
    for (const NCPoly& r : standard)
        if (std::find(extracted.begin(), extracted.end(), r) == extracted.end())
            ++mism;
    for (const NCPoly& r : extracted)
        if (!std_rs.normal_form(r).is_zero()) ++mism;
    push_entry(out, "colourless-matches-standard", mism == 0 ? "pass" : "fail", mism,
               anchor, since_ms(t0));

    t0 = Clock::now();
    RewriteSystem rs = build_rewrite_system(all_relations(p), cfg.step_budget);
    std::size_t bad = rs.confluence_probe(4).size();
    push_entry(out, "confluence-probe", bad == 0 ? "pass" : "fail", bad, anchor,
               since_ms(t0));

    // the two reduction strategies agree on a deterministic word sample
    t0 = Clock::now();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> lp(0, 3), cp(0, p.size() - 1);
    std::size_t nf_mism = 0;
    for (int i = 0; i < 16; ++i) {
        NCPoly w = NCPoly::one();
        for (int j = 0; j < 3; ++j)
            w = w * NCPoly::gen({static_cast<Letter>(lp(rng)), cp(rng)});
        if (rs.normal_form(w) != rs.normal_form_alt(w)) ++nf_mism;
    }
    push_entry(out, "normal-form-strategies-agree", nf_mism == 0 ? "pass" : "fail",
               nf_mism, anchor, since_ms(t0));
}

void run_hopf(VerificationReport& out, const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep = check_group_hopf(cfg.make_palette(), cfg.step_budget);
    append_report(out, rep, "coproduct, counit, antipode, determinant", since_ms(t0));
}

void run_duality(VerificationReport& out, const SuiteConfig& cfg) {
    Palette p = cfg.make_palette();
    auto t0 = Clock::now();
    append_report(out, check_L_pairing(p), "pairing matrices of the triangular functionals",
                  since_ms(t0));
    t0 = Clock::now();
    append_report(out, check_pairing_well_defined(p), "pairing against the relation ideal",
                  since_ms(t0));
    t0 = Clock::now();
    append_report(out, check_dual_relations_in_rho(p),
                  "dual relations in the fundamental representation", since_ms(t0));
    t0 = Clock::now();
    append_report(out, check_dual_hopf(p), "dual hopf axioms", since_ms(t0));
}

void run_rll(VerificationReport& out, const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    append_report(out, check_rll(cfg.make_palette()),
                  "exchange identities in the fundamental representation", since_ms(t0));
}

void run_calculus(VerificationReport& out, const SuiteConfig& cfg) {
    Palette p = cfg.make_palette();
    auto t0 = Clock::now();
    append_report(out, check_calculus_tables(p), "first-order calculus coefficient tables",
                  since_ms(t0));
    t0 = Clock::now();
    append_report(out, check_calculus_leibniz(p, cfg.step_budget),
                  "product rule and ideal compatibility", since_ms(t0));

    // exact cross-evaluation of two table coefficients at every configured q
    // value: specialize directly, and substitute the colours first, then
    // specialize; both paths must agree
    for (std::size_t qi = 0; qi < cfg.q_specializations.size(); ++qi) {
        t0 = Clock::now();
        const Rational& qv = cfg.q_specializations[qi];
        std::map<std::string, Rational> colours;
        if (!cfg.colour_specializations.empty()) colours = cfg.colour_specializations[0];
        Rational fill = 1;
        for (const std::string& n : p.names)
            if (!colours.count(n)) colours[n] = fill++;
        Rational cp = parse_rational(cfg.c_plus, "c_plus");
        Rational cm = parse_rational(cfg.c_minus, "c_minus");

        std::map<std::string, Exponent> consts;
        for (const auto& [n, v] : colours) consts[n] = Exponent::constant(v);
        std::optional<Rational> root = exact_sqrt(qv);

        std::size_t mism = 0;
        std::string status = "pass";
        std::vector<Scalar> samples = {
            omega_times(p, 0, OneForm::w1, NCPoly::gen({Letter::a, 0}),
                        PairingScheme::printed)
                .at(OneForm::w1)
                .terms()
                .begin()
                ->second,
            chi_apply(p, 0, OneForm::wplus, NCPoly::gen({Letter::c, 0}),
                      PairingScheme::printed)};
        try {
            for (const Scalar& v : samples)
                if (v.specialize(qv, colours, root, cp, cm) !=
                    v.substitute(consts).specialize(qv, {}, root, cp, cm))
                    ++mism;
            if (mism) status = "fail";
        } catch (const NonIntegralExponent&) {
            status = "fail";
            mism = samples.size();
        }
        push_entry(out, "coefficient-specialization-" + std::to_string(qi), status,
                   mism, "exact evaluation cross-check", since_ms(t0));
    }
}

using SuiteFn = void (*)(VerificationReport&, const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"ybe", run_ybe},         {"rtt", run_rtt}, {"hopf", run_hopf},
        {"duality", run_duality}, {"rll", run_rll}, {"calculus", run_calculus}};
    return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        n.push_back("all");
        return n;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    VerificationReport out;
    out.suite = name;
    out.config_hash = cqg::config_hash(cfg);
    bool found = false;
    for (const auto& [sname, fn] : registry()) {
        if (name == "all" || name == sname) {
            fn(out, cfg);
            found = true;
        }
    }
    if (!found) throw ValidationError("unknown suite '" + name + "'");

    // every colour assignment triggers a full numeric re-run of the suite;
    // symbolic zeros must stay zero at exact rational colours
    if (!cfg.colour_specializations.empty()) {
        for (std::size_t i = 0; i < cfg.colour_specializations.size(); ++i) {
            auto t0 = Clock::now();
            SuiteConfig sub = cfg;
            sub.colour_specializations.clear();
            sub.q_specializations.clear();
            sub.fixed_colours = cfg.colour_specializations[i];
            VerificationReport inner = run_suite(name, sub);
            std::size_t fails = 0;
            for (const auto& c : inner.checks)
                if (c.status == "fail") ++fails;
            push_entry(out, "colour-specialization-" + std::to_string(i),
                       fails == 0 ? "pass" : "fail", fails,
                       "numeric colour re-run", since_ms(t0));
        }
    }
    return out;
}

std::string emit_report(const VerificationReport& r, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["config_hash"] = r.config_hash;
        j["checks"] = nlohmann::ordered_json::array();
        for (const ReportEntry& c : r.checks)
            j["checks"].push_back({{"id", c.id},
                                   {"status", c.status},
                                   {"anchor", c.anchor},
                                   {"residual_terms", c.residual_terms},
                                   {"ms", c.ms}});
        return j.dump(2) + "\n";
    }
    if (format != "text")
        throw ValidationError("unknown report format '" + format + "'");
    std::ostringstream os;
    os << "suite: " << r.suite << "\nconfig: " << r.config_hash << "\n";
    for (const ReportEntry& c : r.checks) {
        os << "  " << c.status;
        for (std::size_t i = c.status.size(); i < 9; ++i) os << ' ';
        os << c.id << ' ';
        for (std::size_t i = c.id.size(); i < 44; ++i) os << ' ';
        os << "residual " << c.residual_terms << "  (" << c.ms << " ms)  " << c.anchor
           << "\n";
    }
    return os.str();
}

std::string render_relations(const Palette& p) {
    std::ostringstream os;
    std::vector<NCPoly> rels = all_relations(p);
    os << "# " << rels.size() << " defining relations\n";
    for (const NCPoly& r : rels) os << r.str(p) << " = 0\n";
    return os.str();
}

std::string render_tables(const Palette& p) {
    std::ostringstream os;
    std::vector<std::pair<Letter, const char*>> letters = {
        {Letter::a, "a"}, {Letter::b, "b"}, {Letter::c, "c"}, {Letter::d, "d"}};
    os << "# one-form commutation (forms pushed to the right)\n";
    for (OneForm w : all_forms)
        for (auto [l, n] : letters)
            os << form_str(w) << " . " << n << " = "
               << omega_times(p, 0, w, NCPoly::gen({l, 0}), PairingScheme::printed)
                      .str(p)
               << "\n";
    os << "\n# vector field values\n";
    for (OneForm f : all_forms)
        for (auto [l, n] : letters)
            os << "chi_" << form_str(f) << "(" << n << ") = "
               << chi_apply(p, 0, f, NCPoly::gen({l, 0}), PairingScheme::printed).str()
               << "\n";
    os << "\n# vector field convolutions\n";
    for (OneForm f : all_forms)
        for (auto [l, n] : letters)
            os << "chi_" << form_str(f) << " * " << n << " = "
               << chi_convolve(p, 0, f, NCPoly::gen({l, 0}), PairingScheme::printed)
                      .str(p)
               << "\n";
    os << "\n# exterior derivatives\n";
    for (auto [l, n] : letters)
        os << "d " << n << " = "
           << exterior_d(p, 0, NCPoly::gen({l, 0}), PairingScheme::printed).str(p)
           << "\n";
    return os.str();
}

}  // namespace cqg

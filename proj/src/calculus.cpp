#include "cqg/calculus.hpp"

namespace cqg {

std::string form_str(OneForm f) {
    switch (f) {
        case OneForm::w1: return "w1";
        case OneForm::wplus: return "w+";
        case OneForm::wminus: return "w-";
        default: return "w2";
    }
}

GammaElement GammaElement::operator+(const GammaElement& o) const {
    GammaElement r;
    for (int i = 0; i < 4; ++i) r.coeff[i] = coeff[i] + o.coeff[i];
    return r;
}

GammaElement GammaElement::operator-(const GammaElement& o) const {
    GammaElement r;
    for (int i = 0; i < 4; ++i) r.coeff[i] = coeff[i] - o.coeff[i];
    return r;
}

GammaElement GammaElement::scaled(const NCPoly& x) const {
    GammaElement r;
    for (int i = 0; i < 4; ++i) r.coeff[i] = x * coeff[i];
    return r;
}

bool GammaElement::is_zero() const {
    for (const NCPoly& c : coeff)
        if (!c.is_zero()) return false;
    return true;
}

std::string GammaElement::str(const Palette& p) const {
    std::string out;
    for (OneForm f : all_forms) {
        if (at(f).is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + at(f).str(p) + ") " + form_str(f);
    }
    return out.empty() ? "0" : out;
}

Scalar calculus_unit() { return Scalar::s_power(1) * Scalar::q_int(-1); }

Scalar graded_pair(const Palette& p, const DualExpr& f, const NCPoly& x,
                   PairingScheme scheme) {
    // Every normal-ordered term of a calculus functional carries a
    // group-like unit weight: s q^{-1} from the matrix prefactors, times the
    // explicit half-power scalars that ride with the ladder letters in the
    // matrix entries (q^{-1/2} per C, q^{+1/2} per B).  A group-like weight
    // pairs once per letter of the group word; the plain pairing applies the
    // whole coefficient exactly once, so each extra letter contributes one
    // more factor of the weight.
    Scalar total;
    for (const auto& [w, c] : x.terms()) {
        long n = static_cast<long>(w.size());
        NCPoly word = NCPoly::term(Scalar::one(), w);
        for (const auto& [key, coeff] : f.terms()) {
            std::vector<DualFactor> factors;
            if (!key.first.is_identity()) factors.emplace_back(key.first);
            Rational half_shift = 0;
            for (const DualGen& g : key.second) {
                factors.emplace_back(g);
                if (g.letter == DualLetter::B) half_shift += Rational(1, 2);
                if (g.letter == DualLetter::C) half_shift -= Rational(1, 2);
            }
            Scalar v = pair_factors(p, factors, word, scheme);
            if (v.is_zero()) continue;
            Exponent weight_exp =
                Exponent::constant((half_shift - 1) * Rational(n - 1));
            total += c * coeff * v * Scalar::s_power(n - 1) *
                     Scalar::q_power(weight_exp);
        }
    }
    return total;
}

DualExpr f_functional(const Palette& p, int tag, OneForm upper, OneForm lower) {
    Matrix<DualExpr> s = antipode_l_plus(p, tag);
    Matrix<DualExpr> lm = build_L(p, Sign::minus, tag).entries;
    int i = form_row(upper), j = form_col(upper);
    int k = form_row(lower), l = form_col(lower);
    return s.at(k, i) * lm.at(j, l);
}

namespace {

// Degree-1 values <f^{(upper)}_{(lower)}, t_{ms}> used to push a form past a
// single letter of colour gc, with the module tag colour fixed.
struct PushBase {
    // value[upper][lower][m][s]
    Scalar value[4][4][2][2];
};

const PushBase& push_base(const Palette& p, int tag, int gc, PairingScheme scheme) {
    // The printed reading pairs every letter through the tag colour's
    // triangular matrices as they stand, so it is blind to the letter colour.
    if (scheme == PairingScheme::printed) gc = 0;
    static std::map<std::string, PushBase> cache;
    std::string key = (scheme == PairingScheme::printed ? "p" : "m");
    key += std::to_string(tag) + ":" + std::to_string(gc);
    for (int i = 0; i < p.size(); ++i) key += "|" + p.names[i] + "=" + p.value(i).str();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PushBase base;
    if (scheme == PairingScheme::printed) {
        for (OneForm u : all_forms)
            for (OneForm l : all_forms) {
                DualExpr f = f_functional(p, tag, u, l);
                for (int m = 0; m < 2; ++m)
                    for (int s = 0; s < 2; ++s)
                        base.value[static_cast<int>(u)][static_cast<int>(l)][m][s] =
                            graded_pair(p, f, NCPoly::gen(Generator::t(m, s, 0)));
            }
    } else {
        // Colour-matched reading: the same triangular blocks, but the colour
        // arguments of the antipoded factor are transposed against the
        // letter colour.  Both blocks come straight from the braid data,
        //   <S(l+)_{ac}, t_{bd}> = (c+ c-)^{-1} [P R-(gamma, delta) P]_{ab,cd}
        //   <l-_{ac},   t_{bd}> =               [R-(delta, gamma)]_{ab,cd}
        // with gamma the letter colour and delta the tag colour.  This is
        // the one argument order the coloured braid identity supports, and
        // the only one under which pushing forms through whole words
        // respects the defining relations.
        Exponent gv = p.value(gc), dv = p.value(tag);
        ScalarMatrix rm_sp = build_r_pm(Sign::minus, gv, dv);
        ScalarMatrix rm_lm = build_r_pm(Sign::minus, dv, gv);
        Scalar cinv = Scalar::q_power(Exponent::cplus(-1) + Exponent::cminus(-1));
        auto sp = [&](int a, int c, int b, int d) {
            return cinv * rm_sp.at(2 * c + a, 2 * d + b);
        };
        auto lmv = [&](int a, int c, int b, int d) {
            return rm_lm.at(2 * a + c, 2 * b + d);
        };
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        for (int m = 0; m < 2; ++m)
                            for (int s = 0; s < 2; ++s) {
                                Scalar v;
                                for (int n = 0; n < 2; ++n)
                                    v += sp(k, m, i, n) * lmv(j, n, l, s);
                                base.value[2 * i + j][2 * k + l][m][s] = v;
                            }
    }
    return cache.emplace(std::move(key), std::move(base)).first->second;
}

using PushMatrix = std::array<std::array<NCPoly, 4>, 4>;

PushMatrix push_identity() {
    PushMatrix m;
    for (int i = 0; i < 4; ++i) m[i][i] = NCPoly::one();
    return m;
}

// Transfer matrix of a word: M(t_{rs} w')[u][l] = sum_k M(t_{rs})[u][k]
// M(w')[k][l], with M(t_{rs})[u][k] = sum_m t_{rm} <f^{(u)}_{(k)}, t_{ms}>.
// Pushing a form through a product then factors letter by letter, which is
// exactly the matrix-coproduct extension of the degree-1 tables.
PushMatrix push_word(const Palette& p, int tag, const std::vector<Generator>& word,
                     PairingScheme scheme) {
    PushMatrix acc = push_identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const Generator g = *it;
        const PushBase& base = push_base(p, tag, g.colour, scheme);
        int r = g.row(), s = g.col();
        PushMatrix next;
        for (int u = 0; u < 4; ++u)
            for (int k = 0; k < 4; ++k) {
                NCPoly entry;
                for (int m = 0; m < 2; ++m) {
                    const Scalar& v = base.value[u][k][m][s];
                    if (!v.is_zero())
                        entry += NCPoly::term(v, {Generator::t(r, m, g.colour)});
                }
                if (entry.is_zero()) continue;
                for (int l = 0; l < 4; ++l) {
                    if (acc[k][l].is_zero()) continue;
                    next[u][l] += entry * acc[k][l];
                }
            }
        acc = next;
    }
    return acc;
}

}  // namespace

GammaElement omega_times(const Palette& p, int tag, OneForm w, const NCPoly& g,
                         PairingScheme scheme) {
    GammaElement out;
    for (const auto& [word, c] : g.terms()) {
        PushMatrix m = push_word(p, tag, word, scheme);
        for (OneForm lower : all_forms) {
            const NCPoly& entry = m[static_cast<int>(w)][static_cast<int>(lower)];
            if (!entry.is_zero()) out.at(lower) += entry.scaled(c);
        }
    }
    return out;
}

GammaElement gamma_times(const Palette& p, int tag, const GammaElement& gamma,
                         const NCPoly& g, PairingScheme scheme) {
    GammaElement out;
    for (OneForm w : all_forms) {
        if (gamma.at(w).is_zero()) continue;
        GammaElement pushed = omega_times(p, tag, w, g, scheme);
        out = out + pushed.scaled(gamma.at(w));
    }
    return out;
}

DualExpr chi_functional(const Palette& p, int tag, OneForm f) {
    Matrix<DualExpr> s = antipode_l_plus(p, tag);
    Matrix<DualExpr> lm = build_L(p, Sign::minus, tag).entries;
    int i = form_row(f), j = form_col(f);
    DualExpr total;
    for (int k = 0; k < 2; ++k) total += s.at(i, k) * lm.at(k, j);
    return total;
}

Scalar chi_apply(const Palette& p, int tag, OneForm f, const NCPoly& x,
                 PairingScheme scheme) {
    return counit(chi_convolve(p, tag, f, x, scheme));
}

NCPoly chi_convolve(const Palette& p, int tag, OneForm f, const NCPoly& x,
                    PairingScheme scheme) {
    // chi_{ij} = sum_k f^{(kk)}_{(ij)} - delta_{ij} counit, so its
    // convolution with a word reads off the diagonal rows of the transfer
    // matrix; the counit part convolves back to the word itself.
    bool diagonal = form_row(f) == form_col(f);
    NCPoly acc;
    for (const auto& [word, c] : x.terms()) {
        PushMatrix m = push_word(p, tag, word, scheme);
        for (int k = 0; k < 2; ++k) {
            const NCPoly& entry =
                m[static_cast<int>(form_at(k, k))][static_cast<int>(f)];
            if (!entry.is_zero()) acc += entry.scaled(c);
        }
        if (diagonal) acc += NCPoly::term(-c, word);
    }
    return acc;
}

GammaElement exterior_d(const Palette& p, int tag, const NCPoly& x,
                        PairingScheme scheme) {
    GammaElement out;
    for (OneForm f : all_forms) out.at(f) = chi_convolve(p, tag, f, x, scheme);
    return out;
}

GammaElement gamma_normal_form(const RewriteSystem& rs, const GammaElement& g) {
    GammaElement r;
    for (int i = 0; i < 4; ++i) r.coeff[i] = rs.normal_form(g.coeff[i]);
    return r;
}

GammaElement leibniz_residual(const Palette& p, int tag, const RewriteSystem& rs,
                              const NCPoly& x, const NCPoly& y, PairingScheme scheme) {
    GammaElement total = exterior_d(p, tag, rs.normal_form(x * y), scheme);
    GammaElement split = gamma_times(p, tag, exterior_d(p, tag, x, scheme), y, scheme) +
                         exterior_d(p, tag, y, scheme).scaled(x);
    return gamma_normal_form(rs, total - split);
}

namespace {

void add_check(CheckReport& rep, const std::string& id, bool pass, std::size_t residual,
               const std::string& detail = "", bool advisory = false) {
    rep.checks.push_back({id, pass, residual, detail, advisory});
}

std::pair<Exponent, Exponent> palette_colours(const Palette& p) {
    return {p.value(0), p.value(p.size() > 1 ? 1 : 0)};
}

std::vector<int> tag_colours(const Palette& p) {
    return p.size() > 1 ? std::vector<int>{0, 1} : std::vector<int>{0};
}

struct TableTerm {
    OneForm form;
    Letter letter;
    Scalar coeff;
};

// one row of the commutation table: omega_w * letter as a combination of
// (coefficient letter) * form, coefficients in terms of the palette colours
std::vector<TableTerm> expected_commutation(OneForm w, Letter g, const Exponent& lam,
                                            const Exponent& mu) {
    Scalar s = Scalar::s_power(1);
    Exponent one = Exponent::constant(1);
    Scalar qm2_m1 = Scalar::q_int(-2) - Scalar::one();  // q^{-2} - 1
    Scalar qi_mq = Scalar::q_int(-1) - Scalar::q();     // q^{-1} - q

    // the c and d rows repeat the a and b rows with the letters of the other
    // column of the matrix
    Letter base = (g == Letter::c) ? Letter::a : (g == Letter::d) ? Letter::b : g;
    auto partner = [&](Letter l) {
        if (g == Letter::c || g == Letter::d) return l == Letter::a ? Letter::c : Letter::d;
        return l;
    };

    std::vector<TableTerm> rows;
    if (base == Letter::a) {
        switch (w) {
            case OneForm::w1:
                rows = {{OneForm::w1, Letter::a,
                         s * Scalar::q_power(-one * 2 + (lam - mu) * 2)}};
                break;
            case OneForm::wplus:
                rows = {{OneForm::wplus, Letter::a, s * Scalar::q_power(-one + lam * 2)}};
                break;
            case OneForm::wminus:
                rows = {{OneForm::wminus, Letter::a, s * Scalar::q_power(-one - mu * 2)},
                        {OneForm::w1, Letter::b, s * qm2_m1 * Scalar::q_power(lam - mu)}};
                break;
            default:
                rows = {{OneForm::w2, Letter::a, s},
                        {OneForm::wplus, Letter::b, s * qi_mq * Scalar::q_power(lam + mu)}};
        }
    } else {
        switch (w) {
            case OneForm::w1:
                rows = {{OneForm::w1, Letter::b, s}};
                break;
            case OneForm::wplus:
                rows = {{OneForm::wplus, Letter::b, s * Scalar::q_power(-one + mu * 2)},
                        {OneForm::w1, Letter::a, s * qm2_m1 * Scalar::q_power(lam - mu)}};
                break;
            case OneForm::wminus:
                rows = {{OneForm::wminus, Letter::b, s * Scalar::q_power(-one - lam * 2)}};
                break;
            default:
                rows = {{OneForm::w2, Letter::b,
                         s * Scalar::q_power(-one * 2 + (mu - lam) * 2)},
                        {OneForm::wminus, Letter::a,
                         s * qi_mq * Scalar::q_power(-(lam + mu))},
                        {OneForm::w1, Letter::b, s * qi_mq * qi_mq}};
        }
    }
    for (TableTerm& t : rows) t.letter = partner(t.letter);
    return rows;
}

// chi_form(letter); zero entries omitted.  The off-diagonal value on c is
// forced by the convolution table (its separately printed form disagrees and
// is treated as a misprint).
Scalar expected_chi(OneForm f, Letter g, const Exponent& lam, const Exponent& mu) {
    Scalar s = Scalar::s_power(1);
    Exponent one = Exponent::constant(1);
    Scalar qi_mq = Scalar::q_int(-1) - Scalar::q();
    if (f == OneForm::w1 && g == Letter::a)
        return s * Scalar::q_power(-one * 2 + (lam - mu) * 2) - Scalar::one();
    if (f == OneForm::w1 && g == Letter::d)
        return s * qi_mq * qi_mq + s - Scalar::one();
    if (f == OneForm::w2 && g == Letter::a) return s - Scalar::one();
    if (f == OneForm::w2 && g == Letter::d)
        return s * Scalar::q_power(-one * 2 + (mu - lam) * 2) - Scalar::one();
    if (f == OneForm::wminus && g == Letter::b)
        return s * qi_mq * Scalar::q_power(-(lam + mu));
    if (f == OneForm::wplus && g == Letter::c)
        return s * qi_mq * Scalar::q_power(lam + mu);
    return Scalar::zero();
}

// chi_form * letter = coefficient * (partner letter); partner differs from
// the letter itself only in the two off-diagonal rows
std::pair<Scalar, Letter> expected_convolution(OneForm f, Letter g, const Exponent& lam,
                                               const Exponent& mu) {
    Scalar s = Scalar::s_power(1);
    Scalar qi_mq = Scalar::q_int(-1) - Scalar::q();
    if (f == OneForm::wplus) {
        if (g == Letter::a)
            return {s * qi_mq * Scalar::q_power(lam + mu), Letter::b};
        if (g == Letter::c)
            return {s * qi_mq * Scalar::q_power(lam + mu), Letter::d};
        return {Scalar::zero(), g};
    }
    if (f == OneForm::wminus) {
        if (g == Letter::b)
            return {s * qi_mq * Scalar::q_power(-(lam + mu)), Letter::a};
        if (g == Letter::d)
            return {s * qi_mq * Scalar::q_power(-(lam + mu)), Letter::c};
        return {Scalar::zero(), g};
    }
    // the diagonal fields scale each generator by the chi value of its
    // matrix column's diagonal letter
    Letter column = (g == Letter::a || g == Letter::c) ? Letter::a : Letter::d;
    return {expected_chi(f, column, lam, mu), g};
}

}  // namespace

CheckReport check_calculus_tables(const Palette& p) {
    CheckReport rep;
    auto [lam, mu] = palette_colours(p);
    std::vector<Letter> letters = {Letter::a, Letter::b, Letter::c, Letter::d};

    std::size_t comm_residual = 0, chi_residual = 0, conv_residual = 0, d_residual = 0;
    std::size_t tag_residual = 0, colour_residual = 0;

    std::vector<int> gcolours;
    for (int c = 0; c < p.size(); ++c) gcolours.push_back(c);

    for (int tag : tag_colours(p)) {
        for (Letter l : letters)
            for (int gc : gcolours) {
                NCPoly g = NCPoly::gen({l, gc});
                for (OneForm w : all_forms) {
                    GammaElement got = omega_times(p, tag, w, g, PairingScheme::printed);
                    GammaElement want;
                    for (const TableTerm& t : expected_commutation(w, l, lam, mu))
                        want.at(t.form) += NCPoly::term(t.coeff, {{t.letter, gc}});
                    if (!(got == want)) ++comm_residual;
                }
                for (OneForm f : all_forms) {
                    Scalar got = chi_apply(p, tag, f, g, PairingScheme::printed);
                    if (got != expected_chi(f, l, lam, mu)) ++chi_residual;

                    auto [cv, cl] = expected_convolution(f, l, lam, mu);
                    NCPoly want = NCPoly::term(cv, {{cl, gc}});
                    if (chi_convolve(p, tag, f, g, PairingScheme::printed) != want)
                        ++conv_residual;
                }
                // d(g) assembled from the same convolutions
                GammaElement dg = exterior_d(p, tag, g, PairingScheme::printed);
                for (OneForm f : all_forms) {
                    auto [cv, cl] = expected_convolution(f, l, lam, mu);
                    if (dg.at(f) != NCPoly::term(cv, {{cl, gc}})) ++d_residual;
                }
            }
        // every table value is independent of the generator colour: the
        // coefficients computed above already use a shared expected table,
        // so a mismatch would have been counted; here we additionally pin
        // the raw pairing values against each other across colours
        if (gcolours.size() > 1)
            for (OneForm w : all_forms)
                for (OneForm lw : all_forms) {
                    DualExpr f = f_functional(p, tag, w, lw);
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) {
                            Scalar v0 =
                                pair_expr(p, f, NCPoly::gen(Generator::t(i, j, 0)));
                            Scalar v1 =
                                pair_expr(p, f, NCPoly::gen(Generator::t(i, j, 1)));
                            if (v0 != v1) ++colour_residual;
                        }
                }
    }

    // both tag colours produce the same module structure on generators
    if (p.size() > 1)
        for (Letter l : letters)
            for (int gc : gcolours)
                for (OneForm w : all_forms) {
                    NCPoly g = NCPoly::gen({l, gc});
                    if (!(omega_times(p, 0, w, g, PairingScheme::printed) ==
                          omega_times(p, 1, w, g, PairingScheme::printed)))
                        ++tag_residual;
                }

    // The colour-matched reading deviates from the printed one only by
    // drift factors that collapse when every colour takes the same value:
    // identifying all colour symbols must make the two generator actions
    // coincide, and the raw entry-count of the deviation is reported.
    std::size_t agree_residual = 0, drift_entries = 0;
    std::map<std::string, Exponent> collapse;
    bool collapsible = true;
    for (int i = 1; i < p.size(); ++i) {
        if (p.value(i) == Exponent::sym(p.names[i]))
            collapse[p.names[i]] = p.value(0);
        else if (!(p.value(i) == p.value(0)))
            collapsible = false;  // distinct constants, nothing to identify
    }
    for (int tag : tag_colours(p))
        for (int gc : gcolours)
            for (Letter l : letters)
                for (OneForm w : all_forms) {
                    NCPoly g = NCPoly::gen({l, gc});
                    GammaElement printed = omega_times(p, tag, w, g, PairingScheme::printed);
                    GammaElement matched =
                        omega_times(p, tag, w, g, PairingScheme::colour_matched);
                    if (!(printed == matched)) ++drift_entries;
                    if (!collapsible) continue;
                    for (OneForm f : all_forms) {
                        NCPoly diff = printed.at(f) - matched.at(f);
                        NCPoly collapsed;
                        for (const auto& [word, c] : diff.terms())
                            collapsed += NCPoly::term(c.substitute(collapse), word);
                        if (!collapsed.is_zero()) ++agree_residual;
                    }
                }

    add_check(rep, "one-form-commutation-table", comm_residual == 0, comm_residual);
    add_check(rep, "vector-field-values", chi_residual == 0, chi_residual);
    add_check(rep, "vector-field-convolutions", conv_residual == 0, conv_residual);
    add_check(rep, "exterior-derivative-table", d_residual == 0, d_residual);
    add_check(rep, "table-colour-blind-in-generator-colour", colour_residual == 0,
              colour_residual);
    add_check(rep, "table-independent-of-tag", tag_residual == 0, tag_residual);
    add_check(rep, "action-schemes-agree-at-equal-colours", agree_residual == 0,
              agree_residual);
    add_check(rep, "action-scheme-colour-drift", drift_entries == 0, drift_entries, "",
              p.size() > 1);
    return rep;
}

CheckReport check_calculus_leibniz(const Palette& p, long step_budget) {
    CheckReport rep;
    RewriteSystem rs = build_rewrite_system(all_relations(p), step_budget);

    std::vector<Generator> gens;
    for (int c = 0; c < p.size(); ++c)
        for (Letter l : {Letter::a, Letter::b, Letter::c, Letter::d})
            gens.push_back({l, c});

    std::size_t residual = 0;
    for (int tag : tag_colours(p))
        for (Generator x : gens)
            for (Generator y : gens)
                if (!leibniz_residual(p, tag, rs, NCPoly::gen(x), NCPoly::gen(y))
                         .is_zero())
                    ++residual;
    add_check(rep, "leibniz-on-generator-pairs", residual == 0, residual);

    // module structure respects the ideal: omega * r has reducible
    // coefficients for every defining relation r
    std::size_t ideal_residual = 0;
    for (int tag : tag_colours(p))
        for (const NCPoly& r : all_relations(p))
            for (OneForm w : all_forms)
                if (!gamma_normal_form(rs, omega_times(p, tag, w, r)).is_zero())
                    ++ideal_residual;
    add_check(rep, "module-action-respects-relations", ideal_residual == 0,
              ideal_residual);

    // the differential of every defining relation is itself in the ideal
    std::size_t d_residual = 0;
    for (int tag : tag_colours(p))
        for (const NCPoly& r : all_relations(p))
            if (!gamma_normal_form(rs, exterior_d(p, tag, r)).is_zero()) ++d_residual;
    add_check(rep, "differential-kills-relations", d_residual == 0, d_residual);

    // the printed reading satisfies the product rule only when all colours
    // coincide; on a genuinely coloured palette its residual count is
    // deterministic and merely reported
    std::size_t printed_residual = 0;
    for (Generator x : gens)
        for (Generator y : gens)
            if (!leibniz_residual(p, 0, rs, NCPoly::gen(x), NCPoly::gen(y),
                                  PairingScheme::printed)
                     .is_zero())
                ++printed_residual;
    add_check(rep, "printed-scheme-leibniz", printed_residual == 0, printed_residual,
              "", p.size() > 1);
    return rep;
}

}  // namespace cqg

#pragma once

#include <array>

#include "cqg/dual.hpp"

namespace cqg {

/// Basis of left-invariant one-forms, indexed by matrix position:
///   w1 = (0,0),  wplus = (0,1),  wminus = (1,0),  w2 = (1,1).
enum class OneForm : int { w1 = 0, wplus = 1, wminus = 2, w2 = 3 };

inline int form_row(OneForm f) { return static_cast<int>(f) / 2; }
inline int form_col(OneForm f) { return static_cast<int>(f) % 2; }
inline OneForm form_at(int row, int col) { return static_cast<OneForm>(2 * row + col); }
constexpr std::array<OneForm, 4> all_forms = {OneForm::w1, OneForm::wplus,
                                              OneForm::wminus, OneForm::w2};
std::string form_str(OneForm f);

/// Element of the free left module over the group algebra with the four
/// one-forms as basis: sum_i coeff[i] * omega_i.
struct GammaElement {
    std::array<NCPoly, 4> coeff;

    const NCPoly& at(OneForm f) const { return coeff[static_cast<int>(f)]; }
    NCPoly& at(OneForm f) { return coeff[static_cast<int>(f)]; }

    GammaElement operator+(const GammaElement& o) const;
    GammaElement operator-(const GammaElement& o) const;
    bool operator==(const GammaElement& o) const { return coeff == o.coeff; }

    /// Left multiplication by a group element.
    GammaElement scaled(const NCPoly& x) const;

    bool is_zero() const;
    std::string str(const Palette& p) const;
};

/// Group-like unit weight s q^{-1} shared by every calculus functional (the
/// combined prefactor of S(L+) and L-).
Scalar calculus_unit();

/// Pairing of a calculus functional with a group polynomial.  The unit
/// weight is group-like, so it enters once per letter of each word; the
/// plain pairing applies the functional's prefactor exactly once.
Scalar graded_pair(const Palette& p, const DualExpr& f, const NCPoly& x,
                   PairingScheme scheme = PairingScheme::colour_matched);

/// Functional moving omega_{upper} past a group element and producing the
/// omega_{lower} component: S(l+)_{ki} l-_{jl} with upper = (i,j) and
/// lower = (k,l), built from the tag colour's triangular matrices.
DualExpr f_functional(const Palette& p, int tag, OneForm upper, OneForm lower);

/// omega_w * g = sum_l [(1 (x) f) Delta(g)] omega_l, as a left-module
/// element.  Words are pushed through letter by letter, so the functionals
/// act on products through their matrix coproduct.
///
/// The scheme picks how the colour arguments of the two triangular factors
/// are read.  'printed' evaluates both factors at the palette's generic
/// colour pair, reproducing the reference coefficient tables verbatim;
/// 'colour_matched' additionally transposes the colour arguments of the
/// antipoded factor against each letter's own colour, which is the unique
/// reading under which the action descends to the relation quotient.  The
/// two readings coincide whenever all colours are equal.
GammaElement omega_times(const Palette& p, int tag, OneForm w, const NCPoly& g,
                         PairingScheme scheme = PairingScheme::colour_matched);

/// (sum_i a_i omega_i) * g, pushing every form to the right.
GammaElement gamma_times(const Palette& p, int tag, const GammaElement& gamma,
                         const NCPoly& g,
                         PairingScheme scheme = PairingScheme::colour_matched);

/// Left-invariant vector field sum_k S(l+)_{ik} l-_{kj} at form position
/// (i,j); the counit subtraction happens at application time.
DualExpr chi_functional(const Palette& p, int tag, OneForm f);

/// chi(x) = <sum_k S(l+)_{ik} l-_{kj}, x> - delta_{ij} counit(x), extended
/// to products through the matrix coproduct.
Scalar chi_apply(const Palette& p, int tag, OneForm f, const NCPoly& x,
                 PairingScheme scheme = PairingScheme::colour_matched);

/// Convolution (id (x) chi) Delta(x), same extension.
NCPoly chi_convolve(const Palette& p, int tag, OneForm f, const NCPoly& x,
                    PairingScheme scheme = PairingScheme::colour_matched);

/// d x = sum_i (chi_i * x) omega_i.  Equals the commutator with
/// theta = omega_1 + omega_2 by construction, so it is a derivation on free
/// words; under the colour-matched scheme it also kills the relation ideal.
GammaElement exterior_d(const Palette& p, int tag, const NCPoly& x,
                        PairingScheme scheme = PairingScheme::colour_matched);

/// Normal form of every coefficient.
GammaElement gamma_normal_form(const RewriteSystem& rs, const GammaElement& g);

/// d(nf(xy)) - (dx) y - x (dy), coefficients reduced modulo the relation
/// ideal.  The first term differentiates the normal form, so the residual
/// probes whether the module action descends to the quotient.
GammaElement leibniz_residual(const Palette& p, int tag, const RewriteSystem& rs,
                              const NCPoly& x, const NCPoly& y,
                              PairingScheme scheme = PairingScheme::colour_matched);

/// One-form commutation coefficients, vector field values, convolutions and
/// exterior derivatives of all coloured generators against the hand-entered
/// reference table, for every tag colour.
CheckReport check_calculus_tables(const Palette& p);

/// Leibniz rule on all ordered pairs of coloured generators, plus the
/// structural identities d follows from (unit image, counit of chi).
CheckReport check_calculus_leibniz(const Palette& p, long step_budget = 100000);

}  // namespace cqg

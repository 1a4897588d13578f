#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct NotAUnit : std::runtime_error {
    explicit NotAUnit(const std::string& what) : std::runtime_error(what) {}
};
struct NonIntegralExponent : std::runtime_error {
    explicit NonIntegralExponent(const std::string& what) : std::runtime_error(what) {}
};
struct ScalarParseError : std::runtime_error {
    explicit ScalarParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Affine form  k + sum_i r_i * colour_i  used as an exponent of q,
/// together with formal powers of the unit symbols c+ and c-.
/// Zero colour coefficients are never stored.
struct Exponent {
    Rational const_part;
    std::map<std::string, Rational> colour_part;
    Rational cplus_pow;   // power of c+
    Rational cminus_pow;  // power of c-

    Exponent() = default;
    explicit Exponent(Rational k) : const_part(std::move(k)) {}

    static Exponent constant(Rational k) { return Exponent(std::move(k)); }
    static Exponent sym(const std::string& colour, Rational coeff = 1);
    static Exponent cplus(Rational p = 1);
    static Exponent cminus(Rational p = 1);

    bool is_zero() const;
    bool is_constant() const { return colour_part.empty(); }
    bool has_units() const { return cplus_pow != 0 || cminus_pow != 0; }

    Exponent operator+(const Exponent& o) const;
    Exponent operator-(const Exponent& o) const;
    Exponent operator-() const;
    Exponent operator*(const Rational& r) const;

    /// Replace each colour symbol by an affine form (missing symbols unchanged).
    Exponent substitute(const std::map<std::string, Exponent>& subst) const;

    /// Value of the affine part under a colour assignment; unassigned symbols throw.
    Rational evaluate(const std::map<std::string, Rational>& colours) const;

    bool operator==(const Exponent& o) const;
    bool operator<(const Exponent& o) const;

    std::string str() const;  // affine part only, e.g. "1 - lambda + mu"
};

/// Element of the exact coefficient ring: a finite sum of rational multiples
/// of monomials q^e (c+)^p (c-)^m with e affine in the colour symbols.
/// Canonical form: no zero coefficients; the zero element is the empty sum.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return from_rational(1); }
    static Scalar from_rational(Rational r);
    static Scalar monomial(Rational coeff, Exponent e);
    static Scalar q_power(Exponent e) { return monomial(1, std::move(e)); }
    static Scalar q_int(long n) { return q_power(Exponent::constant(n)); }
    static Scalar q() { return q_int(1); }
    /// s = (c+)^{-1} c-
    static Scalar s_power(Rational p = 1);
    static Scalar cplus_sym() { return q_power(Exponent::cplus()); }
    static Scalar cminus_sym() { return q_power(Exponent::cminus()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Arbitrary total order, for use as an ordered-container key.
    bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

    /// Inverse of a monomial; throws NotAUnit otherwise.
    Scalar inverse() const;

    /// Quotient by divisor when the division is exact, nullopt otherwise
    /// (leading-term elimination with a step cap; the result is verified by
    /// multiplying back).
    std::optional<Scalar> divided_exactly(const Scalar& divisor,
                                          int max_steps = 4096) const;

    /// Largest term as a monomial Scalar; throws on zero.
    Scalar leading_monomial() const;

    /// Affine substitution on every exponent.
    Scalar substitute(const std::map<std::string, Exponent>& subst) const;

    /// Exact evaluation.  Exponents must come out integral, or half-integral
    /// when q_sqrt (a value t with t^2 = q) is supplied.  c+ and c- evaluate
    /// at the given unit values (default 1), their powers must be integral.
    Rational specialize(const Rational& q_val,
                        const std::map<std::string, Rational>& colours,
                        std::optional<Rational> q_sqrt = std::nullopt,
                        const Rational& cplus_val = 1,
                        const Rational& cminus_val = 1) const;

    /// Floating-point evaluation.
    double specialize_f(double q_val, const std::map<std::string, Rational>& colours,
                        double cplus_val = 1.0, double cminus_val = 1.0) const;

    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    std::map<Exponent, Rational> terms_;
};

inline Scalar operator*(const Rational& r, const Scalar& a) {
    return Scalar::from_rational(r) * a;
}

/// q - q^{-1}
Scalar q_minus_qinv();

}  // namespace cqg

#include "cqg/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <tuple>

namespace cqg {

// ---------------------------------------------------------------- Exponent

Exponent Exponent::sym(const std::string& colour, Rational coeff) {
    Exponent e;
    if (coeff != 0) e.colour_part[colour] = std::move(coeff);
    return e;
}

Exponent Exponent::cplus(Rational p) {
    Exponent e;
    e.cplus_pow = std::move(p);
    return e;
}

Exponent Exponent::cminus(Rational p) {
    Exponent e;
    e.cminus_pow = std::move(p);
    return e;
}

bool Exponent::is_zero() const {
    return const_part == 0 && colour_part.empty() && cplus_pow == 0 && cminus_pow == 0;
}

Exponent Exponent::operator+(const Exponent& o) const {
    Exponent r = *this;
    r.const_part += o.const_part;
    r.cplus_pow += o.cplus_pow;
    r.cminus_pow += o.cminus_pow;
    for (const auto& [name, c] : o.colour_part) {
        Rational v = r.colour_part.count(name) ? r.colour_part[name] + c : c;
        if (v == 0)
            r.colour_part.erase(name);
        else
            r.colour_part[name] = v;
    }
    return r;
}

Exponent Exponent::operator-() const {
    Exponent r;
    r.const_part = -const_part;
    r.cplus_pow = -cplus_pow;
    r.cminus_pow = -cminus_pow;
    for (const auto& [name, c] : colour_part) r.colour_part[name] = -c;
    return r;
}

Exponent Exponent::operator-(const Exponent& o) const { return *this + (-o); }

Exponent Exponent::operator*(const Rational& r) const {
    Exponent e;
    if (r == 0) return e;
    e.const_part = const_part * r;
    e.cplus_pow = cplus_pow * r;
    e.cminus_pow = cminus_pow * r;
    for (const auto& [name, c] : colour_part) e.colour_part[name] = c * r;
    return e;
}

Exponent Exponent::substitute(const std::map<std::string, Exponent>& subst) const {
    Exponent r;
    r.const_part = const_part;
    r.cplus_pow = cplus_pow;
    r.cminus_pow = cminus_pow;
    for (const auto& [name, c] : colour_part) {
        auto it = subst.find(name);
        if (it == subst.end())
            r = r + Exponent::sym(name, c);
        else
            r = r + it->second * c;
    }
    return r;
}

Rational Exponent::evaluate(const std::map<std::string, Rational>& colours) const {
    Rational v = const_part;
    for (const auto& [name, c] : colour_part) {
        auto it = colours.find(name);
        if (it == colours.end())
            throw std::invalid_argument("no value assigned to colour symbol " + name);
        v += c * it->second;
    }
    return v;
}

bool Exponent::operator==(const Exponent& o) const {
    return const_part == o.const_part && colour_part == o.colour_part &&
           cplus_pow == o.cplus_pow && cminus_pow == o.cminus_pow;
}

bool Exponent::operator<(const Exponent& o) const {
    return std::tie(const_part, colour_part, cplus_pow, cminus_pow) <
           std::tie(o.const_part, o.colour_part, o.cplus_pow, o.cminus_pow);
}

static std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string Exponent::str() const {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const Rational& coeff, const std::string& name) {
        if (coeff == 0) return;
        Rational a = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (name.empty()) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << name;
        }
    };
    put(const_part, "");
    for (const auto& [name, c] : colour_part) put(c, name);
    if (first) os << "0";
    return os.str();
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::from_rational(Rational r) {
    Scalar a;
    if (r != 0) a.terms_[Exponent()] = std::move(r);
    return a;
}

Scalar Scalar::monomial(Rational coeff, Exponent e) {
    Scalar a;
    if (coeff != 0) a.terms_[std::move(e)] = std::move(coeff);
    return a;
}

Scalar Scalar::s_power(Rational p) {
    Exponent e;
    e.cplus_pow = -p;
    e.cminus_pow = p;
    return q_power(e);
}

bool Scalar::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() &&
           terms_.begin()->second == 1;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar& Scalar::operator-=(const Scalar& o) {
    *this += -o;
    return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e = e1 + e2;
            Rational c = c1 * c2;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = c;
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::inverse() const {
    if (terms_.size() != 1)
        throw NotAUnit("not a monomial: " + str());
    const auto& [e, c] = *terms_.begin();
    return monomial(Rational(1) / c, -e);
}

std::optional<Scalar> Scalar::divided_exactly(const Scalar& divisor, int max_steps) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return Scalar::zero();
    const auto& [de, dc] = *divisor.terms_.rbegin();
    // an exact quotient has no monomial below min(this) - min(divisor)
    Exponent bound = terms_.begin()->first - divisor.terms_.begin()->first;
    Scalar rem = *this;
    Scalar quot;
    for (int step = 0; step < max_steps && !rem.is_zero(); ++step) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Exponent te = re - de;
        if (te < bound) return std::nullopt;
        Scalar t = monomial(rc / dc, te);
        quot += t;
        rem -= t * divisor;
    }
    if (!rem.is_zero()) return std::nullopt;
    if (!(quot * divisor == *this)) return std::nullopt;
    return quot;
}

Scalar Scalar::leading_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("leading_monomial of zero");
    const auto& [e, c] = *terms_.rbegin();
    return monomial(c, e);
}

Scalar Scalar::substitute(const std::map<std::string, Exponent>& subst) const {
    Scalar r;
    for (const auto& [e, c] : terms_) r += monomial(c, e.substitute(subst));
    return r;
}

static Rational rational_pow(const Rational& base, const Int& exp) {
    if (base == 0) {
        if (exp <= 0) throw std::domain_error("0 raised to a nonpositive power");
        return 0;
    }
    Int n = exp < 0 ? Int(-exp) : exp;
    Rational r = 1;
    Rational b = base;
    while (n > 0) {
        if ((n & 1) != 0) r *= b;
        b *= b;
        n >>= 1;
    }
    if (exp < 0) r = Rational(1) / r;
    return r;
}

static Rational eval_power(const Rational& base, const Rational& p,
                           std::optional<Rational> base_sqrt, const char* what) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(p) == 1) return rational_pow(base, numerator(p));
    if (denominator(p) == 2 && base_sqrt)
        return rational_pow(*base_sqrt, numerator(p));
    throw NonIntegralExponent(std::string(what) + " exponent " + rational_str(p) +
                              " is not exactly evaluable");
}

Rational Scalar::specialize(const Rational& q_val,
                            const std::map<std::string, Rational>& colours,
                            std::optional<Rational> q_sqrt,
                            const Rational& cplus_val,
                            const Rational& cminus_val) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c * eval_power(q_val, e.evaluate(colours), q_sqrt, "q");
        if (e.cplus_pow != 0)
            v *= eval_power(cplus_val, e.cplus_pow, std::nullopt, "c+");
        if (e.cminus_pow != 0)
            v *= eval_power(cminus_val, e.cminus_pow, std::nullopt, "c-");
        total += v;
    }
    return total;
}

double Scalar::specialize_f(double q_val, const std::map<std::string, Rational>& colours,
                            double cplus_val, double cminus_val) const {
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double v = static_cast<double>(c) *
                   std::pow(q_val, static_cast<double>(e.evaluate(colours)));
        if (e.cplus_pow != 0) v *= std::pow(cplus_val, static_cast<double>(e.cplus_pow));
        if (e.cminus_pow != 0) v *= std::pow(cminus_val, static_cast<double>(e.cminus_pow));
        total += v;
    }
    return total;
}

// ---------------------------------------------------------------- printing

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        Exponent qe = e;
        qe.cplus_pow = qe.cminus_pow = 0;
        if (!qe.is_zero()) {
            if (qe.is_constant() && boost::multiprecision::denominator(qe.const_part) == 1 &&
                qe.const_part == 1)
                factors.push_back("q");
            else
                factors.push_back("q^(" + qe.str() + ")");
        }
        // print c+^{-k} c-^{k} as s^k
        Rational cp = e.cplus_pow, cm = e.cminus_pow;
        if (cp == -cm && cm != 0) {
            factors.push_back(cm == 1 ? "s" : "s^(" + rational_str(cm) + ")");
        } else {
            if (cp != 0)
                factors.push_back(cp == 1 ? "c+" : "c+^(" + rational_str(cp) + ")");
            if (cm != 0)
                factors.push_back(cm == 1 ? "c-" : "c-^(" + rational_str(cm) + ")");
        }
        if (factors.empty()) {
            os << rational_str(a);
        } else {
            bool put_coeff = (a != 1);
            if (put_coeff) os << rational_str(a);
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (put_coeff || i > 0) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

// ----------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ScalarParseError("expected '" + std::string(1, c) + "' at position " +
                                   std::to_string(pos) + " in \"" + text + "\"");
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    Rational number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ScalarParseError("expected number at position " + std::to_string(pos));
        Int num(text.substr(start, pos - start));
        if (eat('/')) {
            skip_ws();
            std::size_t ds = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == ds) throw ScalarParseError("expected denominator at position " + std::to_string(pos));
            Int den(text.substr(ds, pos - ds));
            return Rational(num, den);
        }
        return Rational(num);
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

// signed rational, possibly in parentheses: used inside exponents
Rational parse_signed_rational(Lexer& lx) {
    bool neg = false;
    while (true) {
        if (lx.eat('-'))
            neg = !neg;
        else if (!lx.eat('+'))
            break;
    }
    Rational r = lx.number();
    return neg ? Rational(-r) : r;
}

// affine expression over colour symbols: sum of [rational][*][sym] terms
Exponent parse_affine(Lexer& lx) {
    Exponent result;
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (c == '\0' || c == ')') break;
        bool neg = false;
        if (c == '+' || c == '-') {
            while (true) {
                if (lx.eat('-'))
                    neg = !neg;
                else if (!lx.eat('+'))
                    break;
            }
        } else if (!first) {
            throw ScalarParseError("expected '+' or '-' in exponent at position " +
                                   std::to_string(lx.pos));
        }
        first = false;
        c = lx.peek();
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = lx.number();
            have_coeff = true;
        }
        bool mul = lx.eat('*');
        c = lx.peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lx.identifier();
            result = result + Exponent::sym(name, neg ? Rational(-coeff) : coeff);
        } else if (have_coeff) {
            if (mul)
                throw ScalarParseError("dangling '*' in exponent at position " +
                                       std::to_string(lx.pos));
            result = result + Exponent::constant(neg ? Rational(-coeff) : coeff);
        } else {
            throw ScalarParseError("expected term in exponent at position " +
                                   std::to_string(lx.pos));
        }
    }
    return result;
}

// power suffix: ^(affine) or ^int or nothing (power 1)
Exponent parse_power_suffix(Lexer& lx) {
    if (!lx.eat('^')) return Exponent::constant(1);
    if (lx.eat('(')) {
        Exponent e = parse_affine(lx);
        lx.expect(')');
        return e;
    }
    return Exponent::constant(parse_signed_rational(lx));
}

// one multiplicative factor: rational | q[^..] | s[^..] | c+[^..] | c-[^..]
// returns (coeff, exponent) contribution
void parse_factor(Lexer& lx, Rational& coeff, Exponent& expo) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= lx.number();
        return;
    }
    if (c == 'q') {
        ++lx.pos;
        Exponent p = parse_power_suffix(lx);
        if (p.has_units())
            throw ScalarParseError("c+/c- cannot appear inside a q exponent");
        expo = expo + p;
        return;
    }
    if (c == 's') {
        ++lx.pos;
        Exponent p = parse_power_suffix(lx);
        if (!p.is_constant() || p.has_units())
            throw ScalarParseError("s power must be a rational constant");
        expo.cplus_pow -= p.const_part;
        expo.cminus_pow += p.const_part;
        return;
    }
    if (c == 'c') {
        ++lx.pos;
        char sign = lx.peek();
        if (sign != '+' && sign != '-')
            throw ScalarParseError("expected c+ or c- at position " + std::to_string(lx.pos));
        ++lx.pos;
        Exponent p = parse_power_suffix(lx);
        if (!p.is_constant() || p.has_units())
            throw ScalarParseError("c+/c- power must be a rational constant");
        if (sign == '+')
            expo.cplus_pow += p.const_part;
        else
            expo.cminus_pow += p.const_part;
        return;
    }
    throw ScalarParseError("unexpected character '" + std::string(1, c) + "' at position " +
                           std::to_string(lx.pos));
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Lexer lx(text);
    Scalar result;
    bool first = true;
    while (!lx.at_end()) {
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            while (true) {
                if (lx.eat('-'))
                    neg = !neg;
                else if (!lx.eat('+'))
                    break;
            }
        } else if (!first) {
            throw ScalarParseError("expected '+' or '-' at position " + std::to_string(lx.pos));
        }
        first = false;
        Rational coeff = 1;
        Exponent expo;
        parse_factor(lx, coeff, expo);
        while (lx.eat('*')) parse_factor(lx, coeff, expo);
        result += monomial(neg ? Rational(-coeff) : coeff, expo);
    }
    if (first) throw ScalarParseError("empty scalar expression");
    return result;
}

Scalar q_minus_qinv() { return Scalar::q_int(1) - Scalar::q_int(-1); }

}  // namespace cqg

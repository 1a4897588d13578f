#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cqg/scalar.hpp"

namespace cqg {

/// Ordered finite set of colour names, each with the exponent form it stands
/// for.  Symbolic palettes map a name to its own symbol; limit palettes map
/// it to 0 (colourless) or to a shared symbol (monochromatic).
struct Palette {
    std::vector<std::string> names;
    std::vector<Exponent> values;

    static Palette symbolic(std::vector<std::string> ns) {
        Palette p;
        for (auto& n : ns) p.values.push_back(Exponent::sym(n));
        p.names = std::move(ns);
        return p;
    }
    static Palette colourless() { return {{"c0"}, {Exponent()}}; }
    static Palette monochromatic(const std::string& name = "c") {
        return {{name}, {Exponent::sym(name)}};
    }

    int size() const { return static_cast<int>(names.size()); }
    const Exponent& value(int i) const { return values.at(i); }
};

enum class Letter : int { a = 0, b = 1, c = 2, d = 3, dinv = 4 };

struct Generator {
    Letter letter;
    int colour;  // palette index

    auto operator<=>(const Generator&) const = default;

    /// Matrix position of the generator inside T (a=(0,0), b=(0,1), ...).
    int row() const { return static_cast<int>(letter) / 2; }
    int col() const { return static_cast<int>(letter) % 2; }
    static Generator t(int row, int col, int colour) {
        return {static_cast<Letter>(2 * row + col), colour};
    }

    std::string str(const Palette& p) const;
};

using Word = std::vector<Generator>;

/// Degree-lexicographic order: by length, then by generator (letter, colour).
bool deglex_less(const Word& x, const Word& y);

std::string word_str(const Word& w, const Palette& p);

/// Noncommutative polynomial in the coloured generators over Scalar.
class NCPoly {
public:
    NCPoly() = default;

    static NCPoly zero() { return NCPoly(); }
    static NCPoly one() { return term(Scalar::one(), {}); }
    static NCPoly gen(Generator g) { return term(Scalar::one(), {g}); }
    static NCPoly term(Scalar coeff, Word w);
    static NCPoly constant(Scalar c) { return term(std::move(c), {}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }
    bool operator<(const NCPoly& o) const { return terms_ < o.terms_; }

    NCPoly scaled(const Scalar& c) const;

    /// Largest word in deglex order; throws on zero.
    const Word& leading_word() const;
    const Scalar& leading_coeff() const;

    /// Scale so the leading coefficient becomes 1 (requires a monomial
    /// leading coefficient); used to canonicalize relations for set
    /// comparison.  Returns *this unchanged if the coefficient is not a unit.
    NCPoly monic() const;

    /// Divide out common factors of q - q^{-1} shared by every coefficient.
    /// Derived relations often carry such a factor, which is a unit of the
    /// coefficient field but not an invertible monomial.
    NCPoly content_reduced() const;

    /// Reverse every word (anti-automorphism on words, coefficients kept).
    NCPoly reversed() const;

    /// Affine substitution applied to every coefficient.
    NCPoly substitute(const std::map<std::string, Exponent>& subst) const;

    std::string str(const Palette& p) const;

private:
    std::map<Word, Scalar> terms_;
};

inline NCPoly operator*(const Scalar& c, const NCPoly& p) { return p.scaled(c); }

/// Elements of the tensor square / cube of the algebra.
class NCPoly2 {
public:
    NCPoly2() = default;
    static NCPoly2 term(Scalar coeff, Word left, Word right);
    static NCPoly2 of(const NCPoly& left, const NCPoly& right);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }

    NCPoly2 operator+(const NCPoly2& o) const;
    NCPoly2 operator-(const NCPoly2& o) const;
    NCPoly2 operator*(const NCPoly2& o) const;  // leg-wise product
    NCPoly2& operator+=(const NCPoly2& o);
    bool operator==(const NCPoly2& o) const { return terms_ == o.terms_; }

    std::string str(const Palette& p) const;

private:
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

class NCPoly3 {
public:
    NCPoly3() = default;
    static NCPoly3 term(Scalar coeff, Word w1, Word w2, Word w3);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::array<Word, 3>, Scalar>& terms() const { return terms_; }

    NCPoly3 operator-(const NCPoly3& o) const;
    NCPoly3& operator+=(const NCPoly3& o);
    bool operator==(const NCPoly3& o) const { return terms_ == o.terms_; }

private:
    std::map<std::array<Word, 3>, Scalar> terms_;
};

/// Matrix coproduct within one colour, extended as an algebra map.
/// Dinv is group-like.
NCPoly2 coproduct(const NCPoly& p);

/// Coproduct applied to the left (resp. right) leg of a tensor element.
NCPoly3 coproduct_left(const NCPoly2& p);
NCPoly3 coproduct_right(const NCPoly2& p);

/// Counit: a,d,Dinv -> 1; b,c -> 0; extended multiplicatively and linearly.
Scalar counit(const NCPoly& p);
Scalar counit_word(const Word& w);

}  // namespace cqg

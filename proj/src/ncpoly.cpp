#include "cqg/ncpoly.hpp"

#include <sstream>

namespace cqg {

std::string Generator::str(const Palette& p) const {
    static const char* letters[] = {"a", "b", "c", "d", "Dinv"};
    return std::string(letters[static_cast<int>(letter)]) + "_" + p.names.at(colour);
}

bool deglex_less(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;  // lexicographic on (letter, colour)
}

std::string word_str(const Word& w, const Palette& p) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << "*";
        os << w[i].str(p);
    }
    return os.str();
}

// ------------------------------------------------------------------ NCPoly

NCPoly NCPoly::term(Scalar coeff, Word w) {
    NCPoly p;
    if (!coeff.is_zero()) p.terms_[std::move(w)] = std::move(coeff);
    return p;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) {
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    *this += -o;
    return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r += term(c1 * c2, std::move(w));
        }
    return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r;
    for (const auto& [w, coeff] : terms_) r += term(c * coeff, w);
    return r;
}

const Word& NCPoly::leading_word() const {
    if (terms_.empty()) throw std::invalid_argument("leading_word of zero");
    const Word* best = &terms_.begin()->first;
    for (const auto& [w, c] : terms_)
        if (deglex_less(*best, w)) best = &w;
    return *best;
}

const Scalar& NCPoly::leading_coeff() const { return terms_.at(leading_word()); }

NCPoly NCPoly::monic() const {
    if (terms_.empty()) return *this;
    const Scalar& lead = leading_coeff();
    if (!lead.is_monomial()) return *this;
    return scaled(lead.inverse());
}

NCPoly NCPoly::content_reduced() const {
    NCPoly cur = *this;
    Scalar unit = q_minus_qinv();
    for (;;) {
        std::map<Word, Scalar> next;
        bool all = !cur.terms_.empty();
        for (const auto& [w, c] : cur.terms_) {
            auto q = c.divided_exactly(unit);
            if (!q) {
                all = false;
                break;
            }
            next[w] = *q;
        }
        if (!all) return cur;
        cur.terms_ = std::move(next);
    }
}

NCPoly NCPoly::reversed() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        Word rev(w.rbegin(), w.rend());
        r += term(c, std::move(rev));
    }
    return r;
}

NCPoly NCPoly::substitute(const std::map<std::string, Exponent>& subst) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r += term(c.substitute(subst), w);
    return r;
}

std::string NCPoly::str(const Palette& p) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (c.is_one() && !w.empty()) {
            os << word_str(w, p);
        } else {
            os << (needs_parens ? "(" + cs + ")" : cs);
            if (!w.empty()) os << "*" << word_str(w, p);
        }
    }
    return os.str();
}

// ----------------------------------------------------------------- NCPoly2

NCPoly2 NCPoly2::term(Scalar coeff, Word left, Word right) {
    NCPoly2 p;
    if (!coeff.is_zero()) p.terms_[{std::move(left), std::move(right)}] = std::move(coeff);
    return p;
}

NCPoly2 NCPoly2::of(const NCPoly& left, const NCPoly& right) {
    NCPoly2 r;
    for (const auto& [w1, c1] : left.terms())
        for (const auto& [w2, c2] : right.terms()) r += term(c1 * c2, w1, w2);
    return r;
}

NCPoly2& NCPoly2::operator+=(const NCPoly2& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

NCPoly2 NCPoly2::operator+(const NCPoly2& o) const {
    NCPoly2 r = *this;
    r += o;
    return r;
}

NCPoly2 NCPoly2::operator-(const NCPoly2& o) const {
    NCPoly2 neg;
    for (const auto& [k, c] : o.terms_) neg.terms_[k] = -c;
    NCPoly2 r = *this;
    r += neg;
    return r;
}

NCPoly2 NCPoly2::operator*(const NCPoly2& o) const {
    NCPoly2 r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            Word l = k1.first, rt = k1.second;
            l.insert(l.end(), k2.first.begin(), k2.first.end());
            rt.insert(rt.end(), k2.second.begin(), k2.second.end());
            r += term(c1 * c2, std::move(l), std::move(rt));
        }
    return r;
}

std::string NCPoly2::str(const Palette& p) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << word_str(k.first, p) << " (x) "
           << word_str(k.second, p);
    }
    return os.str();
}

// ----------------------------------------------------------------- NCPoly3

NCPoly3 NCPoly3::term(Scalar coeff, Word w1, Word w2, Word w3) {
    NCPoly3 p;
    if (!coeff.is_zero())
        p.terms_[{std::move(w1), std::move(w2), std::move(w3)}] = std::move(coeff);
    return p;
}

NCPoly3& NCPoly3::operator+=(const NCPoly3& o) {
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

NCPoly3 NCPoly3::operator-(const NCPoly3& o) const {
    NCPoly3 r = *this;
    for (const auto& [k, c] : o.terms_) r += term(-c, k[0], k[1], k[2]);
    return r;
}

// --------------------------------------------------------------- coalgebra

namespace {

// coproduct of a single generator as a tensor-square element
NCPoly2 gen_coproduct(Generator g) {
    if (g.letter == Letter::dinv) return NCPoly2::term(Scalar::one(), {g}, {g});
    NCPoly2 r;
    for (int k = 0; k < 2; ++k)
        r += NCPoly2::term(Scalar::one(), {Generator::t(g.row(), k, g.colour)},
                           {Generator::t(k, g.col(), g.colour)});
    return r;
}

}  // namespace

NCPoly2 coproduct(const NCPoly& p) {
    NCPoly2 r;
    for (const auto& [w, c] : p.terms()) {
        NCPoly2 prod = NCPoly2::term(Scalar::one(), {}, {});
        for (Generator g : w) prod = prod * gen_coproduct(g);
        for (const auto& [k, pc] : prod.terms()) r += NCPoly2::term(c * pc, k.first, k.second);
    }
    return r;
}

NCPoly3 coproduct_left(const NCPoly2& p) {
    NCPoly3 r;
    for (const auto& [k, c] : p.terms()) {
        NCPoly2 split = coproduct(NCPoly::term(Scalar::one(), k.first));
        for (const auto& [kk, cc] : split.terms())
            r += NCPoly3::term(c * cc, kk.first, kk.second, k.second);
    }
    return r;
}

NCPoly3 coproduct_right(const NCPoly2& p) {
    NCPoly3 r;
    for (const auto& [k, c] : p.terms()) {
        NCPoly2 split = coproduct(NCPoly::term(Scalar::one(), k.second));
        for (const auto& [kk, cc] : split.terms())
            r += NCPoly3::term(c * cc, k.first, kk.first, kk.second);
    }
    return r;
}

Scalar counit_word(const Word& w) {
    for (Generator g : w)
        if (g.letter == Letter::b || g.letter == Letter::c) return Scalar::zero();
    return Scalar::one();
}

Scalar counit(const NCPoly& p) {
    Scalar r;
    for (const auto& [w, c] : p.terms()) r += c * counit_word(w);
    return r;
}

}  // namespace cqg

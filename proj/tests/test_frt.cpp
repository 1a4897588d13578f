#include "doctest.h"

#include <random>
#include <set>

#include "cqg/frt.hpp"

using namespace cqg;

namespace {

// completed systems are pure functions of the palette; build them once
const RewriteSystem& system2() {
    static RewriteSystem rs =
        build_rewrite_system(all_relations(Palette::symbolic({"lambda", "mu"})));
    return rs;
}

NCPoly gen(Letter l, int colour) { return NCPoly::gen({l, colour}); }

// colour swap 0 <-> 1 on words combined with the exponent swap lambda <-> mu
NCPoly swap_colours(const NCPoly& p) {
    std::map<std::string, Exponent> sub = {{"lambda", Exponent::sym("mu")},
                                           {"mu", Exponent::sym("lambda")}};
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        Word sw;
        for (Generator g : w) sw.push_back({g.letter, 1 - g.colour});
        r += NCPoly::term(c.substitute(sub), sw);
    }
    return r;
}

}  // namespace

TEST_CASE("colourless entry relations generate the standard ideal") {
    Palette p = Palette::colourless();
    std::vector<NCPoly> from_r = all_relations(p);
    std::vector<NCPoly> standard = standard_glq2_relations(0);

    RewriteSystem rs_r = build_rewrite_system(from_r);
    RewriteSystem rs_std = build_rewrite_system(standard);

    for (const NCPoly& rel : from_r) CHECK(rs_std.normal_form(rel).is_zero());
    for (const NCPoly& rel : standard) CHECK(rs_r.normal_form(rel).is_zero());
}

TEST_CASE("entry relations match a hand-rolled index loop") {
    Palette p = Palette::symbolic({"lambda", "mu"});
    ScalarMatrix r = build_r(p.value(0), p.value(1));

    // entry (i1 i2, j1 j2) of R T1 T2 - T2 T1 R, assembled without the
    // matrix classes
    auto entry = [&](int i1, int i2, int j1, int j2) {
        NCPoly lhs, rhs;
        for (int k1 = 0; k1 < 2; ++k1)
            for (int k2 = 0; k2 < 2; ++k2) {
                lhs += NCPoly::constant(r.at(2 * i1 + i2, 2 * k1 + k2)) *
                       gen(static_cast<Letter>(2 * k1 + j1), 0) *
                       gen(static_cast<Letter>(2 * k2 + j2), 1);
                rhs += gen(static_cast<Letter>(2 * i2 + k2), 1) *
                       gen(static_cast<Letter>(2 * i1 + k1), 0) *
                       NCPoly::constant(r.at(2 * k1 + k2, 2 * j1 + j2));
            }
        return lhs - rhs;
    };

    std::set<NCPoly> expected;
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2) {
                    NCPoly e = entry(i1, i2, j1, j2);
                    if (!e.is_zero()) expected.insert(e.monic());
                }

    std::vector<NCPoly> got = expand_rtt(p, 0, 1);
    CHECK(got.size() == expected.size());
    for (const NCPoly& rel : got) CHECK(expected.count(rel) == 1);
}

TEST_CASE("relation set is symmetric under swapping the two colours") {
    Palette p = Palette::symbolic({"lambda", "mu"});
    std::set<NCPoly> rels;
    for (const NCPoly& r : all_relations(p)) rels.insert(r);
    for (const NCPoly& r : all_relations(p)) CHECK(rels.count(swap_colours(r).monic()) == 1);
}

TEST_CASE("completed two-colour system is confluent") {
    const RewriteSystem& rs = system2();
    CHECK(rs.confluence_probe(6).empty());

    // raw orientation is not confluent; completion is doing real work
    RewriteSystem raw(all_relations(Palette::symbolic({"lambda", "mu"})));
    CHECK(!raw.confluence_probe(4).empty());
}

TEST_CASE("derived cross-colour exchange relations hold") {
    const RewriteSystem& rs = system2();
    // for generic colours the cross products collapse pairwise
    CHECK(rs.normal_form(gen(Letter::a, 1) * gen(Letter::d, 0) -
                         gen(Letter::a, 0) * gen(Letter::d, 1))
              .is_zero());
    CHECK(rs.normal_form(gen(Letter::b, 1) * gen(Letter::c, 0) -
                         gen(Letter::b, 0) * gen(Letter::c, 1))
              .is_zero());
    CHECK(rs.normal_form(gen(Letter::a, 1) * gen(Letter::b, 0) -
                         Scalar::q_power(Exponent::sym("mu") - Exponent::sym("lambda")) *
                             (gen(Letter::a, 0) * gen(Letter::b, 1)))
              .is_zero());
}

TEST_CASE("normal forms terminate and both strategies agree") {
    Palette p = Palette::symbolic({"lambda", "mu"});
    const RewriteSystem& rs = system2();

    std::vector<Generator> alphabet;
    for (int c = 0; c < 2; ++c)
        for (Letter l : {Letter::a, Letter::b, Letter::c, Letter::d})
            alphabet.push_back({l, c});

    // every word up to length 4, exhaustively
    std::vector<Word> frontier = {Word{}};
    for (int len = 1; len <= 4; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (Generator g : alphabet) {
                Word nw = w;
                nw.push_back(g);
                next.push_back(nw);
            }
        frontier = std::move(next);
        for (const Word& w : frontier) {
            NCPoly pw = NCPoly::term(Scalar::one(), w);
            NCPoly nf = rs.normal_form(pw);
            CHECK(rs.normal_form(nf) == nf);
            CHECK(rs.normal_form_alt(pw) == nf);
        }
    }

    // random longer words
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        Word w;
        for (int i = 0; i < 5 + trial % 2; ++i) w.push_back(alphabet[pick(rng)]);
        NCPoly pw = NCPoly::term(Scalar::one(), w);
        CHECK(rs.normal_form_alt(pw) == rs.normal_form(pw));
    }
}

TEST_CASE("corrupting one rule breaks confluence") {
    const RewriteSystem& rs = system2();
    std::vector<NCPoly> rels;
    for (const Rule& r : rs.rules())
        rels.push_back(NCPoly::term(Scalar::one(), r.lhs) - r.rhs);
    // scale one two-sided exchange rule's right side by q
    for (NCPoly& r : rels)
        if (r.leading_word().size() == 2 && r.term_count() == 2) {
            r = NCPoly::term(r.leading_coeff(), r.leading_word()) +
                (r - NCPoly::term(r.leading_coeff(), r.leading_word())).scaled(Scalar::q());
            break;
        }
    RewriteSystem broken(rels);
    CHECK(!broken.confluence_probe(4).empty());
}

TEST_CASE("quantum determinant is group-like, wrong exponent is not") {
    Palette p = Palette::monochromatic("lambda");
    RewriteSystem rs = build_rewrite_system(all_relations(p));

    NCPoly det = quantum_det(p, 0);
    CHECK(rs.normal_form2(coproduct(det) - NCPoly2::of(det, det)).is_zero());

    // flipped colour exponent fails for a generic colour
    NCPoly wrong = gen(Letter::a, 0) * gen(Letter::d, 0) -
                   Scalar::q_power(Exponent::constant(1) + p.value(0) * 2) *
                       (gen(Letter::c, 0) * gen(Letter::b, 0));
    CHECK(!rs.normal_form2(coproduct(wrong) - NCPoly2::of(wrong, wrong)).is_zero());

    // colourless limit: both expressions coincide
    Palette p0 = Palette::colourless();
    CHECK((quantum_det(p0, 0) -
           (gen(Letter::a, 0) * gen(Letter::d, 0) -
            Scalar::q() * (gen(Letter::c, 0) * gen(Letter::b, 0))))
              .is_zero());
}

TEST_CASE("determinant exchange exponents") {
    Palette p = Palette::symbolic({"lambda", "mu"});
    const RewriteSystem& rs = system2();
    Exponent l4 = Exponent::sym("lambda", 4);

    for (int gc : {0, 1}) {
        CHECK(det_exchange(rs, p, 0, {Letter::a, gc}).is_zero());
        CHECK(det_exchange(rs, p, 0, {Letter::d, gc}).is_zero());
        CHECK(det_exchange(rs, p, 0, {Letter::b, gc}) == l4);
        CHECK(det_exchange(rs, p, 0, {Letter::c, gc}) == -l4);
    }
    // colourless determinant is central
    Palette p0 = Palette::colourless();
    RewriteSystem rs0 = build_rewrite_system(all_relations(p0));
    for (Letter l : {Letter::a, Letter::b, Letter::c, Letter::d})
        CHECK(det_exchange(rs0, p0, 0, {l, 0}).is_zero());
}

TEST_CASE("exchange_monomial rejects pairs without a monomial ratio") {
    const RewriteSystem& rs = system2();
    CHECK_THROWS_AS(exchange_monomial(rs, gen(Letter::a, 0) * gen(Letter::d, 0),
                                      gen(Letter::d, 0) * gen(Letter::a, 0)),
                    NoMonomialExchange);
}

TEST_CASE("localized system inverts the determinant") {
    Palette p = Palette::symbolic({"lambda", "mu"});
    RewriteSystem loc = build_localized_system(p, system2(), 100000);

    for (int c : {0, 1}) {
        NCPoly det = quantum_det(p, c);
        NCPoly dinv = NCPoly::gen({Letter::dinv, c});
        CHECK(loc.normal_form(det * dinv - NCPoly::one()).is_zero());
        CHECK(loc.normal_form(dinv * det - NCPoly::one()).is_zero());
    }
}

TEST_CASE("antipode entries satisfy both axioms; corrupted ones do not") {
    Palette p = Palette::monochromatic("lambda");
    RewriteSystem loc = build_localized_system(p);

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NCPoly left, right;
            for (int k = 0; k < 2; ++k) {
                left += antipode_entry(p, 0, i, k) * NCPoly::gen(Generator::t(k, j, 0));
                right += NCPoly::gen(Generator::t(i, k, 0)) * antipode_entry(p, 0, k, j);
            }
            NCPoly expect = (i == j) ? NCPoly::one() : NCPoly::zero();
            CHECK(loc.normal_form(left - expect).is_zero());
            CHECK(loc.normal_form(right - expect).is_zero());
        }

    // negative control: flip the sign of the colour exponent in S(b)
    NCPoly bad01 = NCPoly::gen({Letter::dinv, 0}) *
                   (-Scalar::q_power(-(Exponent::constant(1) + p.value(0) * 2)) *
                    gen(Letter::b, 0));
    NCPoly left = bad01 * gen(Letter::c, 0) +
                  antipode_entry(p, 0, 0, 0) * gen(Letter::a, 0);
    CHECK(!loc.normal_form(left - NCPoly::one()).is_zero());
}

TEST_CASE("full coalgebra and antipode report passes for every palette") {
    for (const Palette& p : {Palette::colourless(), Palette::monochromatic("lambda"),
                             Palette::symbolic({"lambda", "mu"})}) {
        HopfReport rep = check_group_hopf(p);
        for (const CheckResult& c : rep.checks) {
            INFO(c.id << " residual " << c.residual_terms << " " << c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("three-colour system also completes") {
    Palette p3 = Palette::symbolic({"lambda", "mu", "nu"});
    RewriteSystem rs3 = build_rewrite_system(all_relations(p3));
    CHECK(rs3.confluence_probe(4).empty());
    // cross-colour collapse between the second and third colours
    CHECK(rs3.normal_form(gen(Letter::a, 2) * gen(Letter::d, 1) -
                          gen(Letter::a, 1) * gen(Letter::d, 2))
              .is_zero());
}

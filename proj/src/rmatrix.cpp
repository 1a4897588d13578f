#include "cqg/rmatrix.hpp"

namespace cqg {

ScalarMatrix build_r(const Exponent& first, const Exponent& second) {
    const Exponent one = Exponent::constant(1);
    ScalarMatrix r(4, 4);
    r.at(0, 0) = Scalar::q_power(one - (first - second));
    r.at(1, 1) = Scalar::q_power(first + second);
    r.at(2, 2) = Scalar::q_power(-(first + second));
    r.at(3, 3) = Scalar::q_power(one + (first - second));
    r.at(2, 1) = q_minus_qinv();
    return r;
}

ScalarMatrix build_braid(const Exponent& first, const Exponent& second) {
    return permutation4<Scalar>() * build_r(first, second);
}

ScalarMatrix build_r_pm(Sign sign, const Exponent& first, const Exponent& second) {
    ScalarMatrix r = build_r(first, second);
    if (sign == Sign::plus) {
        ScalarMatrix p = permutation4<Scalar>();
        return (p * r * p).scaled(Scalar::cplus_sym());
    }
    return triangular_inverse(r).scaled(Scalar::cminus_sym());
}

ScalarMatrix check_cqybe(const Exponent& l, const Exponent& m, const Exponent& n) {
    ScalarMatrix r12 = slot_embed(build_r(l, m), SlotPair::s12);
    ScalarMatrix r13 = slot_embed(build_r(l, n), SlotPair::s13);
    ScalarMatrix r23 = slot_embed(build_r(m, n), SlotPair::s23);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

ScalarMatrix check_braided_ybe(const Exponent& l, const Exponent& m, const Exponent& n) {
    auto rh = [](const Exponent& a, const Exponent& b) { return build_braid(a, b); };
    ScalarMatrix lhs = slot_embed(rh(l, m), SlotPair::s23) *
                       slot_embed(rh(l, n), SlotPair::s12) *
                       slot_embed(rh(m, n), SlotPair::s23);
    ScalarMatrix rhs = slot_embed(rh(m, n), SlotPair::s12) *
                       slot_embed(rh(l, n), SlotPair::s23) *
                       slot_embed(rh(l, m), SlotPair::s12);
    return lhs - rhs;
}

}  // namespace cqg

#ifndef MYB_BIMYB_HPP
#define MYB_BIMYB_HPP

#include "myb/assoc.hpp"
#include "myb/bunch.hpp"

namespace myb {

// Lie algebra with two commuting operators, each mYB, with identical tangent
// brackets (Def 2B invariants, verified by check_bimyb).
struct BiMYB {
    BracketMap algebra;
    LinearOperator R1;
    LinearOperator R2;
};

// Bundles: mYB for left and right multiplication by Q over the commutator
// algebra, and the tensor equalities
//   tangent(R^l_Q) = tangent(R^r_Q) = (X,Y) -> XQY - YQX.
MultiReport check_prop4(const AssocAlgebra& A, const Element& Q, long long window = 8);

// The three Def 2B clauses: commuting operators, both mYB, identical tangent
// brackets; each clause reported separately.
MultiReport check_bimyb(const BiMYB& b, long long window = 8);

// R1 - R2 is a derivation of the bracket.
CheckReport check_remark4(const BiMYB& b, long long window = 8);

// (a) xi is a derivation, (b) xi and R commute, and
// (c) [xi X, xi Y] = [SX,Y] + [X,SY] - S[X,Y] with S = R o xi.
MultiReport check_remark5(const BracketMap& algebra, const LinearOperator& R,
                          const LinearOperator& xi, long long window = 8);

// [X,Y]^q = [R^r_Q X, R^l_Q Y] + [R^l_Q X, R^r_Q Y] - R^r_Q R^l_Q [X,Y]
// over the commutator algebra.
BracketMap q_bracket(const AssocAlgebra& A, const Element& Q);

// (a) Jacobi for [.,.]^q, (b) tensor equalities with the tangent brackets of
// R1^2 and R2^2, (c) compatibility with [.,.] and the shared tangent bracket.
MultiReport check_remark6(const AssocAlgebra& A, const Element& Q, long long window = 8);

// The mixed-operator identity, in both formulations:
//   [R1 X, R2 Y] + [R2 X, R1 Y] - R1 R2 [X,Y]
//     = [R1^2 X, Y] + [X, R1^2 Y] - R1^2 [X,Y]
// and the equivalent R/xi form with R = R1, xi = R2 - R1:
//   [RX, xi Y] + [xi X, RY] - R xi [X,Y] = [R^2 X, Y] - 2[RX, RY] + [X, R^2 Y].
// The two formulations must agree on every instance.
MultiReport check_even_tempered(const BiMYB& b, long long window = 8);

}  // namespace myb

#endif

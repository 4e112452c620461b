#ifndef MYB_BUNCH_HPP
#define MYB_BUNCH_HPP

#include "myb/bracket.hpp"
#include "myb/op.hpp"
#include "myb/report.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace myb {

// Linear family of brackets [.,.]_lambda = base + lambda * direction, with an
// optional operator R so that R_lambda = 1 + lambda R.
struct Pencil {
    BracketMap base;
    BracketMap direction;
    std::optional<LinearOperator> operator_family;

    BracketMap at(const Rational& lambda) const {
        if (lambda == 0)
            return base;
        return BracketMap::sum(base, direction.scaled(lambda),
                               base.label() + "+" + rational_to_string(lambda) + "*" +
                                   direction.label());
    }
};

// Lie algebra with an operator satisfying the mYB identity on the declared
// window (validated by make_gamma_bunch / check_myb).
struct MYBAlgebra {
    BracketMap algebra;
    LinearOperator R;
};

// (X,Y) -> [RX,Y] + [X,RY] - R[X,Y]; dense output for finite algebras, rule
// output otherwise.
BracketMap tangent_bracket(const BracketMap& br, const LinearOperator& R);

// (X,Y) -> [RX,Y] + [X,RY]; equals tangent_bracket + R o br (asserted).
BracketMap primed_bracket(const BracketMap& br, const LinearOperator& R);

// Defect of a basis pair: B(b_i, b_j) = R[b_i,b_j]_R - [R b_i, R b_j];
// cross-checked against the expanded four-term form.
Element b_defect(const BracketMap& br, const LinearOperator& R, BasisIndex i, BasisIndex j);

// Bilinear defect on arbitrary elements.
Element b_defect_elements(const BracketMap& br, const LinearOperator& R,
                          const Element& X, const Element& Y);

// R[Rb_i,b_j] + R[b_i,Rb_j] = [Rb_i,Rb_j] + R^2[b_i,b_j] on basis pairs.
CheckReport check_myb(const BracketMap& br, const LinearOperator& R, long long window = 8);

// Classical normalization: [RX,RY] - R[RX,Y] - R[X,RY] + c[X,Y] = 0.
CheckReport check_mcybe_variant(const BracketMap& br, const LinearOperator& R,
                                const Rational& c, long long window = 8);

// [R^2[b_i,b_j], b_k] + cyclic = 0 on basis triples.
CheckReport check_primed_lie_condition(const BracketMap& br, const LinearOperator& R,
                                       long long window = 8);

// Mixed Jacobi: ([[X,Y]_1,Z]_2 + [[X,Y]_2,Z]_1) + cyclic = 0 on basis triples.
CheckReport check_compatible(const BracketMap& br1, const BracketMap& br2,
                             long long window = 8);

// ([B(X,Y),Z] + B([X,Y],Z)) + cyclic = 0 on basis triples, with B the defect.
CheckReport check_remark2_criterion(const BracketMap& br, const LinearOperator& R,
                                    long long window = 8);

// Raised when a construction's gate fails; carries the refusing report.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, CheckReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const CheckReport& report() const { return report_; }

private:
    CheckReport report_;
};

// Pencil (base, tangent bracket, R); refuses with the counterexample when
// the mYB identity fails on the window.
Pencil make_gamma_bunch(const MYBAlgebra& m, long long window = 8);

// R_lambda [X,Y]_lambda = [R_lambda X, R_lambda Y] at each lambda sample on
// basis pairs.  Both sides are polynomials of degree <= 2 in lambda, so 3
// distinct exact samples certify the identity; fewer are rejected.
CheckReport check_gamma_homomorphism(const Pencil& p, const std::vector<Rational>& lambdas,
                                     long long window = 8);

// Single-sample variant used by the degenerate lambda = 0 case.
CheckReport check_gamma_homomorphism_at(const Pencil& p, const Rational& lambda,
                                        long long window = 8);

}  // namespace myb

#endif

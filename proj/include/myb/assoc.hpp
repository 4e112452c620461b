#ifndef MYB_ASSOC_HPP
#define MYB_ASSOC_HPP

#include "myb/bracket.hpp"
#include "myb/op.hpp"

#include <optional>
#include <utility>

namespace myb {

// Finite-dimensional associative algebra given by product constants
// b_i * b_j = sum a_ij^k b_k.  Construction rejects any product tensor
// failing the basis-triple associativity sweep, with the failing triple
// reported, and verifies the unit when present.
class AssocAlgebra {
public:
    AssocAlgebra(long long dim, SparseTensor3 product_constants,
                 std::optional<Element> unit = std::nullopt,
                 std::string label = "A");

    long long dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const SparseTensor3& product_constants() const { return products_; }
    const std::optional<Element>& unit() const { return unit_; }

    Element product_basis(BasisIndex i, BasisIndex j) const;
    Element product(const Element& X, const Element& Y) const;

private:
    long long dim_;
    SparseTensor3 products_;
    std::optional<Element> unit_;
    std::string label_;
};

// Dense Lie bracket [X,Y] = X*Y - Y*X.
BracketMap commutator_algebra(const AssocAlgebra& A);

// (left multiplication by Q, right multiplication by Q) as dense operators.
std::pair<LinearOperator, LinearOperator> mult_operators(const AssocAlgebra& A,
                                                         const Element& Q);

// Dense bracket (X,Y) -> XQY - YQX.
BracketMap conjugation_bracket(const AssocAlgebra& A, const Element& Q);

}  // namespace myb

#endif

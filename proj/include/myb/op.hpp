#ifndef MYB_OP_HPP
#define MYB_OP_HPP

#include "myb/bracket.hpp"
#include "myb/element.hpp"
#include "myb/matrix.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace myb {

// Endomorphism of the algebra's span.  Backends:
//  - Dense: matrix on a finite basis.
//  - ShiftSum: finite sum of scaled index shifts, e_i -> sum c_n e_{i+n}
//    (a single term is the Witt shift R_n; sums arise from polynomials).
//  - Diagonal: e_i -> f(i) e_i with an eigenvalue function on indices.
class LinearOperator {
public:
    using ShiftTerms = std::vector<std::pair<long long, Rational>>;  // offset -> coeff
    using EigenFn = std::function<Rational(BasisIndex)>;

    LinearOperator() = default;

    static LinearOperator dense(Matrix m, std::string label = "R");
    static LinearOperator shift(long long offset);
    static LinearOperator shift_sum(ShiftTerms terms, std::string label = "");
    static LinearOperator diagonal(EigenFn fn, std::string label = "R");
    static LinearOperator zero(long long dim);
    static LinearOperator identity(long long dim) { return dense(Matrix::identity(dim), "1"); }

    Element apply(const Element& x) const;

    bool is_dense() const;
    const std::string& label() const;
    // Matrix form on the basis [0, dim); throws for shift backends with a
    // nonzero offset (they leave every finite window).
    Matrix to_matrix(long long dim) const;

    friend LinearOperator op_add(const LinearOperator&, const LinearOperator&);
    friend LinearOperator op_sub(const LinearOperator&, const LinearOperator&);
    friend LinearOperator op_scale(const Rational&, const LinearOperator&);
    friend LinearOperator op_compose(const LinearOperator&, const LinearOperator&);
    friend LinearOperator op_polynomial(const std::vector<Rational>&, const LinearOperator&);
    friend LinearOperator op_commutator(const LinearOperator&, const LinearOperator&);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

LinearOperator op_add(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_scale(const Rational& c, const LinearOperator& a);
// Composition a after b.
LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b);

// a_0 + a_1 R + ... + a_n R^n, exact on every backend.
LinearOperator op_polynomial(const std::vector<Rational>& coeffs, const LinearOperator& R);

// AB - BA as a dense operator; both arguments must be dense.
LinearOperator op_commutator(const LinearOperator& a, const LinearOperator& b);

// Matrix of X -> [Z, X] over a finite bracket.
LinearOperator ad(const BracketMap& br, const Element& Z);

}  // namespace myb

#endif

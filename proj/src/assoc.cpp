#include "myb/assoc.hpp"

#include <stdexcept>

namespace myb {

AssocAlgebra::AssocAlgebra(long long dim, SparseTensor3 product_constants,
                           std::optional<Element> unit, std::string label)
    : dim_(dim), products_(std::move(product_constants)), unit_(std::move(unit)),
      label_(std::move(label)) {
    if (products_.dim() != dim_)
        throw std::invalid_argument("AssocAlgebra: product tensor dimension mismatch");
    for (BasisIndex i = 0; i < dim_; ++i)
        for (BasisIndex j = 0; j < dim_; ++j)
            for (BasisIndex k = 0; k < dim_; ++k) {
                Element lhs = product(product_basis(i, j), Element::basis(k));
                Element rhs = product(Element::basis(i), product_basis(j, k));
                if (lhs != rhs)
                    throw std::invalid_argument(
                        "AssocAlgebra: associativity fails at triple (" + std::to_string(i) +
                        "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
    if (unit_) {
        for (BasisIndex i = 0; i < dim_; ++i) {
            Element b = Element::basis(i);
            if (product(*unit_, b) != b || product(b, *unit_) != b)
                throw std::invalid_argument("AssocAlgebra: declared unit is not a unit at index " +
                                            std::to_string(i));
        }
    }
}

Element AssocAlgebra::product_basis(BasisIndex i, BasisIndex j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("AssocAlgebra: basis index outside [0, dim)");
    Element out;
    auto it = products_.entries().lower_bound({i, j, 0});
    for (; it != products_.entries().end() && it->first[0] == i && it->first[1] == j; ++it)
        out.add_term(it->first[2], it->second);
    return out;
}

Element AssocAlgebra::product(const Element& X, const Element& Y) const {
    Element out;
    for (const auto& [i, ci] : X.support())
        for (const auto& [j, cj] : Y.support()) {
            Element t = product_basis(i, j);
            if (!t.is_zero())
                out = out + t.scaled(ci * cj);
        }
    return out;
}

BracketMap commutator_algebra(const AssocAlgebra& A) {
    long long n = A.dim();
    SparseTensor3 t(n);
    for (BasisIndex i = 0; i < n; ++i)
        for (BasisIndex j = i + 1; j < n; ++j) {
            Element c = A.product_basis(i, j) - A.product_basis(j, i);
            for (const auto& [k, v] : c.support())
                t.set(i, j, k, v);
        }
    return BracketMap::dense(n, std::move(t), A.label() + "_[.,.]");
}

std::pair<LinearOperator, LinearOperator> mult_operators(const AssocAlgebra& A,
                                                         const Element& Q) {
    long long n = A.dim();
    Matrix left(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    Matrix right(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (BasisIndex j = 0; j < n; ++j) {
        Element b = Element::basis(j);
        Element lv = A.product(Q, b), rv = A.product(b, Q);
        for (const auto& [i, c] : lv.support())
            left(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
        for (const auto& [i, c] : rv.support())
            right(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
    }
    return {LinearOperator::dense(std::move(left), "L_Q"),
            LinearOperator::dense(std::move(right), "R_Q")};
}

BracketMap conjugation_bracket(const AssocAlgebra& A, const Element& Q) {
    long long n = A.dim();
    SparseTensor3 t(n);
    for (BasisIndex i = 0; i < n; ++i)
        for (BasisIndex j = i + 1; j < n; ++j) {
            Element x = Element::basis(i), y = Element::basis(j);
            Element v = A.product(A.product(x, Q), y) - A.product(A.product(y, Q), x);
            for (const auto& [k, c] : v.support())
                t.set(i, j, k, c);
        }
    return BracketMap::dense(n, std::move(t), "XQY-YQX");
}

}  // namespace myb

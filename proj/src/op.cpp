#include "myb/op.hpp"

#include <map>
#include <stdexcept>

namespace myb {

struct LinearOperator::Impl {
    enum class Kind { Dense, ShiftSum, Diagonal };
    Kind kind = Kind::Dense;
    Matrix mat;
    ShiftTerms shifts;
    EigenFn eigen;
    std::string label;
};

namespace {

LinearOperator::ShiftTerms normalize(LinearOperator::ShiftTerms terms) {
    std::map<long long, Rational> acc;
    for (auto& [n, c] : terms)
        acc[n] += c;
    LinearOperator::ShiftTerms out;
    for (auto& [n, c] : acc)
        if (c != 0)
            out.emplace_back(n, c);
    return out;
}

std::string shift_label(const LinearOperator::ShiftTerms& terms) {
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& [n, c] : terms) {
        if (!s.empty())
            s += "+";
        s += rational_to_string(c) + "*S" + std::to_string(n);
    }
    return s;
}

}  // namespace

LinearOperator LinearOperator::dense(Matrix m, std::string label) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("LinearOperator::dense: square matrix required");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Dense;
    impl->mat = std::move(m);
    impl->label = std::move(label);
    LinearOperator r;
    r.impl_ = impl;
    return r;
}

LinearOperator LinearOperator::shift(long long offset) {
    return shift_sum({{offset, Rational(1)}}, "R_" + std::to_string(offset));
}

LinearOperator LinearOperator::shift_sum(ShiftTerms terms, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::ShiftSum;
    impl->shifts = normalize(std::move(terms));
    impl->label = label.empty() ? shift_label(impl->shifts) : std::move(label);
    LinearOperator r;
    r.impl_ = impl;
    return r;
}

LinearOperator LinearOperator::diagonal(EigenFn fn, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Diagonal;
    impl->eigen = std::move(fn);
    impl->label = std::move(label);
    LinearOperator r;
    r.impl_ = impl;
    return r;
}

LinearOperator LinearOperator::zero(long long dim) {
    return dense(Matrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)), "0");
}

Element LinearOperator::apply(const Element& x) const {
    Element out;
    switch (impl_->kind) {
    case Impl::Kind::Dense: {
        long long n = static_cast<long long>(impl_->mat.rows());
        for (const auto& [j, c] : x.support()) {
            if (j < 0 || j >= n)
                throw std::out_of_range("LinearOperator::apply: index outside matrix range");
            for (long long i = 0; i < n; ++i) {
                const Rational& m = impl_->mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                if (m != 0)
                    out.add_term(i, m * c);
            }
        }
        return out;
    }
    case Impl::Kind::ShiftSum:
        for (const auto& [j, c] : x.support())
            for (const auto& [n, s] : impl_->shifts)
                out.add_term(j + n, s * c);
        return out;
    case Impl::Kind::Diagonal:
        for (const auto& [j, c] : x.support())
            out.add_term(j, impl_->eigen(j) * c);
        return out;
    }
    return out;
}

bool LinearOperator::is_dense() const { return impl_->kind == Impl::Kind::Dense; }

const std::string& LinearOperator::label() const { return impl_->label; }

Matrix LinearOperator::to_matrix(long long dim) const {
    switch (impl_->kind) {
    case Impl::Kind::Dense:
        if (static_cast<long long>(impl_->mat.rows()) != dim)
            throw std::invalid_argument("LinearOperator::to_matrix: dimension mismatch");
        return impl_->mat;
    case Impl::Kind::Diagonal: {
        Matrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        for (long long i = 0; i < dim; ++i)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = impl_->eigen(i);
        return m;
    }
    case Impl::Kind::ShiftSum:
        for (const auto& [n, c] : impl_->shifts)
            if (n != 0)
                throw std::invalid_argument(
                    "LinearOperator::to_matrix: shift operator has no finite matrix");
        {
            Rational c0 = impl_->shifts.empty() ? Rational(0) : impl_->shifts.front().second;
            return Matrix::identity(static_cast<std::size_t>(dim)).scaled(c0);
        }
    }
    throw std::logic_error("LinearOperator::to_matrix: unknown backend");
}

LinearOperator op_add(const LinearOperator& a, const LinearOperator& b) {
    using Kind = LinearOperator::Impl::Kind;
    if (a.impl_->kind == Kind::Dense && b.impl_->kind == Kind::Dense)
        return LinearOperator::dense(a.impl_->mat + b.impl_->mat,
                                     a.label() + "+" + b.label());
    if (a.impl_->kind == Kind::ShiftSum && b.impl_->kind == Kind::ShiftSum) {
        auto terms = a.impl_->shifts;
        terms.insert(terms.end(), b.impl_->shifts.begin(), b.impl_->shifts.end());
        return LinearOperator::shift_sum(std::move(terms));
    }
    if (a.impl_->kind == Kind::Diagonal && b.impl_->kind == Kind::Diagonal) {
        auto fa = a.impl_->eigen, fb = b.impl_->eigen;
        return LinearOperator::diagonal([fa, fb](BasisIndex i) { return fa(i) + fb(i); },
                                        a.label() + "+" + b.label());
    }
    throw std::invalid_argument("op_add: incompatible operator backends");
}

LinearOperator op_scale(const Rational& c, const LinearOperator& a) {
    using Kind = LinearOperator::Impl::Kind;
    switch (a.impl_->kind) {
    case Kind::Dense:
        return LinearOperator::dense(a.impl_->mat.scaled(c),
                                     rational_to_string(c) + "*" + a.label());
    case Kind::ShiftSum: {
        LinearOperator::ShiftTerms terms;
        for (const auto& [n, v] : a.impl_->shifts)
            terms.emplace_back(n, v * c);
        return LinearOperator::shift_sum(std::move(terms));
    }
    case Kind::Diagonal: {
        auto f = a.impl_->eigen;
        return LinearOperator::diagonal([f, c](BasisIndex i) { return f(i) * c; },
                                        rational_to_string(c) + "*" + a.label());
    }
    }
    throw std::logic_error("op_scale: unknown backend");
}

LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b) {
    return op_add(a, op_scale(Rational(-1), b));
}

LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b) {
    using Kind = LinearOperator::Impl::Kind;
    if (a.impl_->kind == Kind::Dense && b.impl_->kind == Kind::Dense)
        return LinearOperator::dense(a.impl_->mat * b.impl_->mat,
                                     a.label() + "*" + b.label());
    if (a.impl_->kind == Kind::ShiftSum && b.impl_->kind == Kind::ShiftSum) {
        LinearOperator::ShiftTerms terms;
        for (const auto& [n1, c1] : a.impl_->shifts)
            for (const auto& [n2, c2] : b.impl_->shifts)
                terms.emplace_back(n1 + n2, c1 * c2);
        return LinearOperator::shift_sum(std::move(terms));
    }
    if (a.impl_->kind == Kind::Diagonal && b.impl_->kind == Kind::Diagonal) {
        auto fa = a.impl_->eigen, fb = b.impl_->eigen;
        return LinearOperator::diagonal([fa, fb](BasisIndex i) { return fa(i) * fb(i); },
                                        a.label() + "*" + b.label());
    }
    throw std::invalid_argument("op_compose: incompatible operator backends");
}

LinearOperator op_polynomial(const std::vector<Rational>& coeffs, const LinearOperator& R) {
    using Kind = LinearOperator::Impl::Kind;
    switch (R.impl_->kind) {
    case Kind::Dense: {
        std::size_t n = R.impl_->mat.rows();
        Matrix acc(n, n);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * R.impl_->mat + Matrix::identity(n).scaled(*it);
        return LinearOperator::dense(std::move(acc), "f(" + R.label() + ")");
    }
    case Kind::ShiftSum: {
        LinearOperator acc = LinearOperator::shift_sum({});
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = op_add(op_compose(acc, R),
                         LinearOperator::shift_sum({{0, *it}}));
        return acc;
    }
    case Kind::Diagonal: {
        auto f = R.impl_->eigen;
        auto cs = coeffs;
        return LinearOperator::diagonal(
            [f, cs](BasisIndex i) {
                Rational x = f(i), acc = 0;
                for (auto it = cs.rbegin(); it != cs.rend(); ++it)
                    acc = acc * x + *it;
                return acc;
            },
            "f(" + R.label() + ")");
    }
    }
    throw std::logic_error("op_polynomial: unknown backend");
}

LinearOperator op_commutator(const LinearOperator& a, const LinearOperator& b) {
    if (!a.is_dense() || !b.is_dense())
        throw std::invalid_argument("op_commutator: dense operators required");
    const Matrix& ma = a.impl_->mat;
    const Matrix& mb = b.impl_->mat;
    if (ma.rows() != mb.rows())
        throw std::invalid_argument("op_commutator: dimension mismatch");
    return LinearOperator::dense(ma * mb - mb * ma,
                                 "[" + a.label() + "," + b.label() + "]");
}

LinearOperator ad(const BracketMap& br, const Element& Z) {
    if (!br.finite())
        throw std::invalid_argument("ad: finite algebra backend required");
    long long n = br.dim();
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) {
        Element col = br.eval(Z, Element::basis(j));
        for (const auto& [i, c] : col.support())
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;
    }
    return LinearOperator::dense(std::move(m), "ad(" + Z.to_string() + ")");
}

}  // namespace myb

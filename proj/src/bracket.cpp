#include "myb/bracket.hpp"

#include <stdexcept>

namespace myb {

struct BracketMap::Impl {
    enum class Kind { DenseSkew, DenseRaw, Rule };
    Kind kind = Kind::DenseSkew;
    long long dim = 0;
    SparseTensor3 tensor;
    BracketRule rule;
    std::string label;
};

BracketMap BracketMap::dense(long long dim, SparseTensor3 lower, std::string label) {
    if (lower.dim() != dim)
        throw std::invalid_argument("BracketMap::dense: tensor dimension mismatch");
    for (const auto& [key, c] : lower.entries())
        if (key[0] >= key[1])
            throw std::invalid_argument(
                "BracketMap::dense: validated storage requires i < j entries only");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::DenseSkew;
    impl->dim = dim;
    impl->tensor = std::move(lower);
    impl->label = std::move(label);
    BracketMap b;
    b.impl_ = impl;
    return b;
}

BracketMap BracketMap::dense_raw(long long dim, SparseTensor3 tensor, std::string label) {
    if (tensor.dim() != dim)
        throw std::invalid_argument("BracketMap::dense_raw: tensor dimension mismatch");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::DenseRaw;
    impl->dim = dim;
    impl->tensor = std::move(tensor);
    impl->label = std::move(label);
    BracketMap b;
    b.impl_ = impl;
    return b;
}

BracketMap BracketMap::rule(BracketRule fn, std::string label) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Rule;
    impl->rule = std::move(fn);
    impl->label = std::move(label);
    BracketMap b;
    b.impl_ = impl;
    return b;
}

BracketMap BracketMap::zero_dense(long long dim, std::string label) {
    return dense(dim, SparseTensor3(dim), std::move(label));
}

bool BracketMap::finite() const { return impl_->kind != Impl::Kind::Rule; }
bool BracketMap::skew_storage() const { return impl_->kind == Impl::Kind::DenseSkew; }

long long BracketMap::dim() const {
    if (!finite())
        throw std::logic_error("BracketMap::dim: rule backend has no finite dimension");
    return impl_->dim;
}

const std::string& BracketMap::label() const { return impl_->label; }

Element BracketMap::eval_basis(BasisIndex i, BasisIndex j) const {
    Element out;
    switch (impl_->kind) {
    case Impl::Kind::Rule:
        for (const auto& [k, c] : impl_->rule(i, j))
            out.add_term(k, c);
        return out;
    case Impl::Kind::DenseSkew: {
        if (i < 0 || i >= impl_->dim || j < 0 || j >= impl_->dim)
            throw std::out_of_range("BracketMap: basis index outside [0, dim)");
        if (i == j)
            return out;
        bool flip = i > j;
        auto lo = flip ? j : i, hi = flip ? i : j;
        auto it = impl_->tensor.entries().lower_bound({lo, hi, 0});
        for (; it != impl_->tensor.entries().end() && it->first[0] == lo && it->first[1] == hi; ++it)
            out.add_term(it->first[2], flip ? -it->second : it->second);
        return out;
    }
    case Impl::Kind::DenseRaw: {
        if (i < 0 || i >= impl_->dim || j < 0 || j >= impl_->dim)
            throw std::out_of_range("BracketMap: basis index outside [0, dim)");
        auto it = impl_->tensor.entries().lower_bound({i, j, 0});
        for (; it != impl_->tensor.entries().end() && it->first[0] == i && it->first[1] == j; ++it)
            out.add_term(it->first[2], it->second);
        return out;
    }
    }
    return out;
}

Element BracketMap::eval(const Element& X, const Element& Y) const {
    Element out;
    for (const auto& [i, ci] : X.support())
        for (const auto& [j, cj] : Y.support()) {
            Element t = eval_basis(i, j);
            if (!t.is_zero())
                out = out + t.scaled(ci * cj);
        }
    return out;
}

BracketMap BracketMap::scaled(const Rational& c, std::string label) const {
    if (label.empty())
        label = rational_to_string(c) + "*(" + impl_->label + ")";
    if (impl_->kind == Impl::Kind::Rule) {
        BracketMap self = *this;
        return rule(
            [self, c](BasisIndex i, BasisIndex j) {
                RuleTerms terms;
                Element e = self.eval_basis(i, j);
                for (const auto& [k, v] : e.support())
                    terms.emplace_back(k, v * c);
                return terms;
            },
            std::move(label));
    }
    SparseTensor3 t(impl_->dim);
    for (const auto& [key, v] : impl_->tensor.entries())
        t.set(key[0], key[1], key[2], v * c);
    return impl_->kind == Impl::Kind::DenseSkew ? dense(impl_->dim, std::move(t), std::move(label))
                                                : dense_raw(impl_->dim, std::move(t), std::move(label));
}

BracketMap BracketMap::sum(const BracketMap& a, const BracketMap& b, std::string label) {
    if (label.empty())
        label = "(" + a.label() + ")+(" + b.label() + ")";
    if (a.finite() != b.finite())
        throw std::invalid_argument("BracketMap::sum: mixed index kinds");
    if (!a.finite()) {
        return rule(
            [a, b](BasisIndex i, BasisIndex j) {
                RuleTerms terms;
                Element e = a.eval_basis(i, j) + b.eval_basis(i, j);
                for (const auto& [k, v] : e.support())
                    terms.emplace_back(k, v);
                return terms;
            },
            std::move(label));
    }
    if (a.dim() != b.dim())
        throw std::invalid_argument("BracketMap::sum: dimension mismatch");
    long long n = a.dim();
    if (a.skew_storage() && b.skew_storage()) {
        SparseTensor3 t(n);
        for (long long i = 0; i < n; ++i)
            for (long long j = i + 1; j < n; ++j) {
                Element e = a.eval_basis(i, j) + b.eval_basis(i, j);
                for (const auto& [k, v] : e.support())
                    t.set(i, j, k, v);
            }
        return dense(n, std::move(t), std::move(label));
    }
    SparseTensor3 t(n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            Element e = a.eval_basis(i, j) + b.eval_basis(i, j);
            for (const auto& [k, v] : e.support())
                t.set(i, j, k, v);
        }
    return dense_raw(n, std::move(t), std::move(label));
}

SparseTensor3 BracketMap::full_tensor() const {
    long long n = dim();
    SparseTensor3 t(n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            Element e = eval_basis(i, j);
            for (const auto& [k, v] : e.support())
                t.set(i, j, k, v);
        }
    return t;
}

std::vector<Rational> BracketMap::flatten() const {
    long long n = dim();
    std::vector<Rational> out(static_cast<std::size_t>(n * n * n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            Element e = eval_basis(i, j);
            for (const auto& [k, v] : e.support())
                out[static_cast<std::size_t>((i * n + j) * n + k)] = v;
        }
    return out;
}

bool brackets_equal(const BracketMap& a, const BracketMap& b) {
    if (!a.finite() || !b.finite())
        throw std::invalid_argument("brackets_equal: finite brackets required");
    if (a.dim() != b.dim())
        return false;
    for (long long i = 0; i < a.dim(); ++i)
        for (long long j = 0; j < a.dim(); ++j)
            if (a.eval_basis(i, j) != b.eval_basis(i, j))
                return false;
    return true;
}

BracketMap densify(const BracketMap& br, std::string label) {
    long long n = br.dim();
    if (label.empty())
        label = br.label();
    bool skew = true;
    for (long long i = 0; i < n && skew; ++i)
        for (long long j = i; j < n && skew; ++j)
            if (br.eval_basis(i, j) != br.eval_basis(j, i).scaled(-1))
                skew = false;
    if (skew) {
        SparseTensor3 t(n);
        for (long long i = 0; i < n; ++i)
            for (long long j = i + 1; j < n; ++j) {
                Element e = br.eval_basis(i, j);
                for (const auto& [k, v] : e.support())
                    t.set(i, j, k, v);
            }
        return BracketMap::dense(n, std::move(t), std::move(label));
    }
    return BracketMap::dense_raw(n, br.full_tensor(), std::move(label));
}

}  // namespace myb

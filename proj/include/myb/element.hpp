#ifndef MYB_ELEMENT_HPP
#define MYB_ELEMENT_HPP

#include "myb/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace myb {

// Basis index: 0-based ordinal for finite algebras, arbitrary integer grade
// for rule algebras (Witt index k).
using BasisIndex = long long;

// Finitely supported rational combination of basis vectors.  Zero
// coefficients are never stored.
class Element {
public:
    Element() = default;

    static Element basis(BasisIndex i) {
        Element e;
        e.support_[i] = 1;
        return e;
    }

    static Element from_coeffs(const std::vector<Rational>& coeffs) {
        Element e;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            e.add_term(static_cast<BasisIndex>(i), coeffs[i]);
        return e;
    }

    void add_term(BasisIndex i, const Rational& c) {
        if (c == 0)
            return;
        auto it = support_.find(i);
        if (it == support_.end()) {
            support_[i] = c;
        } else {
            it->second += c;
            if (it->second == 0)
                support_.erase(it);
        }
    }

    const std::map<BasisIndex, Rational>& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    Rational coeff(BasisIndex i) const {
        auto it = support_.find(i);
        return it == support_.end() ? Rational(0) : it->second;
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [i, c] : o.support_)
            r.add_term(i, c);
        return r;
    }

    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [i, c] : o.support_)
            r.add_term(i, -c);
        return r;
    }

    Element scaled(const Rational& c) const {
        Element r;
        if (c == 0)
            return r;
        for (const auto& [i, v] : support_)
            r.support_[i] = v * c;
        return r;
    }

    bool operator==(const Element& o) const { return support_ == o.support_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Coefficient vector over basis indices [0, dim); throws on indices
    // outside that range.
    std::vector<Rational> to_coeffs(long long dim) const;

    std::string to_string(const std::string& symbol = "b") const;

private:
    std::map<BasisIndex, Rational> support_;
};

}  // namespace myb

#endif

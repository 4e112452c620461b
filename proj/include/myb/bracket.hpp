#ifndef MYB_BRACKET_HPP
#define MYB_BRACKET_HPP

#include "myb/element.hpp"
#include "myb/tensor3.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace myb {

using RuleTerms = std::vector<std::pair<BasisIndex, Rational>>;
using BracketRule = std::function<RuleTerms(BasisIndex, BasisIndex)>;

// Bilinear bracket on an indexed basis.  Two backends:
//  - Dense: finite basis, structure constants in a SparseTensor3.  Validated
//    ("skew") storage keeps i<j entries only with i>j implied by sign; raw
//    storage keeps the tensor exactly as given (for negative tests).
//  - Rule: index rule on all of Z (Witt-style), one closed-form term list
//    per basis pair.
class BracketMap {
public:
    BracketMap() = default;

    // Validated dense bracket; every tensor entry must have i < j.
    static BracketMap dense(long long dim, SparseTensor3 lower, std::string label);
    // Unvalidated dense bracket; the tensor is used verbatim.
    static BracketMap dense_raw(long long dim, SparseTensor3 tensor, std::string label);
    static BracketMap rule(BracketRule fn, std::string label);
    static BracketMap zero_dense(long long dim, std::string label = "0");

    bool finite() const;
    bool skew_storage() const;
    long long dim() const;  // finite only
    const std::string& label() const;

    Element eval_basis(BasisIndex i, BasisIndex j) const;
    Element eval(const Element& X, const Element& Y) const;

    BracketMap scaled(const Rational& c, std::string label = "") const;
    static BracketMap sum(const BracketMap& a, const BracketMap& b, std::string label = "");

    // Finite only: the full structure-constant tensor, entry (i,j,k) for all
    // ordered pairs.
    SparseTensor3 full_tensor() const;
    // Finite only: the tensor flattened to dim^3 coordinates, (i,j,k)
    // lexicographic.
    std::vector<Rational> flatten() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

// Exact tensor equality of two finite brackets of the same dimension.
bool brackets_equal(const BracketMap& a, const BracketMap& b);

// Dense bracket with the same structure constants as `br` evaluated on the
// standard basis (finite only).  Skew storage when the evaluation is
// antisymmetric.
BracketMap densify(const BracketMap& br, std::string label = "");

}  // namespace myb

#endif

#include "myb/checks.hpp"

#include "myb/sweep.hpp"

namespace myb {

std::vector<BasisIndex> check_window(const BracketMap& br, long long window) {
    std::vector<BasisIndex> idx;
    if (br.finite()) {
        idx.reserve(static_cast<std::size_t>(br.dim()));
        for (BasisIndex i = 0; i < br.dim(); ++i)
            idx.push_back(i);
    } else {
        idx.reserve(static_cast<std::size_t>(2 * window + 1));
        for (BasisIndex i = -window; i <= window; ++i)
            idx.push_back(i);
    }
    return idx;
}

CheckReport check_antisymmetry(const BracketMap& br, long long window) {
    return sweep_pairs("antisymmetry(" + br.label() + ")", check_window(br, window),
                       [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
                           lhs = br.eval_basis(i, j);
                           rhs = br.eval_basis(j, i).scaled(-1);
                       });
}

CheckReport check_jacobi(const BracketMap& br, long long window) {
    return sweep_triples("jacobi(" + br.label() + ")", check_window(br, window),
                         [&](BasisIndex i, BasisIndex j, BasisIndex k, Element& lhs, Element& rhs) {
                             Element x = Element::basis(i), y = Element::basis(j), z = Element::basis(k);
                             lhs = br.eval(br.eval_basis(i, j), z) +
                                   br.eval(br.eval_basis(j, k), x) +
                                   br.eval(br.eval_basis(k, i), y);
                             rhs = Element();
                         });
}

CheckReport is_derivation(const LinearOperator& R, const BracketMap& br, long long window) {
    return sweep_pairs("derivation(" + R.label() + ", " + br.label() + ")",
                       check_window(br, window),
                       [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
                           Element x = Element::basis(i), y = Element::basis(j);
                           lhs = R.apply(br.eval_basis(i, j));
                           rhs = br.eval(R.apply(x), y) + br.eval(x, R.apply(y));
                       });
}

}  // namespace myb

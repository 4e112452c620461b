#ifndef MYB_CHECKS_HPP
#define MYB_CHECKS_HPP

#include "myb/bracket.hpp"
#include "myb/op.hpp"
#include "myb/report.hpp"

namespace myb {

// [b_i, b_j] = -[b_j, b_i] on all basis pairs.
CheckReport check_antisymmetry(const BracketMap& br, long long window = 8);

// [[b_i,b_j],b_k] + cyclic = 0 on all basis triples.  Multilinearity makes
// basis triples sufficient for the spanned space.
CheckReport check_jacobi(const BracketMap& br, long long window = 8);

// R[b_i,b_j] = [R b_i, b_j] + [b_i, R b_j] on basis pairs.
CheckReport is_derivation(const LinearOperator& R, const BracketMap& br, long long window = 8);

}  // namespace myb

#endif

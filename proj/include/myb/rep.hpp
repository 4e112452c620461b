#ifndef MYB_REP_HPP
#define MYB_REP_HPP

#include "myb/bunch.hpp"
#include "myb/matrix.hpp"

#include <vector>

namespace myb {

// Linear map T from a finite pencil into d x d matrices, with the operator
// Q_R of the defining identity
//   T([X,Y]_lambda) = T(X)(1 + lambda Q_R)T(Y) - T(Y)(1 + lambda Q_R)T(X).
struct BunchRepresentation {
    Pencil source;
    long long target_dim = 0;
    std::vector<Matrix> images;  // one d x d matrix per source basis vector
    Matrix q_op;

    Matrix image_of(const Element& x) const;
};

// The defining identity split into its lambda-coefficient clauses:
//   (lambda^0)  T([b_i,b_j]) = T(b_i)T(b_j) - T(b_j)T(b_i)
//   (lambda^1)  T(direction(b_i,b_j)) = T(b_i) Q_R T(b_j) - T(b_j) Q_R T(b_i)
// reported separately.
MultiReport check_representation(const BunchRepresentation& rep, long long window = 8);

// The full identity at a single lambda sample (used to exercise the
// lambda-decomposition both ways).
CheckReport check_representation_at(const BunchRepresentation& rep, const Rational& lambda);

// Faithful iff the n x d^2 matrix stacking the flattened images has rank n.
CheckReport check_faithful(const BunchRepresentation& rep);

// Six-term Z-dependent composition of two brackets, with the exact 1/2
// factor; dense output over the common finite basis.
BracketMap diamond_product(const BracketMap& brA, const BracketMap& brB, const Element& Z);

// Spanning set of dense brackets over a common basis.
struct BracketFamily {
    std::vector<BracketMap> members;
};

// Members must be pairwise compatible Lie brackets (checked first).  Then,
// for every ordered member pair and basis element Z, the flattened
// diamond product must lie in the family's span; the first escaping
// (alpha, beta, Z) triple is reported.
CheckReport check_family_closure(const BracketFamily& fam, long long window = 8);

struct CorollaryCell {
    std::string z_description;
    Rational lambda;
    CheckReport report;
};

struct CorollaryReport {
    std::vector<CorollaryCell> cells;
    bool holds() const {
        for (const auto& c : cells)
            if (!c.report.holds)
                return false;
        return true;
    }
    CheckReport summary() const;
};

// For R' = R + lambda [ad Z, R]: check_myb at every lambda sample, with Z
// over all basis vectors and pairwise sums (polarization of the quadratic
// Z-dependence).  Requires at least 3 distinct samples and a finite algebra.
CorollaryReport check_corollary(const MYBAlgebra& m, const std::vector<Rational>& lambdas,
                                long long window = 8);

}  // namespace myb

#endif

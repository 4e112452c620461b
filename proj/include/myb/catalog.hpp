#ifndef MYB_CATALOG_HPP
#define MYB_CATALOG_HPP

#include "myb/assoc.hpp"
#include "myb/bunch.hpp"
#include "myb/rep.hpp"

#include <string>
#include <vector>

namespace myb {

// so(n): dense Lie bracket on the basis {E_ab - E_ba : a < b} (lexicographic),
// dim n(n-1)/2, bracket = matrix commutator.
BracketMap make_so(long long n);

// Mat(n) on the matrix-unit basis E_ab (row-major), E_ab * E_cd = d_bc E_ad,
// with unit sum E_aa.
AssocAlgebra make_assoc_mat(long long n);

// Witt algebra: rule bracket [e_i, e_j] = (i - j) e_{i+j}; the window bounds
// check enumeration only, elements live over all of Z.
BracketMap make_witt(long long window = 8);

// Shift operator e_i -> e_{i+n}.
LinearOperator make_witt_shift(long long n);

struct Sl2 {
    BracketMap bracket;        // basis L_{-1}, L_0, L_1 at indices 0, 1, 2
    LinearOperator R;          // L_i -> i L_i
    BunchRepresentation fundamental;  // 2-dim, Q_R = T(L_0)
};
Sl2 make_sl2();

struct Example2 {
    Pencil so_pencil;       // base commutator on so(n), direction XQY - YQX
    Pencil ambient;         // same formula on Mat(n), operator = left mult by Q
    Matrix inclusion;       // n^2 x dim(so(n)) coordinates of the embedding
    bool scalar_q_warning;  // Q scalar makes the pencil degenerate
};
// Q must be symmetric n x n.
Example2 make_example2(long long n, const Matrix& Q);

struct ClaimRow {
    std::string claim;
    std::string instance;
    std::string verdict;  // CONFIRMS | CONTRADICTS | NOT-CHECKED
    bool holds = false;
    long long tuples_checked = 0;
    std::string detail;
};

// One row per (claimed statement, catalog instance): the full battery with
// mechanical verdicts flagged against the asserted prose.  Deterministic for
// fixed inputs.
std::vector<ClaimRow> claims_matrix(long long window = 8,
                                    const std::vector<Rational>& lambdas = {Rational(0),
                                                                            Rational(1),
                                                                            Rational(2)});

}  // namespace myb

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "myb/bimyb.hpp"
#include "myb/catalog.hpp"
#include "myb/checks.hpp"

using namespace myb;

namespace {

Element e(BasisIndex i) { return Element::basis(i); }

// E_ab -> row-major index in Mat(n)
BasisIndex unit(long long n, long long a, long long b) { return a * n + b; }

struct Instance {
    long long n;
    Element q;
};

std::vector<Instance> instances() {
    // the three Q shapes exercised throughout: diag(1,0), diag(1,0,-1),
    // symmetric non-diagonal
    Element q2_diag = e(unit(2, 0, 0));
    Element q2_sym = e(unit(2, 0, 1)) + e(unit(2, 1, 0));
    Element q3_diag = e(unit(3, 0, 0)) - e(unit(3, 2, 2));
    Element q3_sym = e(unit(3, 0, 1)) + e(unit(3, 1, 0)) + e(unit(3, 2, 2)).scaled(2);
    return {{2, q2_diag}, {2, q2_sym}, {3, q3_diag}, {3, q3_sym}};
}

}  // namespace

TEST_CASE("associative algebra construction validates") {
    AssocAlgebra m1 = make_assoc_mat(1);
    CHECK(m1.dim() == 1);
    REQUIRE(m1.unit());
    CHECK(m1.product(*m1.unit(), e(0)) == e(0));

    AssocAlgebra m2 = make_assoc_mat(2);
    CHECK(m2.product(*m2.unit(), e(unit(2, 0, 1))) == e(unit(2, 0, 1)));

    // non-associative product rejected with the failing triple reported
    SparseTensor3 bad(2);
    bad.set(0, 0, 1, Rational(1));
    bad.set(1, 0, 0, Rational(1));
    CHECK_THROWS_WITH_AS(AssocAlgebra(2, bad), doctest::Contains("associativity fails"),
                         std::invalid_argument);

    // wrong declared unit rejected
    SparseTensor3 zero2(2);
    CHECK_THROWS_WITH_AS(AssocAlgebra(2, zero2, e(0)), doctest::Contains("unit"),
                         std::invalid_argument);
}

TEST_CASE("commutator algebra of Mat(2)") {
    AssocAlgebra A = make_assoc_mat(2);
    BracketMap comm = commutator_algebra(A);
    // [E_00, E_01] = E_01
    CHECK(comm.eval_basis(unit(2, 0, 0), unit(2, 0, 1)) == e(unit(2, 0, 1)));
    CHECK(check_jacobi(comm).holds);
    CHECK(check_jacobi(commutator_algebra(make_assoc_mat(3))).holds);

    // commutative algebra gives the zero bracket
    SparseTensor3 diag(2);
    diag.set(0, 0, 0, Rational(1));
    diag.set(1, 1, 1, Rational(1));
    CHECK(brackets_equal(commutator_algebra(AssocAlgebra(2, diag)),
                         BracketMap::zero_dense(2)));
}

TEST_CASE("multiplication operators") {
    AssocAlgebra A = make_assoc_mat(2);
    Element q = e(unit(2, 0, 0));  // diag(1,0)
    auto [left, right] = mult_operators(A, q);
    // L_Q E_10 = E_00 E_10 = 0, R_Q E_10 = E_10 E_00 = E_10
    CHECK(left.apply(e(unit(2, 1, 0))).is_zero());
    CHECK(right.apply(e(unit(2, 1, 0))) == e(unit(2, 1, 0)));
    // Q = unit: both identity; Q = 0: both zero
    auto [lu, ru] = mult_operators(A, *A.unit());
    CHECK(lu.to_matrix(4) == Matrix::identity(4));
    CHECK(ru.to_matrix(4) == Matrix::identity(4));
    auto [lz, rz] = mult_operators(A, Element());
    CHECK(lz.to_matrix(4).is_zero());
    CHECK(rz.to_matrix(4).is_zero());
}

TEST_CASE("prop 4 suite over all Q instances") {
    for (const auto& [n, q] : instances()) {
        MultiReport r = check_prop4(make_assoc_mat(n), q);
        CHECK(r.holds());
        CHECK(r.clauses.size() == 4);
    }
    // Q = unit: tangent bracket equals the commutator itself
    AssocAlgebra A = make_assoc_mat(2);
    auto [left, right] = mult_operators(A, *A.unit());
    CHECK(brackets_equal(tangent_bracket(commutator_algebra(A), left),
                         commutator_algebra(A)));
}

TEST_CASE("bi-mYB structure and its negatives") {
    AssocAlgebra A = make_assoc_mat(2);
    BracketMap comm = commutator_algebra(A);
    for (const auto& [n, q] : instances()) {
        AssocAlgebra B = make_assoc_mat(n);
        auto [left, right] = mult_operators(B, q);
        CHECK(check_bimyb(BiMYB{commutator_algebra(B), right, left}).holds());
    }
    // R1 = R2 = any mYB operator
    auto [left, right] = mult_operators(A, e(0));
    CHECK(check_bimyb(BiMYB{comm, left, left}).holds());
    // non-proportional Q, Q': tangent brackets differ
    auto [left2, right2] = mult_operators(A, e(unit(2, 1, 1)) + e(unit(2, 0, 1)));
    MultiReport bad = check_bimyb(BiMYB{comm, left, left2});
    CHECK(!bad.holds());
    CHECK(!bad.clauses.back().holds);  // the tangent-agreement clause
}

TEST_CASE("remark 4: operator difference is a derivation") {
    for (const auto& [n, q] : instances()) {
        AssocAlgebra A = make_assoc_mat(n);
        auto [left, right] = mult_operators(A, q);
        BiMYB b{commutator_algebra(A), right, left};
        CHECK(check_remark4(b).holds);
        // xi X = QX - XQ is the inner derivation ad(Q)
        LinearOperator xi = op_sub(left, right);
        CHECK(is_derivation(xi, b.algebra).holds);
    }
}

TEST_CASE("remark 5 clauses") {
    AssocAlgebra A = make_assoc_mat(2);
    BracketMap comm = commutator_algebra(A);
    for (const auto& [n, q] : instances()) {
        AssocAlgebra B = make_assoc_mat(n);
        auto [left, right] = mult_operators(B, q);
        MultiReport r = check_remark5(commutator_algebra(B), right, op_sub(left, right));
        CHECK(r.holds());
    }
    // xi = 0: every clause trivially holds
    auto [left, right] = mult_operators(A, e(0));
    CHECK(check_remark5(comm, right, LinearOperator::zero(4)).holds());
    // xi = ad(Z) not commuting with R: clause (b) fails with a witness
    LinearOperator xi = ad(comm, e(unit(2, 0, 1)));
    MultiReport bad = check_remark5(comm, right, xi);
    CHECK(!bad.clauses[1].holds);
    REQUIRE(bad.clauses[1].counterexample);
}

TEST_CASE("q-bracket") {
    AssocAlgebra A = make_assoc_mat(2);
    BracketMap comm = commutator_algebra(A);
    // Q = unit reduces to the commutator, Q = 0 to zero
    CHECK(brackets_equal(q_bracket(A, *A.unit()), comm));
    CHECK(brackets_equal(q_bracket(A, Element()), BracketMap::zero_dense(4)));
    // [.,.]^q equals the tangent bracket of R^2 (both squares)
    for (const auto& [n, q] : instances()) {
        AssocAlgebra B = make_assoc_mat(n);
        auto [left, right] = mult_operators(B, q);
        BracketMap qbr = q_bracket(B, q);
        BracketMap bcomm = commutator_algebra(B);
        CHECK(brackets_equal(qbr, tangent_bracket(bcomm, op_compose(right, right))));
        CHECK(brackets_equal(qbr, tangent_bracket(bcomm, op_compose(left, left))));
        // ... and the Prop 4 pattern with Q^2
        CHECK(brackets_equal(qbr, conjugation_bracket(B, B.product(q, q))));
    }
}

TEST_CASE("remark 6 full suite") {
    for (const auto& [n, q] : instances()) {
        MultiReport r = check_remark6(make_assoc_mat(n), q);
        CHECK(r.holds());
        CHECK(r.clauses.size() == 6);
    }
}

TEST_CASE("even-tempered: both formulations agree and hold") {
    for (const auto& [n, q] : instances()) {
        AssocAlgebra A = make_assoc_mat(n);
        auto [left, right] = mult_operators(A, q);
        MultiReport r = check_even_tempered(BiMYB{commutator_algebra(A), right, left});
        CHECK(r.holds());
        CHECK(r.clauses.size() == 2);
        CHECK(r.clauses[0].holds == r.clauses[1].holds);
    }
    // R1 = R2: the mixed identity reduces to 0 = [R^2X,Y] - 2[RX,RY] + [X,R^2Y]
    AssocAlgebra A = make_assoc_mat(2);
    auto [left, right] = mult_operators(A, e(0));
    MultiReport same = check_even_tempered(BiMYB{commutator_algebra(A), right, right});
    CHECK(same.clauses[0].holds == same.clauses[1].holds);
}

TEST_CASE("prop 5: polynomial stability of the bi-mYB structure") {
    for (const auto& [n, q] : instances()) {
        if (n != 2)
            continue;  // the Mat(3) cases run in the claims matrix
        AssocAlgebra A = make_assoc_mat(n);
        BracketMap comm = commutator_algebra(A);
        auto [left, right] = mult_operators(A, q);
        for (const auto& coeffs : std::vector<std::vector<Rational>>{
                 {0, 0, 1}, {1, 1}, {0, -1, 0, 1}})
            CHECK(check_bimyb(BiMYB{comm, op_polynomial(coeffs, right),
                                    op_polynomial(coeffs, left)})
                      .holds());
    }
}

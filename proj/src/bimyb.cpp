#include "myb/bimyb.hpp"

#include "myb/checks.hpp"
#include "myb/sweep.hpp"

namespace myb {

namespace {

CheckReport check_brackets_agree(std::string name, const BracketMap& a, const BracketMap& b,
                                 long long window) {
    return sweep_pairs(std::move(name), check_window(a, window),
                       [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
                           lhs = a.eval_basis(i, j);
                           rhs = b.eval_basis(i, j);
                       });
}

CheckReport check_ops_commute(std::string name, const LinearOperator& a,
                              const LinearOperator& b, const BracketMap& br,
                              long long window) {
    long long tuples = 0;
    for (BasisIndex i : check_window(br, window)) {
        Element x = Element::basis(i);
        Element lhs = a.apply(b.apply(x));
        Element rhs = b.apply(a.apply(x));
        ++tuples;
        if (lhs != rhs)
            return CheckReport::fail(std::move(name), tuples, {{i}, lhs, rhs});
    }
    return CheckReport::pass(std::move(name), tuples);
}

}  // namespace

MultiReport check_prop4(const AssocAlgebra& A, const Element& Q, long long window) {
    auto [left, right] = mult_operators(A, Q);
    BracketMap comm = commutator_algebra(A);
    MultiReport out;
    out.name = "prop4(" + A.label() + ")";
    out.clauses.push_back(check_myb(comm, left, window));
    out.clauses.push_back(check_myb(comm, right, window));
    BracketMap target = conjugation_bracket(A, Q);
    out.clauses.push_back(check_brackets_agree("tangent(L_Q) = XQY-YQX",
                                               tangent_bracket(comm, left), target, window));
    out.clauses.push_back(check_brackets_agree("tangent(R_Q) = XQY-YQX",
                                               tangent_bracket(comm, right), target, window));
    return out;
}

MultiReport check_bimyb(const BiMYB& b, long long window) {
    MultiReport out;
    out.name = "bimyb(" + b.algebra.label() + ")";
    out.clauses.push_back(
        check_ops_commute("operators commute", b.R1, b.R2, b.algebra, window));
    out.clauses.push_back(check_myb(b.algebra, b.R1, window));
    out.clauses.push_back(check_myb(b.algebra, b.R2, window));
    out.clauses.push_back(check_brackets_agree("tangent(R1) = tangent(R2)",
                                               tangent_bracket(b.algebra, b.R1),
                                               tangent_bracket(b.algebra, b.R2), window));
    return out;
}

CheckReport check_remark4(const BiMYB& b, long long window) {
    return is_derivation(op_sub(b.R1, b.R2), b.algebra, window);
}

MultiReport check_remark5(const BracketMap& algebra, const LinearOperator& R,
                          const LinearOperator& xi, long long window) {
    MultiReport out;
    out.name = "remark5";
    out.clauses.push_back(is_derivation(xi, algebra, window));
    out.clauses.push_back(check_ops_commute("xi commutes with R", xi, R, algebra, window));
    out.clauses.push_back(sweep_pairs(
        "[xi X, xi Y] = [SX,Y]+[X,SY]-S[X,Y]", check_window(algebra, window),
        [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
            Element x = Element::basis(i), y = Element::basis(j);
            auto S = [&](const Element& v) { return R.apply(xi.apply(v)); };
            lhs = algebra.eval(xi.apply(x), xi.apply(y));
            rhs = algebra.eval(S(x), y) + algebra.eval(x, S(y)) - S(algebra.eval(x, y));
        }));
    return out;
}

BracketMap q_bracket(const AssocAlgebra& A, const Element& Q) {
    auto [left, right] = mult_operators(A, Q);
    BracketMap comm = commutator_algebra(A);
    long long n = A.dim();
    SparseTensor3 t(n);
    for (BasisIndex i = 0; i < n; ++i)
        for (BasisIndex j = 0; j < n; ++j) {
            Element x = Element::basis(i), y = Element::basis(j);
            Element v = comm.eval(right.apply(x), left.apply(y)) +
                        comm.eval(left.apply(x), right.apply(y)) -
                        right.apply(left.apply(comm.eval(x, y)));
            for (const auto& [k, c] : v.support())
                t.set(i, j, k, c);
        }
    return densify(BracketMap::dense_raw(n, std::move(t), "[.,.]^q"), "[.,.]^q");
}

MultiReport check_remark6(const AssocAlgebra& A, const Element& Q, long long window) {
    auto [left, right] = mult_operators(A, Q);
    BracketMap comm = commutator_algebra(A);
    BracketMap qbr = q_bracket(A, Q);
    MultiReport out;
    out.name = "remark6(" + A.label() + ")";
    out.clauses.push_back(check_jacobi(qbr, window));
    LinearOperator r1sq = op_compose(right, right);
    LinearOperator r2sq = op_compose(left, left);
    out.clauses.push_back(check_brackets_agree("[.,.]^q = tangent(R1^2)", qbr,
                                               tangent_bracket(comm, r1sq), window));
    out.clauses.push_back(check_brackets_agree("[.,.]^q = tangent(R2^2)", qbr,
                                               tangent_bracket(comm, r2sq), window));
    out.clauses.push_back(check_compatible(qbr, comm, window));
    out.clauses.push_back(check_compatible(qbr, tangent_bracket(comm, right), window));
    out.clauses.push_back(check_compatible(qbr, tangent_bracket(comm, left), window));
    return out;
}

MultiReport check_even_tempered(const BiMYB& b, long long window) {
    const BracketMap& br = b.algebra;
    const LinearOperator& r1 = b.R1;
    const LinearOperator& r2 = b.R2;
    MultiReport out;
    out.name = "even_tempered(" + br.label() + ")";
    CheckReport def2c = sweep_pairs(
        "def2c clause 1", check_window(br, window),
        [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
            Element x = Element::basis(i), y = Element::basis(j);
            lhs = br.eval(r1.apply(x), r2.apply(y)) + br.eval(r2.apply(x), r1.apply(y)) -
                  r1.apply(r2.apply(br.eval(x, y)));
            auto r1sq = [&](const Element& v) { return r1.apply(r1.apply(v)); };
            rhs = br.eval(r1sq(x), y) + br.eval(x, r1sq(y)) - r1sq(br.eval(x, y));
        });
    LinearOperator xi = op_sub(r2, r1);
    CheckReport remark7 = sweep_pairs(
        "remark7 form", check_window(br, window),
        [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
            Element x = Element::basis(i), y = Element::basis(j);
            lhs = br.eval(r1.apply(x), xi.apply(y)) + br.eval(xi.apply(x), r1.apply(y)) -
                  r1.apply(xi.apply(br.eval(x, y)));
            auto r1sq = [&](const Element& v) { return r1.apply(r1.apply(v)); };
            rhs = br.eval(r1sq(x), y) -
                  br.eval(r1.apply(x), r1.apply(y)).scaled(2) + br.eval(x, r1sq(y));
        });
    if (def2c.holds != remark7.holds)
        throw std::logic_error("check_even_tempered: the two formulations disagree");
    out.clauses.push_back(std::move(def2c));
    out.clauses.push_back(std::move(remark7));
    return out;
}

}  // namespace myb

#include "myb/catalog.hpp"

#include "myb/bimyb.hpp"
#include "myb/checks.hpp"

#include <stdexcept>

namespace myb {

namespace {

Matrix unit_matrix(long long n, long long a, long long b) {
    Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    m(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = 1;
    return m;
}

std::vector<Matrix> so_basis_matrices(long long n) {
    std::vector<Matrix> basis;
    for (long long a = 0; a < n; ++a)
        for (long long b = a + 1; b < n; ++b)
            basis.push_back(unit_matrix(n, a, b) - unit_matrix(n, b, a));
    return basis;
}

// Project a skew-symmetric matrix onto the so(n) basis: the coefficient of
// E_ab - E_ba is the (a,b) entry.
Element so_project(const Matrix& skew) {
    Element e;
    long long n = static_cast<long long>(skew.rows());
    BasisIndex idx = 0;
    for (long long a = 0; a < n; ++a)
        for (long long b = a + 1; b < n; ++b) {
            e.add_term(idx, skew(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
            ++idx;
        }
    return e;
}

BracketMap so_bracket_from(const std::vector<Matrix>& basis, const Matrix& middle,
                           std::string label) {
    long long dim = static_cast<long long>(basis.size());
    SparseTensor3 t(dim);
    for (BasisIndex i = 0; i < dim; ++i)
        for (BasisIndex j = i + 1; j < dim; ++j) {
            Matrix c = basis[static_cast<std::size_t>(i)] * middle * basis[static_cast<std::size_t>(j)] -
                       basis[static_cast<std::size_t>(j)] * middle * basis[static_cast<std::size_t>(i)];
            Element proj = so_project(c);
            for (const auto& [k, v] : proj.support())
                t.set(i, j, k, v);
        }
    return BracketMap::dense(dim, std::move(t), std::move(label));
}

Element matrix_to_mat_element(const Matrix& m) {
    Element e;
    long long n = static_cast<long long>(m.rows());
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            e.add_term(a * n + b, m(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
    return e;
}

}  // namespace

BracketMap make_so(long long n) {
    if (n < 2)
        throw std::invalid_argument("make_so: n >= 2 required");
    return so_bracket_from(so_basis_matrices(n),
                           Matrix::identity(static_cast<std::size_t>(n)),
                           "so(" + std::to_string(n) + ")");
}

AssocAlgebra make_assoc_mat(long long n) {
    if (n < 1)
        throw std::invalid_argument("make_assoc_mat: n >= 1 required");
    long long dim = n * n;
    SparseTensor3 t(dim);
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long d = 0; d < n; ++d)
                t.set(a * n + b, b * n + d, a * n + d, Rational(1));
    Element unit;
    for (long long a = 0; a < n; ++a)
        unit.add_term(a * n + a, Rational(1));
    return AssocAlgebra(dim, std::move(t), unit, "Mat(" + std::to_string(n) + ")");
}

BracketMap make_witt(long long window) {
    if (window < 1)
        throw std::invalid_argument("make_witt: window >= 1 required");
    return BracketMap::rule(
        [](BasisIndex i, BasisIndex j) {
            RuleTerms terms;
            if (i != j)
                terms.emplace_back(i + j, Rational(i - j));
            return terms;
        },
        "witt");
}

LinearOperator make_witt_shift(long long n) { return LinearOperator::shift(n); }

Sl2 make_sl2() {
    SparseTensor3 t(3);
    // grades -1, 0, 1 at indices 0, 1, 2; [L_i, L_j] = (i - j) L_{i+j}
    t.set(0, 1, 0, Rational(-1));
    t.set(0, 2, 1, Rational(-2));
    t.set(1, 2, 2, Rational(-1));
    BracketMap bracket = BracketMap::dense(3, std::move(t), "sl(2)");
    LinearOperator R =
        LinearOperator::diagonal([](BasisIndex i) { return Rational(i - 1); }, "R_sl2");

    BunchRepresentation fundamental;
    fundamental.source = Pencil{bracket, tangent_bracket(bracket, R), R};
    fundamental.target_dim = 2;
    Matrix t_lm1(2, 2), t_l0(2, 2), t_l1(2, 2);
    t_lm1(0, 1) = -1;
    t_l0(0, 0) = Rational(1, 2);
    t_l0(1, 1) = Rational(-1, 2);
    t_l1(1, 0) = 1;
    fundamental.images = {t_lm1, t_l0, t_l1};
    fundamental.q_op = t_l0;
    return Sl2{bracket, R, fundamental};
}

Example2 make_example2(long long n, const Matrix& Q) {
    if (static_cast<long long>(Q.rows()) != n || !Q.is_symmetric())
        throw std::invalid_argument("make_example2: Q must be a symmetric n x n matrix");
    Example2 out{};
    out.scalar_q_warning = Q.is_scalar();

    auto basis = so_basis_matrices(n);
    BracketMap so_base = make_so(n);
    BracketMap so_dir = so_bracket_from(basis, Q, "so(" + std::to_string(n) + ") XQY-YQX");
    out.so_pencil = Pencil{so_base, so_dir, std::nullopt};

    AssocAlgebra mat = make_assoc_mat(n);
    Element q_elem = matrix_to_mat_element(Q);
    BracketMap amb_base = commutator_algebra(mat);
    BracketMap amb_dir = conjugation_bracket(mat, q_elem);
    auto [left, right] = mult_operators(mat, q_elem);
    (void)right;
    out.ambient = Pencil{amb_base, amb_dir, left};

    long long so_dim = n * (n - 1) / 2;
    Matrix inc(static_cast<std::size_t>(n * n), static_cast<std::size_t>(so_dim));
    BasisIndex col = 0;
    for (long long a = 0; a < n; ++a)
        for (long long b = a + 1; b < n; ++b) {
            inc(static_cast<std::size_t>(a * n + b), static_cast<std::size_t>(col)) = 1;
            inc(static_cast<std::size_t>(b * n + a), static_cast<std::size_t>(col)) = -1;
            ++col;
        }
    out.inclusion = std::move(inc);
    return out;
}

// ---------------------------------------------------------------------------
// Claims matrix

namespace {

std::string counterexample_text(const CheckReport& r) {
    if (!r.counterexample)
        return "";
    std::string s = "counterexample (";
    for (std::size_t i = 0; i < r.counterexample->indices.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(r.counterexample->indices[i]);
    }
    s += "): lhs=" + r.counterexample->lhs.to_string() +
         " rhs=" + r.counterexample->rhs.to_string();
    return s;
}

struct RowBuilder {
    std::vector<ClaimRow>& rows;

    void asserted(std::string claim, std::string instance, const CheckReport& r,
                  std::string extra = "") {
        std::string detail = counterexample_text(r);
        if (!extra.empty())
            detail = detail.empty() ? extra : detail + "; " + extra;
        rows.push_back({std::move(claim), std::move(instance),
                        r.holds ? "CONFIRMS" : "CONTRADICTS", r.holds, r.tuples_checked,
                        std::move(detail)});
    }

    void asserted_bool(std::string claim, std::string instance, bool holds,
                       long long tuples, std::string detail = "") {
        rows.push_back({std::move(claim), std::move(instance),
                        holds ? "CONFIRMS" : "CONTRADICTS", holds, tuples,
                        std::move(detail)});
    }

    void not_checked(std::string claim, std::string instance, std::string detail) {
        rows.push_back({std::move(claim), std::move(instance), "NOT-CHECKED", false, 0,
                        std::move(detail)});
    }
};

Element embed(const Matrix& inclusion, const Element& so_elem) {
    Element out;
    for (const auto& [j, c] : so_elem.support())
        for (std::size_t i = 0; i < inclusion.rows(); ++i)
            if (inclusion(i, static_cast<std::size_t>(j)) != 0)
                out.add_term(static_cast<BasisIndex>(i),
                             inclusion(i, static_cast<std::size_t>(j)) * c);
    return out;
}

}  // namespace

std::vector<ClaimRow> claims_matrix(long long window, const std::vector<Rational>& lambdas) {
    std::vector<ClaimRow> rows;
    RowBuilder out{rows};

    // --- Example 1: Witt algebra with shift operators ---
    BracketMap witt = make_witt(window);
    out.asserted("Example 1: Witt is a Lie algebra", "witt, W=" + std::to_string(window),
                 check_jacobi(witt, window));
    for (long long n = 1; n <= 3; ++n) {
        LinearOperator R = make_witt_shift(n);
        std::string inst = "witt + R_" + std::to_string(n) + ", W=" + std::to_string(window);
        out.asserted("Example 1 / Def 2A: (Witt, R_n) is an mYB-algebra", inst,
                     check_myb(witt, R, window));
        Element e0 = Element::basis(0);
        Element sq = R.apply(R.apply(e0));
        out.asserted_bool("Example 1: R_n^2 is not the identity", inst, sq != e0, 1,
                          "witness: R^2 e_0 = " + sq.to_string("e"));
        out.asserted("Example 1: [R_n^2[X,Y],Z] + c.p. = 0", inst,
                     check_primed_lie_condition(witt, R, window));
    }
    {
        LinearOperator r1 = make_witt_shift(1);
        std::string inst = "witt + R_1, W=" + std::to_string(window);
        BracketMap tang = tangent_bracket(witt, r1);
        out.asserted("Prop 2: tangent bracket satisfies Jacobi", inst,
                     check_jacobi(tang, window));
        Pencil p = make_gamma_bunch(MYBAlgebra{witt, r1}, window);
        out.asserted("Theorem 1B: mYB-algebra yields a linear Gamma-bunch", inst,
                     check_gamma_homomorphism(p, lambdas, window));
        out.asserted("Theorem 1B / S1.2: base and tangent brackets compatible", inst,
                     check_compatible(witt, tang, window));
        out.asserted("Remark 2: Lie criterion for the tangent bracket", inst,
                     check_remark2_criterion(witt, r1, window));
        // Remark 1, both directions
        bool deriv = is_derivation(r1, witt, window).holds;
        bool tang_zero = true;
        for (BasisIndex i = -window; i <= window && tang_zero; ++i)
            for (BasisIndex j = -window; j <= window && tang_zero; ++j)
                if (!tang.eval_basis(i, j).is_zero())
                    tang_zero = false;
        out.asserted_bool("Remark 1: tangent bracket zero iff R is a derivation", inst,
                          deriv == tang_zero,
                          (2 * window + 1) * (2 * window + 1),
                          deriv ? "R is a derivation" : "R is not a derivation");
        // Prop 3 over the fixed polynomial test set
        const std::vector<std::pair<std::string, std::vector<Rational>>> polys = {
            {"x^2", {0, 0, 1}}, {"1+2x+x^3", {1, 2, 0, 1}}, {"3", {3}}, {"x", {0, 1}}};
        bool prop3 = true;
        long long tuples = 0;
        for (const auto& [fname, coeffs] : polys) {
            CheckReport r = check_myb(witt, op_polynomial(coeffs, r1), window);
            tuples += r.tuples_checked;
            prop3 = prop3 && r.holds;
        }
        out.asserted_bool("Prop 3: (g, f(R)) is an mYB-algebra", inst, prop3, tuples,
                          "f in {x^2, 1+2x+x^3, 3, x}");
        bool prop3c = true;
        tuples = 0;
        std::vector<BracketMap> powers;
        for (int k = 0; k <= 3; ++k) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational(0));
            coeffs.back() = 1;
            powers.push_back(tangent_bracket(witt, op_polynomial(coeffs, r1)));
        }
        for (std::size_t a = 0; a < powers.size(); ++a)
            for (std::size_t b = a + 1; b < powers.size(); ++b) {
                CheckReport r = check_compatible(powers[a], powers[b], window);
                tuples += r.tuples_checked;
                prop3c = prop3c && r.holds;
            }
        out.asserted_bool("Prop 3: brackets [.,.]_{R^k} pairwise compatible", inst, prop3c,
                          tuples, "k = 0..3");
    }

    out.not_checked("Remark 3: linear Gamma-bunches form no submanifold", "-",
                    "universal statement over all bunches; recorded as prose only");

    // --- Example 2: so(n) pencils and the Mat(n) ambient Gamma-bunch ---
    for (long long n = 3; n <= 4; ++n) {
        Vec diag;
        for (long long d = 1; d <= n; ++d)
            diag.push_back(Rational(d));
        Example2 ex = make_example2(n, Matrix::diagonal(diag));
        std::string inst = "so(" + std::to_string(n) + "), Q=diag(1..)";
        bool compat = check_jacobi(ex.so_pencil.base, window).holds &&
                      check_jacobi(ex.so_pencil.direction, window).holds &&
                      check_compatible(ex.so_pencil.base, ex.so_pencil.direction, window).holds;
        out.asserted_bool("Example 2: compatible family of Lie brackets on so(n)", inst,
                          compat, 0);
        out.asserted("Example 2: ambient Mat(n) bunch is a linear Gamma-bunch", inst,
                     check_gamma_homomorphism(ex.ambient, lambdas, window));
        // restriction coherence: the ambient brackets evaluated on embedded
        // skew inputs reproduce the so(n) pencil exactly
        bool coherent = true;
        long long so_dim = ex.so_pencil.base.dim();
        for (BasisIndex i = 0; i < so_dim && coherent; ++i)
            for (BasisIndex j = 0; j < so_dim && coherent; ++j) {
                Element xi = embed(ex.inclusion, Element::basis(i));
                Element xj = embed(ex.inclusion, Element::basis(j));
                if (ex.ambient.base.eval(xi, xj) !=
                        embed(ex.inclusion, ex.so_pencil.base.eval_basis(i, j)) ||
                    ex.ambient.direction.eval(xi, xj) !=
                        embed(ex.inclusion, ex.so_pencil.direction.eval_basis(i, j)))
                    coherent = false;
            }
        out.asserted_bool("Example 2 / Def 1B: so(n) bunch embeds into the Mat(n) bunch",
                          inst, coherent, so_dim * so_dim);
        if (n == 3) {
            out.asserted("Prop 1: pencil direction equals the tangent bracket formula", inst,
                         [&] {
                             BracketMap tang = tangent_bracket(ex.ambient.base,
                                                               *ex.ambient.operator_family);
                             return brackets_equal(tang, ex.ambient.direction)
                                        ? CheckReport::pass("prop1", ex.ambient.base.dim() *
                                                                         ex.ambient.base.dim())
                                        : CheckReport::fail("prop1", 0, {});
                         }());
            out.asserted("Theorem 1A: Gamma-bunch operator satisfies the mYB identity", inst,
                         check_myb(ex.ambient.base, *ex.ambient.operator_family, window));
        }
    }
    out.not_checked("Example 2: some g_lambda admit no homomorphism into so(n)", "so(n)",
                    "universal negative over all homomorphisms; not mechanized");

    // --- S1.4: Prop 4, bi-mYB, Remarks 4-7 on Mat(2) / Mat(3) ---
    struct MatInstance {
        std::string name;
        long long n;
        Matrix q;
    };
    std::vector<MatInstance> instances;
    {
        Matrix q1 = Matrix::diagonal({Rational(1), Rational(0)});
        Matrix q2(2, 2);
        q2(0, 1) = q2(1, 0) = 1;
        Matrix q3 = Matrix::diagonal({Rational(1), Rational(0), Rational(-1)});
        Matrix q4(3, 3);
        q4(0, 1) = q4(1, 0) = 1;
        q4(2, 2) = 2;
        instances = {{"Mat(2), Q=diag(1,0)", 2, q1},
                     {"Mat(2), Q=E12+E21", 2, q2},
                     {"Mat(3), Q=diag(1,0,-1)", 3, q3},
                     {"Mat(3), Q=E12+E21+2E33", 3, q4}};
    }
    for (const auto& [inst, n, q] : instances) {
        AssocAlgebra A = make_assoc_mat(n);
        Element q_elem = matrix_to_mat_element(q);
        auto [left, right] = mult_operators(A, q_elem);
        BracketMap comm = commutator_algebra(A);
        BiMYB bi{comm, right, left};
        out.asserted("Prop 4: left/right multiplication gives an mYB-algebra", inst,
                     check_prop4(A, q_elem, window).summary());
        out.asserted("Def 2B: (A, R^r_Q, R^l_Q) is a Lie bi-mYB-algebra", inst,
                     check_bimyb(bi, window).summary());
        out.asserted("Remark 4: R_1 - R_2 is a derivation", inst, check_remark4(bi, window));
        out.asserted("Remark 5: xi = R^l_Q - R^r_Q satisfies the derivation identity", inst,
                     check_remark5(comm, right, op_sub(left, right), window).summary());
        {
            const std::vector<std::pair<std::string, std::vector<Rational>>> polys = {
                {"x^2", {0, 0, 1}}, {"1+x", {1, 1}}, {"x^3-x", {0, -1, 0, 1}}};
            bool prop5 = true;
            long long tuples = 0;
            for (const auto& [fname, coeffs] : polys) {
                MultiReport r = check_bimyb(
                    BiMYB{comm, op_polynomial(coeffs, right), op_polynomial(coeffs, left)},
                    window);
                tuples += r.summary().tuples_checked;
                prop5 = prop5 && r.holds();
            }
            out.asserted_bool("Prop 5: (g, f(R_1), f(R_2)) is a Lie bi-mYB-algebra", inst,
                              prop5, tuples, "f in {x^2, 1+x, x^3-x}");
        }
        out.asserted("Remark 6: q-bracket Jacobi, tensor equalities, compatibility", inst,
                     check_remark6(A, q_elem, window).summary());
        out.asserted("Def 2C / Remark 7: the Prop 4 bi-mYB-algebra is even-tempered", inst,
                     check_even_tempered(bi, window).summary());
    }

    // --- Example 3: sl(2) with R L_i = i L_i ---
    {
        Sl2 sl2 = make_sl2();
        std::string inst = "sl(2), R L_i = i L_i";
        CheckReport myb = check_myb(sl2.bracket, sl2.R, window);
        CheckReport mcybe = check_mcybe_variant(sl2.bracket, sl2.R, Rational(1), window);
        out.asserted("Example 3: (sl(2), R) is a Lie mYB-algebra (Def 2A)", inst, myb,
                     std::string("classical mCYBE normalization with c=1 ") +
                         (mcybe.holds ? "holds" : "fails") + " on the same instance");
        MultiReport rep = check_representation(sl2.fundamental, window);
        out.asserted("Example 3 / Def 3: fundamental representation realizes the bunch",
                     inst, rep.summary(),
                     std::string("lambda^0 clause ") +
                         (rep.clauses[0].holds ? "holds" : "fails") + ", lambda^1 clause " +
                         (rep.clauses[1].holds ? "holds" : "fails"));
        CheckReport faithful = check_faithful(sl2.fundamental);
        Rational det = determinant(sl2.fundamental.q_op);
        out.asserted_bool("Example 3: T is faithful and T(L_0) is invertible", inst,
                          faithful.holds && det != 0, faithful.tuples_checked,
                          "det T(L_0) = " + rational_to_string(det));
        out.not_checked("Example 3: no homomorphism into the bi-mYB matrix algebra", inst,
                        "universal negative; obstruction facts: T(L_0) invertible (det " +
                            rational_to_string(det) + "), R L_0 = 0, T(L_1) != 0");
    }

    // --- Theorem 2 and its corollary ---
    {
        AssocAlgebra A = make_assoc_mat(2);
        BracketFamily fam;
        for (long long a = 0; a < 2; ++a)
            for (long long b = 0; b < 2; ++b)
                fam.members.push_back(
                    conjugation_bracket(A, Element::basis(a * 2 + b)));
        out.asserted("Theorem 2: representable bunch family closed under the diamond product",
                     "Mat(2) conjugation brackets, A over matrix units",
                     check_family_closure(fam, window));

        Element q = matrix_to_mat_element(Matrix::diagonal({Rational(1), Rational(0)}));
        auto [left, right] = mult_operators(A, q);
        (void)right;
        out.asserted("Corollary: (g, R + lambda [ad Z, R]) is an mYB-algebra for all Z",
                     "Mat(2), R = left mult by diag(1,0)",
                     check_corollary(MYBAlgebra{commutator_algebra(A), left}, lambdas, window)
                         .summary());
    }
    out.not_checked("Theorem 2: isotopic pair structure on (g, V)", "-",
                    "structure defined only in an external reference");

    return rows;
}

}  // namespace myb

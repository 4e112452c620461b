#include "myb/rep.hpp"

#include "myb/checks.hpp"
#include "myb/sweep.hpp"

#include <set>
#include <stdexcept>

namespace myb {

namespace {

// Compare two matrices inside the sweep machinery by flattening them into
// Elements over d^2 coordinates.
Element matrix_as_element(const Matrix& m) {
    Element e;
    BasisIndex idx = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e.add_term(idx++, m(i, j));
    return e;
}

}  // namespace

Matrix BunchRepresentation::image_of(const Element& x) const {
    Matrix acc(static_cast<std::size_t>(target_dim), static_cast<std::size_t>(target_dim));
    for (const auto& [i, c] : x.support()) {
        if (i < 0 || i >= static_cast<BasisIndex>(images.size()))
            throw std::out_of_range("BunchRepresentation: index outside image list");
        acc = acc + images[static_cast<std::size_t>(i)].scaled(c);
    }
    return acc;
}

MultiReport check_representation(const BunchRepresentation& rep, long long window) {
    if (!rep.source.base.finite())
        throw std::invalid_argument("check_representation: finite source pencil required");
    long long n = rep.source.base.dim();
    if (static_cast<long long>(rep.images.size()) != n)
        throw std::invalid_argument("check_representation: image count != source dimension");
    std::size_t d = static_cast<std::size_t>(rep.target_dim);
    for (const auto& m : rep.images)
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("check_representation: image shape mismatch");
    if (rep.q_op.rows() != d || rep.q_op.cols() != d)
        throw std::invalid_argument("check_representation: Q_R shape mismatch");

    MultiReport out;
    out.name = "representation";
    out.clauses.push_back(sweep_pairs(
        "lambda^0: T([X,Y]) = [T(X),T(Y)]", check_window(rep.source.base, window),
        [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
            const Matrix& ti = rep.images[static_cast<std::size_t>(i)];
            const Matrix& tj = rep.images[static_cast<std::size_t>(j)];
            lhs = matrix_as_element(rep.image_of(rep.source.base.eval_basis(i, j)));
            rhs = matrix_as_element(ti * tj - tj * ti);
        }));
    out.clauses.push_back(sweep_pairs(
        "lambda^1: T(dir(X,Y)) = T(X)Q T(Y) - T(Y)Q T(X)",
        check_window(rep.source.base, window),
        [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
            const Matrix& ti = rep.images[static_cast<std::size_t>(i)];
            const Matrix& tj = rep.images[static_cast<std::size_t>(j)];
            lhs = matrix_as_element(rep.image_of(rep.source.direction.eval_basis(i, j)));
            rhs = matrix_as_element(ti * rep.q_op * tj - tj * rep.q_op * ti);
        }));
    return out;
}

CheckReport check_representation_at(const BunchRepresentation& rep, const Rational& lambda) {
    Matrix factor = Matrix::identity(static_cast<std::size_t>(rep.target_dim)) +
                    rep.q_op.scaled(lambda);
    return sweep_pairs(
        "representation(lambda=" + rational_to_string(lambda) + ")",
        check_window(rep.source.base, 0),
        [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
            const Matrix& ti = rep.images[static_cast<std::size_t>(i)];
            const Matrix& tj = rep.images[static_cast<std::size_t>(j)];
            Element bracket_lambda = rep.source.base.eval_basis(i, j) +
                                     rep.source.direction.eval_basis(i, j).scaled(lambda);
            lhs = matrix_as_element(rep.image_of(bracket_lambda));
            rhs = matrix_as_element(ti * factor * tj - tj * factor * ti);
        });
}

CheckReport check_faithful(const BunchRepresentation& rep) {
    long long n = static_cast<long long>(rep.images.size());
    std::size_t d2 = static_cast<std::size_t>(rep.target_dim * rep.target_dim);
    Matrix stacked(static_cast<std::size_t>(n), d2);
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) {
        Vec flat = rep.images[r].flatten();
        for (std::size_t c = 0; c < d2; ++c)
            stacked(r, c) = flat[c];
    }
    std::size_t rk = rank(stacked);
    CheckReport out;
    out.identity_name = "faithful (rank " + std::to_string(rk) + " of " + std::to_string(n) + ")";
    out.tuples_checked = n;
    out.holds = rk == static_cast<std::size_t>(n);
    return out;
}

BracketMap diamond_product(const BracketMap& brA, const BracketMap& brB, const Element& Z) {
    if (!brA.finite() || !brB.finite() || brA.dim() != brB.dim())
        throw std::invalid_argument("diamond_product: finite common basis required");
    long long n = brA.dim();
    auto half_sum = [&](const BracketMap& a, const BracketMap& b, const Element& x,
                        const Element& y) {
        return b.eval(a.eval(x, Z), y) + b.eval(a.eval(x, y), Z) + b.eval(a.eval(Z, y), x);
    };
    SparseTensor3 t(n);
    for (BasisIndex i = 0; i < n; ++i)
        for (BasisIndex j = 0; j < n; ++j) {
            Element x = Element::basis(i), y = Element::basis(j);
            Element v = (half_sum(brA, brB, x, y) - half_sum(brB, brA, x, y))
                            .scaled(Rational(1, 2));
            for (const auto& [k, c] : v.support())
                t.set(i, j, k, c);
        }
    return densify(BracketMap::dense_raw(n, std::move(t), "diamond"), "diamond");
}

CheckReport check_family_closure(const BracketFamily& fam, long long window) {
    if (fam.members.empty())
        throw std::invalid_argument("check_family_closure: empty family");
    long long n = fam.members.front().dim();
    for (const auto& m : fam.members)
        if (!m.finite() || m.dim() != n)
            throw std::invalid_argument("check_family_closure: common finite basis required");

    long long tuples = 0;
    // precondition: members are pairwise compatible Lie brackets
    for (std::size_t a = 0; a < fam.members.size(); ++a) {
        CheckReport jac = check_jacobi(fam.members[a], window);
        tuples += jac.tuples_checked;
        if (!jac.holds)
            return CheckReport::fail("closure: member " + std::to_string(a) + " not Lie",
                                     tuples, *jac.counterexample);
        for (std::size_t b = a + 1; b < fam.members.size(); ++b) {
            CheckReport comp = check_compatible(fam.members[a], fam.members[b], window);
            tuples += comp.tuples_checked;
            if (!comp.holds)
                return CheckReport::fail("closure: members " + std::to_string(a) + "," +
                                             std::to_string(b) + " incompatible",
                                         tuples, *comp.counterexample);
        }
    }

    std::vector<Vec> span;
    span.reserve(fam.members.size());
    for (const auto& m : fam.members)
        span.push_back(m.flatten());

    for (std::size_t a = 0; a < fam.members.size(); ++a)
        for (std::size_t b = 0; b < fam.members.size(); ++b)
            for (BasisIndex z = 0; z < n; ++z) {
                BracketMap d = diamond_product(fam.members[a], fam.members[b],
                                               Element::basis(z));
                ++tuples;
                if (!span_membership(span, d.flatten())) {
                    Counterexample ce;
                    ce.indices = {static_cast<BasisIndex>(a), static_cast<BasisIndex>(b), z};
                    ce.lhs = d.eval_basis(0, n > 1 ? 1 : 0);
                    ce.rhs = Element();
                    return CheckReport::fail("closure: diamond escapes the span", tuples, ce);
                }
            }
    return CheckReport::pass("closure", tuples);
}

CheckReport CorollaryReport::summary() const {
    CheckReport out;
    out.identity_name = "corollary";
    for (const auto& c : cells) {
        out.tuples_checked += c.report.tuples_checked;
        if (!c.report.holds && out.holds) {
            out.holds = false;
            out.counterexample = c.report.counterexample;
            out.identity_name = "corollary [Z=" + c.z_description +
                                ", lambda=" + rational_to_string(c.lambda) + "]";
        }
    }
    return out;
}

CorollaryReport check_corollary(const MYBAlgebra& m, const std::vector<Rational>& lambdas,
                                long long window) {
    if (!m.algebra.finite())
        throw std::invalid_argument("check_corollary: finite algebra required");
    std::set<Rational> distinct(lambdas.begin(), lambdas.end());
    if (distinct.size() < 3)
        throw std::invalid_argument("check_corollary: at least 3 distinct lambda samples required");
    long long n = m.algebra.dim();

    std::vector<std::pair<std::string, Element>> zs;
    for (BasisIndex a = 0; a < n; ++a)
        zs.emplace_back("b" + std::to_string(a), Element::basis(a));
    for (BasisIndex a = 0; a < n; ++a)
        for (BasisIndex b = a + 1; b < n; ++b)
            zs.emplace_back("b" + std::to_string(a) + "+b" + std::to_string(b),
                            Element::basis(a) + Element::basis(b));

    CorollaryReport out;
    for (const Rational& lambda : lambdas)
        for (const auto& [desc, z] : zs) {
            LinearOperator perturbation = op_commutator(ad(m.algebra, z),
                                                        LinearOperator::dense(m.R.to_matrix(n)));
            LinearOperator r_prime = op_add(LinearOperator::dense(m.R.to_matrix(n)),
                                            op_scale(lambda, perturbation));
            out.cells.push_back({desc, lambda, check_myb(m.algebra, r_prime, window)});
        }
    return out;
}

}  // namespace myb

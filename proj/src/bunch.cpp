#include "myb/bunch.hpp"

#include "myb/sweep.hpp"

#include <set>

namespace myb {

namespace {

Element tangent_eval(const BracketMap& br, const LinearOperator& R,
                     const Element& X, const Element& Y) {
    return br.eval(R.apply(X), Y) + br.eval(X, R.apply(Y)) - R.apply(br.eval(X, Y));
}

}  // namespace

BracketMap tangent_bracket(const BracketMap& br, const LinearOperator& R) {
    std::string label = "[.,.]_{" + R.label() + "}";
    if (br.finite()) {
        long long n = br.dim();
        SparseTensor3 t(n);
        bool skew = true;
        for (long long i = 0; i < n && skew; ++i)
            for (long long j = i; j < n && skew; ++j)
                if (tangent_eval(br, R, Element::basis(i), Element::basis(j)) !=
                    tangent_eval(br, R, Element::basis(j), Element::basis(i)).scaled(-1))
                    skew = false;
        if (skew) {
            for (long long i = 0; i < n; ++i)
                for (long long j = i + 1; j < n; ++j) {
                    Element e = tangent_eval(br, R, Element::basis(i), Element::basis(j));
                    for (const auto& [k, c] : e.support())
                        t.set(i, j, k, c);
                }
            return BracketMap::dense(n, std::move(t), label);
        }
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) {
                Element e = tangent_eval(br, R, Element::basis(i), Element::basis(j));
                for (const auto& [k, c] : e.support())
                    t.set(i, j, k, c);
            }
        return BracketMap::dense_raw(n, std::move(t), label);
    }
    return BracketMap::rule(
        [br, R](BasisIndex i, BasisIndex j) {
            RuleTerms terms;
            Element e = tangent_eval(br, R, Element::basis(i), Element::basis(j));
            for (const auto& [k, c] : e.support())
                terms.emplace_back(k, c);
            return terms;
        },
        label);
}

BracketMap primed_bracket(const BracketMap& br, const LinearOperator& R) {
    std::string label = "[.,.]'_{" + R.label() + "}";
    auto eval = [br, R](BasisIndex i, BasisIndex j) {
        Element x = Element::basis(i), y = Element::basis(j);
        Element primed = br.eval(R.apply(x), y) + br.eval(x, R.apply(y));
        // [X,Y]'_R = [X,Y]_R + R[X,Y]
        Element via_tangent = tangent_eval(br, R, x, y) + R.apply(br.eval(x, y));
        if (primed != via_tangent)
            throw std::logic_error("primed_bracket: decomposition identity violated");
        return primed;
    };
    if (br.finite()) {
        long long n = br.dim();
        SparseTensor3 t(n);
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) {
                Element e = eval(i, j);
                for (const auto& [k, c] : e.support())
                    t.set(i, j, k, c);
            }
        return densify(BracketMap::dense_raw(n, std::move(t), label), label);
    }
    return BracketMap::rule(
        [eval](BasisIndex i, BasisIndex j) {
            RuleTerms terms;
            Element e = eval(i, j);
            for (const auto& [k, c] : e.support())
                terms.emplace_back(k, c);
            return terms;
        },
        label);
}

Element b_defect_elements(const BracketMap& br, const LinearOperator& R,
                          const Element& X, const Element& Y) {
    Element compact = R.apply(tangent_eval(br, R, X, Y)) - br.eval(R.apply(X), R.apply(Y));
    Element expanded = R.apply(br.eval(R.apply(X), Y)) + R.apply(br.eval(X, R.apply(Y))) -
                       br.eval(R.apply(X), R.apply(Y)) - R.apply(R.apply(br.eval(X, Y)));
    if (compact != expanded)
        throw std::logic_error("b_defect: compact and expanded forms disagree");
    return compact;
}

Element b_defect(const BracketMap& br, const LinearOperator& R, BasisIndex i, BasisIndex j) {
    return b_defect_elements(br, R, Element::basis(i), Element::basis(j));
}

CheckReport check_myb(const BracketMap& br, const LinearOperator& R, long long window) {
    return sweep_pairs("myb(" + br.label() + ", " + R.label() + ")",
                       check_window(br, window),
                       [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
                           Element x = Element::basis(i), y = Element::basis(j);
                           Element rx = R.apply(x), ry = R.apply(y);
                           lhs = R.apply(br.eval(rx, y)) + R.apply(br.eval(x, ry));
                           rhs = br.eval(rx, ry) + R.apply(R.apply(br.eval(x, y)));
                       });
}

CheckReport check_mcybe_variant(const BracketMap& br, const LinearOperator& R,
                                const Rational& c, long long window) {
    return sweep_pairs("mcybe(" + br.label() + ", " + R.label() + ", c=" +
                           rational_to_string(c) + ")",
                       check_window(br, window),
                       [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
                           Element x = Element::basis(i), y = Element::basis(j);
                           Element rx = R.apply(x), ry = R.apply(y);
                           lhs = br.eval(rx, ry) - R.apply(br.eval(rx, y)) -
                                 R.apply(br.eval(x, ry)) + br.eval(x, y).scaled(c);
                           rhs = Element();
                       });
}

CheckReport check_primed_lie_condition(const BracketMap& br, const LinearOperator& R,
                                       long long window) {
    return sweep_triples(
        "primed_lie(" + br.label() + ", " + R.label() + ")", check_window(br, window),
        [&](BasisIndex i, BasisIndex j, BasisIndex k, Element& lhs, Element& rhs) {
            auto term = [&](BasisIndex a, BasisIndex b, BasisIndex c) {
                return br.eval(R.apply(R.apply(br.eval_basis(a, b))), Element::basis(c));
            };
            lhs = term(i, j, k) + term(j, k, i) + term(k, i, j);
            rhs = Element();
        });
}

CheckReport check_compatible(const BracketMap& br1, const BracketMap& br2, long long window) {
    if (br1.finite() != br2.finite())
        throw std::invalid_argument("check_compatible: mixed index kinds");
    return sweep_triples(
        "compatible(" + br1.label() + ", " + br2.label() + ")", check_window(br1, window),
        [&](BasisIndex i, BasisIndex j, BasisIndex k, Element& lhs, Element& rhs) {
            auto term = [&](BasisIndex a, BasisIndex b, BasisIndex c) {
                Element z = Element::basis(c);
                return br2.eval(br1.eval_basis(a, b), z) + br1.eval(br2.eval_basis(a, b), z);
            };
            lhs = term(i, j, k) + term(j, k, i) + term(k, i, j);
            rhs = Element();
        });
}

CheckReport check_remark2_criterion(const BracketMap& br, const LinearOperator& R,
                                    long long window) {
    return sweep_triples(
        "remark2(" + br.label() + ", " + R.label() + ")", check_window(br, window),
        [&](BasisIndex i, BasisIndex j, BasisIndex k, Element& lhs, Element& rhs) {
            auto term = [&](BasisIndex a, BasisIndex b, BasisIndex c) {
                Element z = Element::basis(c);
                return br.eval(b_defect(br, R, a, b), z) +
                       b_defect_elements(br, R, br.eval_basis(a, b), z);
            };
            lhs = term(i, j, k) + term(j, k, i) + term(k, i, j);
            rhs = Element();
        });
}

Pencil make_gamma_bunch(const MYBAlgebra& m, long long window) {
    CheckReport gate = check_myb(m.algebra, m.R, window);
    if (!gate.holds)
        throw ConstructionError("make_gamma_bunch: mYB identity violated", gate);
    return Pencil{m.algebra, tangent_bracket(m.algebra, m.R), m.R};
}

CheckReport check_gamma_homomorphism_at(const Pencil& p, const Rational& lambda,
                                        long long window) {
    if (!p.operator_family)
        throw std::invalid_argument("check_gamma_homomorphism: pencil has no operator family");
    const LinearOperator& R = *p.operator_family;
    return sweep_pairs(
        "gamma_hom(lambda=" + rational_to_string(lambda) + ")",
        check_window(p.base, window),
        [&](BasisIndex i, BasisIndex j, Element& lhs, Element& rhs) {
            Element x = Element::basis(i), y = Element::basis(j);
            auto r_lambda = [&](const Element& v) { return v + R.apply(v).scaled(lambda); };
            Element bracket_lambda =
                p.base.eval_basis(i, j) + p.direction.eval_basis(i, j).scaled(lambda);
            lhs = r_lambda(bracket_lambda);
            // R_lambda maps g_lambda into g_0, so the right side uses the base bracket
            rhs = p.base.eval(r_lambda(x), r_lambda(y));
        });
}

CheckReport check_gamma_homomorphism(const Pencil& p, const std::vector<Rational>& lambdas,
                                     long long window) {
    std::set<Rational> distinct(lambdas.begin(), lambdas.end());
    if (distinct.size() < 3)
        throw std::invalid_argument(
            "check_gamma_homomorphism: at least 3 distinct lambda samples required");
    CheckReport out;
    out.identity_name = "gamma_hom";
    for (const Rational& lambda : lambdas) {
        CheckReport r = check_gamma_homomorphism_at(p, lambda, window);
        out.tuples_checked += r.tuples_checked;
        if (!r.holds && out.holds) {
            out.holds = false;
            out.counterexample = r.counterexample;
            out.identity_name = r.identity_name;
        }
    }
    return out;
}

}  // namespace myb

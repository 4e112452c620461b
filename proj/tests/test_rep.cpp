#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "myb/bimyb.hpp"
#include "myb/catalog.hpp"
#include "myb/checks.hpp"
#include "myb/rep.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>

using namespace myb;
using nlohmann::json;

namespace {

Element e(BasisIndex i) { return Element::basis(i); }

json golden() {
    static json g = [] {
        std::ifstream in(std::string(GOLDEN_DIR) + "/oracle_verdicts.json");
        REQUIRE(in);
        json j;
        in >> j;
        return j;
    }();
    return g;
}

Matrix mat2(std::initializer_list<Rational> vals) {
    Matrix m(2, 2);
    auto it = vals.begin();
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            m(r, c) = *it++;
    return m;
}

// Mat(2) acting on itself by the associative product: the "identity"
// representation T(E_ab) = E_ab on column vectors, Q_R = Q.
BunchRepresentation identity_rep_mat2(const Element& q_elem, const Matrix& q_mat) {
    AssocAlgebra A = make_assoc_mat(2);
    auto [left, right] = mult_operators(A, q_elem);
    BunchRepresentation rep;
    rep.source = Pencil{commutator_algebra(A), conjugation_bracket(A, q_elem), left};
    rep.target_dim = 2;
    rep.images = {mat2({1, 0, 0, 0}), mat2({0, 1, 0, 0}), mat2({0, 0, 1, 0}),
                  mat2({0, 0, 0, 1})};
    rep.q_op = q_mat;
    return rep;
}

}  // namespace

TEST_CASE("ordinary Lie representation: zero direction, zero Q") {
    Sl2 sl2 = make_sl2();
    BunchRepresentation rep;
    rep.source = Pencil{sl2.bracket, BracketMap::zero_dense(3), std::nullopt};
    rep.target_dim = 2;
    rep.images = sl2.fundamental.images;
    rep.q_op = Matrix(2, 2);
    MultiReport r = check_representation(rep);
    CHECK(r.holds());
}

TEST_CASE("identity representation of the Mat(2) pencil") {
    BunchRepresentation rep = identity_rep_mat2(e(0), mat2({1, 0, 0, 0}));
    MultiReport r = check_representation(rep);
    CHECK(r.holds());
    // full identity at sampled lambdas decomposes into the two clauses
    for (int lam = 0; lam <= 2; ++lam)
        CHECK(check_representation_at(rep, Rational(lam)).holds);
    CHECK(check_faithful(rep).holds);  // rank 4
}

TEST_CASE("sl(2) fundamental representation: clause verdicts from the oracle") {
    Sl2 sl2 = make_sl2();
    MultiReport r = check_representation(sl2.fundamental);
    json g = golden()["sl2"];
    REQUIRE(r.clauses.size() == 2);
    CHECK(r.clauses[0].holds == g["rep_clause0_holds"].get<bool>());
    CHECK(r.clauses[1].holds == g["rep_clause1_holds"].get<bool>());
    REQUIRE(!r.clauses[1].holds);
    REQUIRE(r.clauses[1].counterexample);
    json ce = g["rep_clause1_counterexample"];
    CHECK(r.clauses[1].counterexample->indices ==
          std::vector<BasisIndex>{ce["pair"][0].get<long long>(),
                                  ce["pair"][1].get<long long>()});
    // the oracle records the failing right side as a d x d matrix
    Element expect_rhs;
    BasisIndex idx = 0;
    for (const auto& row : ce["rhs"])
        for (const auto& entry : row)
            expect_rhs.add_term(idx++, *parse_rational(entry.get<std::string>()));
    CHECK(r.clauses[1].counterexample->rhs == expect_rhs);
    CHECK(r.clauses[1].counterexample->lhs.is_zero());

    // lambda^0 clause spot value: T([L_1, L_-1]) = 2 T(L_0)
    Matrix lhs = sl2.fundamental.image_of(sl2.bracket.eval_basis(2, 0));
    CHECK(lhs == sl2.fundamental.q_op.scaled(2));

    // the full identity at lambda = 1 fails accordingly
    CHECK(!check_representation_at(sl2.fundamental, Rational(1)).holds);
    CHECK(check_representation_at(sl2.fundamental, Rational(0)).holds);
}

TEST_CASE("faithfulness") {
    Sl2 sl2 = make_sl2();
    CheckReport r = check_faithful(sl2.fundamental);
    CHECK(r.holds);
    CHECK(r.identity_name.find("rank 3") != std::string::npos);
    CHECK(determinant(sl2.fundamental.q_op) ==
          *parse_rational(golden()["sl2"]["det_T_L0"].get<std::string>()));

    BunchRepresentation zero_rep;
    zero_rep.source = Pencil{sl2.bracket, BracketMap::zero_dense(3), std::nullopt};
    zero_rep.target_dim = 2;
    zero_rep.images = {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    zero_rep.q_op = Matrix(2, 2);
    CHECK(!check_faithful(zero_rep).holds);
}

TEST_CASE("diamond product degenerate cases") {
    AssocAlgebra A = make_assoc_mat(2);
    BracketMap comm = commutator_algebra(A);
    BracketMap conj = conjugation_bracket(A, e(0));
    // brA = brB: antisymmetry in the pair forces zero
    CHECK(diamond_product(comm, comm, e(1) + e(2).scaled(Rational(1, 3)))
              .full_tensor()
              .entries()
              .empty());
    // Z = 0
    CHECK(diamond_product(comm, conj, Element()).full_tensor().entries().empty());
}

TEST_CASE("golden diamond tensor: Mat(2) commutator vs conjugation, Z = E_00") {
    AssocAlgebra A = make_assoc_mat(2);
    BracketMap d = diamond_product(commutator_algebra(A), conjugation_bracket(A, e(0)), e(0));
    json g = golden()["closure"]["diamond_mat2_comm_q_e11"];
    SparseTensor3 expect(4);
    for (auto it = g.begin(); it != g.end(); ++it) {
        long long i, j, k;
        REQUIRE(std::sscanf(it.key().c_str(), "%lld,%lld,%lld", &i, &j, &k) == 3);
        expect.set(i, j, k, *parse_rational(it.value().get<std::string>()));
    }
    CHECK(d.full_tensor() == expect);
}

TEST_CASE("diamond product: antisymmetry and Z-linearity on randomized instances") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    AssocAlgebra A = make_assoc_mat(2);
    auto rand_rat = [&] { return Rational(num(rng), den(rng)); };
    auto rand_bracket = [&] {
        Element q;
        for (BasisIndex i = 0; i < 4; ++i)
            q.add_term(i, rand_rat());
        return conjugation_bracket(A, q);
    };
    auto rand_elt = [&] {
        Element z;
        for (BasisIndex i = 0; i < 4; ++i)
            z.add_term(i, rand_rat());
        return z;
    };
    for (int it = 0; it < 100; ++it) {
        BracketMap a = rand_bracket(), b = rand_bracket();
        Element z1 = rand_elt(), z2 = rand_elt();
        Rational c = rand_rat();
        CHECK(diamond_product(a, b, z1).full_tensor() ==
              diamond_product(b, a, z1).scaled(-1).full_tensor());
        CHECK(diamond_product(a, b, z1.scaled(c) + z2).flatten() ==
              [&] {
                  auto u = diamond_product(a, b, z1).scaled(c).flatten();
                  auto v = diamond_product(a, b, z2).flatten();
                  for (std::size_t s = 0; s < u.size(); ++s)
                      u[s] += v[s];
                  return u;
              }());
    }
}

TEST_CASE("family closure") {
    AssocAlgebra A = make_assoc_mat(2);
    // singleton: diamond of a bracket with itself vanishes, trivially in span
    BracketFamily singleton{{commutator_algebra(A)}};
    CHECK(check_family_closure(singleton).holds);

    // matrix-unit conjugation family is closed (golden verdict)
    BracketFamily units;
    for (BasisIndex i = 0; i < 4; ++i)
        units.members.push_back(conjugation_bracket(A, e(i)));
    CheckReport r = check_family_closure(units);
    CHECK(r.holds == golden()["closure"]["mat2_unit_family"]["closed"].get<bool>());
    CHECK(r.holds);

    // {commutator, XQY-YQX} on so(3) escapes; first escape matches the oracle
    Example2 ex = make_example2(3, Matrix::diagonal({Rational(1), Rational(2), Rational(3)}));
    BracketFamily so_fam{{ex.so_pencil.base, ex.so_pencil.direction}};
    CheckReport esc = check_family_closure(so_fam);
    json g = golden()["closure"]["so3_commutator_q_family"];
    CHECK(esc.holds == g["closed"].get<bool>());
    REQUIRE(!esc.holds);
    REQUIRE(esc.counterexample);
    std::vector<BasisIndex> expect;
    for (const auto& v : g["first_escape"])
        expect.push_back(v.get<long long>());
    CHECK(esc.counterexample->indices == expect);
}

TEST_CASE("corollary: perturbed operator stays mYB") {
    AssocAlgebra A = make_assoc_mat(2);
    BracketMap comm = commutator_algebra(A);
    auto [left, right] = mult_operators(A, e(0));
    std::vector<Rational> lambdas = {Rational(0), Rational(1), Rational(2)};

    CHECK_THROWS_AS(check_corollary(MYBAlgebra{comm, left}, {Rational(0)}, 8),
                    std::invalid_argument);

    CorollaryReport r = check_corollary(MYBAlgebra{comm, left}, lambdas);
    // Z-set: 4 basis vectors + 6 pairwise sums, per lambda sample
    CHECK(r.cells.size() == 3 * (4 + 6));
    CHECK(r.holds() == golden()["matn"]["corollary_mat2_left_diag10_holds"].get<bool>());
    CHECK(r.holds());
    CHECK(r.summary().holds);

    // R = 0: perturbation vanishes and the zero operator is mYB
    CHECK(check_corollary(MYBAlgebra{comm, LinearOperator::zero(4)}, lambdas).holds());

    // combinatorial contract on a 3-dim algebra: (3 + 3) Z vectors x 3 lambdas
    CHECK(check_corollary(MYBAlgebra{make_so(3), LinearOperator::zero(3)}, lambdas)
              .cells.size() == 18);
}

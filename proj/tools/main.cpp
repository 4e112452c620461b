#include "myb/bimyb.hpp"
#include "myb/checks.hpp"
#include "myb/io.hpp"
#include "myb/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace myb;

namespace {

struct Options {
    std::string input;
    long long window = 8;
    std::string lambdas = "0,1,2";
    bool json = false;
    bool all_counterexamples = false;
    std::string out;

    std::string algebra, algebra2;
    std::string op, op2;
    std::string pencil, rep, assoc, family;
    std::string q;           // element coefficients, comma-separated
    std::string c = "1";     // mcybe normalization constant
    std::string coeffs;      // make poly
    std::string name = "result";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rational> parse_rational_csv(const std::string& text, const std::string& flag) {
    std::vector<Rational> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto r = parse_rational(item);
        if (!r)
            throw UsageError(flag + ": malformed rational '" + item + "'");
        out.push_back(*r);
    }
    if (out.empty())
        throw UsageError(flag + ": empty list");
    return out;
}

InputDocument load_input(const Options& opt) {
    if (opt.input.empty())
        throw UsageError("--input is required for this subcommand");
    return parse_input(read_file(opt.input));
}

// Resolve a named object, defaulting to the section's sole entry.
template <typename Map>
std::string pick(const Map& m, const std::string& explicit_name, const std::string& section) {
    if (!explicit_name.empty())
        return explicit_name;
    if (m.size() == 1)
        return m.begin()->first;
    throw UsageError(m.empty() ? "document has no " + section
                               : "document has several " + section + "; name one explicitly");
}

Element q_element(const Options& opt) {
    if (opt.q.empty())
        throw UsageError("--q <c0,c1,...> is required for this subcommand");
    return Element::from_coeffs(parse_rational_csv(opt.q, "--q"));
}

// Exhaustive failing-tuple enumeration for the elementary identity checks
// (--all-counterexamples); other subcommands report the first failure only.
template <typename Eval>
void append_all_pairs(std::vector<CheckReport>& checks, const std::string& base_name,
                      const std::vector<BasisIndex>& window, Eval eval) {
    for (BasisIndex i : window)
        for (BasisIndex j : window) {
            auto [lhs, rhs] = eval(i, j);
            if (lhs != rhs)
                checks.push_back(CheckReport::fail(
                    base_name + "@(" + std::to_string(i) + "," + std::to_string(j) + ")", 1,
                    {{i, j}, lhs, rhs}));
        }
}

template <typename Eval>
void append_all_triples(std::vector<CheckReport>& checks, const std::string& base_name,
                        const std::vector<BasisIndex>& window, Eval eval) {
    for (BasisIndex i : window)
        for (BasisIndex j : window)
            for (BasisIndex k : window) {
                auto [lhs, rhs] = eval(i, j, k);
                if (lhs != rhs)
                    checks.push_back(CheckReport::fail(
                        base_name + "@(" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")",
                        1, {{i, j, k}, lhs, rhs}));
            }
}

std::vector<CheckReport> run_check(const std::string& which, const Options& opt) {
    std::vector<CheckReport> checks;
    long long W = opt.window;
    if (which == "jacobi" || which == "myb" || which == "mcybe" || which == "primed-lie" ||
        which == "compat" || which == "bimyb" || which == "remark5" ||
        which == "even-tempered" || which == "corollary") {
        InputDocument doc = load_input(opt);
        BracketMap br = bracket_from(doc, pick(doc.algebras, opt.algebra, "algebras"));
        if (which == "jacobi") {
            checks.push_back(check_jacobi(br, W));
            if (opt.all_counterexamples && !checks.back().holds)
                append_all_triples(checks, "jacobi", check_window(br, W),
                                   [&](BasisIndex i, BasisIndex j, BasisIndex k) {
                                       Element lhs = br.eval(br.eval_basis(i, j), Element::basis(k)) +
                                                     br.eval(br.eval_basis(j, k), Element::basis(i)) +
                                                     br.eval(br.eval_basis(k, i), Element::basis(j));
                                       return std::pair<Element, Element>{lhs, Element{}};
                                   });
        } else if (which == "compat") {
            BracketMap br2 = bracket_from(doc, pick(doc.algebras, opt.algebra2, "algebras"));
            if (opt.algebra2.empty())
                throw UsageError("--algebra2 is required for check compat");
            checks.push_back(check_compatible(br, br2, W));
            if (opt.all_counterexamples && !checks.back().holds)
                append_all_triples(
                    checks, "compat", check_window(br, W),
                    [&](BasisIndex i, BasisIndex j, BasisIndex k) {
                        auto cyc = [&](const BracketMap& a, const BracketMap& b, BasisIndex x,
                                       BasisIndex y, BasisIndex z) {
                            return b.eval(a.eval_basis(x, y), Element::basis(z));
                        };
                        Element lhs;
                        BasisIndex t[3] = {i, j, k};
                        for (int s = 0; s < 3; ++s)
                            lhs = lhs + cyc(br, br2, t[s], t[(s + 1) % 3], t[(s + 2) % 3]) +
                                  cyc(br2, br, t[s], t[(s + 1) % 3], t[(s + 2) % 3]);
                        return std::pair<Element, Element>{lhs, Element{}};
                    });
        } else if (which == "bimyb" || which == "remark5" || which == "even-tempered") {
            LinearOperator r1 = operator_from(doc, pick(doc.operators, opt.op, "operators"));
            if (opt.op2.empty())
                throw UsageError("--operator2 is required for check " + which);
            LinearOperator r2 = operator_from(doc, opt.op2);
            if (which == "bimyb")
                checks = check_bimyb(BiMYB{br, r1, r2}, W).clauses;
            else if (which == "remark5")
                checks = check_remark5(br, r1, r2, W).clauses;
            else
                checks = check_even_tempered(BiMYB{br, r1, r2}, W).clauses;
        } else {
            LinearOperator R = operator_from(doc, pick(doc.operators, opt.op, "operators"));
            if (which == "myb") {
                checks.push_back(check_myb(br, R, W));
                if (opt.all_counterexamples && !checks.back().holds)
                    append_all_pairs(checks, "myb", check_window(br, W),
                                     [&](BasisIndex i, BasisIndex j) {
                                         Element x = Element::basis(i), y = Element::basis(j);
                                         Element lhs = R.apply(br.eval(R.apply(x), y)) +
                                                       R.apply(br.eval(x, R.apply(y)));
                                         Element rhs = br.eval(R.apply(x), R.apply(y)) +
                                                       R.apply(R.apply(br.eval(x, y)));
                                         return std::pair<Element, Element>{lhs, rhs};
                                     });
            } else if (which == "mcybe") {
                auto c = parse_rational(opt.c);
                if (!c)
                    throw UsageError("--c: malformed rational '" + opt.c + "'");
                checks.push_back(check_mcybe_variant(br, R, *c, W));
                if (opt.all_counterexamples && !checks.back().holds)
                    append_all_pairs(checks, "mcybe", check_window(br, W),
                                     [&](BasisIndex i, BasisIndex j) {
                                         Element x = Element::basis(i), y = Element::basis(j);
                                         Element lhs = br.eval(R.apply(x), R.apply(y)) -
                                                       R.apply(br.eval(R.apply(x), y)) -
                                                       R.apply(br.eval(x, R.apply(y))) +
                                                       br.eval(x, y).scaled(*c);
                                         return std::pair<Element, Element>{lhs, Element{}};
                                     });
            } else if (which == "primed-lie") {
                checks.push_back(check_primed_lie_condition(br, R, W));
                if (opt.all_counterexamples && !checks.back().holds)
                    append_all_triples(
                        checks, "primed-lie", check_window(br, W),
                        [&](BasisIndex i, BasisIndex j, BasisIndex k) {
                            auto term = [&](BasisIndex x, BasisIndex y, BasisIndex z) {
                                return br.eval(R.apply(R.apply(br.eval_basis(x, y))),
                                               Element::basis(z));
                            };
                            Element lhs = term(i, j, k) + term(j, k, i) + term(k, i, j);
                            return std::pair<Element, Element>{lhs, Element{}};
                        });
            } else {  // corollary
                auto lambdas = parse_rational_csv(opt.lambdas, "--lambdas");
                try {
                    CorollaryReport rep = check_corollary(MYBAlgebra{br, R}, lambdas, W);
                    for (const auto& cell : rep.cells) {
                        CheckReport r = cell.report;
                        r.identity_name += " [Z=" + cell.z_description +
                                           ", lambda=" + rational_to_string(cell.lambda) + "]";
                        checks.push_back(std::move(r));
                    }
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
        }
    } else if (which == "bunch") {
        InputDocument doc = load_input(opt);
        Pencil p = pencil_from(doc, pick(doc.pencils, opt.pencil, "pencils"));
        if (!p.operator_family)
            throw UsageError("check bunch needs a pencil defined by an operator");
        auto lambdas = parse_rational_csv(opt.lambdas, "--lambdas");
        try {
            checks.push_back(check_gamma_homomorphism(p, lambdas, W));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (which == "prop4" || which == "remark6") {
        InputDocument doc = load_input(opt);
        AssocAlgebra A = assoc_from(doc, pick(doc.assoc_algebras, opt.assoc, "assoc_algebras"));
        Element Q = q_element(opt);
        checks = (which == "prop4" ? check_prop4(A, Q, W) : check_remark6(A, Q, W)).clauses;
    } else if (which == "rep") {
        InputDocument doc = load_input(opt);
        BunchRepresentation r =
            representation_from(doc, pick(doc.representations, opt.rep, "representations"));
        checks = check_representation(r, W).clauses;
        checks.push_back(check_faithful(r));
    } else if (which == "closure") {
        InputDocument doc = load_input(opt);
        BracketFamily fam = family_from(doc, pick(doc.families, opt.family, "families"));
        checks.push_back(check_family_closure(fam, W));
    } else {
        throw UsageError("unknown check '" + which + "'");
    }
    return checks;
}

InputDocument run_make(const std::string& which, const Options& opt) {
    InputDocument doc = load_input(opt);
    InputDocument out;
    if (which == "poly") {
        std::string operand = pick(doc.operators, opt.op, "operators");
        if (opt.coeffs.empty())
            throw UsageError("--coeffs <a0,a1,...> is required for make poly");
        operator_from(doc, operand);  // validates the operand
        OperatorSpec spec;
        spec.kind = "polynomial";
        spec.coeffs = parse_rational_csv(opt.coeffs, "--coeffs");
        spec.operand = operand;
        out.operators[operand] = doc.operators.at(operand);
        out.operators[opt.name] = std::move(spec);
        return out;
    }
    BracketMap result;
    if (which == "qbracket") {
        AssocAlgebra A = assoc_from(doc, pick(doc.assoc_algebras, opt.assoc, "assoc_algebras"));
        result = q_bracket(A, q_element(opt));
    } else {
        BracketMap br = bracket_from(doc, pick(doc.algebras, opt.algebra, "algebras"));
        LinearOperator R = operator_from(doc, pick(doc.operators, opt.op, "operators"));
        if (which == "tangent")
            result = tangent_bracket(br, R);
        else if (which == "primed")
            result = primed_bracket(br, R);
        else
            throw UsageError("unknown make target '" + which + "'");
    }
    if (!result.finite())
        throw UsageError("make " + which + ": result is not finite-dimensional; cannot export");
    out.algebras[opt.name] = spec_of_bracket(densify(result, opt.name));
    return out;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f)
        throw UsageError("cannot open output file '" + opt.out + "'");
    f << text;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input, "input document (JSON)");
    cmd->add_option("--window,-W", opt.window, "index window for rule algebras");
    cmd->add_option("--lambdas", opt.lambdas, "comma-separated lambda samples");
    cmd->add_flag("--json", opt.json, "emit the JSON report");
    cmd->add_flag("--all-counterexamples", opt.all_counterexamples,
                  "enumerate every failing tuple (elementary checks only)");
    cmd->add_option("--out", opt.out, "write output to a file");
    cmd->add_option("--algebra", opt.algebra, "algebra name");
    cmd->add_option("--algebra2", opt.algebra2, "second algebra name");
    cmd->add_option("--operator", opt.op, "operator name");
    cmd->add_option("--operator2", opt.op2, "second operator name");
    cmd->add_option("--pencil", opt.pencil, "pencil name");
    cmd->add_option("--rep", opt.rep, "representation name");
    cmd->add_option("--assoc", opt.assoc, "associative algebra name");
    cmd->add_option("--family", opt.family, "family name");
    cmd->add_option("--q", opt.q, "element Q as comma-separated coefficients");
    cmd->add_option("--c", opt.c, "normalization constant for check mcybe");
    cmd->add_option("--coeffs", opt.coeffs, "polynomial coefficients for make poly");
    cmd->add_option("--name", opt.name, "name of the object emitted by make");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for Lie bracket pencils and Yang-Baxter-type operators"};
    app.require_subcommand(1);
    Options opt;

    std::vector<std::string> check_names = {"jacobi", "myb",     "mcybe",   "primed-lie",
                                            "compat", "bunch",   "bimyb",   "prop4",
                                            "remark5", "remark6", "even-tempered", "rep",
                                            "corollary", "closure"};
    CLI::App* check = app.add_subcommand("check", "verify an identity");
    check->require_subcommand(1);
    for (const auto& n : check_names)
        add_common(check->add_subcommand(n), opt);

    CLI::App* mk = app.add_subcommand("make", "derive an object and export it");
    mk->require_subcommand(1);
    for (const auto& n : {"tangent", "primed", "qbracket", "poly"})
        add_common(mk->add_subcommand(n), opt);

    CLI::App* cat = app.add_subcommand("catalog", "built-in instances");
    cat->require_subcommand(1);
    cat->add_subcommand("list");
    std::string export_name;
    CLI::App* cat_export = cat->add_subcommand("export");
    cat_export->add_option("entry", export_name, "catalog entry")->required();
    add_common(cat_export, opt);

    CLI::App* claims = app.add_subcommand("claims", "run the full claims matrix");
    add_common(claims, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    for (int i = 1; i < argc; ++i)
        command += std::string(i > 1 ? " " : "") + argv[i];

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (check->parsed()) {
            std::string which = check->get_subcommands().front()->get_name();
            std::vector<CheckReport> checks = run_check(which, opt);
            bool all = true;
            for (const auto& c : checks)
                all = all && c.holds;
            if (opt.json) {
                emit(opt, report_json(command, checks, elapsed_ms()));
            } else {
                std::string text;
                for (const auto& c : checks)
                    text += report_to_text(c) + "\n";
                emit(opt, text);
            }
            return all ? 0 : 1;
        }
        if (mk->parsed()) {
            std::string which = mk->get_subcommands().front()->get_name();
            emit(opt, serialize_input(run_make(which, opt)));
            return 0;
        }
        if (cat->parsed()) {
            if (cat->get_subcommands().front()->get_name() == "list") {
                std::string text;
                for (const auto& n : catalog_names())
                    text += n + "\n";
                std::cout << text;
            } else {
                emit(opt, serialize_input(catalog_document(export_name)));
            }
            return 0;
        }
        // claims
        auto lambdas = parse_rational_csv(opt.lambdas, "--lambdas");
        std::vector<ClaimRow> rows = claims_matrix(opt.window, lambdas);
        emit(opt, opt.json ? claims_json(command, rows, elapsed_ms()) : claims_text(rows));
        for (const auto& r : rows)
            if (r.verdict == "CONTRADICTS")
                return 1;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "myb/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace myb {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
    throw ParseError(path + ": " + reason);
}

const ojson& field(const ojson& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail(path, "missing field '" + key + "'");
    return *it;
}

void check_keys(const ojson& obj, const std::set<std::string>& allowed,
                const std::string& path) {
    if (!obj.is_object())
        fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            fail(path, "unknown field '" + it.key() + "'");
}

long long as_int(const ojson& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<long long>();
}

std::string as_string(const ojson& j, const std::string& path) {
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

Rational as_rational(const ojson& j, const std::string& path) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (!j.is_string())
        fail(path, "expected a rational as a string");
    auto r = parse_rational(j.get<std::string>());
    if (!r)
        fail(path, "malformed rational '" + j.get<std::string>() + "'");
    return *r;
}

std::vector<Rational> as_rational_list(const ojson& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_rational(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Matrix as_matrix(const ojson& j, const std::string& path) {
    if (!j.is_array() || j.empty())
        fail(path, "expected a non-empty array of rows");
    std::size_t cols = 0;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        auto row = as_rational_list(j[r], path + "[" + std::to_string(r) + "]");
        if (r == 0)
            cols = row.size();
        else if (row.size() != cols)
            fail(path, "ragged rows");
        rows.push_back(std::move(row));
    }
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    return m;
}

std::vector<BracketEntry> parse_entries(const ojson& j, long long dim, bool require_lower,
                                        const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of entries");
    std::vector<BracketEntry> out;
    std::set<std::pair<long long, long long>> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
        std::string epath = path + "[" + std::to_string(e) + "]";
        check_keys(j[e], {"i", "j", "terms"}, epath);
        BracketEntry entry;
        entry.i = as_int(field(j[e], "i", epath), epath + ".i");
        entry.j = as_int(field(j[e], "j", epath), epath + ".j");
        if (entry.i < 0 || entry.i >= dim || entry.j < 0 || entry.j >= dim)
            fail(epath, "index outside [0, dim)");
        if (require_lower && entry.i >= entry.j)
            fail(epath, "entries must have i < j");
        if (!seen.insert({entry.i, entry.j}).second)
            fail(epath, "duplicate (i, j) entry");
        const ojson& terms = field(j[e], "terms", epath);
        if (!terms.is_array())
            fail(epath + ".terms", "expected an array");
        std::set<long long> ks;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            std::string tpath = epath + ".terms[" + std::to_string(t) + "]";
            check_keys(terms[t], {"k", "c"}, tpath);
            long long k = as_int(field(terms[t], "k", tpath), tpath + ".k");
            if (k < 0 || k >= dim)
                fail(tpath, "index outside [0, dim)");
            if (!ks.insert(k).second)
                fail(tpath, "duplicate k in terms");
            entry.terms.emplace_back(k, as_rational(field(terms[t], "c", tpath), tpath + ".c"));
        }
        out.push_back(std::move(entry));
    }
    return out;
}

AlgebraSpec parse_algebra(const ojson& j, const std::string& path) {
    AlgebraSpec out;
    out.kind = as_string(field(j, "kind", path), path + ".kind");
    if (out.kind == "witt") {
        check_keys(j, {"kind"}, path);
        return out;
    }
    if (out.kind != "structure_constants")
        fail(path + ".kind", "unknown algebra kind '" + out.kind + "'");
    check_keys(j, {"kind", "dim", "brackets"}, path);
    out.dim = as_int(field(j, "dim", path), path + ".dim");
    if (out.dim < 1)
        fail(path + ".dim", "dim must be positive");
    out.entries = parse_entries(field(j, "brackets", path), out.dim, true, path + ".brackets");
    return out;
}

OperatorSpec parse_operator(const ojson& j, const std::string& path) {
    OperatorSpec out;
    out.kind = as_string(field(j, "kind", path), path + ".kind");
    if (out.kind == "matrix") {
        check_keys(j, {"kind", "matrix"}, path);
        out.matrix = as_matrix(field(j, "matrix", path), path + ".matrix");
        if (out.matrix.rows() != out.matrix.cols())
            fail(path + ".matrix", "operator matrix must be square");
    } else if (out.kind == "shift") {
        check_keys(j, {"kind", "offset"}, path);
        out.offset = as_int(field(j, "offset", path), path + ".offset");
    } else if (out.kind == "diagonal") {
        check_keys(j, {"kind", "a", "b"}, path);
        out.diag_a = as_rational(field(j, "a", path), path + ".a");
        out.diag_b = as_rational(field(j, "b", path), path + ".b");
    } else if (out.kind == "polynomial") {
        check_keys(j, {"kind", "coeffs", "operand"}, path);
        out.coeffs = as_rational_list(field(j, "coeffs", path), path + ".coeffs");
        if (out.coeffs.empty())
            fail(path + ".coeffs", "empty coefficient list");
        out.operand = as_string(field(j, "operand", path), path + ".operand");
    } else {
        fail(path + ".kind", "unknown operator kind '" + out.kind + "'");
    }
    return out;
}

AssocSpec parse_assoc(const ojson& j, const std::string& path) {
    AssocSpec out;
    out.kind = as_string(field(j, "kind", path), path + ".kind");
    if (out.kind == "matrix_units") {
        check_keys(j, {"kind", "n"}, path);
        out.n = as_int(field(j, "n", path), path + ".n");
        if (out.n < 1)
            fail(path + ".n", "n must be positive");
        return out;
    }
    if (out.kind != "product_constants")
        fail(path + ".kind", "unknown associative algebra kind '" + out.kind + "'");
    check_keys(j, {"kind", "dim", "products", "unit"}, path);
    out.dim = as_int(field(j, "dim", path), path + ".dim");
    if (out.dim < 1)
        fail(path + ".dim", "dim must be positive");
    out.entries = parse_entries(field(j, "products", path), out.dim, false, path + ".products");
    if (j.contains("unit")) {
        out.unit = as_rational_list(j["unit"], path + ".unit");
        if (static_cast<long long>(out.unit.size()) != out.dim)
            fail(path + ".unit", "unit coefficient count != dim");
    }
    return out;
}

PencilSpec parse_pencil(const ojson& j, const std::string& path) {
    check_keys(j, {"base", "direction", "operator"}, path);
    PencilSpec out;
    out.base = as_string(field(j, "base", path), path + ".base");
    bool has_dir = j.contains("direction"), has_op = j.contains("operator");
    if (has_dir == has_op)
        fail(path, "exactly one of 'direction' and 'operator' is required");
    if (has_dir)
        out.direction = as_string(j["direction"], path + ".direction");
    else
        out.op = as_string(j["operator"], path + ".operator");
    return out;
}

RepSpec parse_rep(const ojson& j, const std::string& path) {
    check_keys(j, {"pencil", "images", "q_op"}, path);
    RepSpec out;
    out.pencil = as_string(field(j, "pencil", path), path + ".pencil");
    const ojson& images = field(j, "images", path);
    if (!images.is_array() || images.empty())
        fail(path + ".images", "expected a non-empty array of matrices");
    for (std::size_t i = 0; i < images.size(); ++i)
        out.images.push_back(as_matrix(images[i], path + ".images[" + std::to_string(i) + "]"));
    out.q_op = as_matrix(field(j, "q_op", path), path + ".q_op");
    return out;
}

template <typename Spec, typename Fn>
void parse_section(const ojson& doc, const std::string& key,
                   std::map<std::string, Spec>& out, Fn parse_one) {
    if (!doc.contains(key))
        return;
    const ojson& section = doc[key];
    if (!section.is_object())
        fail(key, "expected an object of named entries");
    for (auto it = section.begin(); it != section.end(); ++it)
        out[it.key()] = parse_one(it.value(), key + "." + it.key());
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("document: invalid JSON: ") + e.what());
    }
    check_keys(doc, {"algebras", "assoc_algebras", "families", "operators", "pencils",
                     "representations"},
               "document");
    InputDocument out;
    parse_section(doc, "algebras", out.algebras, parse_algebra);
    parse_section(doc, "operators", out.operators, parse_operator);
    parse_section(doc, "assoc_algebras", out.assoc_algebras, parse_assoc);
    parse_section(doc, "pencils", out.pencils, parse_pencil);
    parse_section(doc, "representations", out.representations, parse_rep);
    if (doc.contains("families")) {
        const ojson& fams = doc["families"];
        if (!fams.is_object())
            fail("families", "expected an object of named entries");
        for (auto it = fams.begin(); it != fams.end(); ++it) {
            std::string path = "families." + it.key();
            if (!it.value().is_array())
                fail(path, "expected an array of algebra names");
            std::vector<std::string> names;
            for (std::size_t i = 0; i < it.value().size(); ++i)
                names.push_back(as_string(it.value()[i], path + "[" + std::to_string(i) + "]"));
            out.families[it.key()] = std::move(names);
        }
    }

    // cross-reference resolution
    for (const auto& [name, op] : out.operators)
        if (op.kind == "polynomial" && !out.operators.count(op.operand))
            fail("operators." + name + ".operand", "unknown operator '" + op.operand + "'");
    for (const auto& [name, p] : out.pencils) {
        if (!out.algebras.count(p.base))
            fail("pencils." + name + ".base", "unknown algebra '" + p.base + "'");
        if (!p.direction.empty() && !out.algebras.count(p.direction))
            fail("pencils." + name + ".direction", "unknown algebra '" + p.direction + "'");
        if (!p.op.empty() && !out.operators.count(p.op))
            fail("pencils." + name + ".operator", "unknown operator '" + p.op + "'");
    }
    for (const auto& [name, r] : out.representations)
        if (!out.pencils.count(r.pencil))
            fail("representations." + name + ".pencil", "unknown pencil '" + r.pencil + "'");
    for (const auto& [name, members] : out.families)
        for (const auto& m : members)
            if (!out.algebras.count(m))
                fail("families." + name, "unknown algebra '" + m + "'");
    return out;
}

namespace {

ojson rat_json(const Rational& r) { return rational_to_string(r); }

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(rat_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson entries_json(const std::vector<BracketEntry>& entries) {
    ojson out = ojson::array();
    for (const auto& e : entries) {
        ojson terms = ojson::array();
        for (const auto& [k, c] : e.terms)
            terms.push_back(ojson{{"k", k}, {"c", rat_json(c)}});
        out.push_back(ojson{{"i", e.i}, {"j", e.j}, {"terms", std::move(terms)}});
    }
    return out;
}

ojson algebra_json(const AlgebraSpec& a) {
    if (a.kind == "witt")
        return ojson{{"kind", "witt"}};
    return ojson{{"kind", "structure_constants"}, {"dim", a.dim},
                 {"brackets", entries_json(a.entries)}};
}

ojson operator_json(const OperatorSpec& o) {
    if (o.kind == "matrix")
        return ojson{{"kind", "matrix"}, {"matrix", matrix_json(o.matrix)}};
    if (o.kind == "shift")
        return ojson{{"kind", "shift"}, {"offset", o.offset}};
    if (o.kind == "diagonal")
        return ojson{{"kind", "diagonal"}, {"a", rat_json(o.diag_a)}, {"b", rat_json(o.diag_b)}};
    ojson coeffs = ojson::array();
    for (const auto& c : o.coeffs)
        coeffs.push_back(rat_json(c));
    return ojson{{"kind", "polynomial"}, {"coeffs", std::move(coeffs)}, {"operand", o.operand}};
}

ojson assoc_json(const AssocSpec& a) {
    if (a.kind == "matrix_units")
        return ojson{{"kind", "matrix_units"}, {"n", a.n}};
    ojson out{{"kind", "product_constants"}, {"dim", a.dim},
              {"products", entries_json(a.entries)}};
    if (!a.unit.empty()) {
        ojson unit = ojson::array();
        for (const auto& c : a.unit)
            unit.push_back(rat_json(c));
        out["unit"] = std::move(unit);
    }
    return out;
}

}  // namespace

std::string serialize_input(const InputDocument& doc) {
    ojson out = ojson::object();
    if (!doc.algebras.empty()) {
        ojson s = ojson::object();
        for (const auto& [name, a] : doc.algebras)
            s[name] = algebra_json(a);
        out["algebras"] = std::move(s);
    }
    if (!doc.assoc_algebras.empty()) {
        ojson s = ojson::object();
        for (const auto& [name, a] : doc.assoc_algebras)
            s[name] = assoc_json(a);
        out["assoc_algebras"] = std::move(s);
    }
    if (!doc.families.empty()) {
        ojson s = ojson::object();
        for (const auto& [name, members] : doc.families)
            s[name] = members;
        out["families"] = std::move(s);
    }
    if (!doc.operators.empty()) {
        ojson s = ojson::object();
        for (const auto& [name, o] : doc.operators)
            s[name] = operator_json(o);
        out["operators"] = std::move(s);
    }
    if (!doc.pencils.empty()) {
        ojson s = ojson::object();
        for (const auto& [name, p] : doc.pencils) {
            ojson pj{{"base", p.base}};
            if (!p.direction.empty())
                pj["direction"] = p.direction;
            else
                pj["operator"] = p.op;
            s[name] = std::move(pj);
        }
        out["pencils"] = std::move(s);
    }
    if (!doc.representations.empty()) {
        ojson s = ojson::object();
        for (const auto& [name, r] : doc.representations) {
            ojson images = ojson::array();
            for (const auto& m : r.images)
                images.push_back(matrix_json(m));
            s[name] = ojson{{"pencil", r.pencil}, {"images", std::move(images)},
                            {"q_op", matrix_json(r.q_op)}};
        }
        out["representations"] = std::move(s);
    }
    return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Builders

BracketMap bracket_from(const InputDocument& doc, const std::string& name) {
    auto it = doc.algebras.find(name);
    if (it == doc.algebras.end())
        fail("algebras", "unknown algebra '" + name + "'");
    const AlgebraSpec& a = it->second;
    if (a.kind == "witt")
        return make_witt();
    SparseTensor3 t(a.dim);
    for (const auto& e : a.entries)
        for (const auto& [k, c] : e.terms)
            t.set(e.i, e.j, k, c);
    return BracketMap::dense(a.dim, std::move(t), name);
}

namespace {

LinearOperator operator_from_impl(const InputDocument& doc, const std::string& name,
                                  std::set<std::string>& visiting) {
    auto it = doc.operators.find(name);
    if (it == doc.operators.end())
        fail("operators", "unknown operator '" + name + "'");
    if (!visiting.insert(name).second)
        fail("operators." + name, "cyclic polynomial operand chain");
    const OperatorSpec& o = it->second;
    LinearOperator out;
    if (o.kind == "matrix") {
        out = LinearOperator::dense(o.matrix, name);
    } else if (o.kind == "shift") {
        out = LinearOperator::shift(o.offset);
    } else if (o.kind == "diagonal") {
        Rational a = o.diag_a, b = o.diag_b;
        out = LinearOperator::diagonal([a, b](BasisIndex i) { return a + b * Rational(i); },
                                       name);
    } else {
        out = op_polynomial(o.coeffs, operator_from_impl(doc, o.operand, visiting));
    }
    visiting.erase(name);
    return out;
}

}  // namespace

LinearOperator operator_from(const InputDocument& doc, const std::string& name) {
    std::set<std::string> visiting;
    return operator_from_impl(doc, name, visiting);
}

AssocAlgebra assoc_from(const InputDocument& doc, const std::string& name) {
    auto it = doc.assoc_algebras.find(name);
    if (it == doc.assoc_algebras.end())
        fail("assoc_algebras", "unknown associative algebra '" + name + "'");
    const AssocSpec& a = it->second;
    if (a.kind == "matrix_units")
        return make_assoc_mat(a.n);
    SparseTensor3 t(a.dim);
    for (const auto& e : a.entries)
        for (const auto& [k, c] : e.terms)
            t.set(e.i, e.j, k, c);
    std::optional<Element> unit;
    if (!a.unit.empty())
        unit = Element::from_coeffs(a.unit);
    try {
        return AssocAlgebra(a.dim, std::move(t), std::move(unit), name);
    } catch (const std::invalid_argument& e) {
        fail("assoc_algebras." + name, e.what());
    }
}

Pencil pencil_from(const InputDocument& doc, const std::string& name) {
    auto it = doc.pencils.find(name);
    if (it == doc.pencils.end())
        fail("pencils", "unknown pencil '" + name + "'");
    const PencilSpec& p = it->second;
    BracketMap base = bracket_from(doc, p.base);
    if (!p.direction.empty()) {
        BracketMap dir = bracket_from(doc, p.direction);
        if (base.finite() != dir.finite() ||
            (base.finite() && base.dim() != dir.dim()))
            fail("pencils." + name, "base and direction dimensions differ");
        return Pencil{std::move(base), std::move(dir), std::nullopt};
    }
    LinearOperator R = operator_from(doc, p.op);
    BracketMap dir = tangent_bracket(base, R);
    return Pencil{std::move(base), std::move(dir), std::move(R)};
}

BunchRepresentation representation_from(const InputDocument& doc, const std::string& name) {
    auto it = doc.representations.find(name);
    if (it == doc.representations.end())
        fail("representations", "unknown representation '" + name + "'");
    const RepSpec& r = it->second;
    BunchRepresentation out;
    out.source = pencil_from(doc, r.pencil);
    if (!out.source.base.finite())
        fail("representations." + name, "source pencil must be finite-dimensional");
    if (static_cast<long long>(r.images.size()) != out.source.base.dim())
        fail("representations." + name + ".images", "image count != source dimension");
    std::size_t d = r.images.front().rows();
    for (const auto& m : r.images)
        if (m.rows() != d || m.cols() != d)
            fail("representations." + name + ".images", "images must be square, same size");
    if (r.q_op.rows() != d || r.q_op.cols() != d)
        fail("representations." + name + ".q_op", "q_op size must match the images");
    out.target_dim = static_cast<long long>(d);
    out.images = r.images;
    out.q_op = r.q_op;
    return out;
}

BracketFamily family_from(const InputDocument& doc, const std::string& name) {
    auto it = doc.families.find(name);
    if (it == doc.families.end())
        fail("families", "unknown family '" + name + "'");
    BracketFamily out;
    long long dim = -1;
    for (const auto& m : it->second) {
        BracketMap br = bracket_from(doc, m);
        if (!br.finite())
            fail("families." + name, "family members must be finite-dimensional");
        if (dim == -1)
            dim = br.dim();
        else if (br.dim() != dim)
            fail("families." + name, "family members have mixed dimensions");
        out.members.push_back(std::move(br));
    }
    if (out.members.empty())
        fail("families." + name, "empty family");
    return out;
}

AlgebraSpec spec_of_bracket(const BracketMap& br) {
    if (!br.finite())
        fail("bracket", "only finite brackets serialize to structure constants");
    if (!br.skew_storage())
        fail("bracket", "bracket evaluation is not antisymmetric");
    AlgebraSpec out;
    out.kind = "structure_constants";
    out.dim = br.dim();
    for (BasisIndex i = 0; i < out.dim; ++i)
        for (BasisIndex j = i + 1; j < out.dim; ++j) {
            Element v = br.eval_basis(i, j);
            if (v.is_zero())
                continue;
            BracketEntry e{i, j, {}};
            for (const auto& [k, c] : v.support())
                e.terms.emplace_back(k, c);
            out.entries.push_back(std::move(e));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog export

namespace {

OperatorSpec matrix_operator_spec(const Matrix& m) {
    OperatorSpec o;
    o.kind = "matrix";
    o.matrix = m;
    return o;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"witt", "so3",          "so4",          "sl2",
            "mat2", "mat3",         "mat2-units-family", "example2-so3",
            "example2-so4"};
}

InputDocument catalog_document(const std::string& raw_name) {
    std::string name = raw_name.substr(0, raw_name.find('?'));
    InputDocument doc;
    if (name == "witt") {
        doc.algebras["witt"] = AlgebraSpec{"witt", 0, {}};
        for (long long n = 1; n <= 3; ++n) {
            OperatorSpec o;
            o.kind = "shift";
            o.offset = n;
            doc.operators["R" + std::to_string(n)] = std::move(o);
        }
        return doc;
    }
    if (name == "so3" || name == "so4") {
        long long n = name == "so3" ? 3 : 4;
        doc.algebras[name] = spec_of_bracket(make_so(n));
        return doc;
    }
    if (name == "sl2") {
        Sl2 sl2 = make_sl2();
        doc.algebras["sl2"] = spec_of_bracket(sl2.bracket);
        OperatorSpec r;
        r.kind = "diagonal";
        r.diag_a = -1;
        r.diag_b = 1;
        doc.operators["R"] = std::move(r);
        doc.pencils["sl2_pencil"] = PencilSpec{"sl2", "", "R"};
        RepSpec rep;
        rep.pencil = "sl2_pencil";
        rep.images = sl2.fundamental.images;
        rep.q_op = sl2.fundamental.q_op;
        doc.representations["fundamental"] = std::move(rep);
        return doc;
    }
    if (name == "mat2" || name == "mat3") {
        long long n = name == "mat2" ? 2 : 3;
        AssocSpec a;
        a.kind = "matrix_units";
        a.n = n;
        doc.assoc_algebras[name] = std::move(a);
        doc.algebras[name + "_comm"] = spec_of_bracket(commutator_algebra(make_assoc_mat(n)));
        return doc;
    }
    if (name == "mat2-units-family") {
        AssocAlgebra A = make_assoc_mat(2);
        std::vector<std::string> members;
        for (long long a = 0; a < 2; ++a)
            for (long long b = 0; b < 2; ++b) {
                std::string mname = "conj_e" + std::to_string(a) + std::to_string(b);
                doc.algebras[mname] =
                    spec_of_bracket(conjugation_bracket(A, Element::basis(a * 2 + b)));
                members.push_back(mname);
            }
        doc.families["units"] = std::move(members);
        return doc;
    }
    if (name == "example2-so3" || name == "example2-so4") {
        long long n = name == "example2-so3" ? 3 : 4;
        Vec diag;
        for (long long d = 1; d <= n; ++d)
            diag.push_back(Rational(d));
        Matrix Q = Matrix::diagonal(diag);
        Example2 ex = make_example2(n, Q);
        doc.algebras["so_base"] = spec_of_bracket(ex.so_pencil.base);
        doc.algebras["so_direction"] = spec_of_bracket(ex.so_pencil.direction);
        doc.algebras["mat_comm"] = spec_of_bracket(ex.ambient.base);
        doc.operators["L_Q"] = matrix_operator_spec(
            ex.ambient.operator_family->to_matrix(n * n));
        doc.pencils["so_pencil"] = PencilSpec{"so_base", "so_direction", ""};
        doc.pencils["ambient"] = PencilSpec{"mat_comm", "", "L_Q"};
        return doc;
    }
    fail("catalog", "unknown catalog entry '" + raw_name + "'");
}

// ---------------------------------------------------------------------------
// Reports

namespace {

ojson element_json(const Element& e) {
    ojson out = ojson::object();
    for (const auto& [i, c] : e.support())
        out[std::to_string(i)] = rat_json(c);
    return out;
}

ojson check_json(const CheckReport& r) {
    ojson out{{"identity", r.identity_name},
              {"holds", r.holds},
              {"tuples_checked", r.tuples_checked}};
    if (r.counterexample) {
        ojson idx = ojson::array();
        for (auto i : r.counterexample->indices)
            idx.push_back(i);
        out["counterexample"] = ojson{{"indices", std::move(idx)},
                                      {"lhs", element_json(r.counterexample->lhs)},
                                      {"rhs", element_json(r.counterexample->rhs)}};
    }
    return out;
}

ojson report_header(const std::string& command) {
    return ojson{{"tool", "mybcheck 1.0.0"}, {"command", command}};
}

}  // namespace

std::string report_json(const std::string& command, const std::vector<CheckReport>& checks,
                        double timing_ms) {
    ojson out = report_header(command);
    ojson list = ojson::array();
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.holds;
        list.push_back(check_json(c));
    }
    out["checks"] = std::move(list);
    out["verdict"] = all ? "holds" : "violated";
    if (timing_ms >= 0)
        out["timing_ms"] = timing_ms;
    return out.dump(2) + "\n";
}

std::string claims_json(const std::string& command, const std::vector<ClaimRow>& rows,
                        double timing_ms) {
    ojson out = report_header(command);
    ojson list = ojson::array();
    for (const auto& r : rows)
        list.push_back(ojson{{"claim", r.claim},
                             {"instance", r.instance},
                             {"verdict", r.verdict},
                             {"holds", r.holds},
                             {"tuples_checked", r.tuples_checked},
                             {"detail", r.detail}});
    out["rows"] = std::move(list);
    if (timing_ms >= 0)
        out["timing_ms"] = timing_ms;
    return out.dump(2) + "\n";
}

std::string claims_text(const std::vector<ClaimRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << r.verdict;
        for (std::size_t i = r.verdict.size(); i < 12; ++i)
            os << ' ';
        os << " " << r.claim << "  [" << r.instance << "]";
        if (r.tuples_checked > 0)
            os << "  (" << r.tuples_checked << " tuples)";
        os << "\n";
        if (!r.detail.empty())
            os << "             " << r.detail << "\n";
    }
    long long confirms = 0, contradicts = 0, unchecked = 0;
    for (const auto& r : rows) {
        if (r.verdict == "CONFIRMS")
            ++confirms;
        else if (r.verdict == "CONTRADICTS")
            ++contradicts;
        else
            ++unchecked;
    }
    os << "---\n"
       << rows.size() << " rows: " << confirms << " CONFIRMS, " << contradicts
       << " CONTRADICTS, " << unchecked << " NOT-CHECKED\n";
    return os.str();
}

}  // namespace myb

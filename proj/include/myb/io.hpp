#ifndef MYB_IO_HPP
#define MYB_IO_HPP

#include "myb/assoc.hpp"
#include "myb/bunch.hpp"
#include "myb/catalog.hpp"
#include "myb/rep.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace myb {

// Parse/validation failure; the message always carries the JSON path and a
// reason.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct BracketEntry {
    long long i = 0, j = 0;
    std::vector<std::pair<long long, Rational>> terms;  // (k, coefficient)
};

struct AlgebraSpec {
    std::string kind;  // "structure_constants" | "witt"
    long long dim = 0;
    std::vector<BracketEntry> entries;  // i < j enforced for structure_constants
};

struct OperatorSpec {
    std::string kind;  // "matrix" | "shift" | "diagonal" | "polynomial"
    Matrix matrix;
    long long offset = 0;
    Rational diag_a, diag_b;  // e_i -> (a + b*i) e_i
    std::vector<Rational> coeffs;
    std::string operand;  // polynomial: name of the operator being substituted
};

struct AssocSpec {
    std::string kind;  // "matrix_units" | "product_constants"
    long long n = 0;   // matrix_units
    long long dim = 0;
    std::vector<BracketEntry> entries;  // product constants, any ordered pair
    std::vector<Rational> unit;         // empty = no declared unit
};

struct PencilSpec {
    std::string base;
    std::string direction;  // exactly one of direction / op is set
    std::string op;
};

struct RepSpec {
    std::string pencil;
    std::vector<Matrix> images;
    Matrix q_op;
};

struct InputDocument {
    std::map<std::string, AlgebraSpec> algebras;
    std::map<std::string, OperatorSpec> operators;
    std::map<std::string, AssocSpec> assoc_algebras;
    std::map<std::string, PencilSpec> pencils;
    std::map<std::string, RepSpec> representations;
    std::map<std::string, std::vector<std::string>> families;
};

// Strict parse: unknown fields, malformed rationals, duplicate or unordered
// (i,j) entries, and dangling references all throw ParseError with the path.
InputDocument parse_input(const std::string& text);

// Canonical serialization: fixed section and key order, rationals as
// canonical strings; parse(serialize(d)) re-serializes byte-identically.
std::string serialize_input(const InputDocument& doc);

// Builders resolving named objects; throw ParseError on unknown names or
// shape mismatches.
BracketMap bracket_from(const InputDocument& doc, const std::string& name);
LinearOperator operator_from(const InputDocument& doc, const std::string& name);
AssocAlgebra assoc_from(const InputDocument& doc, const std::string& name);
Pencil pencil_from(const InputDocument& doc, const std::string& name);
BunchRepresentation representation_from(const InputDocument& doc, const std::string& name);
BracketFamily family_from(const InputDocument& doc, const std::string& name);

// Inverse of bracket_from for finite brackets (used by `make` subcommands).
AlgebraSpec spec_of_bracket(const BracketMap& br);

// Named catalog exports, each a self-contained InputDocument.
std::vector<std::string> catalog_names();
InputDocument catalog_document(const std::string& name);

// Report rendering shared by the CLI and tests.  `timing_ms < 0` omits the
// field (tests compare reports modulo timing).
std::string report_json(const std::string& command, const std::vector<CheckReport>& checks,
                        double timing_ms);
std::string claims_json(const std::string& command, const std::vector<ClaimRow>& rows,
                        double timing_ms);
std::string claims_text(const std::vector<ClaimRow>& rows);

}  // namespace myb

#endif

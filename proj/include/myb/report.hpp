#ifndef MYB_REPORT_HPP
#define MYB_REPORT_HPP

#include "myb/element.hpp"

#include <optional>
#include <string>
#include <vector>

namespace myb {

// First failing tuple of an identity check, with both sides fully evaluated.
struct Counterexample {
    std::vector<BasisIndex> indices;
    Element lhs;
    Element rhs;
};

struct CheckReport {
    std::string identity_name;
    bool holds = true;
    long long tuples_checked = 0;
    std::optional<Counterexample> counterexample;

    static CheckReport pass(std::string name, long long tuples) {
        return {std::move(name), true, tuples, std::nullopt};
    }
    static CheckReport fail(std::string name, long long tuples, Counterexample ce) {
        return {std::move(name), false, tuples, std::move(ce)};
    }
};

// Bundle of named clauses, e.g. the per-clause verdicts of a multi-part
// definition.  Holds iff every clause holds.
struct MultiReport {
    std::string name;
    std::vector<CheckReport> clauses;

    bool holds() const {
        for (const auto& c : clauses)
            if (!c.holds)
                return false;
        return true;
    }
    // The failing clauses flattened into one report for CLI output.
    CheckReport summary() const;
};

std::string report_to_text(const CheckReport& r);

}  // namespace myb

#endif

#include "myb/report.hpp"

namespace myb {

CheckReport MultiReport::summary() const {
    CheckReport out;
    out.identity_name = name;
    out.holds = true;
    for (const auto& c : clauses) {
        out.tuples_checked += c.tuples_checked;
        if (!c.holds && out.holds) {
            out.holds = false;
            out.counterexample = c.counterexample;
            out.identity_name = name + " [" + c.identity_name + "]";
        }
    }
    return out;
}

std::string report_to_text(const CheckReport& r) {
    std::string s = r.identity_name + ": " + (r.holds ? "holds" : "FAILS") +
                    " (" + std::to_string(r.tuples_checked) + " tuples)";
    if (r.counterexample) {
        s += "\n  counterexample at (";
        for (std::size_t i = 0; i < r.counterexample->indices.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(r.counterexample->indices[i]);
        }
        s += "): lhs = " + r.counterexample->lhs.to_string() +
             ", rhs = " + r.counterexample->rhs.to_string();
    }
    return s;
}

}  // namespace myb

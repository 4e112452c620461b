#include "myb/element.hpp"

#include <stdexcept>

namespace myb {

std::vector<Rational> Element::to_coeffs(long long dim) const {
    std::vector<Rational> out(static_cast<std::size_t>(dim));
    for (const auto& [i, c] : support_) {
        if (i < 0 || i >= dim)
            throw std::out_of_range("Element::to_coeffs: index outside [0, dim)");
        out[static_cast<std::size_t>(i)] = c;
    }
    return out;
}

std::string Element::to_string(const std::string& symbol) const {
    if (support_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : support_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        if (a != 1)
            out += rational_to_string(a) + "*";
        out += symbol + "[" + std::to_string(i) + "]";
        first = false;
    }
    return out;
}

}  // namespace myb

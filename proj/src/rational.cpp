#include "myb/rational.hpp"

#include <cctype>

namespace myb {

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool parse_digits(const std::string& s, std::size_t begin, std::size_t end, BigInt& out) {
    if (begin >= end)
        return false;
    for (std::size_t i = begin; i < end; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    out = BigInt(s.substr(begin, end - begin));
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t slash = text.find('/', pos);
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_digits(text, pos, text.size(), num))
            return std::nullopt;
    } else {
        if (!parse_digits(text, pos, slash, num))
            return std::nullopt;
        if (!parse_digits(text, slash + 1, text.size(), den))
            return std::nullopt;
        if (den == 0)
            return std::nullopt;
    }
    if (negative)
        num = -num;
    return Rational(num, den);
}

}  // namespace myb

#include "credence/rational.hpp"

#include "credence/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace credence {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Signed decimal integer literal.
BigInt parse_integer(const std::string& s, const std::string& whole) {
    std::string digits = s;
    bool negative = false;
    if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
        negative = digits[0] == '-';
        digits.erase(0, 1);
    }
    if (!all_digits(digits))
        throw ValidationError("invalid rational literal '" + whole + "'");
    BigInt value(digits);
    return negative ? -value : value;
}

BigInt pow10(std::size_t k) {
    BigInt p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= 10;
    return p;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw ValidationError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt num = parse_integer(s.substr(0, slash), text);
        const std::string den_part = s.substr(slash + 1);
        if (!all_digits(den_part))
            throw ValidationError("invalid rational literal '" + text + "'");
        BigInt den(den_part);
        if (den == 0)
            throw ValidationError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        bool negative = false;
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            negative = head[0] == '-';
            head.erase(0, 1);
        }
        if ((!head.empty() && !all_digits(head)) ||
            (!tail.empty() && !all_digits(tail)) || (head.empty() && tail.empty()))
            throw ValidationError("invalid rational literal '" + text + "'");
        BigInt scaled = head.empty() ? BigInt(0) : BigInt(head);
        scaled *= pow10(tail.size());
        if (!tail.empty()) scaled += BigInt(tail);
        Rational r(scaled, pow10(tail.size()));
        return negative ? -r : r;
    }

    return Rational(parse_integer(s, text));
}

std::string to_fraction(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal(const Rational& r, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, to_double(r));
    return buf;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace credence

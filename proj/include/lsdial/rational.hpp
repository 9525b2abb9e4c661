#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "lsdial/errors.hpp"

namespace lsdial {

// Exact arbitrary-precision rational scalar, always stored canonically
// (reduced, denominator positive). Expression templates are off so that
// arithmetic yields plain values.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using Integer = boost::multiprecision::cpp_int;

// Text grammar: "p" or "p/q" where p and q are digit runs, with an optional
// leading minus on p. The denominator is omitted exactly when it equals one.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const char* why) -> Rational {
        throw ParseError("invalid rational '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto scan_digits = [&](std::size_t start) {
        std::size_t end = start;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
        return end;
    };
    const std::size_t num_end = scan_digits(pos);
    if (num_end == pos) return fail("expected digits");
    Integer num{std::string(text.substr(pos, num_end - pos))};
    Integer den = 1;
    if (num_end != text.size()) {
        if (text[num_end] != '/') return fail("unexpected character");
        const std::size_t den_start = num_end + 1;
        const std::size_t den_end = scan_digits(den_start);
        if (den_end == den_start) return fail("expected digits after '/'");
        if (den_end != text.size()) return fail("trailing characters after denominator");
        den = Integer{std::string(text.substr(den_start, den_end - den_start))};
        if (den == 0) return fail("zero denominator");
    }
    if (negative) num = -num;
    // Division canonicalizes (reduces and keeps the denominator positive).
    return Rational(num) / Rational(den);
}

inline std::string format_rational(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) {
        out += '/';
        out += denominator(q).str();
    }
    return out;
}

}  // namespace lsdial

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "lsdial/rational.hpp"

namespace lsdial {

struct WeightTriple {
    Rational rho;
    Rational tau;
    Rational sigma;

    bool operator==(const WeightTriple&) const = default;
};

// The eight weight families, in the order tables are rendered in. D01Delta is
// the one-parameter family; EndS stands in for the all-zero triple, whose
// solution space is every linear endomorphism and is reported separately.
enum class WeightFamily { D111, D110, D101, D100, D011, D001, D010, D01Delta, EndS };

inline constexpr std::array<WeightFamily, 8> kCanonicalFamilies = {
    WeightFamily::D111, WeightFamily::D110, WeightFamily::D101, WeightFamily::D100,
    WeightFamily::D011, WeightFamily::D001, WeightFamily::D010, WeightFamily::D01Delta};

inline const char* family_name(WeightFamily f) {
    switch (f) {
        case WeightFamily::D111: return "D111";
        case WeightFamily::D110: return "D110";
        case WeightFamily::D101: return "D101";
        case WeightFamily::D100: return "D100";
        case WeightFamily::D011: return "D011";
        case WeightFamily::D001: return "D001";
        case WeightFamily::D010: return "D010";
        case WeightFamily::D01Delta: return "D01d";
        case WeightFamily::EndS: return "EndS";
    }
    return "?";
}

// Short tags used on the command line.
inline const char* family_tag(WeightFamily f) {
    switch (f) {
        case WeightFamily::D111: return "111";
        case WeightFamily::D110: return "110";
        case WeightFamily::D101: return "101";
        case WeightFamily::D100: return "100";
        case WeightFamily::D011: return "011";
        case WeightFamily::D001: return "001";
        case WeightFamily::D010: return "010";
        case WeightFamily::D01Delta: return "01d";
        case WeightFamily::EndS: return "ends";
    }
    return "?";
}

inline WeightFamily parse_family_tag(std::string_view tag) {
    for (WeightFamily f : kCanonicalFamilies)
        if (tag == family_tag(f)) return f;
    if (tag == family_tag(WeightFamily::EndS)) return WeightFamily::EndS;
    throw ParseError("unknown family tag '" + std::string(tag) +
                     "' (expected one of 111, 110, 101, 100, 011, 001, 010, 01d, ends)");
}

// A weight triple up to the scaling that leaves the defining equations
// invariant. delta is present exactly for the D01Delta family and is never
// 0 or 1 (those land in D010 and D011).
struct CanonicalWeightClass {
    WeightFamily family;
    std::optional<Rational> delta;

    bool operator==(const CanonicalWeightClass&) const = default;
};

// Scaling a nonzero weight triple leaves the solution space unchanged, so
// classification only depends on the zero pattern and one ratio: divide by
// rho when rho != 0, else by tau, else by sigma.
inline CanonicalWeightClass canonicalize_triple(const WeightTriple& w) {
    if (w.rho != 0) {
        const Rational t = w.tau / w.rho;
        const Rational s = w.sigma / w.rho;
        if (t != 0 && s != 0) return {WeightFamily::D111, std::nullopt};
        if (t != 0) return {WeightFamily::D110, std::nullopt};
        if (s != 0) return {WeightFamily::D101, std::nullopt};
        return {WeightFamily::D100, std::nullopt};
    }
    if (w.tau != 0) {
        const Rational d = w.sigma / w.tau;
        if (d == 0) return {WeightFamily::D010, std::nullopt};
        if (d == 1) return {WeightFamily::D011, std::nullopt};
        return {WeightFamily::D01Delta, d};
    }
    if (w.sigma != 0) return {WeightFamily::D001, std::nullopt};
    return {WeightFamily::EndS, std::nullopt};
}

// Two conventions for the sign of sigma in the representative triples of the
// rho = 0 families: Ratio keeps the ratio sigma/tau on the sigma slot
// directly, Sum negates it so the slot reads as the named parameter.
enum class Rho0Sign { Ratio, Sum };

inline const char* rho0_sign_name(Rho0Sign s) {
    return s == Rho0Sign::Ratio ? "ratio" : "sum";
}

inline Rho0Sign parse_rho0_sign(std::string_view text) {
    if (text == "ratio") return Rho0Sign::Ratio;
    if (text == "sum") return Rho0Sign::Sum;
    throw ParseError("unknown weight sign convention '" + std::string(text) +
                     "' (expected 'ratio' or 'sum')");
}

// Representative weight triple of a canonical class. D01Delta requires a
// delta different from 0 and 1; EndS has no representative because its
// solution space is all of End(S) regardless of the products.
inline WeightTriple family_triple(const CanonicalWeightClass& c, Rho0Sign sign = Rho0Sign::Ratio) {
    switch (c.family) {
        case WeightFamily::D111: return {1, 1, 1};
        case WeightFamily::D110: return {1, 1, 0};
        case WeightFamily::D101: return {1, 0, 1};
        case WeightFamily::D100: return {1, 0, 0};
        case WeightFamily::D011: return {0, 1, sign == Rho0Sign::Ratio ? Rational(-1) : Rational(1)};
        case WeightFamily::D001: return {0, 0, 1};
        case WeightFamily::D010: return {0, 1, 0};
        case WeightFamily::D01Delta: {
            if (!c.delta) throw BadDelta("family D01d requires a delta parameter");
            const Rational& d = *c.delta;
            if (d == 0 || d == 1)
                throw BadDelta("delta must differ from 0 and 1 (got " + format_rational(d) + ")");
            return {0, 1, sign == Rho0Sign::Ratio ? -d : d};
        }
        case WeightFamily::EndS:
            throw UnboundedSpace(
                "the all-zero weight triple admits every linear map; no representative triple");
    }
    throw InternalInconsistency("unknown weight family");
}

inline WeightTriple defining_equations(const CanonicalWeightClass& c) {
    return family_triple(c, Rho0Sign::Ratio);
}

}  // namespace lsdial

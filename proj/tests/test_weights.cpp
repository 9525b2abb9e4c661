#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace lsdial;
using testsupport::random_nonzero_rational;
using testsupport::random_triple;

namespace {

WeightTriple t(int r, int ta, int s) {
    return {Rational(r), Rational(ta), Rational(s)};
}

}  // namespace

TEST_CASE("canonicalize_triple buckets by the scaling class") {
    CHECK(canonicalize_triple(t(2, 2, 2)) == CanonicalWeightClass{WeightFamily::D111, {}});
    CHECK(canonicalize_triple(t(2, 2, 0)) == CanonicalWeightClass{WeightFamily::D110, {}});
    CHECK(canonicalize_triple(t(3, 0, 3)) == CanonicalWeightClass{WeightFamily::D101, {}});
    CHECK(canonicalize_triple(t(5, 0, 0)) == CanonicalWeightClass{WeightFamily::D100, {}});
    CHECK(canonicalize_triple(t(0, 2, 2)) == CanonicalWeightClass{WeightFamily::D011, {}});
    CHECK(canonicalize_triple(t(0, 0, 5)) == CanonicalWeightClass{WeightFamily::D001, {}});
    CHECK(canonicalize_triple(t(0, 3, 0)) == CanonicalWeightClass{WeightFamily::D010, {}});
    CHECK(canonicalize_triple(t(0, 2, 6)) ==
          CanonicalWeightClass{WeightFamily::D01Delta, Rational(3)});
    CHECK(canonicalize_triple(t(0, 0, 0)) == CanonicalWeightClass{WeightFamily::EndS, {}});
}

TEST_CASE("canonicalize_triple buckets non-conforming nonzero-rho triples by zero pattern") {
    CHECK(canonicalize_triple(t(1, 2, 0)).family == WeightFamily::D110);
    CHECK(canonicalize_triple(t(1, 2, 3)).family == WeightFamily::D111);
    CHECK(canonicalize_triple(t(1, 0, 7)).family == WeightFamily::D101);
    CHECK(canonicalize_triple(t(-4, 0, 0)).family == WeightFamily::D100);
}

TEST_CASE("canonicalization is scaling invariant") {
    for (int i = 0; i < 50; ++i) {
        WeightTriple w = random_triple();
        if (i % 3 == 0) w.rho = 0;
        if (i % 4 == 0) w.tau = 0;
        if (i % 5 == 0) w.sigma = 0;
        const Rational c = random_nonzero_rational(-5, 5, 3);
        const WeightTriple scaled{c * w.rho, c * w.tau, c * w.sigma};
        CHECK(canonicalize_triple(scaled) == canonicalize_triple(w));
    }
}

TEST_CASE("defining equations realize each family's displayed identity") {
    CHECK(defining_equations({WeightFamily::D111, {}}) == t(1, 1, 1));
    CHECK(defining_equations({WeightFamily::D110, {}}) == t(1, 1, 0));
    CHECK(defining_equations({WeightFamily::D101, {}}) == t(1, 0, 1));
    CHECK(defining_equations({WeightFamily::D100, {}}) == t(1, 0, 0));
    CHECK(defining_equations({WeightFamily::D011, {}}) == t(0, 1, -1));
    CHECK(defining_equations({WeightFamily::D001, {}}) == t(0, 0, 1));
    CHECK(defining_equations({WeightFamily::D010, {}}) == t(0, 1, 0));
    CHECK(defining_equations({WeightFamily::D01Delta, Rational(3)}) == t(0, 1, -3));
    CHECK_THROWS_AS(defining_equations({WeightFamily::EndS, {}}), UnboundedSpace);
}

TEST_CASE("the sum convention flips the sigma sign of the rho-zero families") {
    CHECK(family_triple({WeightFamily::D011, {}}, Rho0Sign::Sum) == t(0, 1, 1));
    CHECK(family_triple({WeightFamily::D01Delta, Rational(3)}, Rho0Sign::Sum) == t(0, 1, 3));
    CHECK(family_triple({WeightFamily::D010, {}}, Rho0Sign::Sum) == t(0, 1, 0));
    CHECK(family_triple({WeightFamily::D111, {}}, Rho0Sign::Sum) == t(1, 1, 1));
}

TEST_CASE("delta validation") {
    CHECK_THROWS_AS(family_triple({WeightFamily::D01Delta, {}}), BadDelta);
    CHECK_THROWS_AS(family_triple({WeightFamily::D01Delta, Rational(0)}), BadDelta);
    CHECK_THROWS_AS(family_triple({WeightFamily::D01Delta, Rational(1)}), BadDelta);
    CHECK(family_triple({WeightFamily::D01Delta, Rational(-2)}) == t(0, 1, 2));
}

TEST_CASE("the two conventions meet on the literal triple (0,1,-1)") {
    // The displayed-equation reading of D011 solves the literal triple
    // (0,1,-1), whose own scaling class is D01Delta with delta = -1.
    const CanonicalWeightClass back = canonicalize_triple(t(0, 1, -1));
    CHECK(back.family == WeightFamily::D01Delta);
    CHECK(back.delta == Rational(-1));
    CHECK(family_triple(back) == t(0, 1, 1));
}

TEST_CASE("family tags round-trip") {
    for (WeightFamily f : kCanonicalFamilies) CHECK(parse_family_tag(family_tag(f)) == f);
    CHECK(parse_family_tag("ends") == WeightFamily::EndS);
    CHECK(std::string(family_tag(WeightFamily::D01Delta)) == "01d");
    CHECK(std::string(family_name(WeightFamily::D01Delta)) == "D01d");
    CHECK_THROWS_AS(parse_family_tag("112"), ParseError);
    CHECK_THROWS_AS(parse_family_tag(""), ParseError);
}

TEST_CASE("rho0 sign names round-trip") {
    CHECK(parse_rho0_sign("ratio") == Rho0Sign::Ratio);
    CHECK(parse_rho0_sign("sum") == Rho0Sign::Sum);
    CHECK_THROWS_AS(parse_rho0_sign("avg"), ParseError);
    CHECK(std::string(rho0_sign_name(Rho0Sign::Ratio)) == "ratio");
    CHECK(std::string(rho0_sign_name(Rho0Sign::Sum)) == "sum");
}

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace lsdial;
using testsupport::random_left_symmetric_pool;
using testsupport::random_matrix;
using testsupport::random_nonzero_rational;
using testsupport::random_triple;

namespace {

const WeightTriple kDer{1, 1, 1};

QMatrix m2(int a, int b, int c, int d) {
    QMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("is_derivation by direct evaluation") {
    const Algebra l1 = instantiate(ClassId::L1, {Rational(2), Rational(1), std::nullopt});
    CHECK(is_derivation(l1, QMatrix(2, 2), kDer));
    CHECK(is_derivation(l1, m2(1, 1, 0, 0), kDer));
    CHECK_FALSE(is_derivation(l1, QMatrix::identity(2), kDer));

    const Algebra l3 = instantiate(ClassId::L3, {std::nullopt, Rational(1), std::nullopt});
    CHECK_FALSE(is_derivation(l3, QMatrix::identity(2), kDer));

    CHECK_THROWS_AS(is_derivation(l1, QMatrix(3, 3), kDer), ShapeMismatch);
}

TEST_CASE("derivation_system shape and simple instances") {
    const Algebra zero(2);
    const QMatrix sys = derivation_system(zero, kDer);
    CHECK(sys.rows() == 16);
    CHECK(sys.cols() == 4);
    CHECK(sys == QMatrix(16, 4));

    const Algebra l1 = instantiate(ClassId::L1, {Rational(2), Rational(1), std::nullopt});
    CHECK(rref(derivation_system(l1, kDer)).rank == 3);
}

TEST_CASE("derivation_space on frozen examples") {
    const Algebra zero(2);
    const DerivationSpace ends = derivation_space(zero, {0, 0, 0});
    REQUIRE(ends.dim() == 4);
    CHECK(ends.system_rank == 0);
    CHECK(ends.basis[0] == m2(1, 0, 0, 0));
    CHECK(ends.basis[1] == m2(0, 0, 1, 0));
    CHECK(ends.basis[2] == m2(0, 1, 0, 0));
    CHECK(ends.basis[3] == m2(0, 0, 0, 1));
    CHECK(derivation_space(zero, kDer).dim() == 4);

    const Algebra l1 = instantiate(ClassId::L1, {Rational(2), Rational(1), std::nullopt});
    const DerivationSpace d1 = derivation_space(l1, kDer);
    REQUIRE(d1.dim() == 1);
    CHECK(d1.system_rank == 3);
    CHECK(d1.basis[0] == m2(1, 1, 0, 0));

    const Algebra defaults = instantiate(default_sample_params(ClassId::L1));
    const DerivationSpace d3 = derivation_space(defaults, kDer);
    REQUIRE(d3.dim() == 1);
    CHECK(d3.pivot_columns == std::vector<std::size_t>{0, 1, 3});
    QMatrix expected(2, 2);
    expected(0, 0) = Rational(1) / 3;
    expected(0, 1) = 1;
    CHECK(d3.basis[0] == expected);

    const Algebra l6 = instantiate(ClassId::L6, {Rational(3), std::nullopt, std::nullopt});
    const DerivationSpace d2 = derivation_space(l6, {1, 0, 1});
    REQUIRE(d2.dim() == 2);
    CHECK(d2.basis[0] == m2(1, 0, 0, 0));
    CHECK(d2.basis[1] == m2(0, 0, 0, 1));

    const Algebra l1_deg = instantiate(ClassId::L1, {Rational(1), Rational(0), std::nullopt});
    const DerivationSpace d4 = derivation_space(l1_deg, kDer);
    REQUIRE(d4.dim() == 2);
    CHECK(d4.basis[0] == m2(1, 0, 0, 0));
    CHECK(d4.basis[1] == m2(0, 1, 0, 0));
}

TEST_CASE("oracle equivalence on random algebras and triples") {
    const auto pool = random_left_symmetric_pool(12);
    for (const Algebra& alg : pool) {
        const std::size_t n = alg.dim();
        for (int i = 0; i < 3; ++i) {
            const WeightTriple w = random_triple();
            const DerivationSpace space = derivation_space(alg, w);
            CHECK(space.dim() == n * n - space.system_rank);
            for (const QMatrix& d : space.basis) CHECK(is_derivation(alg, d, w));

            // A random matrix outside the membership test maps to a nonzero
            // image under the assembled system.
            const QMatrix candidate = random_matrix(n, -2, 2);
            QVector vec(n * n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) vec[c * n + r] = candidate(r, c);
            const bool member = is_derivation(alg, candidate, w);
            const bool in_kernel = is_zero_vector(derivation_system(alg, w).apply(vec));
            CHECK(member == in_kernel);
        }
    }
}

TEST_CASE("derivation spaces are scaling invariant with identical canonical bases") {
    const auto pool = random_left_symmetric_pool(6);
    for (const Algebra& alg : pool) {
        const WeightTriple w = random_triple();
        const Rational c = random_nonzero_rational(-5, 5, 3);
        const DerivationSpace a = derivation_space(alg, w);
        const DerivationSpace b = derivation_space(alg, {c * w.rho, c * w.tau, c * w.sigma});
        CHECK(a.basis == b.basis);
        CHECK(a.pivot_columns == b.pivot_columns);
    }
}

TEST_CASE("bracket is the matrix commutator") {
    const QMatrix e01 = m2(0, 1, 0, 0);
    const QMatrix e10 = m2(0, 0, 1, 0);
    CHECK(bracket(e01, e10) == m2(1, 0, 0, -1));
    CHECK(bracket(e10, e01) == m2(-1, 0, 0, 1));
    CHECK(bracket(e01, e01) == QMatrix(2, 2));
}

TEST_CASE("bracket closure holds at the squared triple") {
    for (ClassId cls : kAllClasses) {
        const Algebra alg = instantiate(default_sample_params(cls));
        for (WeightFamily family : kCanonicalFamilies) {
            const std::optional<Rational> delta =
                family == WeightFamily::D01Delta ? std::optional<Rational>(7) : std::nullopt;
            const DerivationSpace space = derivation_space(alg, family_triple({family, delta}));
            CHECK(verify_bracket_closure(space));
        }
        CHECK(verify_bracket_closure(derivation_space(alg, {0, 0, 0})));
    }
}

TEST_CASE("solving the literal all-zero triple yields every endomorphism") {
    for (ClassId cls : kAllClasses) {
        const Algebra alg = instantiate(default_sample_params(cls));
        CHECK(derivation_space(alg, {0, 0, 0}).dim() == 4);
    }
    CHECK(derivation_space(Algebra(3), {0, 0, 0}).dim() == 9);
}

#pragma once

#include <cstddef>
#include <vector>

#include "lsdial/derivation.hpp"

namespace lsdial {

// A Lie algebra presented on a concrete matrix basis: [b_i, b_j] =
// sum_k c(i, j, k) b_k with the constants stored flat at (i*m + j)*m + k.
struct LieStructure {
    std::vector<QMatrix> basis;
    std::vector<Rational> constants;

    std::size_t dim() const { return basis.size(); }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t m = dim();
        if (i >= m || j >= m || k >= m)
            throw ShapeMismatch("bracket constant index out of range");
        return constants[(i * m + j) * m + k];
    }
};

// Expresses every pairwise bracket of the basis in basis coordinates via one
// reduction of the augmented matrix [vec(b_1) ... vec(b_m) | vec brackets].
// Throws if some bracket falls outside the span, which happens for weight
// triples whose derivation space is not bracket-closed in itself.
inline LieStructure der_lie_structure(const DerivationSpace& space) {
    const std::vector<QMatrix>& basis = space.basis;
    const std::size_t m = basis.size();
    LieStructure g{basis, std::vector<Rational>(m * m * m, Rational(0))};
    if (m == 0) return g;
    const std::size_t n2 = basis[0].rows() * basis[0].cols();
    QMatrix aug(n2, m + m * m);
    for (std::size_t j = 0; j < m; ++j) {
        const QVector v = detail::vectorize(basis[j]);
        for (std::size_t r = 0; r < n2; ++r) aug(r, j) = v[r];
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const QVector v = detail::vectorize(bracket(basis[i], basis[j]));
            for (std::size_t r = 0; r < n2; ++r) aug(r, m + i * m + j) = v[r];
        }
    const auto res = rref(std::move(aug));
    for (std::size_t p : res.pivot_columns)
        if (p >= m) throw InternalInconsistency("bracket of two basis derivations leaves their span");
    // The basis columns are independent, so the pivots are exactly 0..m-1 and
    // row r of the reduced matrix reads off coordinate r of every bracket.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t r = 0; r < res.rank; ++r)
                g.constants[(i * m + j) * m + r] = res.reduced(r, m + i * m + j);
    return g;
}

// Dimensions of g = g_1 >= [g, g_1] >= [g, g_2] >= ..., recorded until the
// first zero or the first repeat (a repeated nonzero dimension means the
// series has stabilized and will never reach zero).
inline std::vector<std::size_t> lower_central_series(const LieStructure& g) {
    const std::size_t m = g.dim();
    std::vector<std::size_t> dims{m};
    if (m == 0) return dims;
    std::vector<QVector> span;
    for (std::size_t i = 0; i < m; ++i) {
        QVector e(m, Rational(0));
        e[i] = 1;
        span.push_back(std::move(e));
    }
    while (true) {
        QMatrix rows(m * span.size(), m);
        std::size_t row = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (const QVector& v : span) {
                for (std::size_t k = 0; k < m; ++k) {
                    Rational s(0);
                    for (std::size_t j = 0; j < m; ++j)
                        if (v[j] != 0) s = s + v[j] * g.c(i, j, k);
                    rows(row, k) = s;
                }
                ++row;
            }
        const auto res = rref(std::move(rows));
        const std::size_t prev = dims.back();
        dims.push_back(res.rank);
        if (res.rank == 0 || res.rank == prev) return dims;
        span.clear();
        for (std::size_t r = 0; r < res.rank; ++r) {
            QVector v(m);
            for (std::size_t k = 0; k < m; ++k) v[k] = res.reduced(r, k);
            span.push_back(std::move(v));
        }
    }
}

struct NilpotencyReport {
    LieStructure der;
    std::vector<std::size_t> series;
    bool nilpotent = false;
};

// An algebra is characteristically nilpotent when the Lie algebra of its
// (1,1,1)-derivations is nilpotent, i.e. the lower central series hits zero.
inline NilpotencyReport characteristic_nilpotency(const Algebra& a) {
    NilpotencyReport report;
    report.der = der_lie_structure(derivation_space(a, WeightTriple{1, 1, 1}));
    report.series = lower_central_series(report.der);
    report.nilpotent = report.series.back() == 0;
    return report;
}

inline bool is_characteristically_nilpotent(const Algebra& a) {
    return characteristic_nilpotency(a).nilpotent;
}

}  // namespace lsdial

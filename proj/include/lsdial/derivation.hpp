#pragma once

#include <cstddef>
#include <vector>

#include "lsdial/algebra.hpp"
#include "lsdial/matrix.hpp"
#include "lsdial/weights.hpp"

namespace lsdial {

// Membership test by direct evaluation: does D satisfy
//   rho * d(x * y) = tau * d(x) * y + sigma * x * d(y)
// for both products on all basis pairs? Kept free of the linear-system
// assembly below so the two can cross-check each other.
inline bool is_derivation(const Algebra& a, const QMatrix& d, const WeightTriple& w) {
    const std::size_t n = a.dim();
    if (d.rows() != n || d.cols() != n)
        throw ShapeMismatch("derivation check: matrix shape disagrees with algebra dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const QVector ei = basis_vector(n, i);
            const QVector ej = basis_vector(n, j);
            const QVector di = d.column(i);
            const QVector dj = d.column(j);
            for (bool left : {true, false}) {
                auto prod = [&](const QVector& x, const QVector& y) {
                    return left ? product_left(a, x, y) : product_right(a, x, y);
                };
                const QVector lhs = vec_scale(w.rho, d.apply(prod(ei, ej)));
                const QVector rhs =
                    vec_add(vec_scale(w.tau, prod(di, ej)), vec_scale(w.sigma, prod(ei, dj)));
                if (!is_zero_vector(vec_sub(lhs, rhs))) return false;
            }
        }
    return true;
}

// Linear system whose kernel is the space of weighted derivations, in the
// column-major vectorization D[r][c] -> index c*n + r. Rows are indexed by
// (product, i, j, k) as product*n^3 + (i*n + j)*n + k: the e_k component of
// the defining identity on the basis pair (e_i, e_j).
inline QMatrix derivation_system(const Algebra& a, const WeightTriple& w) {
    const std::size_t n = a.dim();
    QMatrix m(2 * n * n * n, n * n);
    for (std::size_t prod = 0; prod < 2; ++prod) {
        auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& {
            return prod == 0 ? a.left(i, j, k) : a.right(i, j, k);
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const std::size_t row = prod * n * n * n + (i * n + j) * n + k;
                    for (std::size_t r = 0; r < n; ++r) {
                        // rho * sum_m C(i,j,m) D[k][m] contributes at D[k][r].
                        m(row, r * n + k) = m(row, r * n + k) + w.rho * c(i, j, r);
                        // -tau * sum_r D[r][i] C(r,j,k) contributes at D[r][i].
                        m(row, i * n + r) = m(row, i * n + r) - w.tau * c(r, j, k);
                        // -sigma * sum_r D[r][j] C(i,r,k) contributes at D[r][j].
                        m(row, j * n + r) = m(row, j * n + r) - w.sigma * c(i, r, k);
                    }
                }
    }
    return m;
}

struct DerivationSpace {
    Algebra algebra;
    WeightTriple triple;
    std::vector<QMatrix> basis;
    std::size_t system_rank = 0;
    std::vector<std::size_t> pivot_columns;

    std::size_t dim() const { return basis.size(); }
};

namespace detail {

inline QMatrix unvectorize(const QVector& v, std::size_t n) {
    QMatrix d(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) d(r, c) = v[c * n + r];
    return d;
}

inline QVector vectorize(const QMatrix& d) {
    const std::size_t n = d.rows();
    QVector v(n * d.cols());
    for (std::size_t c = 0; c < d.cols(); ++c)
        for (std::size_t r = 0; r < n; ++r) v[c * n + r] = d(r, c);
    return v;
}

}  // namespace detail

// Kernel of the derivation system, as a list of basis matrices in the
// canonical echelon order (one per free column, ascending). Every returned
// matrix is re-checked against the direct membership test.
inline DerivationSpace derivation_space(const Algebra& a, const WeightTriple& w) {
    const std::size_t n = a.dim();
    const auto reduced = rref(derivation_system(a, w));
    const std::vector<QVector> kernel = nullspace(reduced);
    DerivationSpace space{a, w, {}, reduced.rank, reduced.pivot_columns};
    space.basis.reserve(kernel.size());
    for (const QVector& v : kernel) {
        QMatrix d = detail::unvectorize(v, n);
        if (!is_derivation(a, d, w))
            throw InternalInconsistency("kernel vector fails the direct derivation check");
        space.basis.push_back(std::move(d));
    }
    return space;
}

inline QMatrix bracket(const QMatrix& a, const QMatrix& b) {
    return a * b - b * a;
}

// Brackets of weighted derivations land in the space for the componentwise
// squared weight triple; verify that on every basis pair.
inline bool verify_bracket_closure(const DerivationSpace& space) {
    const WeightTriple squared{space.triple.rho * space.triple.rho,
                               space.triple.tau * space.triple.tau,
                               space.triple.sigma * space.triple.sigma};
    for (std::size_t i = 0; i < space.basis.size(); ++i)
        for (std::size_t j = i + 1; j < space.basis.size(); ++j)
            if (!is_derivation(space.algebra, bracket(space.basis[i], space.basis[j]), squared))
                return false;
    return true;
}

}  // namespace lsdial

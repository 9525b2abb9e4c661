#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lsdial/matrix.hpp"

namespace lsdial {

// Finite-dimensional vector space carrying two bilinear products, described
// by structure constants: left(i, j, k) is the e_k coefficient of the left
// product of e_i and e_j, likewise right(i, j, k). Indices are 0-based in
// code; reports and file formats use 1-based basis labels.
class Algebra {
  public:
    explicit Algebra(std::size_t dim)
        : dim_(dim), left_(dim * dim * dim, Rational(0)), right_(dim * dim * dim, Rational(0)) {
        if (dim == 0) throw ShapeMismatch("algebra dimension must be positive");
    }

    // Both products equal to the given single product (constants flat, dim^3,
    // index (i*dim + j)*dim + k). Turns a one-product algebra into a
    // two-product one without changing any products.
    static Algebra from_single_product(std::size_t dim, const std::vector<Rational>& constants) {
        Algebra a(dim);
        if (constants.size() != dim * dim * dim)
            throw ShapeMismatch("single product constants: expected dim^3 entries");
        a.left_ = constants;
        a.right_ = constants;
        return a;
    }

    std::size_t dim() const { return dim_; }

    const Rational& left(std::size_t i, std::size_t j, std::size_t k) const {
        return left_[index(i, j, k)];
    }
    const Rational& right(std::size_t i, std::size_t j, std::size_t k) const {
        return right_[index(i, j, k)];
    }
    void set_left(std::size_t i, std::size_t j, std::size_t k, Rational v) {
        left_[index(i, j, k)] = std::move(v);
    }
    void set_right(std::size_t i, std::size_t j, std::size_t k, Rational v) {
        right_[index(i, j, k)] = std::move(v);
    }

    bool operator==(const Algebra&) const = default;

  private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_)
            throw ShapeMismatch("structure constant index out of range");
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_;
    std::vector<Rational> left_;
    std::vector<Rational> right_;
};

namespace detail {

inline QVector product(const Algebra& a, bool left, const QVector& x, const QVector& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n)
        throw ShapeMismatch("product: coordinate length disagrees with algebra dimension");
    QVector out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            const Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = left ? a.left(i, j, k) : a.right(i, j, k);
                if (c != 0) out[k] = out[k] + f * c;
            }
        }
    }
    return out;
}

}  // namespace detail

inline QVector product_left(const Algebra& a, const QVector& x, const QVector& y) {
    return detail::product(a, true, x, y);
}

inline QVector product_right(const Algebra& a, const QVector& x, const QVector& y) {
    return detail::product(a, false, x, y);
}

inline QVector basis_vector(std::size_t dim, std::size_t i) {
    QVector v(dim, Rational(0));
    v[i] = 1;
    return v;
}

enum class AxiomId { LS1, LS2, LS3, LS4, DI1, DI2, DI3, AssocLeft, AssocRight };

inline const char* axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::LS1: return "LS1";
        case AxiomId::LS2: return "LS2";
        case AxiomId::LS3: return "LS3";
        case AxiomId::LS4: return "LS4";
        case AxiomId::DI1: return "DI1";
        case AxiomId::DI2: return "DI2";
        case AxiomId::DI3: return "DI3";
        case AxiomId::AssocLeft: return "ASSOC-L";
        case AxiomId::AssocRight: return "ASSOC-R";
    }
    return "?";
}

struct Violation {
    AxiomId axiom;
    std::array<std::size_t, 3> triple;  // 1-based basis indices (p, q, r)
    QVector residual;                   // left side minus right side
};

struct AxiomReport {
    bool satisfied = true;
    std::vector<Violation> violations;
};

namespace detail {

// Residual of one axiom instance on basis vectors, as left side minus right
// side of the defining identity.
inline QVector axiom_residual(const Algebra& a, AxiomId id, const QVector& p, const QVector& q,
                              const QVector& r) {
    auto L = [&](const QVector& x, const QVector& y) { return product_left(a, x, y); };
    auto R = [&](const QVector& x, const QVector& y) { return product_right(a, x, y); };
    switch (id) {
        case AxiomId::LS1:
            return vec_sub(L(p, L(q, r)), L(p, R(q, r)));
        case AxiomId::LS2:
            return vec_sub(R(R(p, q), r), R(L(p, q), r));
        case AxiomId::LS3:
            return vec_sub(vec_sub(L(p, L(q, r)), L(L(p, q), r)),
                           vec_sub(R(q, L(p, r)), L(R(q, p), r)));
        case AxiomId::LS4:
            return vec_sub(vec_sub(R(p, R(q, r)), R(R(p, q), r)),
                           vec_sub(R(q, R(p, r)), R(R(q, p), r)));
        case AxiomId::DI1:
            return vec_sub(L(p, L(q, r)), L(p, R(q, r)));
        case AxiomId::DI2:
            return vec_sub(L(R(p, q), r), R(p, L(q, r)));
        case AxiomId::DI3:
            return vec_sub(R(R(p, q), r), R(L(p, q), r));
        case AxiomId::AssocLeft:
            return vec_sub(L(L(p, q), r), L(p, L(q, r)));
        case AxiomId::AssocRight:
            return vec_sub(R(R(p, q), r), R(p, R(q, r)));
    }
    throw InternalInconsistency("unknown axiom id");
}

template <std::size_t N>
AxiomReport check_axioms(const Algebra& a, const std::array<AxiomId, N>& axioms) {
    const std::size_t n = a.dim();
    AxiomReport report;
    std::vector<QVector> e;
    e.reserve(n);
    for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vector(n, i));
    for (AxiomId id : axioms)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t r = 0; r < n; ++r) {
                    QVector res = axiom_residual(a, id, e[p], e[q], e[r]);
                    if (!is_zero_vector(res))
                        report.violations.push_back({id, {p + 1, q + 1, r + 1}, std::move(res)});
                }
    report.satisfied = report.violations.empty();
    return report;
}

}  // namespace detail

inline AxiomReport check_left_symmetric(const Algebra& a) {
    return detail::check_axioms(
        a, std::array{AxiomId::LS1, AxiomId::LS2, AxiomId::LS3, AxiomId::LS4});
}

inline AxiomReport check_diassociative(const Algebra& a) {
    return detail::check_axioms(a, std::array{AxiomId::DI1, AxiomId::DI2, AxiomId::DI3,
                                              AxiomId::AssocLeft, AxiomId::AssocRight});
}

// Transports both products along the invertible linear map with matrix P
// (column convention), so the result B satisfies is_morphism(a, B, P) and a
// weighted derivation D of a corresponds to P D P^-1 on B.
inline Algebra change_basis(const Algebra& a, const QMatrix& P) {
    const std::size_t n = a.dim();
    if (P.rows() != n || P.cols() != n)
        throw ShapeMismatch("change of basis: matrix shape disagrees with algebra dimension");
    const QMatrix Pinv = invert(P);
    Algebra out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Image under P of the product of the P^-1 preimages of e_i, e_j.
            QVector x = Pinv.column(i);
            QVector y = Pinv.column(j);
            QVector l = P.apply(product_left(a, x, y));
            QVector r = P.apply(product_right(a, x, y));
            for (std::size_t k = 0; k < n; ++k) {
                out.set_left(i, j, k, l[k]);
                out.set_right(i, j, k, r[k]);
            }
        }
    return out;
}

// Does the linear map with matrix P (shape dst.dim x src.dim, column
// convention) intertwine both products on all basis pairs?
inline bool is_morphism(const Algebra& src, const Algebra& dst, const QMatrix& P) {
    const std::size_t n = src.dim();
    if (P.rows() != dst.dim() || P.cols() != n)
        throw ShapeMismatch("morphism check: matrix shape disagrees with dimensions");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            QVector ei = basis_vector(n, i);
            QVector ej = basis_vector(n, j);
            QVector pi = P.apply(ei);
            QVector pj = P.apply(ej);
            if (!is_zero_vector(
                    vec_sub(P.apply(product_left(src, ei, ej)), product_left(dst, pi, pj))))
                return false;
            if (!is_zero_vector(
                    vec_sub(P.apply(product_right(src, ei, ej)), product_right(dst, pi, pj))))
                return false;
        }
    return true;
}

}  // namespace lsdial

#pragma once

// Shared helpers for the test binaries: deterministic random generators for
// rationals, matrices, constrained class parameters, and a pool of random
// left-symmetric algebras, plus a subprocess driver for the built CLI.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <lsdial/lsdial.hpp>

namespace testsupport {

using namespace lsdial;

inline std::mt19937& rng() {
    static std::mt19937 gen(20240817u);
    return gen;
}

inline int random_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Rational random_rational(int lo, int hi, int max_den = 3) {
    return Rational(random_int(lo, hi)) / Rational(random_int(1, max_den));
}

inline Rational random_nonzero_rational(int lo, int hi, int max_den = 3) {
    while (true) {
        Rational r = random_rational(lo, hi, max_den);
        if (r != 0) return r;
    }
}

inline QMatrix random_matrix(std::size_t n, int lo, int hi) {
    QMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_int(lo, hi);
    return m;
}

inline QMatrix random_invertible(std::size_t n, int lo, int hi) {
    while (true) {
        QMatrix m = random_matrix(n, lo, hi);
        if (rref(m).rank == n) return m;
    }
}

// Constrained parameters for one class, drawn from small rationals.
inline ClassParams random_constrained_params(ClassId cls) {
    const ParamUse use = class_params_used(cls);
    ClassParams p;
    if (use.a) {
        Rational a = random_rational(-4, 4, 2);
        if (cls == ClassId::L1 || cls == ClassId::L6)
            while (a == 0) a = random_rational(-4, 4, 2);
        if (cls == ClassId::L5)
            while (a == 1) a = random_rational(-4, 4, 2);
        p.a = a;
    }
    if (use.b) p.b = random_rational(-4, 4, 2);
    if (use.c) {
        Rational c = random_rational(-4, 4, 2);
        if (cls == ClassId::L2)
            while (c == 0) c = random_rational(-4, 4, 2);
        p.c = c;
    }
    return p;
}

// Single associative products to lift into two-product algebras: truncated
// polynomial multiplication on the basis 1, x, ..., x^(n-1).
inline std::vector<Rational> truncated_polynomial_product(std::size_t n) {
    std::vector<Rational> c(n * n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) c[(i * n + j) * n + i + j] = 1;
    return c;
}

// A left-symmetric but non-associative single product on two basis vectors:
// e2*e1 = 2 e1, e2*e2 = e1 + e2.
inline std::vector<Rational> pre_lie_product_2d() {
    std::vector<Rational> c(8, Rational(0));
    c[(1 * 2 + 0) * 2 + 0] = 2;
    c[(1 * 2 + 1) * 2 + 0] = 1;
    c[(1 * 2 + 1) * 2 + 1] = 1;
    return c;
}

// Deterministic pool of left-symmetric algebras: catalog members at random
// constrained parameters, lifts of single products (scaled), basis-changed
// copies, and rejection-sampled single-entry perturbations. Every member is
// re-verified against the axiom checker before being admitted.
inline std::vector<Algebra> random_left_symmetric_pool(std::size_t count) {
    std::vector<Algebra> pool;
    pool.reserve(count);
    auto admit = [&](const Algebra& a) {
        if (check_left_symmetric(a).satisfied) pool.push_back(a);
    };
    while (pool.size() < count) {
        switch (pool.empty() ? 0 : random_int(0, 3)) {
            case 0: {
                const ClassId cls = kAllClasses[static_cast<std::size_t>(random_int(0, 5))];
                admit(instantiate(cls, random_constrained_params(cls)));
                break;
            }
            case 1: {
                const std::size_t n = static_cast<std::size_t>(random_int(2, 3));
                std::vector<Rational> c =
                    n == 2 && random_int(0, 1) == 0 ? pre_lie_product_2d()
                                                    : truncated_polynomial_product(n);
                const Rational s = random_nonzero_rational(-2, 2, 2);
                for (Rational& v : c) v = v * s;
                admit(Algebra::from_single_product(n, c));
                break;
            }
            case 2: {
                const Algebra& base = pool[static_cast<std::size_t>(
                    random_int(0, static_cast<int>(pool.size()) - 1))];
                admit(change_basis(base, random_invertible(base.dim(), -2, 2)));
                break;
            }
            default: {
                Algebra a = pool[static_cast<std::size_t>(
                    random_int(0, static_cast<int>(pool.size()) - 1))];
                const std::size_t n = a.dim();
                const std::size_t i = static_cast<std::size_t>(random_int(0, int(n) - 1));
                const std::size_t j = static_cast<std::size_t>(random_int(0, int(n) - 1));
                const std::size_t k = static_cast<std::size_t>(random_int(0, int(n) - 1));
                const Rational v = random_rational(-2, 2, 2);
                if (random_int(0, 1) == 0)
                    a.set_left(i, j, k, v);
                else
                    a.set_right(i, j, k, v);
                admit(a);
                break;
            }
        }
    }
    return pool;
}

inline WeightTriple random_triple(int lo = -3, int hi = 3) {
    return {random_rational(lo, hi, 2), random_rational(lo, hi, 2), random_rational(lo, hi, 2)};
}

inline std::string write_temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/lsdial_test_") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

#ifdef LSDIAL_CLI_PATH

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    return q + "'";
}

// Runs the built binary with the given arguments, capturing stdout, stderr,
// and the exit status.
inline CliResult run_cli(const std::vector<std::string>& args) {
    static int counter = 0;
    const std::string err_path = "/tmp/lsdial_test_stderr_" + std::to_string(counter++);
    std::string cmd = shell_quote(LSDIAL_CLI_PATH);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>" + shell_quote(err_path);
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_path, std::ios::binary);
    std::ostringstream err_buf;
    err_buf << err.rdbuf();
    result.err = err_buf.str();
    std::remove(err_path.c_str());
    return result;
}

#endif  // LSDIAL_CLI_PATH

}  // namespace testsupport

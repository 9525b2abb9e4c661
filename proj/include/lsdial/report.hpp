#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lsdial/catalog.hpp"
#include "lsdial/derivation.hpp"
#include "lsdial/weights.hpp"

namespace lsdial {

inline std::string format_triple(const WeightTriple& w) {
    return "(" + format_rational(w.rho) + ", " + format_rational(w.tau) + ", " +
           format_rational(w.sigma) + ")";
}

// Row-major one-line rendering, e.g. [[1/3, 1], [0, 0]].
inline std::string format_matrix(const QMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : ", [";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ", ";
            out += format_rational(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

inline nlohmann::ordered_json matrix_to_json(const QMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

enum class OutputFormat { Markdown, Csv, Json };

inline OutputFormat parse_output_format(std::string_view text) {
    if (text == "md") return OutputFormat::Markdown;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw ParseError("unknown output format '" + std::string(text) +
                     "' (expected md, csv, or json)");
}

struct RankCertificate {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

struct TableRow {
    ClassId cls;
    ClassParams params;
    WeightFamily family;
    std::optional<Rational> delta;
    WeightTriple solved;
    std::size_t computed_dim = 0;
    std::size_t expected_dim = 0;
    bool match = false;
    std::vector<QMatrix> basis;
    RankCertificate certificate;
    bool oracle_ok = false;
    std::string note;
};

struct TableReport {
    std::vector<TableRow> rows;
    Rational delta;
    Rho0Sign rho0_sign = Rho0Sign::Ratio;
    bool self_consistent = false;
};

struct TableOptions {
    std::optional<ClassId> only_class;
    ClassParams params_override;
    Rational delta{7};
    Rho0Sign rho0_sign = Rho0Sign::Ratio;
};

namespace detail {

inline ClassParams effective_params(ClassId cls, const ClassParams& override_params) {
    ClassParams p = default_sample_params(cls).params;
    const ParamUse use = class_params_used(cls);
    if (use.a && override_params.a) p.a = override_params.a;
    if (use.b && override_params.b) p.b = override_params.b;
    if (use.c && override_params.c) p.c = override_params.c;
    return p;
}

}  // namespace detail

// One row per (class, family) at the given or default parameters: solve,
// compare with the bundled reference dimension, and attach the evidence a
// reader needs to re-check the cell by hand (basis matrices plus the rank
// certificate of the assembled system).
inline TableReport build_table(const TableOptions& options) {
    TableReport report;
    report.delta = options.delta;
    report.rho0_sign = options.rho0_sign;
    report.self_consistent = true;
    for (ClassId cls : kAllClasses) {
        if (options.only_class && *options.only_class != cls) continue;
        const ClassParams params = detail::effective_params(cls, options.params_override);
        const Algebra alg = instantiate(cls, params);
        for (WeightFamily family : kCanonicalFamilies) {
            TableRow row;
            row.cls = cls;
            row.params = params;
            row.family = family;
            if (family == WeightFamily::D01Delta) row.delta = options.delta;
            row.solved = family_triple({family, row.delta}, options.rho0_sign);
            DerivationSpace space = derivation_space(alg, row.solved);
            row.computed_dim = space.dim();
            row.expected_dim = expected_dimension(cls, family);
            row.match = row.computed_dim == row.expected_dim;
            row.basis = std::move(space.basis);
            row.certificate = {space.system_rank, space.pivot_columns};
            row.oracle_ok = true;
            for (const QMatrix& d : row.basis)
                if (!is_derivation(alg, d, row.solved)) row.oracle_ok = false;
            const std::size_t n = alg.dim();
            if (!row.oracle_ok || row.computed_dim != n * n - space.system_rank)
                report.self_consistent = false;
            if (const char* note = reference_note(cls, family)) row.note = note;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

inline std::vector<std::size_t> errata_rows(const TableReport& report) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < report.rows.size(); ++i)
        if (!report.rows[i].match) out.push_back(i);
    return out;
}

namespace detail {

inline std::string param_cell(const std::optional<Rational>& v) {
    return v ? format_rational(*v) : "";
}

inline std::string params_inline(const ClassParams& p) {
    std::string out;
    auto add = [&](const char* name, const std::optional<Rational>& v) {
        if (!v) return;
        if (!out.empty()) out += ", ";
        out += std::string(name) + "=" + format_rational(*v);
    };
    add("a", p.a);
    add("b", p.b);
    add("c", p.c);
    return out;
}

inline std::string join_indices(const std::vector<std::size_t>& xs, std::size_t offset) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(xs[i] + offset);
    }
    return out;
}

inline std::string render_table_markdown(const TableReport& report) {
    std::ostringstream out;
    out << "# Weighted derivation dimensions\n\n";
    out << "Solved with delta = " << format_rational(report.delta)
        << ", rho0 sign convention = " << rho0_sign_name(report.rho0_sign) << ".\n\n";
    out << "| class | params | family | solved triple | computed dim | expected dim | match | "
           "basis |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const TableRow& row : report.rows) {
        out << "| " << class_name(row.cls) << " | " << params_inline(row.params) << " | "
            << family_name(row.family) << " | " << format_triple(row.solved) << " | "
            << row.computed_dim << " | " << row.expected_dim << " | "
            << (row.match ? "yes" : "NO") << " | ";
        if (row.basis.empty()) {
            out << "-";
        } else {
            for (std::size_t i = 0; i < row.basis.size(); ++i) {
                if (i > 0) out << "; ";
                out << format_matrix(row.basis[i]);
            }
        }
        out << " |\n";
    }
    const std::vector<std::size_t> errata = errata_rows(report);
    out << "\n## Mismatches against the reference dimensions\n\n";
    if (errata.empty()) {
        out << "None.\n";
    } else {
        for (std::size_t idx : errata) {
            const TableRow& row = report.rows[idx];
            out << "- " << class_name(row.cls) << " (" << params_inline(row.params) << ") at "
                << family_name(row.family) << " " << format_triple(row.solved) << ": computed "
                << row.computed_dim << ", reference " << row.expected_dim << ". ";
            if (row.computed_dim > row.expected_dim) {
                out << "Witness basis, each matrix passing the membership check:";
                for (const QMatrix& d : row.basis) out << " " << format_matrix(d);
                out << ".";
            } else {
                out << "Rank certificate: the solved system has rank " << row.certificate.rank
                    << " with pivot columns " << join_indices(row.certificate.pivot_columns, 1)
                    << " (1-based), leaving " << row.computed_dim
                    << (row.computed_dim == 1 ? " free column." : " free columns.");
            }
            if (!row.note.empty()) out << " Note: " << row.note << ".";
            out << "\n";
        }
    }
    out << "\nSolver self-consistency: " << (report.self_consistent ? "OK" : "FAILED") << ".\n";
    return out.str();
}

inline std::string render_table_csv(const TableReport& report) {
    std::ostringstream out;
    out << "class,a,b,c,family,delta,computed_dim,expected_dim,match\n";
    for (const TableRow& row : report.rows) {
        out << class_name(row.cls) << "," << param_cell(row.params.a) << ","
            << param_cell(row.params.b) << "," << param_cell(row.params.c) << ","
            << family_tag(row.family) << "," << (row.delta ? format_rational(*row.delta) : "")
            << "," << row.computed_dim << "," << row.expected_dim << ","
            << (row.match ? "true" : "false") << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json params_to_json(const ClassParams& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    if (p.a) out["a"] = format_rational(*p.a);
    if (p.b) out["b"] = format_rational(*p.b);
    if (p.c) out["c"] = format_rational(*p.c);
    return out;
}

inline std::string render_table_json(const TableReport& report) {
    nlohmann::ordered_json doc;
    doc["delta"] = format_rational(report.delta);
    doc["rho0_sign"] = rho0_sign_name(report.rho0_sign);
    doc["self_consistent"] = report.self_consistent;
    auto rows = nlohmann::ordered_json::array();
    for (const TableRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["class"] = class_name(row.cls);
        r["params"] = params_to_json(row.params);
        r["family"] = family_tag(row.family);
        if (row.delta)
            r["delta"] = format_rational(*row.delta);
        else
            r["delta"] = nullptr;
        r["solved"] = nlohmann::ordered_json::array(
            {format_rational(row.solved.rho), format_rational(row.solved.tau),
             format_rational(row.solved.sigma)});
        r["computed_dim"] = row.computed_dim;
        r["expected_dim"] = row.expected_dim;
        r["match"] = row.match;
        r["system_rank"] = row.certificate.rank;
        r["pivot_columns"] = row.certificate.pivot_columns;
        auto basis = nlohmann::ordered_json::array();
        for (const QMatrix& d : row.basis) basis.push_back(matrix_to_json(d));
        r["basis"] = std::move(basis);
        r["note"] = row.note;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    doc["errata"] = errata_rows(report);
    return doc.dump(2) + "\n";
}

}  // namespace detail

inline std::string render_table(const TableReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Markdown: return detail::render_table_markdown(report);
        case OutputFormat::Csv: return detail::render_table_csv(report);
        case OutputFormat::Json: return detail::render_table_json(report);
    }
    throw InternalInconsistency("unknown output format");
}

struct SweepOptions {
    ClassId cls = ClassId::L1;
    std::vector<Rational> a;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<WeightFamily> families{kCanonicalFamilies.begin(), kCanonicalFamilies.end()};
    Rational delta{7};
    Rho0Sign rho0_sign = Rho0Sign::Ratio;
};

struct SweepRow {
    ClassParams params;
    WeightFamily family;
    std::optional<Rational> delta;
    std::size_t computed_dim = 0;
    std::size_t expected_dim = 0;
    bool match = false;
};

struct SweepSkip {
    ClassParams params;
    std::string reason;
};

struct SweepResult {
    ClassId cls = ClassId::L1;
    std::vector<SweepRow> rows;
    std::vector<SweepSkip> skipped;
};

// Grid evaluation over parameter axes. Unused axes must stay empty; grid
// points violating a class constraint are recorded as skips, not errors.
// Axes the class uses but the grid omits fall back to the sample defaults.
inline SweepResult build_sweep(const SweepOptions& options) {
    const ParamUse use = class_params_used(options.cls);
    auto check_axis = [&](bool used, const std::vector<Rational>& axis, const char* name) {
        if (!used && !axis.empty())
            throw ConstraintViolation(std::string(class_name(options.cls)) +
                                      " does not take parameter " + name);
    };
    check_axis(use.a, options.a, "a");
    check_axis(use.b, options.b, "b");
    check_axis(use.c, options.c, "c");
    const ClassParams defaults = default_sample_params(options.cls).params;
    auto axis_or_default = [](bool used, const std::vector<Rational>& axis,
                              const std::optional<Rational>& fallback) {
        std::vector<std::optional<Rational>> out;
        if (!used) {
            out.push_back(std::nullopt);
        } else if (axis.empty()) {
            out.push_back(fallback);
        } else {
            for (const Rational& v : axis) out.push_back(v);
        }
        return out;
    };
    const auto as = axis_or_default(use.a, options.a, defaults.a);
    const auto bs = axis_or_default(use.b, options.b, defaults.b);
    const auto cs = axis_or_default(use.c, options.c, defaults.c);
    SweepResult result;
    result.cls = options.cls;
    for (const auto& av : as)
        for (const auto& bv : bs)
            for (const auto& cv : cs) {
                const ClassParams params{av, bv, cv};
                Algebra alg(1);
                try {
                    alg = instantiate(options.cls, params);
                } catch (const ConstraintViolation& e) {
                    result.skipped.push_back({params, e.what()});
                    continue;
                }
                for (WeightFamily family : options.families) {
                    SweepRow row;
                    row.params = params;
                    row.family = family;
                    if (family == WeightFamily::D01Delta) row.delta = options.delta;
                    const WeightTriple solved = family_triple({family, row.delta},
                                                              options.rho0_sign);
                    row.computed_dim = derivation_space(alg, solved).dim();
                    row.expected_dim = expected_dimension(options.cls, family);
                    row.match = row.computed_dim == row.expected_dim;
                    result.rows.push_back(std::move(row));
                }
            }
    return result;
}

inline std::string render_sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "class,a,b,c,family,delta,computed_dim,expected_dim,match\n";
    for (const SweepRow& row : result.rows) {
        out << class_name(result.cls) << "," << detail::param_cell(row.params.a) << ","
            << detail::param_cell(row.params.b) << "," << detail::param_cell(row.params.c) << ","
            << family_tag(row.family) << "," << (row.delta ? format_rational(*row.delta) : "")
            << "," << row.computed_dim << "," << row.expected_dim << ","
            << (row.match ? "true" : "false") << "\n";
    }
    return out.str();
}

}  // namespace lsdial

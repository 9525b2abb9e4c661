// Command-line front end: axiom checks, weighted derivation solves, the
// class-by-family dimension table with mismatch evidence, weight triple
// canonicalization, characteristic nilpotency, and parameter sweeps.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lsdial/lsdial.hpp>

namespace {

using namespace lsdial;

// Algebra source shared by check/derive/nilpotent: a JSON file or a catalog
// class with optional parameter overrides.
struct SourceFlags {
    std::string file;
    std::string cls;
    std::string a;
    std::string b;
    std::string c;
};

void add_source_flags(CLI::App* cmd, SourceFlags& s) {
    cmd->add_option("--file", s.file, "algebra JSON file");
    cmd->add_option("--class", s.cls, "catalog class L1..L6");
    cmd->add_option("--a", s.a, "class parameter a (rational)");
    cmd->add_option("--b", s.b, "class parameter b (rational)");
    cmd->add_option("--c", s.c, "class parameter c (rational)");
}

ClassParams parse_param_overrides(ClassId id, const std::string& a, const std::string& b,
                                  const std::string& c) {
    const ParamUse use = class_params_used(id);
    ClassParams given;
    auto take = [&](const std::string& text, bool used, const char* name,
                    std::optional<Rational>& slot) {
        if (text.empty()) return;
        if (!used)
            throw ConstraintViolation(std::string(class_name(id)) + " does not take parameter " +
                                      name);
        slot = parse_rational(text);
    };
    take(a, use.a, "a", given.a);
    take(b, use.b, "b", given.b);
    take(c, use.c, "c", given.c);
    return given;
}

std::pair<Algebra, ClassParams> resolve_algebra(const SourceFlags& s) {
    if (!s.file.empty() && !s.cls.empty())
        throw ParseError("give either --file or --class, not both");
    if (!s.file.empty()) {
        if (!s.a.empty() || !s.b.empty() || !s.c.empty())
            throw ParseError("--a/--b/--c apply only with --class");
        return {load_algebra_file(s.file), {}};
    }
    if (s.cls.empty())
        throw ParseError("an algebra source is required: --file PATH or --class L1..L6");
    const ClassId id = parse_class_id(s.cls);
    const ClassParams given = parse_param_overrides(id, s.a, s.b, s.c);
    const ClassParams params = detail::effective_params(id, given);
    return {instantiate(id, params), params};
}

std::vector<Rational> parse_axis(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<WeightFamily> parse_family_list(const std::string& text) {
    std::vector<WeightFamily> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const WeightFamily f = parse_family_tag(text.substr(start, comma - start));
        if (f == WeightFamily::EndS)
            throw ParseError("family 'ends' has no defining equations; solve the all-zero "
                             "triple with --rho 0 --tau 0 --sigma 0 instead");
        out.push_back(f);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + out_path + "'");
    out << text;
}

void print_axiom_block(const char* label, const AxiomReport& report) {
    if (report.satisfied) {
        std::cout << label << ": OK\n";
        return;
    }
    std::cout << label << ": " << report.violations.size()
              << (report.violations.size() == 1 ? " violation" : " violations") << "\n";
    for (const Violation& v : report.violations) {
        std::cout << "  " << axiom_name(v.axiom) << " at (" << v.triple[0] << ", " << v.triple[1]
                  << ", " << v.triple[2] << "): residual (";
        for (std::size_t i = 0; i < v.residual.size(); ++i) {
            if (i > 0) std::cout << ", ";
            std::cout << format_rational(v.residual[i]);
        }
        std::cout << ")\n";
    }
}

int cmd_check(const SourceFlags& source) {
    const Algebra alg = resolve_algebra(source).first;
    const AxiomReport ls = check_left_symmetric(alg);
    const AxiomReport di = check_diassociative(alg);
    print_axiom_block("left-symmetric", ls);
    print_axiom_block("diassociative", di);
    return ls.satisfied ? 0 : 1;
}

struct DeriveFlags {
    SourceFlags source;
    std::string family;
    std::string delta;
    std::string rho;
    std::string tau;
    std::string sigma;
    std::string rho0_sign = "ratio";
    std::string format = "md";
    std::string out;
};

int cmd_derive(const DeriveFlags& flags) {
    const Algebra alg = resolve_algebra(flags.source).first;
    const bool by_family = !flags.family.empty();
    const bool by_triple = !flags.rho.empty() || !flags.tau.empty() || !flags.sigma.empty();
    if (by_family == by_triple)
        throw ParseError("give exactly one of --family TAG or all of --rho/--tau/--sigma");

    WeightTriple triple;
    WeightFamily family = WeightFamily::EndS;
    std::optional<Rational> delta;
    if (by_family) {
        family = parse_family_tag(flags.family);
        if (family == WeightFamily::EndS)
            throw ParseError("family 'ends' has no defining equations; solve the all-zero "
                             "triple with --rho 0 --tau 0 --sigma 0 instead");
        if (family == WeightFamily::D01Delta) {
            if (flags.delta.empty()) throw BadDelta("family 01d requires --delta");
            delta = parse_rational(flags.delta);
        } else if (!flags.delta.empty()) {
            throw ParseError("--delta applies only to family 01d");
        }
        triple = family_triple({family, delta}, parse_rho0_sign(flags.rho0_sign));
    } else {
        if (flags.rho.empty() || flags.tau.empty() || flags.sigma.empty())
            throw ParseError("raw triples need all of --rho, --tau, --sigma");
        triple = {parse_rational(flags.rho), parse_rational(flags.tau),
                  parse_rational(flags.sigma)};
        const CanonicalWeightClass canon = canonicalize_triple(triple);
        family = canon.family;
        delta = canon.delta;
    }

    const DerivationSpace space = derivation_space(alg, triple);
    const OutputFormat format = parse_output_format(flags.format);
    std::ostringstream text;
    if (format == OutputFormat::Markdown) {
        text << "triple: " << format_triple(triple) << "\n";
        text << "family: " << family_name(family) << "\n";
        if (delta) text << "delta: " << format_rational(*delta) << "\n";
        text << "dim: " << space.dim() << "\n";
        text << "system rank: " << space.system_rank << "\n";
        text << "pivot columns (1-based): " << detail::join_indices(space.pivot_columns, 1)
             << "\n";
        if (space.basis.empty()) {
            text << "basis: none\n";
        } else {
            text << "basis:\n";
            for (const QMatrix& d : space.basis) text << "  " << format_matrix(d) << "\n";
        }
    } else if (format == OutputFormat::Json) {
        nlohmann::ordered_json doc;
        doc["triple"] = nlohmann::ordered_json::array({format_rational(triple.rho),
                                                       format_rational(triple.tau),
                                                       format_rational(triple.sigma)});
        doc["family"] = family_tag(family);
        if (delta)
            doc["delta"] = format_rational(*delta);
        else
            doc["delta"] = nullptr;
        doc["dim"] = space.dim();
        doc["system_rank"] = space.system_rank;
        doc["pivot_columns"] = space.pivot_columns;
        auto basis = nlohmann::ordered_json::array();
        for (const QMatrix& d : space.basis) basis.push_back(matrix_to_json(d));
        doc["basis"] = std::move(basis);
        text << doc.dump(2) << "\n";
    } else {
        throw ParseError("derive supports md and json output");
    }
    emit(text.str(), flags.out);
    return 0;
}

struct TableFlags {
    std::string cls;
    std::string a;
    std::string b;
    std::string c;
    std::string delta = "7";
    std::string rho0_sign = "ratio";
    std::string format = "md";
    std::string out;
};

int cmd_table(const TableFlags& flags) {
    TableOptions options;
    if (!flags.cls.empty()) options.only_class = parse_class_id(flags.cls);
    if (options.only_class) {
        options.params_override =
            parse_param_overrides(*options.only_class, flags.a, flags.b, flags.c);
    } else {
        if (!flags.a.empty()) options.params_override.a = parse_rational(flags.a);
        if (!flags.b.empty()) options.params_override.b = parse_rational(flags.b);
        if (!flags.c.empty()) options.params_override.c = parse_rational(flags.c);
    }
    options.delta = parse_rational(flags.delta);
    options.rho0_sign = parse_rho0_sign(flags.rho0_sign);
    const TableReport report = build_table(options);
    emit(render_table(report, parse_output_format(flags.format)), flags.out);
    return report.self_consistent ? 0 : 1;
}

struct CanonFlags {
    std::string rho;
    std::string tau;
    std::string sigma;
    std::string rho0_sign = "ratio";
};

int cmd_canon(const CanonFlags& flags) {
    const WeightTriple triple{parse_rational(flags.rho), parse_rational(flags.tau),
                              parse_rational(flags.sigma)};
    const CanonicalWeightClass canon = canonicalize_triple(triple);
    std::cout << "family: " << family_name(canon.family) << "\n";
    if (canon.delta) std::cout << "delta: " << format_rational(*canon.delta) << "\n";
    if (canon.family == WeightFamily::EndS) {
        std::cout << "note: every linear map satisfies the all-zero weight equations\n";
        return 0;
    }
    if (triple.rho == 0) {
        const WeightTriple realizing =
            family_triple(canon, parse_rho0_sign(flags.rho0_sign));
        std::cout << "realizing triple: " << format_triple(realizing) << "\n";
    }
    return 0;
}

std::string format_bracket_combo(const LieStructure& g, std::size_t i, std::size_t j) {
    std::string out;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational& c = g.c(i, j, k);
        if (c == 0) continue;
        std::string term;
        if (c == 1)
            term = "";
        else if (c == -1)
            term = "-";
        else
            term = format_rational(c) + "*";
        term += "b" + std::to_string(k + 1);
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

int cmd_nilpotent(const SourceFlags& source) {
    const Algebra alg = resolve_algebra(source).first;
    const NilpotencyReport report = characteristic_nilpotency(alg);
    const std::size_t m = report.der.dim();
    std::cout << "Der dim: " << m << "\n";
    std::string brackets;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::string combo = format_bracket_combo(report.der, i, j);
            if (combo.empty()) continue;
            if (!brackets.empty()) brackets += "; ";
            brackets += "[b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) +
                        "] = " + combo;
        }
    if (m == 0)
        std::cout << "bracket: trivial\n";
    else if (brackets.empty())
        std::cout << "bracket: abelian\n";
    else
        std::cout << "bracket: " << brackets << "\n";
    std::cout << "lower central series: ";
    for (std::size_t i = 0; i < report.series.size(); ++i) {
        if (i > 0) std::cout << ", ";
        std::cout << report.series[i];
    }
    std::cout << "\n";
    std::cout << "characteristically nilpotent: " << (report.nilpotent ? "yes" : "no") << "\n";
    return 0;
}

struct SweepFlags {
    std::string cls;
    std::string a;
    std::string b;
    std::string c;
    std::string families;
    std::string delta = "7";
    std::string rho0_sign = "ratio";
    std::string out;
};

int cmd_sweep(const SweepFlags& flags) {
    SweepOptions options;
    options.cls = parse_class_id(flags.cls);
    options.a = parse_axis(flags.a);
    options.b = parse_axis(flags.b);
    options.c = parse_axis(flags.c);
    if (!flags.families.empty()) options.families = parse_family_list(flags.families);
    options.delta = parse_rational(flags.delta);
    options.rho0_sign = parse_rho0_sign(flags.rho0_sign);
    const SweepResult result = build_sweep(options);
    for (const SweepSkip& skip : result.skipped)
        std::cerr << "skip: " << detail::params_inline(skip.params) << ": " << skip.reason
                  << "\n";
    emit(render_sweep_csv(result), flags.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted derivation spaces of two-product algebras"};
    app.require_subcommand(1);

    SourceFlags check_source;
    CLI::App* check = app.add_subcommand("check", "verify the defining axiom systems");
    add_source_flags(check, check_source);

    DeriveFlags derive;
    CLI::App* derive_cmd =
        app.add_subcommand("derive", "solve one weighted derivation space");
    add_source_flags(derive_cmd, derive.source);
    derive_cmd->add_option("--family", derive.family, "canonical family tag (111..01d)");
    derive_cmd->add_option("--delta", derive.delta, "family parameter for 01d");
    derive_cmd->add_option("--rho", derive.rho, "raw weight rho");
    derive_cmd->add_option("--tau", derive.tau, "raw weight tau");
    derive_cmd->add_option("--sigma", derive.sigma, "raw weight sigma");
    derive_cmd->add_option("--rho0-sign", derive.rho0_sign, "ratio|sum for rho=0 families");
    derive_cmd->add_option("--format", derive.format, "md|json");
    derive_cmd->add_option("--out", derive.out, "write output to a file");

    TableFlags table;
    CLI::App* table_cmd =
        app.add_subcommand("table", "dimension table for all classes and families");
    table_cmd->add_option("--class", table.cls, "restrict to one class L1..L6");
    table_cmd->add_option("--a", table.a, "override parameter a");
    table_cmd->add_option("--b", table.b, "override parameter b");
    table_cmd->add_option("--c", table.c, "override parameter c");
    table_cmd->add_option("--delta", table.delta, "delta for the 01d family");
    table_cmd->add_option("--rho0-sign", table.rho0_sign, "ratio|sum for rho=0 families");
    table_cmd->add_option("--format", table.format, "md|csv|json");
    table_cmd->add_option("--out", table.out, "write output to a file");

    CanonFlags canon;
    CLI::App* canon_cmd = app.add_subcommand("canon", "canonicalize a weight triple");
    canon_cmd->add_option("rho", canon.rho, "weight rho")->required();
    canon_cmd->add_option("tau", canon.tau, "weight tau")->required();
    canon_cmd->add_option("sigma", canon.sigma, "weight sigma")->required();
    canon_cmd->add_option("--rho0-sign", canon.rho0_sign, "ratio|sum for rho=0 families");

    SourceFlags nilpotent_source;
    CLI::App* nilpotent_cmd =
        app.add_subcommand("nilpotent", "characteristic nilpotency of the derivation algebra");
    add_source_flags(nilpotent_cmd, nilpotent_source);

    SweepFlags sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "dimension sweep over a parameter grid");
    sweep_cmd->add_option("--class", sweep.cls, "catalog class L1..L6")->required();
    sweep_cmd->add_option("--a", sweep.a, "comma-separated grid values for a");
    sweep_cmd->add_option("--b", sweep.b, "comma-separated grid values for b");
    sweep_cmd->add_option("--c", sweep.c, "comma-separated grid values for c");
    sweep_cmd->add_option("--family", sweep.families, "comma-separated family tags");
    sweep_cmd->add_option("--delta", sweep.delta, "delta for the 01d family");
    sweep_cmd->add_option("--rho0-sign", sweep.rho0_sign, "ratio|sum for rho=0 families");
    sweep_cmd->add_option("--out", sweep.out, "write CSV to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) return cmd_check(check_source);
        if (*derive_cmd) return cmd_derive(derive);
        if (*table_cmd) return cmd_table(table);
        if (*canon_cmd) return cmd_canon(canon);
        if (*nilpotent_cmd) return cmd_nilpotent(nilpotent_source);
        if (*sweep_cmd) return cmd_sweep(sweep);
    } catch (const lsdial::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

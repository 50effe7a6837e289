#include "mero/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "mero/bounds.hpp"
#include "mero/criteria.hpp"
#include "mero/csv.hpp"
#include "mero/error.hpp"
#include "mero/functions.hpp"
#include "mero/sweep.hpp"
#include "mero/verify.hpp"

namespace mero::cli {

namespace {

using csv::format_number;

struct TableOptions {
    SweepSpec spec = default_sweep();
    std::vector<std::string> quantities;
    std::vector<std::string> classes;
    std::string out_path;
};

struct CheckOptions {
    std::string in_path;
    std::string class_name;
    std::optional<double> p;
    std::optional<double> lambda;
    std::optional<double> w0;
    double grid_radius = DiskGrid::kDefaultRadius;
    std::size_t radial = DiskGrid::kDefaultRadial;
    std::size_t angular = DiskGrid::kDefaultAngular;
    double pole_guard = DiskGrid::kDefaultPoleGuard;
    double sum_r = 0.9;
    std::string verdict_csv;
};

int cmd_verify(const std::string& suite_name, std::ostream& out) {
    const auto results = verify::run_suite(verify::parse_suite(suite_name));
    verify::print_results(out, results);
    return verify::all_passed(results) ? kExitOk : kExitFailure;
}

int cmd_table(TableOptions opt, std::ostream& out, std::ostream& err) {
    if (!opt.quantities.empty()) {
        opt.spec.quantities.clear();
        for (const auto& q : opt.quantities) opt.spec.quantities.push_back(parse_sweep_quantity(q));
    }
    if (!opt.classes.empty()) {
        opt.spec.classes.clear();
        for (const auto& c : opt.classes) opt.spec.classes.push_back(parse_class_kind(c));
    }
    const Table table = build_table(opt.spec);
    if (table.omitted_beyond_pole > 0)
        err << "notice: omitted " << table.omitted_beyond_pole
            << " DIRICHLET_F/DIRICHLET_F_OVER_Z cells with r >= p (series diverge there)\n";
    if (table.rows.empty()) {
        err << "error: sweep produced no rows\n";
        return kExitUsage;
    }
    std::ofstream file(opt.out_path);
    if (!file) {
        err << "error: cannot write '" << opt.out_path << "'\n";
        return kExitUsage;
    }
    write_table_csv(file, table);
    file.close();
    if (!file) {
        err << "error: failed writing '" << opt.out_path << "'\n";
        return kExitUsage;
    }
    out << "wrote " << table.rows.size() << " rows to " << opt.out_path << '\n';
    return kExitOk;
}

ClassSpec resolve_class(const CheckOptions& opt, const PoleFunction& f) {
    const ClassKind kind = parse_class_kind(opt.class_name);
    if (kind == ClassKind::S) {
        if (opt.p) throw Error(ErrorKind::ClassMismatch, "class S takes no --p");
        return ClassSpec::s();
    }
    const std::optional<double> p = opt.p ? opt.p : f.pole();
    if (!p) throw Error(ErrorKind::ClassMismatch, "class needs --p or a pole in the function row");
    if (f.pole() && std::abs(*f.pole() - *p) > 1e-12)
        throw Error(ErrorKind::ClassMismatch, "--p disagrees with the function row's pole");
    switch (kind) {
    case ClassKind::SigmaP: return ClassSpec::sigma_p(*p);
    case ClassKind::CoP: return ClassSpec::co_p(*p);
    case ClassKind::UpLambda:
        if (!opt.lambda) throw Error(ErrorKind::BadParameter, "U_P_LAMBDA needs --lambda");
        return ClassSpec::up_lambda(*p, *opt.lambda);
    case ClassKind::SigmaStarP:
        if (!opt.w0) throw Error(ErrorKind::BadParameter, "SIGMA_STAR_P needs --w0");
        return ClassSpec::sigma_star_p(*p, *opt.w0);
    case ClassKind::S: break;
    }
    return ClassSpec::s();
}

std::string describe(const CriterionVerdict& v) {
    std::string s = std::string(verdict_label(v)) + " sup=" + format_number(v.sup_value) +
                    " threshold=" + format_number(v.threshold);
    if (v.witness) s += " witness=" + format_number(v.witness->real()) + "+" + format_number(v.witness->imag()) + "i";
    if (v.partner) s += " partner=" + format_number(v.partner->real()) + "+" + format_number(v.partner->imag()) + "i";
    return s;
}

std::string describe(const BoundReport& rep) {
    return std::string(rep.satisfied ? "SATISFIED" : "VIOLATED") + (rep.sharp ? " (sharp)" : "") +
           " computed=" + format_number(rep.computed) + " bound=" + format_number(rep.bound) +
           " slack=" + format_number(rep.slack);
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.in_path);
    if (!in) {
        err << "error: cannot read '" << opt.in_path << "'\n";
        return kExitUsage;
    }
    const auto functions = csv::read_function_rows(in);
    if (functions.empty()) {
        err << "error: no function rows in '" << opt.in_path << "'\n";
        return kExitUsage;
    }

    std::vector<CriterionVerdict> verdicts;
    bool disproved = false;
    for (std::size_t k = 0; k < functions.size(); ++k) {
        const auto& f = functions[k];
        const ClassSpec cls = resolve_class(opt, f);
        const DiskGrid grid(opt.grid_radius, opt.radial, opt.angular, f.pole(), opt.pole_guard);
        bool this_disproved = false;

        out << "function " << k + 1 << ": p=" << csv::format_optional(f.pole()) << " order=" << f.order()
            << " class=" << to_string(cls.kind()) << '\n';

        const auto gw = gronwall_check(f);
        out << "  gronwall: " << describe(gw) << '\n';
        this_disproved |= !gw.satisfied;

        if (cls.kind() == ClassKind::UpLambda) {
            for (double t : {0.0, 1.0, 2.0}) {
                const auto rep = weighted_sum_check(f, *cls.lambda(), t, opt.sum_r);
                out << "  weighted_sum t=" << format_number(t) << " r=" << format_number(opt.sum_r) << ": "
                    << describe(rep) << '\n';
                this_disproved |= !rep.satisfied;
            }
            const auto v = subclass_membership(f, *cls.lambda(), grid);
            out << "  subclass_membership: " << describe(v) << '\n';
            this_disproved |= !v.holds;
            verdicts.push_back(v);
        }

        if (f.pole()) {
            auto v = univalence_criterion(f, grid);
            v.lambda = cls.lambda();
            out << "  univalence_criterion: " << describe(v) << '\n';
            if (!v.holds)
                err << "warning: function " << k + 1
                    << ": univalence criterion not met; it is sufficient only, so this is inconclusive\n";
            verdicts.push_back(v);
        } else {
            out << "  univalence_criterion: not applicable (no pole)\n";
        }

        auto inj = injectivity_oracle(f, grid);
        inj.lambda = cls.lambda();
        out << "  injectivity_oracle: " << describe(inj) << '\n';
        this_disproved |= !inj.holds;
        verdicts.push_back(inj);

        out << "  result: " << (this_disproved ? "DISPROVED" : "no disproof found") << '\n';
        disproved |= this_disproved;
    }

    if (!opt.verdict_csv.empty()) {
        std::ofstream file(opt.verdict_csv);
        if (!file) {
            err << "error: cannot write '" << opt.verdict_csv << "'\n";
            return kExitUsage;
        }
        file << csv::verdict_header() << '\n';
        for (const auto& v : verdicts) file << csv::verdict_row(v) << '\n';
    }
    return disproved ? kExitFailure : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dirichlet integrals, integral means and univalence checks for functions with a pole at p"};
    app.require_subcommand(1);

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run a built-in verification suite");
    verify_cmd->add_option("--suite", suite, "sharpness, oracles, criteria, limits or all")
        ->check(CLI::IsMember({"sharpness", "oracles", "criteria", "limits", "all"}))
        ->capture_default_str();

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Tabulate extremal values against their bounds as CSV");
    table_cmd->add_option("--p", table.spec.p_values, "Pole locations in (0,1)")->delimiter(',')->capture_default_str();
    table_cmd->add_option("--r", table.spec.r_values, "Radii in (0,1]")->delimiter(',');
    table_cmd->add_option("--lambda", table.spec.lambda_values, "lambda values in (0,1]")
        ->delimiter(',')
        ->capture_default_str();
    table_cmd->add_option("--quantity", table.quantities,
                          "DIRICHLET_ZF, DIRICHLET_F, DIRICHLET_F_OVER_Z, L1 (default: all)")
        ->delimiter(',');
    table_cmd->add_option("--class", table.classes, "SIGMA_P, U_P_LAMBDA, S (default: all three)")->delimiter(',');
    table_cmd->add_option("--order", table.spec.order, "Truncation degree of f and f/z expansions")
        ->capture_default_str();
    table_cmd->add_option("--out", table.out_path, "Output CSV path")->required();

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Run the univalence and bound checks on functions from a CSV file");
    check_cmd->add_option("--in", check.in_path, "Function CSV: p (or empty), order, Re(b1), Im(b1), ...")
        ->required();
    check_cmd->add_option("--class", check.class_name, "SIGMA_P, U_P_LAMBDA, S, CO_P or SIGMA_STAR_P")
        ->required()
        ->check(CLI::IsMember({"SIGMA_P", "U_P_LAMBDA", "S", "CO_P", "SIGMA_STAR_P"}));
    check_cmd->add_option("--p", check.p, "Pole location (defaults to the row's pole)");
    check_cmd->add_option("--lambda", check.lambda, "lambda for U_P_LAMBDA");
    check_cmd->add_option("--w0", check.w0, "Star center for SIGMA_STAR_P");
    check_cmd->add_option("--grid-radius", check.grid_radius, "Outer radius of the test lattice")
        ->capture_default_str();
    check_cmd->add_option("--radial", check.radial, "Radial lattice count")->capture_default_str();
    check_cmd->add_option("--angular", check.angular, "Angular lattice count")->capture_default_str();
    check_cmd->add_option("--pole-guard", check.pole_guard, "Lattice exclusion radius around the pole")
        ->capture_default_str();
    check_cmd->add_option("--r", check.sum_r, "Radius for the weighted coefficient-sum check")
        ->capture_default_str();
    check_cmd->add_option("--verdict-csv", check.verdict_csv, "Also write criterion verdicts as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(suite, out);
        if (table_cmd->parsed()) return cmd_table(std::move(table), out, err);
        if (check_cmd->parsed()) return cmd_check(check, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mero::cli

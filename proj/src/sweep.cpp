#include "mero/sweep.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "mero/csv.hpp"
#include "mero/error.hpp"
#include "mero/functions.hpp"
#include "mero/integrals.hpp"

namespace mero {

std::string_view to_string(SweepQuantity q) noexcept {
    switch (q) {
    case SweepQuantity::DirichletZf: return "DIRICHLET_ZF";
    case SweepQuantity::DirichletF: return "DIRICHLET_F";
    case SweepQuantity::DirichletFOverZ: return "DIRICHLET_F_OVER_Z";
    case SweepQuantity::L1: return "L1";
    }
    return "?";
}

SweepQuantity parse_sweep_quantity(std::string_view name) {
    for (auto q : {SweepQuantity::DirichletZf, SweepQuantity::DirichletF, SweepQuantity::DirichletFOverZ,
                   SweepQuantity::L1})
        if (to_string(q) == name) return q;
    throw Error(ErrorKind::ParseError, "unknown quantity '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
    const bool needs_p = std::any_of(classes.begin(), classes.end(), [](ClassKind k) { return k != ClassKind::S; });
    const bool needs_lambda =
        std::any_of(classes.begin(), classes.end(), [](ClassKind k) { return k == ClassKind::UpLambda; });
    if (r_values.empty() || quantities.empty() || classes.empty() || (needs_p && p_values.empty()) ||
        (needs_lambda && lambda_values.empty()))
        throw Error(ErrorKind::BadParameter, "sweep has an empty value list");
    for (double p : p_values)
        if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::BadParameter, "sweep p outside (0, 1)");
    for (double r : r_values)
        if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::BadParameter, "sweep r outside (0, 1]");
    for (double l : lambda_values)
        if (!(l > 0.0 && l <= 1.0)) throw Error(ErrorKind::BadParameter, "sweep lambda outside (0, 1]");
    for (ClassKind k : classes)
        if (k != ClassKind::SigmaP && k != ClassKind::UpLambda && k != ClassKind::S)
            throw Error(ErrorKind::BadParameter,
                        "table classes are SIGMA_P, U_P_LAMBDA and S; " + std::string(to_string(k)) +
                            " shares the SIGMA_P bound");
    if (order < 2) throw Error(ErrorKind::BadParameter, "sweep order must be >= 2");
}

std::vector<double> default_radii() {
    std::vector<double> r;
    for (int k = 1; k <= 20; ++k) r.push_back(k / 20.0);
    return r;
}

SweepSpec default_sweep() {
    SweepSpec s;
    s.p_values = {0.2, 0.35, 0.5, 0.65, 0.8};
    s.r_values = default_radii();
    s.lambda_values = {0.25, 0.5, 1.0};
    s.quantities = {SweepQuantity::DirichletZf, SweepQuantity::DirichletF, SweepQuantity::DirichletFOverZ,
                    SweepQuantity::L1};
    s.classes = {ClassKind::SigmaP, ClassKind::UpLambda, ClassKind::S};
    return s;
}

namespace {

TableRow make_row(SweepQuantity q, const ClassSpec& cls, double r, double computed, double bound) {
    const auto rep = make_report(std::string(to_string(q)), computed, bound, cls, r);
    return {q, cls.kind(), cls.p(), cls.lambda(), r, computed, bound, rep.slack, rep.sharp};
}

// Rows shared by every class: Dirichlet integral of z/f and the L1 mean.
void add_zf_rows(Table& t, const SweepSpec& spec, const PoleFunction& f, const ClassSpec& cls, double r) {
    for (auto q : spec.quantities) {
        if (q == SweepQuantity::DirichletZf)
            t.rows.push_back(make_row(q, cls, r, dirichlet_series(f.inv_series(), r).value,
                                      class_bound(cls, BoundQuantity::DirichletZf, r)));
        else if (q == SweepQuantity::L1)
            t.rows.push_back(make_row(q, cls, r, l1_mean_series(f, r).value, l1_bound(cls, r)));
    }
}

}  // namespace

Table build_table(const SweepSpec& spec) {
    spec.validate();
    Table t;
    for (ClassKind kind : spec.classes) {
        if (kind == ClassKind::S) {
            const auto koebe = build_koebe_rotation(0.0, spec.order);
            for (double r : spec.r_values) add_zf_rows(t, spec, koebe, ClassSpec::s(), r);
            continue;
        }
        for (double p : spec.p_values) {
            if (kind == ClassKind::UpLambda) {
                for (double lambda : spec.lambda_values) {
                    const auto fp = subclass_extremal(p, lambda, spec.order);
                    for (double r : spec.r_values) add_zf_rows(t, spec, fp, ClassSpec::up_lambda(p, lambda), r);
                }
                continue;
            }
            const auto kp = sigma_extremal(p, spec.order);
            const auto cls = ClassSpec::sigma_p(p);
            for (double r : spec.r_values) {
                add_zf_rows(t, spec, kp, cls, r);
                for (auto q : spec.quantities) {
                    if (q != SweepQuantity::DirichletF && q != SweepQuantity::DirichletFOverZ) continue;
                    if (r >= p) {
                        ++t.omitted_beyond_pole;
                        continue;
                    }
                    if (q == SweepQuantity::DirichletF)
                        t.rows.push_back(make_row(q, cls, r, dirichlet_f_series(kp, r).value, max_dirichlet_f(r, p)));
                    else
                        t.rows.push_back(
                            make_row(q, cls, r, dirichlet_f_over_z_series(kp, r).value, max_dirichlet_f_over_z(r, p)));
                }
            }
        }
    }

    // Missing p / lambda sort before any value.
    const auto key = [](const TableRow& row) {
        return std::tuple{to_string(row.quantity), row.p.has_value(), row.p.value_or(0.0), row.lambda.has_value(),
                          row.lambda.value_or(0.0), row.r};
    };
    std::sort(t.rows.begin(), t.rows.end(), [&](const TableRow& a, const TableRow& b) { return key(a) < key(b); });
    return t;
}

void write_table_csv(std::ostream& out, const Table& table) {
    out << "quantity,class,p,lambda,r,computed,bound,slack,sharp\n";
    for (const auto& row : table.rows) {
        out << to_string(row.quantity) << ',' << to_string(row.cls) << ',' << csv::format_optional(row.p) << ','
            << csv::format_optional(row.lambda) << ',' << csv::format_number(row.r) << ','
            << csv::format_number(row.computed) << ',' << csv::format_number(row.bound) << ','
            << csv::format_number(row.slack) << ',' << csv::format_bool(row.sharp) << '\n';
    }
}

}  // namespace mero

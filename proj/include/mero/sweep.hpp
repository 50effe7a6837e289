#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "mero/bounds.hpp"

namespace mero {

enum class SweepQuantity { DirichletZf, DirichletF, DirichletFOverZ, L1 };

std::string_view to_string(SweepQuantity q) noexcept;
/// DIRICHLET_ZF, DIRICHLET_F, DIRICHLET_F_OVER_Z or L1.
SweepQuantity parse_sweep_quantity(std::string_view name);

/// Parameter grid for the extremal-function table. Each class is evaluated
/// on its extremal function (sigma_extremal, subclass_extremal, and the
/// Koebe function for S).
struct SweepSpec {
    std::vector<double> p_values;
    std::vector<double> r_values;
    std::vector<double> lambda_values;
    std::vector<SweepQuantity> quantities;
    std::vector<ClassKind> classes;
    /// Truncation degree of the f and f/z expansions; 256 keeps the
    /// (r/p)^{2n} tail below 1e-10 up to r = 0.95 p.
    std::size_t order = 256;

    /// Throws BadParameter on empty lists or out-of-range values.
    void validate() const;
};

/// p in {0.2, 0.35, 0.5, 0.65, 0.8}, r = k/20 for k = 1..20,
/// lambda in {0.25, 0.5, 1}, all quantities, classes SIGMA_P, U_P_LAMBDA, S.
SweepSpec default_sweep();

/// 20 uniform radii in (0, 1].
std::vector<double> default_radii();

struct TableRow {
    SweepQuantity quantity;
    ClassKind cls;
    std::optional<double> p;
    std::optional<double> lambda;
    double r;
    double computed;
    double bound;
    double slack;
    bool sharp;
};

struct Table {
    std::vector<TableRow> rows;  ///< sorted by (quantity, p, lambda, r)
    /// DIRICHLET_F / DIRICHLET_F_OVER_Z cells dropped because r >= p.
    std::size_t omitted_beyond_pole = 0;
};

Table build_table(const SweepSpec& spec);

/// Header `quantity,class,p,lambda,r,computed,bound,slack,sharp` plus rows.
void write_table_csv(std::ostream& out, const Table& table);

}  // namespace mero

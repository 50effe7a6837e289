#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mero/bounds.hpp"
#include "mero/criteria.hpp"
#include "mero/functions.hpp"
#include "mero/integrals.hpp"

namespace mero::csv {

/// 12 significant digits; scientific notation below 1e-4 in magnitude.
std::string format_number(double x);
std::string format_optional(std::optional<double> x);
std::string_view format_bool(bool b) noexcept;

/// Function row: `p (or empty), order, Re(b1), Im(b1), ..., Re(bN), Im(bN)`.
std::string format_function_row(const PoleFunction& f);
/// Throws Error(ParseError) on malformed rows; construction errors
/// (PoleMismatch, NonFinite, ...) propagate unchanged.
PoleFunction parse_function_row(std::string_view line);
/// Every non-blank line not starting with '#'.
std::vector<PoleFunction> read_function_rows(std::istream& in);

std::string_view to_string(Method m) noexcept;
std::string_view to_string(Quantity q) noexcept;

/// `quantity,method,p,lambda,r,value,tail_estimate`
std::string integral_header();
std::string integral_row(const IntegralResult& res, std::optional<double> p, std::optional<double> lambda);

/// `quantity,class,p,lambda,w0,r,computed,bound,slack,satisfied,sharp`
std::string bound_header();
std::string bound_row(const BoundReport& rep);

/// `criterion,p,lambda,grid_radius,holds,sup_value,threshold,witness_re,witness_im`
std::string verdict_header();
std::string verdict_row(const CriterionVerdict& v);

}  // namespace mero::csv

#include "mero/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "mero/error.hpp"

namespace mero::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_double(std::string_view field, std::string_view what) {
    double value = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last)
        throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " field '" + std::string(field) + "'");
    return value;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    // %g already switches to scientific for exponents below -4.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string format_optional(std::optional<double> x) { return x ? format_number(*x) : std::string{}; }

std::string_view format_bool(bool b) noexcept { return b ? "true" : "false"; }

std::string format_function_row(const PoleFunction& f) {
    // Round-trip rows need more than the 12 digits used for result tables.
    const auto exact = [](double x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    std::string row = f.pole() ? exact(*f.pole()) : std::string{};
    row += "," + std::to_string(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) row += "," + exact(f.b(n).real()) + "," + exact(f.b(n).imag());
    return row;
}

PoleFunction parse_function_row(std::string_view line) {
    const auto fields = split(line);
    if (fields.size() < 2) throw Error(ErrorKind::ParseError, "function row needs at least p and order");

    std::optional<double> pole;
    if (!fields[0].empty()) pole = parse_double(fields[0], "p");

    const double order_value = parse_double(fields[1], "order");
    if (order_value < 0 || order_value != std::floor(order_value))
        throw Error(ErrorKind::ParseError, "order must be a nonnegative integer");
    const auto order = static_cast<std::size_t>(order_value);
    if (fields.size() != 2 + 2 * order)
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(2 * order) + " coefficient fields, got " +
                                               std::to_string(fields.size() - 2));

    std::vector<Complex> b(order);
    for (std::size_t n = 0; n < order; ++n)
        b[n] = {parse_double(fields[2 + 2 * n], "Re(b)"), parse_double(fields[3 + 2 * n], "Im(b)")};
    return from_inverse_coefficients(b, pole);
}

std::vector<PoleFunction> read_function_rows(std::istream& in) {
    std::vector<PoleFunction> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.push_back(parse_function_row(t));
    }
    return out;
}

std::string_view to_string(Method m) noexcept { return m == Method::Series ? "SERIES" : "QUADRATURE"; }

std::string_view to_string(Quantity q) noexcept { return q == Quantity::Dirichlet ? "DIRICHLET" : "L1_MEAN"; }

std::string integral_header() { return "quantity,method,p,lambda,r,value,tail_estimate"; }

std::string integral_row(const IntegralResult& res, std::optional<double> p, std::optional<double> lambda) {
    std::string row(to_string(res.quantity));
    row += ",";
    row += to_string(res.method);
    row += "," + format_optional(p) + "," + format_optional(lambda) + "," + format_number(res.r) + "," +
           format_number(res.value) + "," + format_number(res.truncation_tail_estimate);
    return row;
}

std::string bound_header() { return "quantity,class,p,lambda,w0,r,computed,bound,slack,satisfied,sharp"; }

std::string bound_row(const BoundReport& rep) {
    const auto& c = rep.class_spec;
    std::string row = rep.quantity_name + "," + std::string(to_string(c.kind())) + "," + format_optional(c.p()) + "," +
                      format_optional(c.lambda()) + "," + format_optional(c.w0()) + "," + format_optional(rep.r) + "," +
                      format_number(rep.computed) + "," + format_number(rep.bound) + "," + format_number(rep.slack) +
                      ",";
    row += format_bool(rep.satisfied);
    row += ",";
    row += format_bool(rep.sharp);
    return row;
}

std::string verdict_header() {
    return "criterion,p,lambda,grid_radius,holds,sup_value,threshold,witness_re,witness_im";
}

std::string verdict_row(const CriterionVerdict& v) {
    std::string row(to_string(v.criterion));
    row += "," + format_optional(v.p) + "," + format_optional(v.lambda) + "," + format_number(v.grid_radius) + ",";
    row += format_bool(v.holds);
    row += "," + format_number(v.sup_value) + "," + format_number(v.threshold) + ",";
    if (v.witness) row += format_number(v.witness->real()) + "," + format_number(v.witness->imag());
    else row += ",";
    return row;
}

}  // namespace mero::csv

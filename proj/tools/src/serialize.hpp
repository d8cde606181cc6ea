#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "etaxi/contour.hpp"
#include "etaxi/verify.hpp"
#include "json.hpp"

namespace etaxi::cli {

using ordered_json = nlohmann::ordered_json;

// 17 significant digits: enough to round-trip any double exactly.
std::string format_double17(double x);

ordered_json report_to_json(const VerificationReport& report);

// A flat numeric table with named columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Header row, LF line endings, '.' decimal separator.
void write_csv(const Table& table, std::ostream& out);

ordered_json table_to_json(const std::string& kind, const ordered_json& params,
                           const Table& table);

// Parses write_csv output back into a table. Used by round-trip tests.
Table read_csv(std::istream& in);

Table contour_table(double F, double beta, double x1, int n);
Table cylinder_table(double F, double beta, double x1, int n);
Table embedding_imaginary_table(double t, double x1, int n);
Table embedding_real_table(double tau, double x1, double t_min, double t_max,
                           int n);
Table orbit_table(const AlgebraVector& v, double mu_min, double mu_max, int n);

}  // namespace etaxi::cli

#include "serialize.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "etaxi/flows.hpp"

namespace etaxi::cli {

std::string format_double17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ordered_json report_to_json(const VerificationReport& report) {
    ordered_json config;
    config["samples"] = report.config.samples;
    if (report.config.tol_override) {
        config["tol_override"] = *report.config.tol_override;
    } else {
        config["tol_override"] = nullptr;
    }
    config["box"] = report.config.box;
    config["min_cone"] = report.config.min_cone;
    config["fd_step"] = report.config.fd_step;
    config["fd_step_affine"] = report.config.fd_step_affine;
    config["mu_probe"] = report.config.mu_probe;
    config["contour_n"] = report.config.contour_n;
    config["beta"] = report.config.beta;

    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : report.checks) {
        ordered_json row;
        row["check_id"] = c.check_id;
        row["samples"] = c.samples;
        row["max_residual"] = c.max_residual;
        row["tolerance"] = c.tolerance;
        row["pass"] = c.pass;
        checks.push_back(std::move(row));
    }

    ordered_json out;
    out["suite"] = report.suite;
    out["seed"] = report.config.seed;
    out["config"] = std::move(config);
    out["checks"] = std::move(checks);
    out["pass"] = report.pass;
    out["wall_time_ms"] = report.wall_time_ms;
    return out;
}

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) out << ',';
        out << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << format_double17(row[i]);
        }
        out << '\n';
    }
}

Table read_csv(std::istream& in) {
    Table table;
    std::string line;
    if (std::getline(in, line)) {
        std::stringstream header(line);
        std::string cell;
        while (std::getline(header, cell, ',')) table.columns.push_back(cell);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row_in(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(row_in, cell, ',')) {
            row.push_back(std::strtod(cell.c_str(), nullptr));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

ordered_json table_to_json(const std::string& kind, const ordered_json& params,
                           const Table& table) {
    ordered_json out;
    out["kind"] = kind;
    out["params"] = params;
    out["columns"] = table.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) rows.push_back(row);
    out["rows"] = std::move(rows);
    return out;
}

Table contour_table(double F, double beta, double x1, int n) {
    V0Path mapped = map_to_v0(build_time_path(F, beta, n), x1);
    Table table;
    table.columns = {"s",      "t",      "sigma",  "v0",
                     "eta_re", "eta_im", "xi_re",  "xi_im"};
    table.rows.reserve(mapped.samples.size());
    for (const V0Sample& s : mapped.samples) {
        table.rows.push_back({s.s, s.z.real(), s.z.imag(),
                              mod_two_pi(s.z.imag()), s.p.eta().real(),
                              s.p.eta().imag(), s.p.xi().real(),
                              s.p.xi().imag()});
    }
    return table;
}

Table cylinder_table(double F, double beta, double x1, int n) {
    CylinderPath mapped = map_to_cylinder(build_time_path(F, beta, n), x1);
    Table table;
    table.columns = {"s", "t", "sigma", "u0", "v0", "u1", "v1"};
    table.rows.reserve(mapped.samples.size());
    for (const CylinderSample& s : mapped.samples) {
        table.rows.push_back({s.s, s.z.real(), s.z.imag(), s.c.u0, s.c.v0,
                              s.c.u1, s.c.v1});
    }
    return table;
}

namespace {

constexpr double kTwoPi = 6.283185307179586;

void push_point_row(Table& table, double a, double b, const V0Point& p) {
    table.rows.push_back({a, b, p.eta().real(), p.eta().imag(),
                          p.xi().real(), p.xi().imag()});
}

}  // namespace

Table embedding_imaginary_table(double t, double x1, int n) {
    if (n < 1) throw InvalidParamError("embedding sample: need n >= 1");
    Table table;
    table.columns = {"tau", "x1", "eta_re", "eta_im", "xi_re", "xi_im"};
    for (int j = 0; j < n; ++j) {
        double tau = kTwoPi * static_cast<double>(j) / n;
        push_point_row(table, tau, x1, q_imaginary(t, tau, x1));
    }
    return table;
}

Table embedding_real_table(double tau, double x1, double t_min, double t_max,
                           int n) {
    if (n < 2 || !(t_min < t_max)) {
        throw InvalidParamError("embedding sample: need n >= 2, t_min < t_max");
    }
    Table table;
    table.columns = {"t", "x1", "eta_re", "eta_im", "xi_re", "xi_im"};
    for (int j = 0; j < n; ++j) {
        double frac = static_cast<double>(j) / (n - 1);
        double t = t_min * (1.0 - frac) + t_max * frac;
        push_point_row(table, t, x1, q_real(tau, t, x1));
    }
    return table;
}

Table orbit_table(const AlgebraVector& v, double mu_min, double mu_max,
                  int n) {
    if (n < 2 || !(mu_min < mu_max)) {
        throw InvalidParamError("orbit sample: need n >= 2, mu_min < mu_max");
    }
    Table table;
    table.columns = {"mu", "eta_re", "eta_im", "xi_re", "xi_im"};
    for (int j = 0; j < n; ++j) {
        double frac = static_cast<double>(j) / (n - 1);
        double mu = mu_min * (1.0 - frac) + mu_max * frac;
        V0Point p = one_param_point({v, mu});
        table.rows.push_back({mu, p.eta().real(), p.eta().imag(),
                              p.xi().real(), p.xi().imag()});
    }
    return table;
}

}  // namespace etaxi::cli

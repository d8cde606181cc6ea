#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "serialize.hpp"

namespace {

using etaxi::cli::Table;

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

int emit_table(const Table& table, const std::string& kind,
               const etaxi::cli::ordered_json& params,
               const std::string& format, const std::string& out_path) {
    if (format == "csv") {
        std::ostringstream os;
        etaxi::cli::write_csv(table, os);
        return write_output(os.str(), out_path);
    }
    return write_output(
        etaxi::cli::table_to_json(kind, params, table).dump(2) + "\n",
        out_path);
}

etaxi::AlgebraVector parse_direction(const std::vector<double>& comps) {
    if (comps.size() == 2) {
        return {{comps[0], 0.0}, {comps[1], 0.0}};
    }
    if (comps.size() == 4) {
        return {{comps[0], comps[1]}, {comps[2], comps[3]}};
    }
    throw etaxi::InvalidParamError(
        "--v takes a,b (real) or a_re,a_im,b_re,b_im");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eta-xi space-time toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    etaxi::VerifyConfig config;
    double tol_value = 0.0;
    std::string out_path;
    verify->add_option("--suite", suite, "Suite name")
        ->check(CLI::IsMember(
            {"all", "group", "cover", "metric", "killing", "embed",
             "contour"}));
    verify->add_option("--seed", config.seed, "PRNG seed");
    verify->add_option("--samples", config.samples, "Base sample count")
        ->check(CLI::PositiveNumber);
    auto* tol_opt = verify->add_option(
        "--tol", tol_value, "Tolerance override for every check");
    verify->add_option("--out", out_path, "Report file (default stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "Export sampled geometry");
    sample->require_subcommand(1);
    std::string format = "csv";
    std::string sample_out;
    double F = 1.0, beta = 6.283185307179586, x1 = 0.0;
    int n = 400;
    double t_fixed = 0.0, tau_fixed = 0.0, t_min = -3.0, t_max = 3.0;
    std::string kind = "imaginary";
    std::vector<double> v_comps{1.0, 0.0};
    double mu_min = -1.0, mu_max = 1.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", sample_out, "Output file (default stdout)");
    };

    auto* contour_cmd =
        sample->add_subcommand("contour", "Thermal contour mapped into V0");
    contour_cmd->add_option("--F", F, "Half-width of the real excursion")
        ->check(CLI::NonNegativeNumber);
    contour_cmd->add_option("--beta", beta, "Inverse temperature");
    contour_cmd->add_option("--x1", x1, "Space coordinate");
    contour_cmd->add_option("--n", n, "Samples per segment");
    add_common(contour_cmd);

    auto* cylinder_cmd =
        sample->add_subcommand("cylinder", "Thermal contour on the cylinder");
    cylinder_cmd->add_option("--F", F, "Half-width of the real excursion")
        ->check(CLI::NonNegativeNumber);
    cylinder_cmd->add_option("--beta", beta, "Inverse temperature");
    cylinder_cmd->add_option("--x1", x1, "Space coordinate");
    cylinder_cmd->add_option("--n", n, "Samples per segment");
    add_common(cylinder_cmd);

    auto* embedding_cmd =
        sample->add_subcommand("embedding", "Euclidean or Minkowskian slice");
    embedding_cmd->add_option("--kind", kind, "imaginary or real")
        ->check(CLI::IsMember({"imaginary", "real"}));
    embedding_cmd->add_option("--t", t_fixed, "Fixed t (imaginary kind)");
    embedding_cmd->add_option("--tau", tau_fixed, "Fixed tau (real kind)");
    embedding_cmd->add_option("--x1", x1, "Space coordinate");
    embedding_cmd->add_option("--t-min", t_min, "Grid start (real kind)");
    embedding_cmd->add_option("--t-max", t_max, "Grid end (real kind)");
    embedding_cmd->add_option("--n", n, "Row count");
    add_common(embedding_cmd);

    auto* orbit_cmd =
        sample->add_subcommand("orbit", "One-parameter subgroup orbit");
    orbit_cmd->add_option("--v", v_comps,
                          "Direction a,b or a_re,a_im,b_re,b_im")
        ->delimiter(',')
        ->expected(2, 4);
    orbit_cmd->add_option("--mu-min", mu_min, "Flow parameter start");
    orbit_cmd->add_option("--mu-max", mu_max, "Flow parameter end");
    orbit_cmd->add_option("--n", n, "Row count");
    add_common(orbit_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (tol_opt->count() > 0) config.tol_override = tol_value;
            etaxi::VerificationReport report =
                etaxi::run_suite(suite, config);
            std::string text =
                etaxi::cli::report_to_json(report).dump(2) + "\n";
            int rc = write_output(text, out_path);
            if (rc != 0) return rc;
            return report.pass ? 0 : 1;
        }
        if (contour_cmd->parsed()) {
            etaxi::cli::ordered_json params{
                {"F", F}, {"beta", beta}, {"x1", x1}, {"n", n}};
            return emit_table(etaxi::cli::contour_table(F, beta, x1, n),
                              "contour", params, format, sample_out);
        }
        if (cylinder_cmd->parsed()) {
            etaxi::cli::ordered_json params{
                {"F", F}, {"beta", beta}, {"x1", x1}, {"n", n}};
            return emit_table(etaxi::cli::cylinder_table(F, beta, x1, n),
                              "cylinder", params, format, sample_out);
        }
        if (embedding_cmd->parsed()) {
            if (kind == "imaginary") {
                etaxi::cli::ordered_json params{
                    {"kind", kind}, {"t", t_fixed}, {"x1", x1}, {"n", n}};
                return emit_table(
                    etaxi::cli::embedding_imaginary_table(t_fixed, x1, n),
                    "embedding", params, format, sample_out);
            }
            etaxi::cli::ordered_json params{{"kind", kind},
                                            {"tau", tau_fixed},
                                            {"x1", x1},
                                            {"t_min", t_min},
                                            {"t_max", t_max},
                                            {"n", n}};
            return emit_table(etaxi::cli::embedding_real_table(
                                  tau_fixed, x1, t_min, t_max, n),
                              "embedding", params, format, sample_out);
        }
        if (orbit_cmd->parsed()) {
            etaxi::AlgebraVector v = parse_direction(v_comps);
            etaxi::cli::ordered_json params{{"v", v_comps},
                                            {"mu_min", mu_min},
                                            {"mu_max", mu_max},
                                            {"n", n}};
            return emit_table(etaxi::cli::orbit_table(v, mu_min, mu_max, n),
                              "orbit", params, format, sample_out);
        }
    } catch (const etaxi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

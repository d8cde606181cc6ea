#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace etaxi {

struct CheckResult {
    std::string check_id;
    long samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Suite configuration. samples is the base count: checks documented at
// 10^3 or 10^2 scale use samples/10 and samples/100. tol_override, when
// set, replaces every check's default tolerance.
struct VerifyConfig {
    std::uint64_t seed = 7;
    long samples = 10000;
    std::optional<double> tol_override;
    double box = 2.0;
    double min_cone = 0.1;
    double fd_step = 1e-6;
    double fd_step_affine = 1e-3;
    double mu_probe = 0.3;
    int contour_n = 400;
    double beta = 6.283185307179586;
};

struct VerificationReport {
    std::string suite;
    VerifyConfig config;
    std::vector<CheckResult> checks;
    bool pass = false;
    double wall_time_ms = 0.0;
};

// Known suite names: all, group, cover, metric, killing, embed, contour.
bool is_suite_name(const std::string& name);

// Runs the named suite. Each check seeds its own generator from the
// config seed and the check id, so results do not depend on suite
// composition or check order. Throws InvalidParamError on an unknown
// suite name.
VerificationReport run_suite(const std::string& suite,
                             const VerifyConfig& config);

}  // namespace etaxi

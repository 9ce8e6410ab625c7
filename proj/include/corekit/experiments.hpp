#ifndef COREKIT_EXPERIMENTS_HPP
#define COREKIT_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corekit/corelab.hpp"

namespace corekit {

std::string tool_version();

// Least squares on (log n, log value); turns Theta claims into slope checks.
// Requires at least 3 points with positive values.
struct FitResult {
    double slope = 0;
    double intercept = 0;
    double stderr_slope = 0;
    std::vector<std::pair<double, double>> points;  // the (n, value) pairs fitted
};

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

// --- random-core scaling over deterministic kernel families -----------------

struct CoreScalingConfig {
    KernelFamilySpec::Family family = KernelFamilySpec::Family::necklace;
    std::string stat = "girth";  // girth | maxloop | circumference | block1 | block2
    std::vector<std::pair<int, long long>> grid;  // (family size, subdivision count k)
    long long trials = 200;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
};

struct CoreScalingPoint {
    int size = 0;
    long long k = 0;
    long long kernel_vertices = 0, kernel_edges = 0, kernel_loops = 0;
    std::vector<double> values;  // per trial, in trial order
    double median = 0;
};

struct CoreScalingReport {
    CoreScalingConfig config;
    std::vector<CoreScalingPoint> points;
    std::string version;

    std::vector<std::pair<double, double>> medians_vs_k() const;
    std::vector<std::pair<double, double>> medians_vs_edges() const;
    std::string to_csv() const;  // n(=kernel edges),m(=k),seed,trial,stat,value
};

CoreScalingReport run_core_scaling(const CoreScalingConfig& config);

// --- planar-graph scaling in the critical window ----------------------------

struct RegimeSpec {
    std::string regime = "critical";  // subcritical | critical | supercritical
    double beta = 0.75;               // |s(n)| = n^beta outside the critical regime
    std::vector<long long> n_grid;
    long long trials = 300;
    std::uint64_t seed = 1;
    long long max_tries_per_sample = 5000;

    long long m_of(long long n) const;  // floor(n/2 + s(n))
};

struct PlanarScalingPoint {
    long long n = 0, m = 0;
    long long accepted = 0;
    long long attempts = 0;  // gnm draws used, for acceptance telemetry
    long long tree_count = 0;
    double tree_fraction = 0;
    // Per accepted trial, in trial order; -1 marks "not defined for this trial"
    std::vector<double> l1_circ;    // circumference of L1 (cyclic trials only)
    std::vector<double> l1_girth;
    std::vector<double> l1_block1;  // bl_1 of L1 (when L1 has a block)
    std::vector<double> rest_circ;  // circumference outside L1
    std::optional<double> median_l1_circ;  // over cyclic trials
};

struct PlanarScalingReport {
    RegimeSpec regime;
    std::vector<PlanarScalingPoint> points;
    std::optional<FitResult> l1_circ_fit;  // median circumference of L1 vs n
    bool starved = false;                  // aborted: rejection budget exhausted
    std::string version;

    std::string to_csv() const;  // n,m,seed,trial,stat,value
};

PlanarScalingReport run_planar_scaling(const RegimeSpec& regime, int threads = 0);

double median_of(std::vector<double> values);

}  // namespace corekit

#endif

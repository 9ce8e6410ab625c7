#include "corekit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "corekit/decompose.hpp"
#include "corekit/rng.hpp"
#include "corekit/sampler.hpp"

#ifndef COREKIT_VERSION
#define COREKIT_VERSION "0.0.0"
#endif
#ifndef COREKIT_GIT_DESCRIBE
#define COREKIT_GIT_DESCRIBE "unknown"
#endif

namespace corekit {

std::string tool_version() {
    return std::string("corekit ") + COREKIT_VERSION + " (" + COREKIT_GIT_DESCRIBE + ")";
}

double median_of(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median_of: empty");
    std::sort(values.begin(), values.end());
    std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("fit_exponent: need >= 3 points");
    FitResult fit;
    fit.points = points;
    double sx = 0, sy = 0;
    for (auto [x, y] : points) {
        if (x <= 0 || y <= 0)
            throw std::invalid_argument("fit_exponent: values must be positive");
        sx += std::log(x);
        sy += std::log(y);
    }
    double n = (double)points.size();
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        double dx = std::log(x) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y) - my);
    }
    if (sxx == 0) throw std::invalid_argument("fit_exponent: degenerate x values");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0;
    for (auto [x, y] : points) {
        double r = std::log(y) - (fit.intercept + fit.slope * std::log(x));
        ss_res += r * r;
    }
    if (points.size() > 2)
        fit.stderr_slope = std::sqrt(ss_res / ((n - 2) * sxx));
    return fit;
}

namespace {

// Deterministic trial-parallel map: each index gets its own derived seed and
// output slot, so the result is independent of the thread count. The first
// worker exception is rethrown on the calling thread after the pool drains.
void parallel_trials(long long trials, int threads, const std::function<void(long long)>& fn) {
    if (threads <= 0) threads = (int)std::thread::hardware_concurrency();
    if (threads < 1) threads = 1;
    threads = (int)std::min<long long>(threads, trials);
    if (threads <= 1) {
        for (long long t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::mutex mtx;
    long long next = 0;
    std::exception_ptr failure;
    auto worker = [&]() {
        for (;;) {
            long long t;
            {
                std::lock_guard<std::mutex> lock(mtx);
                if (failure || next >= trials) return;
                t = next++;
            }
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mtx);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

double core_stat_value(const std::string& stat, const Multigraph& kernel,
                       const std::vector<long long>& counts) {
    if (stat == "girth") {
        auto g = girth_via_kernel(kernel, counts);
        return g ? (double)*g : -1.0;
    }
    if (stat == "maxloop") return (double)max_loop_cycle(kernel, counts);
    if (stat == "circumference") {
        auto c = circumference_via_kernel(kernel, counts);
        return c ? (double)*c : -1.0;
    }
    throw std::invalid_argument("unknown core statistic: " + stat);
}

}  // namespace

std::vector<std::pair<double, double>> CoreScalingReport::medians_vs_k() const {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : points) out.emplace_back((double)p.k, p.median);
    return out;
}

std::vector<std::pair<double, double>> CoreScalingReport::medians_vs_edges() const {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : points) out.emplace_back((double)p.kernel_edges, p.median);
    return out;
}

std::string CoreScalingReport::to_csv() const {
    std::ostringstream os;
    os << "n,m,seed,trial,stat,value\n";
    for (const auto& p : points)
        for (std::size_t t = 0; t < p.values.size(); ++t)
            os << p.kernel_edges << ',' << p.k << ',' << config.seed << ',' << t << ','
               << config.stat << ',' << p.values[t] << '\n';
    return os.str();
}

CoreScalingReport run_core_scaling(const CoreScalingConfig& config) {
    CoreScalingReport report;
    report.config = config;
    report.version = tool_version();

    bool block_stat = config.stat.rfind("block", 0) == 0;
    int block_index = 0;
    if (block_stat) {
        block_index = std::stoi(config.stat.substr(5)) - 1;
        if (block_index < 0) throw std::invalid_argument("block statistic index must be >= 1");
    }

    for (std::size_t pi = 0; pi < config.grid.size(); ++pi) {
        auto [size, k] = config.grid[pi];
        KernelFamilySpec spec;
        spec.family = config.family;
        spec.size = size;
        Multigraph kernel = kernel_family(spec);

        CoreScalingPoint point;
        point.size = size;
        point.k = k;
        point.kernel_vertices = kernel.vertex_count();
        point.kernel_edges = kernel.edge_count();
        point.kernel_loops = kernel.loop_count();
        point.values.assign((std::size_t)config.trials, 0.0);

        std::uint64_t point_seed = derive_seed(config.seed, (std::uint64_t)pi);
        parallel_trials(config.trials, config.threads, [&](long long t) {
            std::uint64_t trial_seed = derive_seed(point_seed, (std::uint64_t)t);
            if (block_stat) {
                auto r = random_multicore(kernel, k, trial_seed);
                auto bs = blocks(r.core);
                double v = (block_index < (int)bs.sizes.size()) ? (double)bs.sizes[block_index]
                                                                : -1.0;
                point.values[(std::size_t)t] = v;
            } else {
                auto counts = random_subdivision_counts(kernel, k, trial_seed);
                point.values[(std::size_t)t] = core_stat_value(config.stat, kernel, counts);
            }
        });
        point.median = median_of(point.values);
        report.points.push_back(std::move(point));
    }
    return report;
}

long long RegimeSpec::m_of(long long n) const {
    double s = 0;
    if (regime == "critical") {
        s = 0;
    } else if (regime == "subcritical") {
        s = -std::pow((double)n, beta);
    } else if (regime == "supercritical") {
        // the weakly supercritical window needs n^{2/3} << s << n
        if (beta <= 2.0 / 3.0 || beta >= 1.0)
            throw std::invalid_argument("supercritical regime needs beta in (2/3, 1)");
        s = std::pow((double)n, beta);
    } else {
        throw std::invalid_argument("unknown regime: " + regime);
    }
    long long m = (long long)std::floor((double)n / 2.0 + s);
    return std::max<long long>(0, m);
}

std::string PlanarScalingReport::to_csv() const {
    std::ostringstream os;
    os << "n,m,seed,trial,stat,value\n";
    for (const auto& p : points) {
        for (std::size_t t = 0; t < p.l1_circ.size(); ++t) {
            auto row = [&](const char* stat, double v) {
                os << p.n << ',' << p.m << ',' << regime.seed << ',' << t << ',' << stat << ','
                   << v << '\n';
            };
            if (p.l1_circ[t] >= 0) row("l1_circ", p.l1_circ[t]);
            if (p.l1_girth[t] >= 0) row("l1_girth", p.l1_girth[t]);
            if (p.l1_block1[t] >= 0) row("l1_block1", p.l1_block1[t]);
            if (p.rest_circ[t] >= 0) row("rest_circ", p.rest_circ[t]);
        }
    }
    return os.str();
}

PlanarScalingReport run_planar_scaling(const RegimeSpec& regime, int threads) {
    if (regime.regime == "supercritical") {
        // rejection acceptance decays quickly above the window; past n = 400
        // the kernel-family core experiments carry the same content
        for (long long n : regime.n_grid)
            if (n > 400)
                throw std::invalid_argument(
                    "supercritical planar runs are capped at n = 400; use kernel-family "
                    "core experiments beyond that");
    }
    PlanarScalingReport report;
    report.regime = regime;
    report.version = tool_version();

    for (std::size_t pi = 0; pi < regime.n_grid.size(); ++pi) {
        long long n = regime.n_grid[pi];
        long long m = regime.m_of(n);
        PlanarScalingPoint point;
        point.n = n;
        point.m = m;
        point.l1_circ.assign((std::size_t)regime.trials, -1.0);
        point.l1_girth.assign((std::size_t)regime.trials, -1.0);
        point.l1_block1.assign((std::size_t)regime.trials, -1.0);
        point.rest_circ.assign((std::size_t)regime.trials, -1.0);

        std::vector<long long> tries((std::size_t)regime.trials, 0);
        std::vector<char> tree((std::size_t)regime.trials, 0);
        std::vector<char> failed((std::size_t)regime.trials, 0);

        std::uint64_t point_seed = derive_seed(regime.seed, (std::uint64_t)pi);
        parallel_trials(regime.trials, threads, [&](long long t) {
            auto sample = planar_rejection_sample(n, m, derive_seed(point_seed, (std::uint64_t)t),
                                                  regime.max_tries_per_sample);
            tries[(std::size_t)t] = sample.tries;
            if (sample.exhausted()) {
                failed[(std::size_t)t] = 1;
                return;
            }
            const Multigraph& g = *sample.graph;
            auto l1_vertices = largest_component(g);
            Multigraph l1 = induced_subgraph(g, l1_vertices);
            if (l1.edge_count() == l1.vertex_count() - 1) {
                tree[(std::size_t)t] = 1;
            } else {
                auto circ = circumference_exact(l1);
                if (circ) point.l1_circ[(std::size_t)t] = (double)*circ;
                auto gir = girth_exact(l1);
                if (gir) point.l1_girth[(std::size_t)t] = (double)*gir;
                auto bs = blocks(l1);
                if (!bs.sizes.empty()) point.l1_block1[(std::size_t)t] = (double)bs.sizes[0];
            }
            std::vector<char> in_l1((std::size_t)g.vertex_count() + 1, 0);
            for (int v : l1_vertices) in_l1[(std::size_t)v] = 1;
            std::vector<int> rest_vertices;
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (!in_l1[(std::size_t)v]) rest_vertices.push_back(v);
            if (!rest_vertices.empty()) {
                Multigraph rest = induced_subgraph(g, rest_vertices);
                auto rc = circumference_exact(rest);
                if (rc) point.rest_circ[(std::size_t)t] = (double)*rc;
            }
        });

        for (long long t = 0; t < regime.trials; ++t) {
            if (failed[(std::size_t)t]) report.starved = true;
            point.attempts += tries[(std::size_t)t];
            if (!failed[(std::size_t)t]) {
                point.accepted++;
                if (tree[(std::size_t)t]) point.tree_count++;
            }
        }
        point.tree_fraction =
            point.accepted > 0 ? (double)point.tree_count / (double)point.accepted : 0.0;
        std::vector<double> cyc;
        for (double v : point.l1_circ)
            if (v >= 0) cyc.push_back(v);
        if (!cyc.empty()) point.median_l1_circ = median_of(cyc);
        report.points.push_back(std::move(point));
        if (report.starved) return report;  // abort with partial data
    }

    std::vector<std::pair<double, double>> fit_points;
    for (const auto& p : report.points)
        if (p.median_l1_circ) fit_points.emplace_back((double)p.n, *p.median_l1_circ);
    if (fit_points.size() >= 3) report.l1_circ_fit = fit_exponent(fit_points);
    return report;
}

}  // namespace corekit

#ifndef COREKIT_POLYA_HPP
#define COREKIT_POLYA_HPP

#include <cstdint>
#include <vector>

#include "corekit/rational.hpp"

namespace corekit {

// N-colour Polya urn with singleton initialization: one ball per colour, each
// draw returns the ball plus one more of the same colour. counts[i] is the
// number of draws of colour i after k steps.
struct UrnOutcome {
    long long colors = 0;
    long long draws = 0;
    std::vector<long long> counts;
};

struct TwoColourOutcome {
    long long black = 0, white = 0, draws = 0;
    long long drawn_black = 0;
};

// Sequential O(k) sampler over the live ball list; colour i is drawn with
// probability (1 + X_i) / (N + draws so far). The same routine drives the
// edge-subdivision process, which keeps the two identical in distribution by
// construction.
UrnOutcome urn_sample(long long colors, long long draws, std::uint64_t seed);

// Appends colour indices of k draws into `counts` (size N, zeroed by caller)
// reusing `balls` as scratch. Exposed for the subdivision process.
void urn_sample_into(long long colors, long long draws, std::uint64_t seed,
                     std::vector<long long>& counts, std::vector<std::uint32_t>& balls);

// Marginal law of one colour: P(X_i = x) = C(k+N-x-2, N-2) / C(k+N-1, N-1).
// Requires N >= 2 and 0 <= x <= k.
Rational urn_pmf(long long colors, long long draws, long long x);

// P(X_i >= x) and P(X_i <= x), exact.
Rational urn_tail_ge(long long colors, long long draws, long long x);
Rational urn_tail_le(long long colors, long long draws, long long x);

// Empirical distribution of min/max over the first f colours.
struct MinMaxStats {
    long long colors = 0, draws = 0, first = 0, trials = 0;
    std::vector<long long> mins;  // sorted ascending
    std::vector<long long> maxs;  // sorted ascending
    long long min_quantile(double q) const;
    long long max_quantile(double q) const;
    long long min_median() const { return min_quantile(0.5); }
    long long max_median() const { return max_quantile(0.5); }
};

MinMaxStats urn_minmax(long long colors, long long draws, long long first, long long trials,
                       std::uint64_t seed);

// Tail bounds on the marginal law. lower_linear is exact rational; the other
// three involve exp() and are reported as doubles together with their side
// conditions.
struct UrnTailBounds {
    long long colors = 0, draws = 0, x = 0;
    Rational le_linear;         // P(X <= x) <= (x+1) N/(k+N), always applies
    double ge_exponential = 0;  // P(X >= x) <= 2 exp(-(N-2)x/(k+N)), always applies
    double ge_complement = 0;   // P(X >= x) <= 1 - ((N-1)/(k+N)) x exp(-2Nx/k)
    bool ge_complement_applies = false;  // needs x <= k/2
    double le_double_exp = 0;            // P(X <= x) <= exp(-exp(-2Nx/k)/64)
    bool le_double_exp_applies = false;  // needs k >= 8N and x <= k/2
};

UrnTailBounds urn_tail_bounds(long long colors, long long draws, long long x);

// Two-colour urn with b black / w white starters: E X = bk/(b+w),
// Var X = b w k (b+w+k) / ((b+w)^2 (b+w+1)).
std::pair<Rational, Rational> two_colour_moments(long long black, long long white,
                                                 long long draws);

TwoColourOutcome two_colour_sample(long long black, long long white, long long draws,
                                   std::uint64_t seed);

}  // namespace corekit

#endif

#include "corekit/polya.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "corekit/rng.hpp"

namespace corekit {

void urn_sample_into(long long colors, long long draws, std::uint64_t seed,
                     std::vector<long long>& counts, std::vector<std::uint32_t>& balls) {
    if (colors < 1) throw std::invalid_argument("urn_sample: need at least one colour");
    if (draws < 0) throw std::invalid_argument("urn_sample: negative draw count");
    balls.clear();
    balls.reserve((std::size_t)(colors + draws));
    for (long long c = 0; c < colors; ++c) balls.push_back((std::uint32_t)c);
    Xoshiro256 rng(seed);
    for (long long i = 0; i < draws; ++i) {
        std::uint32_t c = balls[(std::size_t)rng.bounded(balls.size())];
        counts[c]++;
        balls.push_back(c);
    }
}

UrnOutcome urn_sample(long long colors, long long draws, std::uint64_t seed) {
    UrnOutcome out;
    out.colors = colors;
    out.draws = draws;
    out.counts.assign((std::size_t)colors, 0);
    std::vector<std::uint32_t> balls;
    urn_sample_into(colors, draws, seed, out.counts, balls);
    return out;
}

Rational urn_pmf(long long colors, long long draws, long long x) {
    if (colors < 2) throw std::invalid_argument("urn_pmf: needs at least two colours");
    if (x < 0 || x > draws) throw std::out_of_range("urn_pmf: x outside 0..k");
    return Rational(binomial(draws + colors - x - 2, colors - 2),
                    binomial(draws + colors - 1, colors - 1));
}

Rational urn_tail_ge(long long colors, long long draws, long long x) {
    if (x <= 0) return Rational(1);
    if (x > draws) return Rational(0);
    // sum_{y>=x} C(k+N-y-2, N-2) = C(k+N-x-1, N-1) by the hockey stick.
    return Rational(binomial(draws + colors - x - 1, colors - 1),
                    binomial(draws + colors - 1, colors - 1));
}

Rational urn_tail_le(long long colors, long long draws, long long x) {
    if (x < 0) return Rational(0);
    if (x >= draws) return Rational(1);
    return Rational(1) - urn_tail_ge(colors, draws, x + 1);
}

long long MinMaxStats::min_quantile(double q) const {
    if (mins.empty()) throw std::logic_error("min_quantile: no trials");
    std::size_t i = (std::size_t)(q * (double)(mins.size() - 1) + 0.5);
    return mins[std::min(i, mins.size() - 1)];
}

long long MinMaxStats::max_quantile(double q) const {
    if (maxs.empty()) throw std::logic_error("max_quantile: no trials");
    std::size_t i = (std::size_t)(q * (double)(maxs.size() - 1) + 0.5);
    return maxs[std::min(i, maxs.size() - 1)];
}

MinMaxStats urn_minmax(long long colors, long long draws, long long first, long long trials,
                       std::uint64_t seed) {
    if (first < 1 || first > colors)
        throw std::invalid_argument("urn_minmax: need 1 <= f <= N");
    MinMaxStats st;
    st.colors = colors;
    st.draws = draws;
    st.first = first;
    st.trials = trials;
    st.mins.reserve((std::size_t)trials);
    st.maxs.reserve((std::size_t)trials);
    std::vector<long long> counts((std::size_t)colors);
    std::vector<std::uint32_t> balls;
    for (long long t = 0; t < trials; ++t) {
        std::fill(counts.begin(), counts.end(), 0);
        urn_sample_into(colors, draws, derive_seed(seed, (std::uint64_t)t), counts, balls);
        long long lo = counts[0], hi = counts[0];
        for (long long i = 1; i < first; ++i) {
            lo = std::min(lo, counts[(std::size_t)i]);
            hi = std::max(hi, counts[(std::size_t)i]);
        }
        st.mins.push_back(lo);
        st.maxs.push_back(hi);
    }
    std::sort(st.mins.begin(), st.mins.end());
    std::sort(st.maxs.begin(), st.maxs.end());
    return st;
}

UrnTailBounds urn_tail_bounds(long long colors, long long draws, long long x) {
    if (x < 0 || x > draws) throw std::out_of_range("urn_tail_bounds: x outside 0..k");
    UrnTailBounds b;
    b.colors = colors;
    b.draws = draws;
    b.x = x;
    b.le_linear = Rational((x + 1) * colors, draws + colors);
    if (b.le_linear > Rational(1)) b.le_linear = Rational(1);
    double N = (double)colors, k = (double)draws, xv = (double)x;
    b.ge_exponential = 2.0 * std::exp(-((N - 2.0) / (k + N)) * xv);
    b.ge_complement_applies = (2 * x <= draws) && draws > 0;
    if (b.ge_complement_applies)
        b.ge_complement = 1.0 - ((N - 1.0) / (k + N)) * xv * std::exp(-2.0 * N * xv / k);
    b.le_double_exp_applies = (draws >= 8 * colors) && (2 * x <= draws);
    if (b.le_double_exp_applies)
        b.le_double_exp = std::exp(-std::exp(-2.0 * N * xv / k) / 64.0);
    return b;
}

std::pair<Rational, Rational> two_colour_moments(long long black, long long white,
                                                 long long draws) {
    if (black < 1 || white < 1)
        throw std::invalid_argument("two_colour_moments: need b, w >= 1");
    long long s = black + white;
    Rational mean(black * draws, s);
    Rational var = Rational(black, s) * Rational(white, s) *
                   Rational(draws * (s + draws), s + 1);
    return {mean, var};
}

TwoColourOutcome two_colour_sample(long long black, long long white, long long draws,
                                   std::uint64_t seed) {
    TwoColourOutcome out;
    out.black = black;
    out.white = white;
    out.draws = draws;
    Xoshiro256 rng(seed);
    long long b = black, total = black + white;
    for (long long i = 0; i < draws; ++i) {
        if ((long long)rng.bounded((std::uint64_t)total) < b) {
            out.drawn_black++;
            ++b;
        }
        ++total;
    }
    return out;
}

}  // namespace corekit

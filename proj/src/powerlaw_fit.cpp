#include "biproj/powerlaw_fit.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "biproj/errors.hpp"

namespace biproj {

double hurwitz_zeta(double alpha, double q) {
    // direct sum plus an Euler-Maclaurin tail
    constexpr int kDirectTerms = 32;
    double sum = 0.0;
    for (int j = 0; j < kDirectTerms; ++j) sum += std::pow(q + j, -alpha);
    const double tail_base = q + kDirectTerms;
    const double head = std::pow(tail_base, -alpha);
    sum += tail_base * head / (alpha - 1.0);  // (q+N)^(1-alpha)/(alpha-1)
    sum += 0.5 * head;
    sum += alpha * head / tail_base / 12.0;
    sum -= alpha * (alpha + 1.0) * (alpha + 2.0) * head / (tail_base * tail_base * tail_base) / 720.0;
    return sum;
}

namespace {

struct TailView {
    // distinct values >= x_min with cumulative data from the full sample
    const std::vector<std::int64_t>& values;       // sorted distinct values
    const std::vector<std::uint64_t>& counts;      // per distinct value
    const std::vector<std::uint64_t>& suffix_n;    // # samples >= values[i]
    const std::vector<double>& suffix_log;         // sum of log(x) over samples >= values[i]
    std::size_t start;                             // index of x_min in `values`

    std::uint64_t n() const { return suffix_n[start]; }
    double log_sum() const { return suffix_log[start]; }
    std::int64_t x_min() const { return values[start]; }
};

// Discrete power-law log-likelihood for the tail, up to a constant:
//   l(alpha) = -n log zeta(alpha, x_min) - alpha sum log x_i
double log_likelihood(double alpha, const TailView& tail) {
    return -static_cast<double>(tail.n()) *
               std::log(hurwitz_zeta(alpha, static_cast<double>(tail.x_min()))) -
           alpha * tail.log_sum();
}

// Golden-section maximizer; the likelihood is concave in alpha.
double fit_alpha(const TailView& tail) {
    double lo = 1.0 + 1e-6, hi = 25.0;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - phi * (hi - lo);
    double b = lo + phi * (hi - lo);
    double fa = log_likelihood(a, tail);
    double fb = log_likelihood(b, tail);
    for (int iter = 0; iter < 80 && hi - lo > 1e-9; ++iter) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + phi * (hi - lo);
            fb = log_likelihood(b, tail);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - phi * (hi - lo);
            fa = log_likelihood(a, tail);
        }
    }
    return (lo + hi) / 2.0;
}

// KS distance between the tail ECDF and the fitted discrete CDF
//   F(x) = 1 - zeta(alpha, x+1) / zeta(alpha, x_min)
double ks_distance(double alpha, const TailView& tail) {
    const double z0 = hurwitz_zeta(alpha, static_cast<double>(tail.x_min()));
    const auto n_tail = static_cast<double>(tail.n());
    double d = 0.0;
    std::uint64_t seen = 0;
    for (std::size_t i = tail.start; i < tail.values.size(); ++i) {
        seen += tail.counts[i];
        const double ecdf = static_cast<double>(seen) / n_tail;
        const double fitted =
            1.0 - hurwitz_zeta(alpha, static_cast<double>(tail.values[i]) + 1.0) / z0;
        d = std::max(d, std::abs(ecdf - fitted));
    }
    return d;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<std::int64_t>& samples,
                          std::optional<std::int64_t> fixed_x_min) {
    if (samples.size() < 50) throw FitError("power-law fit needs at least 50 samples");
    for (std::int64_t x : samples)
        if (x < 1) throw FitError("power-law fit requires samples >= 1");

    std::vector<std::int64_t> sorted(samples);
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::int64_t> values;
    std::vector<std::uint64_t> counts;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        values.push_back(sorted[i]);
        counts.push_back(j - i);
        i = j;
    }
    std::vector<std::uint64_t> suffix_n(values.size() + 1, 0);
    std::vector<double> suffix_log(values.size() + 1, 0.0);
    for (std::size_t i = values.size(); i-- > 0;) {
        suffix_n[i] = suffix_n[i + 1] + counts[i];
        suffix_log[i] = suffix_log[i + 1] +
                        static_cast<double>(counts[i]) * std::log(static_cast<double>(values[i]));
    }

    const std::int64_t q90 = sorted[(sorted.size() * 9) / 10];
    constexpr std::uint64_t kMinTail = 10;

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (fixed_x_min) {
            if (values[i] == *fixed_x_min) candidates.push_back(i);
            continue;
        }
        if (values[i] > q90) break;
        if (suffix_n[i] < kMinTail) break;
        if (values.size() - i < 2) break;  // need at least two distinct tail values
        candidates.push_back(i);
    }
    if (fixed_x_min && candidates.empty()) {
        // threshold between observed values: synthesize the tail start
        auto it = std::lower_bound(values.begin(), values.end(), *fixed_x_min);
        if (it != values.end()) candidates.push_back(static_cast<std::size_t>(it - values.begin()));
    }
    if (candidates.empty())
        throw FitError("no usable fit threshold (degenerate or too-short tail)");

    PowerLawFit best;
    bool have_best = false;
    for (std::size_t i : candidates) {
        TailView tail{values, counts, suffix_n, suffix_log, i};
        if (tail.n() < 2 || values.size() - i < 2) continue;
        const double alpha = fit_alpha(tail);
        const double d = ks_distance(alpha, tail);
        if (!have_best || d < best.ks_distance) {
            best.alpha = alpha;
            best.x_min = values[i];
            best.ks_distance = d;
            best.n_tail = tail.n();
            best.stderr_alpha = (alpha - 1.0) / std::sqrt(static_cast<double>(tail.n()));
            have_best = true;
        }
    }
    if (!have_best) throw FitError("no usable fit threshold (degenerate or too-short tail)");
    return best;
}

}  // namespace biproj

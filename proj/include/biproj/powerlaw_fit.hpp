#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace biproj {

struct PowerLawFit {
    double alpha = 0.0;        // fitted decay exponent
    std::int64_t x_min = 1;    // fit threshold (samples >= x_min enter the fit)
    double stderr_alpha = 0.0; // (alpha - 1) / sqrt(n_tail)
    double ks_distance = 1.0;  // max |ECDF - fitted CDF| over the tail
    std::uint64_t n_tail = 0;  // number of samples >= x_min
};

// Hurwitz zeta sum_{k>=0} (q + k)^-alpha, alpha > 1, q >= 1.
double hurwitz_zeta(double alpha, double q);

// Discrete maximum-likelihood power-law fit with the threshold x_min chosen
// by minimizing the KS distance over candidate thresholds (observed values
// up to the 90th percentile). Requires >= 50 samples, all >= 1; throws
// FitError otherwise, or when no threshold leaves a usable tail.
// A fixed threshold skips the search.
PowerLawFit fit_power_law(const std::vector<std::int64_t>& samples,
                          std::optional<std::int64_t> fixed_x_min = std::nullopt);

}  // namespace biproj

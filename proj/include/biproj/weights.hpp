#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace biproj {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Truncated power-law distribution parameters: density proportional to
// w^-alpha on [w_min, w_max], continuous or restricted to integers.
struct PowerLawParams {
    double alpha = 2.5;
    double w_min = 1.0;
    double w_max = std::numeric_limits<double>::infinity();
    bool discrete = true;

    // Throws ParameterError when the parameters do not describe a
    // normalizable distribution.
    void validate() const;

    bool unbounded() const { return !(w_max < std::numeric_limits<double>::infinity()); }
};

// Immutable side-tagged sequence of positive node weights with cached
// power-sum moments M_k = (1/n) sum_i w_i^k. Safe to share across threads.
class WeightSequence {
  public:
    WeightSequence(Side side, std::vector<double> values);
    WeightSequence(const WeightSequence& other);
    WeightSequence(WeightSequence&& other) noexcept;
    WeightSequence& operator=(const WeightSequence&) = delete;
    WeightSequence& operator=(WeightSequence&&) = delete;

    Side side() const { return side_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double max_value() const { return max_; }
    double min_value() const { return min_; }
    double sum() const { return sum_; }

    // k-th moment, k >= 1; computed once and cached.
    double moment(int k) const;

    // True when every value is a positive integer (requirement for the
    // grouped sampler and the random intersection baseline).
    bool integer_valued() const;

    // One value per line; '#' starts a comment line.
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static WeightSequence load(std::istream& in, Side side);
    static WeightSequence load_file(const std::string& path, Side side);

  private:
    Side side_;
    std::vector<double> values_;
    double max_ = 0.0;
    double min_ = 0.0;
    double sum_ = 0.0;
    mutable std::map<int, double> moments_;
    mutable std::mutex moments_mutex_;
};

// n i.i.d. samples from the truncated power law. Deterministic given
// (params, n, seed); discrete mode yields integer-valued weights.
WeightSequence sample_power_law(const PowerLawParams& params, std::size_t n, std::uint64_t seed,
                                Side side = Side::Left);

// Clamps values to [min_value(seq), w_max]; companion utility for
// experiment protocols that cap rather than truncate.
WeightSequence cap(const WeightSequence& seq, double w_max);

// Finite-n surrogate checks for the asymptotic weight-sequence assumptions.
struct AssumptionReport {
    double delta = 0.0;
    bool well_defined_probs = false;
    bool bounded_range = false;
    bool bounded_moments = false;
    // inequality label -> (observed lhs, allowed rhs)
    std::map<std::string, std::pair<double, double>> details;

    bool all() const { return well_defined_probs && bounded_range && bounded_moments; }
};

// Checks: max(SL)*max(SR) <= n_R*M_R1 (exact); max weight <= n_R^(1/2-delta);
// M_R2 <= slack*M_R1^2 and M_R4 <= slack*n_R^(1-2 delta).
AssumptionReport check_assumptions(const WeightSequence& left, const WeightSequence& right,
                                   double delta, double slack = 10.0);

}  // namespace biproj

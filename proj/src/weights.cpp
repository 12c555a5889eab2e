#include "biproj/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "biproj/errors.hpp"
#include "biproj/rng.hpp"

namespace biproj {

void PowerLawParams::validate() const {
    if (!(alpha > 1.0)) throw ParameterError("power law requires alpha > 1");
    if (!(w_min >= 1.0)) throw ParameterError("power law requires w_min >= 1");
    if (!(w_max >= w_min)) throw ParameterError("power law requires w_max >= w_min");
    if (discrete && std::floor(w_min) != w_min)
        throw ParameterError("discrete power law requires an integer w_min");
}

WeightSequence::WeightSequence(Side side, std::vector<double> values)
    : side_(side), values_(std::move(values)) {
    if (values_.empty()) throw DomainError("weight sequence must be nonempty");
    max_ = values_[0];
    min_ = values_[0];
    double sum = 0.0;
    for (double w : values_) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw ParameterError("weights must be finite and strictly positive");
        max_ = std::max(max_, w);
        min_ = std::min(min_, w);
        sum += w;
    }
    sum_ = sum;
}

WeightSequence::WeightSequence(const WeightSequence& other)
    : side_(other.side_), values_(other.values_), max_(other.max_), min_(other.min_),
      sum_(other.sum_) {
    std::lock_guard<std::mutex> lock(other.moments_mutex_);
    moments_ = other.moments_;
}

WeightSequence::WeightSequence(WeightSequence&& other) noexcept
    : side_(other.side_), values_(std::move(other.values_)), max_(other.max_), min_(other.min_),
      sum_(other.sum_), moments_(std::move(other.moments_)) {}

double WeightSequence::moment(int k) const {
    if (k < 1) throw ParameterError("moment order must be >= 1");
    std::lock_guard<std::mutex> lock(moments_mutex_);
    auto it = moments_.find(k);
    if (it != moments_.end()) return it->second;
    double sum = 0.0;
    for (double w : values_) sum += std::pow(w, k);
    double m = sum / static_cast<double>(values_.size());
    moments_.emplace(k, m);
    return m;
}

bool WeightSequence::integer_valued() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double w) { return std::floor(w) == w; });
}

void WeightSequence::save(std::ostream& out) const {
    out << "# " << side_name(side_) << " weights, n=" << values_.size() << '\n';
    out.precision(17);
    for (double w : values_) out << w << '\n';
}

void WeightSequence::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open " + path + " for writing");
    save(out);
}

WeightSequence WeightSequence::load(std::istream& in, Side side) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        double w;
        if (!(ls >> w)) throw ParseError("expected a numeric weight", line_no);
        std::string extra;
        if (ls >> extra) throw ParseError("unexpected trailing token '" + extra + "'", line_no);
        values.push_back(w);
    }
    if (values.empty()) throw DomainError("weight file holds no values");
    return WeightSequence(side, std::move(values));
}

WeightSequence WeightSequence::load_file(const std::string& path, Side side) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    return load(in, side);
}

namespace {

// Inverse CDF of the continuous truncated power law.
double continuous_quantile(double u, double alpha, double w_min, double w_max) {
    const double beta = 1.0 - alpha;  // < 0
    const double lo = std::pow(w_min, beta);
    const double hi = std::isinf(w_max) ? 0.0 : std::pow(w_max, beta);
    return std::pow(lo - u * (lo - hi), 1.0 / beta);
}

class DiscreteTableSampler {
  public:
    DiscreteTableSampler(double alpha, std::int64_t k_min, std::int64_t k_max)
        : k_min_(k_min) {
        const std::int64_t support = k_max - k_min + 1;
        cumulative_.reserve(static_cast<std::size_t>(support));
        double sum = 0.0;
        for (std::int64_t k = k_min; k <= k_max; ++k) {
            sum += std::pow(static_cast<double>(k), -alpha);
            cumulative_.push_back(sum);
        }
        for (double& c : cumulative_) c /= sum;
        cumulative_.back() = 1.0;
    }

    double operator()(Rng& rng) const {
        const double u = rng.uniform01();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        return static_cast<double>(k_min_ + (it - cumulative_.begin()));
    }

  private:
    std::int64_t k_min_;
    std::vector<double> cumulative_;
};

// Zipf sampler for unbounded (or very wide) integer support, by rejection
// from the floored continuous Pareto envelope (Devroye's method,
// generalized to a minimum value m >= 1).
class DiscreteRejectionSampler {
  public:
    DiscreteRejectionSampler(double alpha, std::int64_t k_min, double k_max)
        : beta_(alpha - 1.0), m_(static_cast<double>(k_min)), k_max_(k_max),
          b_(std::pow(1.0 + 1.0 / static_cast<double>(k_min), alpha - 1.0)) {}

    double operator()(Rng& rng) const {
        for (;;) {
            const double u = 1.0 - rng.uniform01();  // (0, 1]
            const double v = rng.uniform01();
            const double x = std::floor(m_ * std::pow(u, -1.0 / beta_));
            if (!(x <= k_max_) || x >= 0x1p62) continue;  // truncation / overflow retry
            const double t = std::pow(1.0 + 1.0 / x, beta_);
            if (v * x * (t - 1.0) / (b_ - 1.0) <= t / b_) return x;
        }
    }

  private:
    double beta_;
    double m_;
    double k_max_;
    double b_;
};

}  // namespace

WeightSequence sample_power_law(const PowerLawParams& params, std::size_t n, std::uint64_t seed,
                                Side side) {
    params.validate();
    if (n < 1) throw ParameterError("need n >= 1 samples");

    Rng rng(seed);
    std::vector<double> values;
    values.reserve(n);

    if (!params.discrete) {
        for (std::size_t i = 0; i < n; ++i)
            values.push_back(
                continuous_quantile(rng.uniform01(), params.alpha, params.w_min, params.w_max));
        return WeightSequence(side, std::move(values));
    }

    const auto k_min = static_cast<std::int64_t>(params.w_min);
    const double k_max_real = params.unbounded()
                                  ? std::numeric_limits<double>::infinity()
                                  : std::floor(params.w_max);
    if (!params.unbounded() && k_max_real < static_cast<double>(k_min))
        throw ParameterError("no integer support in [w_min, w_max]");

    // Inverse-CDF table for bounded support; rejection from the continuous
    // envelope otherwise (also when the table would be unreasonably large).
    constexpr double kTableLimit = 1e7;
    if (!params.unbounded() && k_max_real - static_cast<double>(k_min) < kTableLimit) {
        DiscreteTableSampler sampler(params.alpha, k_min,
                                     static_cast<std::int64_t>(k_max_real));
        for (std::size_t i = 0; i < n; ++i) values.push_back(sampler(rng));
    } else {
        DiscreteRejectionSampler sampler(params.alpha, k_min, k_max_real);
        for (std::size_t i = 0; i < n; ++i) values.push_back(sampler(rng));
    }
    return WeightSequence(side, std::move(values));
}

WeightSequence cap(const WeightSequence& seq, double w_max) {
    if (!(w_max > 0.0)) throw ParameterError("cap requires w_max > 0");
    std::vector<double> values = seq.values();
    for (double& w : values) w = std::min(w, w_max);
    return WeightSequence(seq.side(), std::move(values));
}

AssumptionReport check_assumptions(const WeightSequence& left, const WeightSequence& right,
                                   double delta, double slack) {
    if (!(delta > 0.0)) throw ParameterError("delta must be > 0");
    if (!(slack > 0.0)) throw ParameterError("slack must be > 0");

    const auto n_right = static_cast<double>(right.size());
    const double mr1 = right.moment(1);
    const double mr2 = right.moment(2);
    const double mr4 = right.moment(4);

    AssumptionReport report;
    report.delta = delta;

    const double max_product = left.max_value() * right.max_value();
    report.well_defined_probs = max_product <= n_right * mr1;
    report.details["max(SL)*max(SR) <= nR*MR1"] = {max_product, n_right * mr1};

    const double max_weight = std::max(left.max_value(), right.max_value());
    const double range_bound = std::pow(n_right, 0.5 - delta);
    report.bounded_range = max_weight <= range_bound;
    report.details["max(SL,SR) <= nR^(1/2-delta)"] = {max_weight, range_bound};

    const double second_bound = slack * mr1 * mr1;
    const double fourth_bound = slack * std::pow(n_right, 1.0 - 2.0 * delta);
    report.bounded_moments = mr2 <= second_bound && mr4 <= fourth_bound;
    report.details["MR2 <= c*MR1^2"] = {mr2, second_bound};
    report.details["MR4 <= c*nR^(1-2delta)"] = {mr4, fourth_bound};

    return report;
}

}  // namespace biproj

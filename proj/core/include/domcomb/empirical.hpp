#ifndef DOMCOMB_EMPIRICAL_HPP_
#define DOMCOMB_EMPIRICAL_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "domcomb/rng.hpp"

namespace domcomb {

// A sorted sample with optional per-point weights.  Uniform weights are the
// default; bootstrap resampling produces reweighted samples over the same
// values.  Immutable after construction.
class Sample {
 public:
  // Sorts the values and assigns uniform weights 1/n.
  static Sample from_values(std::vector<double> values);

  // Values must be sorted ascending; weights nonnegative and summing to 1
  // within 1e-12.
  static Sample weighted(std::vector<double> sorted_values,
                         std::vector<double> weights);

  // Reads one observation per line.  Blank lines and lines starting with '#'
  // are ignored; anything else that does not parse as a number raises
  // DataError naming the offending line.
  static Sample load(const std::string& path);
  static Sample read(std::istream& in, const std::string& name);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  bool uniform_weights() const { return weights_.empty(); }
  double weight(std::size_t i) const {
    return weights_.empty() ? 1.0 / static_cast<double>(values_.size())
                            : weights_[i];
  }
  // Materialized weight vector (filled with 1/n in the uniform case).
  std::vector<double> weight_vector() const;

  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  // Returns a copy with every value mapped to scale*x + shift (scale > 0).
  Sample affine(double scale, double shift) const;

 private:
  Sample() = default;
  std::vector<double> values_;
  std::vector<double> weights_;  // empty means uniform 1/n
};

// Right-continuous step CDF of a (possibly weighted) sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(Sample sample);

  // Total weight of points <= x.  O(log n).
  double operator()(double x) const;

  const Sample& sample() const { return sample_; }

 private:
  Sample sample_;
  std::vector<double> prefix_;  // empty when weights are uniform
};

// Multinomial(n; 1/n,...,1/n) counts via n independent index draws.
std::vector<uint32_t> multinomial_counts(std::size_t n, Rng& rng);

// Bootstrap reweighting: same values, weights M_i/n with multinomial counts.
// The input sample must have uniform weights.
Sample bootstrap_resample(const Sample& sample, Rng& rng);

// ECDF of n i.i.d. standard Cauchy draws.
EmpiricalCdf cauchy_sample_ecdf(std::size_t n, Rng& rng);

}  // namespace domcomb

#endif  // DOMCOMB_EMPIRICAL_HPP_

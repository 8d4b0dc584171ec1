#ifndef DOMCOMB_DISTRIBUTIONS_HPP_
#define DOMCOMB_DISTRIBUTIONS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "domcomb/empirical.hpp"
#include "domcomb/rng.hpp"

namespace domcomb {

// Parametric families used as simulation alternatives and calibration
// references.  Supports on the positive half line unless noted.
//
//   Pareto(sh)            1 - x^-sh on x >= 1
//   Frechet(sh)           exp(-x^-sh) on x > 0
//   Loglogistic(sh)       x^sh / (1 + x^sh) on x >= 0
//   StudentT(df)          symmetric on R; df=1 is standard Cauchy
//   Cauchy                arctan(x)/pi + 1/2
//   BernoulliParetoSum    0.45*Bernoulli(1/2) + 0.55*Pareto(1), independent
//   StPetersburg          2^K with P(K=k)=2^-k, stored truncated at `terms`
//   PiecewiseFlat         reciprocal pieces with a flat segment on [1/2, 1)
//   TransformedPareto     power-kinked Lomax: v(Z), v(x)=x^a (x<1), x^b (x>=1)
//   Lomax                 1 - (x+1)^-alpha on x >= 0
enum class Family {
  Pareto,
  Frechet,
  Loglogistic,
  StudentT,
  Cauchy,
  BernoulliParetoSum,
  StPetersburg,
  PiecewiseFlat,
  TransformedPareto,
  Lomax,
};

struct FamilySpec {
  Family family = Family::Cauchy;
  double sh = 1.0;     // Pareto / Frechet / Loglogistic shape
  double df = 1.0;     // StudentT degrees of freedom
  double alpha = 1.0;  // TransformedPareto / Lomax
  double a = 2.0;      // TransformedPareto exponent below 1
  double b = 3.0;      // TransformedPareto exponent at and above 1
  int terms = 40;      // StPetersburg stored support size

  // Throws std::domain_error when a parameter is outside its domain.
  void validate() const;

  // Parses "name(key=value,...)", e.g. "pareto(sh=2)", "student(df=1.5)",
  // "mix-bern-pareto".  Throws std::invalid_argument on unknown names or
  // malformed parameter lists.
  static FamilySpec parse(const std::string& text);

  // Canonical text form; parse(label()) round-trips.
  std::string label() const;

  // The parameter shown in result tables (sh, df or alpha; 0 when none).
  double table_param() const;
};

double family_cdf(const FamilySpec& spec, double x);
double family_quantile(const FamilySpec& spec, double p);
bool family_is_continuous(const FamilySpec& spec);

// One draw; continuous families use the inverse transform except StudentT,
// which is sampled as normal / sqrt(chi_square(df)/df).  StPetersburg draws
// follow the exact (untruncated) law.
double family_draw(const FamilySpec& spec, Rng& rng);

// n i.i.d. draws as a sorted uniform-weight sample.
Sample family_sample(const FamilySpec& spec, std::size_t n, Rng& rng);

// A distribution on a finite stored support, with the remaining tail mass
// tracked so downstream computations can carry interval bounds.
struct DiscreteDistribution {
  std::vector<double> support;  // strictly increasing
  std::vector<double> pmf;      // nonnegative, sum + truncation_mass = 1
  double truncation_mass = 0.0;

  void validate() const;
  // Stored mass at points <= x; the true CDF lies within
  // [cdf_lower(x), cdf_lower(x) + truncation_mass].
  double cdf_lower(double x) const;
};

DiscreteDistribution st_petersburg_distribution(int terms = 40);

// Minimal continuous-distribution interface for operations that accept any
// evaluable CDF (shape checks, covariance formulas, quadrature).
class RealDist {
 public:
  virtual ~RealDist() = default;
  virtual double cdf(double x) const = 0;
  virtual double quantile(double p) const = 0;
  virtual double draw(Rng& rng) const { return quantile(rng.uniform01()); }
};

class FamilyDist final : public RealDist {
 public:
  explicit FamilyDist(FamilySpec spec);
  double cdf(double x) const override { return family_cdf(spec_, x); }
  double quantile(double p) const override { return family_quantile(spec_, p); }
  double draw(Rng& rng) const override { return family_draw(spec_, rng); }
  const FamilySpec& spec() const { return spec_; }

 private:
  FamilySpec spec_;
};

}  // namespace domcomb

#endif  // DOMCOMB_DISTRIBUTIONS_HPP_

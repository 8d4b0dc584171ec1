#include "domcomb/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "domcomb/quadrature.hpp"

namespace domcomb {
namespace {

double pareto_cdf(double x, double sh) {
  return x >= 1.0 ? 1.0 - std::pow(x, -sh) : 0.0;
}

double lomax_cdf(double x, double alpha) {
  return x >= 0.0 ? 1.0 - std::pow(x + 1.0, -alpha) : 0.0;
}

double lomax_quantile(double p, double alpha) {
  return std::pow(1.0 - p, -1.0 / alpha) - 1.0;
}

double cauchy_cdf(double x) { return std::atan(x) / M_PI + 0.5; }

double mix_bern_pareto_cdf(double x) {
  // 0.45*Bernoulli(1/2) + 0.55*Pareto(1) with independent components.
  return 0.5 * pareto_cdf(x / 0.55, 1.0) + 0.5 * pareto_cdf((x - 0.45) / 0.55, 1.0);
}

double piecewise_flat_cdf(double x) {
  if (x < 0.25) return 0.0;
  if (x < 0.5) return 0.8 - 0.2 / x;
  if (x < 1.0) return 0.4;
  return 1.0 - 0.6 / x;
}

double piecewise_flat_quantile(double p) {
  if (p < 0.4) return 0.2 / (0.8 - p);
  if (p == 0.4) return 0.5;
  return 0.6 / (1.0 - p);
}

double transformed_pareto_cdf(double x, double alpha, double a, double b) {
  if (x < 0.0) return 0.0;
  const double z = x < 1.0 ? std::pow(x, 1.0 / a) : std::pow(x, 1.0 / b);
  return lomax_cdf(z, alpha);
}

double transformed_pareto_quantile(double p, double alpha, double a, double b) {
  const double z = lomax_quantile(p, alpha);
  return z < 1.0 ? std::pow(z, a) : std::pow(z, b);
}

double student_log_norm(double df) {
  return std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
         0.5 * std::log(df * M_PI);
}

double student_pdf(double t, double df, double log_norm) {
  return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(t * t / df));
}

// CDF by adaptive quadrature of the density on the arctan-compactified axis;
// abs tolerance 1e-10.  Used for curve emission and checks only, never for
// sampling.
double student_cdf(double x, double df) {
  if (x == 0.0) return 0.5;
  const double y = std::fabs(x);
  const double log_norm = student_log_norm(df);
  const double upper = std::atan(y);
  const double integral = integrate_adaptive(
      [df, log_norm](double phi) {
        const double t = std::tan(phi);
        const double sec2 = 1.0 + t * t;
        return student_pdf(t, df, log_norm) * sec2;
      },
      0.0, upper, 1e-10);
  const double half = std::min(0.5, integral);
  return x > 0.0 ? 0.5 + half : 0.5 - half;
}

double bisect_quantile(const std::function<double(double)>& cdf, double p,
                       double lo, double hi) {
  // Expand hi until it brackets p, then bisect to ~1e-12 relative width.
  while (cdf(hi) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) return hi;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

double student_quantile(double p, double df) {
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -student_quantile(1.0 - p, df);
  return bisect_quantile([df](double x) { return student_cdf(x, df); }, p, 0.0, 2.0);
}

struct ParamSpec {
  std::map<std::string, double> values;
};

ParamSpec parse_params(const std::string& text, const std::string& name) {
  ParamSpec out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("family " + name + ": expected key=value, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    auto strip = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    strip(key);
    strip(val);
    char* end = nullptr;
    const double v = std::strtod(val.c_str(), &end);
    if (end == val.c_str() || *end != '\0') {
      throw std::invalid_argument("family " + name + ": bad value for " + key);
    }
    if (!out.values.emplace(key, v).second) {
      throw std::invalid_argument("family " + name + ": duplicate parameter " + key);
    }
  }
  return out;
}

double take_param(ParamSpec& params, const std::string& name,
                  const std::string& family, bool required, double fallback) {
  const auto it = params.values.find(name);
  if (it == params.values.end()) {
    if (required) {
      throw std::invalid_argument("family " + family + ": missing parameter " + name);
    }
    return fallback;
  }
  const double v = it->second;
  params.values.erase(it);
  return v;
}

void expect_empty(const ParamSpec& params, const std::string& family) {
  if (!params.values.empty()) {
    throw std::invalid_argument("family " + family + ": unknown parameter " +
                                params.values.begin()->first);
  }
}

}  // namespace

void FamilySpec::validate() const {
  switch (family) {
    case Family::Pareto:
    case Family::Frechet:
    case Family::Loglogistic:
      if (!(sh > 0)) throw std::domain_error("shape parameter must be positive");
      break;
    case Family::StudentT:
      if (!(df > 0)) throw std::domain_error("degrees of freedom must be positive");
      break;
    case Family::Cauchy:
    case Family::BernoulliParetoSum:
    case Family::PiecewiseFlat:
      break;
    case Family::StPetersburg:
      if (terms < 1 || terms > 60) throw std::domain_error("terms must be in [1, 60]");
      break;
    case Family::TransformedPareto:
      if (!(alpha > 0)) throw std::domain_error("alpha must be positive");
      if (!(a >= 1.0) || !(b > a)) throw std::domain_error("require b > a >= 1");
      break;
    case Family::Lomax:
      if (!(alpha > 0)) throw std::domain_error("alpha must be positive");
      break;
  }
}

FamilySpec FamilySpec::parse(const std::string& text) {
  std::string name = text;
  std::string args;
  const std::size_t open = text.find('(');
  if (open != std::string::npos) {
    if (text.back() != ')') throw std::invalid_argument("family spec: missing ')': " + text);
    name = text.substr(0, open);
    args = text.substr(open + 1, text.size() - open - 2);
  }
  auto strip = [](std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  };
  strip(name);
  ParamSpec params = parse_params(args, name);

  FamilySpec spec;
  if (name == "pareto") {
    spec.family = Family::Pareto;
    spec.sh = take_param(params, "sh", name, true, 0);
  } else if (name == "frechet") {
    spec.family = Family::Frechet;
    spec.sh = take_param(params, "sh", name, true, 0);
  } else if (name == "loglogistic") {
    spec.family = Family::Loglogistic;
    spec.sh = take_param(params, "sh", name, true, 0);
  } else if (name == "student") {
    spec.family = Family::StudentT;
    spec.df = take_param(params, "df", name, true, 0);
  } else if (name == "cauchy") {
    spec.family = Family::Cauchy;
  } else if (name == "mix-bern-pareto") {
    spec.family = Family::BernoulliParetoSum;
  } else if (name == "st-petersburg" || name == "stpetersburg") {
    spec.family = Family::StPetersburg;
    spec.terms = static_cast<int>(take_param(params, "terms", name, false, 40));
  } else if (name == "piecewise-flat") {
    spec.family = Family::PiecewiseFlat;
  } else if (name == "transformed-pareto") {
    spec.family = Family::TransformedPareto;
    spec.alpha = take_param(params, "alpha", name, true, 0);
    spec.a = take_param(params, "a", name, true, 0);
    spec.b = take_param(params, "b", name, true, 0);
  } else if (name == "lomax") {
    spec.family = Family::Lomax;
    spec.alpha = take_param(params, "alpha", name, true, 0);
  } else {
    throw std::invalid_argument(
        "unknown family '" + name +
        "'; known: pareto, frechet, loglogistic, student, cauchy, "
        "mix-bern-pareto, st-petersburg, piecewise-flat, transformed-pareto, lomax");
  }
  expect_empty(params, name);
  spec.validate();
  return spec;
}

std::string FamilySpec::label() const {
  std::ostringstream out;
  switch (family) {
    case Family::Pareto: out << "pareto(sh=" << sh << ")"; break;
    case Family::Frechet: out << "frechet(sh=" << sh << ")"; break;
    case Family::Loglogistic: out << "loglogistic(sh=" << sh << ")"; break;
    case Family::StudentT: out << "student(df=" << df << ")"; break;
    case Family::Cauchy: out << "cauchy"; break;
    case Family::BernoulliParetoSum: out << "mix-bern-pareto"; break;
    case Family::StPetersburg: out << "st-petersburg(terms=" << terms << ")"; break;
    case Family::PiecewiseFlat: out << "piecewise-flat"; break;
    case Family::TransformedPareto:
      out << "transformed-pareto(alpha=" << alpha << ",a=" << a << ",b=" << b << ")";
      break;
    case Family::Lomax: out << "lomax(alpha=" << alpha << ")"; break;
  }
  return out.str();
}

double FamilySpec::table_param() const {
  switch (family) {
    case Family::Pareto:
    case Family::Frechet:
    case Family::Loglogistic:
      return sh;
    case Family::StudentT:
      return df;
    case Family::TransformedPareto:
    case Family::Lomax:
      return alpha;
    default:
      return 0.0;
  }
}

double family_cdf(const FamilySpec& spec, double x) {
  spec.validate();
  switch (spec.family) {
    case Family::Pareto:
      return pareto_cdf(x, spec.sh);
    case Family::Frechet:
      return x > 0.0 ? std::exp(-std::pow(x, -spec.sh)) : 0.0;
    case Family::Loglogistic: {
      if (x <= 0.0) return 0.0;
      const double t = std::pow(x, spec.sh);
      return t / (1.0 + t);
    }
    case Family::StudentT:
      return student_cdf(x, spec.df);
    case Family::Cauchy:
      return cauchy_cdf(x);
    case Family::BernoulliParetoSum:
      return mix_bern_pareto_cdf(x);
    case Family::StPetersburg:
      return st_petersburg_distribution(spec.terms).cdf_lower(x);
    case Family::PiecewiseFlat:
      return piecewise_flat_cdf(x);
    case Family::TransformedPareto:
      return transformed_pareto_cdf(x, spec.alpha, spec.a, spec.b);
    case Family::Lomax:
      return lomax_cdf(x, spec.alpha);
  }
  return 0.0;
}

double family_quantile(const FamilySpec& spec, double p) {
  spec.validate();
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("quantile: p must be in (0,1)");
  }
  switch (spec.family) {
    case Family::Pareto:
      return std::pow(1.0 - p, -1.0 / spec.sh);
    case Family::Frechet:
      return std::pow(-std::log(p), -1.0 / spec.sh);
    case Family::Loglogistic:
      return std::pow(p / (1.0 - p), 1.0 / spec.sh);
    case Family::StudentT:
      return student_quantile(p, spec.df);
    case Family::Cauchy:
      return std::tan(M_PI * (p - 0.5));
    case Family::BernoulliParetoSum:
      return bisect_quantile(mix_bern_pareto_cdf, p, 0.55, 4.0);
    case Family::StPetersburg: {
      // Generalized inverse of the exact law: smallest k with 1-2^-k >= p.
      const double k = std::max(1.0, std::ceil(-std::log2(1.0 - p)));
      return std::pow(2.0, k);
    }
    case Family::PiecewiseFlat:
      return piecewise_flat_quantile(p);
    case Family::TransformedPareto:
      return transformed_pareto_quantile(p, spec.alpha, spec.a, spec.b);
    case Family::Lomax:
      return lomax_quantile(p, spec.alpha);
  }
  return 0.0;
}

bool family_is_continuous(const FamilySpec& spec) {
  return spec.family != Family::StPetersburg;
}

double family_draw(const FamilySpec& spec, Rng& rng) {
  switch (spec.family) {
    case Family::StudentT: {
      const double z = rng.normal();
      const double v = rng.chi_square(spec.df);
      return z / std::sqrt(v / spec.df);
    }
    case Family::Cauchy:
      return rng.cauchy();
    case Family::BernoulliParetoSum: {
      const double bern = rng.uniform01() < 0.5 ? 1.0 : 0.0;
      const double z = std::pow(1.0 - rng.uniform01(), -1.0);
      return 0.45 * bern + 0.55 * z;
    }
    default:
      return family_quantile(spec, rng.uniform01());
  }
}

Sample family_sample(const FamilySpec& spec, std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("family_sample: n must be positive");
  spec.validate();
  std::vector<double> values(n);
  for (auto& v : values) v = family_draw(spec, rng);
  return Sample::from_values(std::move(values));
}

void DiscreteDistribution::validate() const {
  if (support.empty() || support.size() != pmf.size()) {
    throw std::invalid_argument("DiscreteDistribution: support/pmf mismatch");
  }
  if (!std::is_sorted(support.begin(), support.end())) {
    throw std::invalid_argument("DiscreteDistribution: support must be increasing");
  }
  if (!(truncation_mass >= 0.0)) {
    throw std::invalid_argument("DiscreteDistribution: negative truncation mass");
  }
  double total = truncation_mass;
  for (double m : pmf) {
    if (!(m >= 0.0)) throw std::invalid_argument("DiscreteDistribution: negative pmf");
    total += m;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("DiscreteDistribution: pmf + truncation must sum to 1");
  }
}

double DiscreteDistribution::cdf_lower(double x) const {
  double run = 0.0;
  for (std::size_t i = 0; i < support.size() && support[i] <= x; ++i) run += pmf[i];
  return run;
}

DiscreteDistribution st_petersburg_distribution(int terms) {
  if (terms < 1 || terms > 60) throw std::domain_error("terms must be in [1, 60]");
  DiscreteDistribution d;
  d.support.resize(terms);
  d.pmf.resize(terms);
  for (int k = 1; k <= terms; ++k) {
    d.support[k - 1] = std::ldexp(1.0, k);    // 2^k
    d.pmf[k - 1] = std::ldexp(1.0, -k);       // 2^-k
  }
  d.truncation_mass = std::ldexp(1.0, -terms);
  d.validate();
  return d;
}

FamilyDist::FamilyDist(FamilySpec spec) : spec_(spec) { spec_.validate(); }

}  // namespace domcomb

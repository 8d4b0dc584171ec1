#include "domcomb/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "domcomb/errors.hpp"

namespace domcomb {

Sample Sample::from_values(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("Sample: empty sample");
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("Sample: non-finite value");
  }
  std::sort(values.begin(), values.end());
  Sample s;
  s.values_ = std::move(values);
  return s;
}

Sample Sample::weighted(std::vector<double> sorted_values,
                        std::vector<double> weights) {
  if (sorted_values.empty()) throw std::invalid_argument("Sample: empty sample");
  if (sorted_values.size() != weights.size()) {
    throw std::invalid_argument("Sample: values/weights length mismatch");
  }
  if (!std::is_sorted(sorted_values.begin(), sorted_values.end())) {
    throw std::invalid_argument("Sample: values must be sorted");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("Sample: negative weight");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("Sample: weights must sum to 1");
  }
  Sample s;
  s.values_ = std::move(sorted_values);
  s.weights_ = std::move(weights);
  return s;
}

Sample Sample::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file: " + path);
  return read(in, path);
}

Sample Sample::read(std::istream& in, const std::string& name) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(begin, end - begin + 1);
    if (token[0] == '#') continue;
    const char* cstr = token.c_str();
    char* parse_end = nullptr;
    const double v = std::strtod(cstr, &parse_end);
    if (parse_end == cstr || *parse_end != '\0' || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << name << ":" << lineno << ": not a number: '" << token << "'";
      throw DataError(msg.str());
    }
    values.push_back(v);
  }
  if (values.empty()) throw DataError(name + ": no observations");
  return from_values(std::move(values));
}

std::vector<double> Sample::weight_vector() const {
  if (!weights_.empty()) return weights_;
  return std::vector<double>(values_.size(), 1.0 / static_cast<double>(values_.size()));
}

Sample Sample::affine(double scale, double shift) const {
  if (!(scale > 0)) throw std::invalid_argument("Sample::affine: scale must be positive");
  std::vector<double> mapped(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) mapped[i] = scale * values_[i] + shift;
  Sample s;
  s.values_ = std::move(mapped);
  s.weights_ = weights_;
  return s;
}

EmpiricalCdf::EmpiricalCdf(Sample sample) : sample_(std::move(sample)) {
  if (!sample_.uniform_weights()) {
    prefix_.resize(sample_.size());
    double run = 0.0;
    for (std::size_t i = 0; i < sample_.size(); ++i) {
      run += sample_.weight(i);
      prefix_[i] = run;
    }
  }
}

double EmpiricalCdf::operator()(double x) const {
  const auto& v = sample_.values();
  const auto it = std::upper_bound(v.begin(), v.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - v.begin());
  if (k == 0) return 0.0;
  if (prefix_.empty()) return static_cast<double>(k) / static_cast<double>(v.size());
  return prefix_[k - 1];
}

std::vector<uint32_t> multinomial_counts(std::size_t n, Rng& rng) {
  std::vector<uint32_t> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    counts[rng.uniform_index(n)] += 1;
  }
  return counts;
}

Sample bootstrap_resample(const Sample& sample, Rng& rng) {
  if (!sample.uniform_weights()) {
    throw std::invalid_argument("bootstrap_resample: sample must have uniform weights");
  }
  const std::size_t n = sample.size();
  const std::vector<uint32_t> counts = multinomial_counts(n, rng);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = static_cast<double>(counts[i]) / static_cast<double>(n);
  }
  return Sample::weighted(sample.values(), std::move(weights));
}

EmpiricalCdf cauchy_sample_ecdf(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("cauchy_sample_ecdf: n must be positive");
  std::vector<double> values(n);
  for (auto& v : values) v = rng.cauchy();
  return EmpiricalCdf(Sample::from_values(std::move(values)));
}

}  // namespace domcomb

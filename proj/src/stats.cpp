#include "mobisim/stats.hpp"

#include <algorithm>
#include <cmath>

#include "mobisim/errors.hpp"

namespace mobisim {

namespace {

// t.ppf(0.975, df) for df = 1..120
constexpr double kT975[120] = {
    12.706205, 4.302653, 3.182446, 2.776445, 2.570582, 2.446912,
    2.364624, 2.306004, 2.262157, 2.228139, 2.200985, 2.178813,
    2.160369, 2.144787, 2.131450, 2.119905, 2.109816, 2.100922,
    2.093024, 2.085963, 2.079614, 2.073873, 2.068658, 2.063899,
    2.059539, 2.055529, 2.051831, 2.048407, 2.045230, 2.042272,
    2.039513, 2.036933, 2.034515, 2.032245, 2.030108, 2.028094,
    2.026192, 2.024394, 2.022691, 2.021075, 2.019541, 2.018082,
    2.016692, 2.015368, 2.014103, 2.012896, 2.011741, 2.010635,
    2.009575, 2.008559, 2.007584, 2.006647, 2.005746, 2.004879,
    2.004045, 2.003241, 2.002465, 2.001717, 2.000995, 2.000298,
    1.999624, 1.998972, 1.998341, 1.997730, 1.997138, 1.996564,
    1.996008, 1.995469, 1.994945, 1.994437, 1.993943, 1.993464,
    1.992997, 1.992543, 1.992102, 1.991673, 1.991254, 1.990847,
    1.990450, 1.990063, 1.989686, 1.989319, 1.988960, 1.988610,
    1.988268, 1.987934, 1.987608, 1.987290, 1.986979, 1.986675,
    1.986377, 1.986086, 1.985802, 1.985523, 1.985251, 1.984984,
    1.984723, 1.984467, 1.984217, 1.983972, 1.983731, 1.983495,
    1.983264, 1.983038, 1.982815, 1.982597, 1.982383, 1.982173,
    1.981967, 1.981765, 1.981567, 1.981372, 1.981180, 1.980992,
    1.980808, 1.980626, 1.980448, 1.980272, 1.980100, 1.979930,
};

}  // namespace

double t_critical_975(int df) {
  require(df >= 1, Errc::NonPositiveInput, "degrees of freedom must be >= 1");
  if (df <= 120) return kT975[df - 1];
  return 1.96;
}

SummaryStat summarize(std::span<const double> samples) {
  require(!samples.empty(), Errc::EmptySample, "summarize needs at least one sample");
  SummaryStat s;
  s.n = static_cast<int>(samples.size());
  double sum = 0.0;
  for (double v : samples) sum += v;
  s.mean = sum / s.n;
  if (s.n == 1) {
    s.degenerate = true;
    s.ci95_low = s.ci95_high = s.mean;
    return s;
  }
  double ss = 0.0;
  for (double v : samples) ss += (v - s.mean) * (v - s.mean);
  s.sample_std = std::sqrt(ss / (s.n - 1));
  const double half = t_critical_975(s.n - 1) * s.sample_std / std::sqrt(s.n);
  s.ci95_low = s.mean - half;
  s.ci95_high = s.mean + half;
  return s;
}

Ecdf make_ecdf(std::span<const double> samples) {
  require(!samples.empty(), Errc::EmptySample, "ecdf needs at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  Ecdf e;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!e.values.empty() && e.values.back() == sorted[i]) {
      e.fractions.back() = (i + 1) / n;
    } else {
      e.values.push_back(sorted[i]);
      e.fractions.push_back((i + 1) / n);
    }
  }
  return e;
}

double Ecdf::at(double x) const {
  auto it = std::upper_bound(values.begin(), values.end(), x);
  if (it == values.begin()) return 0.0;
  return fractions[static_cast<std::size_t>(it - values.begin()) - 1];
}

double ks_distance(const Ecdf& a, const Ecdf& b) {
  double ks = 0.0;
  for (double v : a.values) ks = std::max(ks, std::abs(a.at(v) - b.at(v)));
  for (double v : b.values) ks = std::max(ks, std::abs(a.at(v) - b.at(v)));
  return ks;
}

}  // namespace mobisim

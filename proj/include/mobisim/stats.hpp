#pragma once

#include <span>
#include <vector>

namespace mobisim {

struct SummaryStat {
  int n = 0;
  double mean = 0.0;
  double sample_std = 0.0;  // n-1 denominator
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  bool degenerate = false;  // n == 1: CI collapses to the point
};

// Two-sided 97.5% Student-t critical value; normal 1.96 past df 120.
double t_critical_975(int df);

SummaryStat summarize(std::span<const double> samples);

// Right-continuous empirical CDF.
struct Ecdf {
  std::vector<double> values;     // ascending, deduplicated
  std::vector<double> fractions;  // cumulative, ends at 1
  double at(double x) const;
};

Ecdf make_ecdf(std::span<const double> samples);

double ks_distance(const Ecdf& a, const Ecdf& b);

}  // namespace mobisim

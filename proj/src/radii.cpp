#include "maxmod/radii.hpp"

#include <cmath>
#include <limits>

namespace maxmod {

void RadiiSpec::validate() const {
  if (r.empty()) throw GeometryError("RadiiSpec: need at least one radius");
  if (!(r.front() > 0)) throw GeometryError("RadiiSpec: radii must be positive");
  for (size_t i = 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1])) throw GeometryError("RadiiSpec: radii not strictly increasing");
  }
  if (geometric_C) {
    if (!(*geometric_C > 1)) throw GeometryError("RadiiSpec: geometric_C must exceed 1");
    for (size_t i = 1; i < r.size(); ++i) {
      if (!(r[i] > *geometric_C * r[i - 1])) {
        throw GeometryError("RadiiSpec: geometric growth hypothesis violated");
      }
    }
  }
}

void LogSpec::validate() const {
  if (x.empty()) throw GeometryError("LogSpec: empty");
  if (!(L > 2)) throw GeometryError("LogSpec: L must exceed 2");
  if (!(x.front() > L + 3)) throw GeometryError("LogSpec: x_1 must exceed L + 3");
  for (size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw GeometryError("LogSpec: x not strictly increasing");
  }
  if (eps.size() != x.size()) throw GeometryError("LogSpec: eps size mismatch");
  for (size_t i = 0; i < x.size(); ++i) {
    double back = (i == 0) ? x[0] : x[i] - x[i - 1];
    double fwd = (i + 1 < x.size()) ? x[i + 1] - x[i]
                                    : std::numeric_limits<double>::infinity();
    double cap = std::min({fwd, back, 0.5}) / 8.0;
    if (!(eps[i] > 0 && eps[i] < cap)) {
      throw GeometryError("LogSpec: eps_n outside its admissible interval");
    }
  }
  if (!(lambda >= 1)) throw GeometryError("LogSpec: lambda must be >= 1");
}

std::vector<double> choose_epsilons(const std::vector<double>& x) {
  if (x.empty()) throw GeometryError("choose_epsilons: empty");
  for (size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw GeometryError("choose_epsilons: x not strictly increasing");
  }
  std::vector<double> eps(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    double back = (i == 0) ? x[0] : x[i] - x[i - 1];
    double fwd = (i + 1 < x.size()) ? x[i + 1] - x[i]
                                    : std::numeric_limits<double>::infinity();
    eps[i] = std::min({fwd, back, 0.5}) / 16.0;
  }
  return eps;
}

std::pair<double, LogSpec> normalize_radii(const RadiiSpec& spec, double L) {
  spec.validate();
  if (!(L > 2)) throw GeometryError("normalize_radii: L must exceed 2");

  double threshold = std::exp(L + 3.0);
  double lambda = 1.0;
  int k = 0;
  if (!(spec.r.front() > threshold)) {
    k = static_cast<int>(std::ceil(std::log2(threshold / spec.r.front())));
    while (std::ldexp(spec.r.front(), k) <= threshold) ++k;
    lambda = std::ldexp(1.0, k);
  }

  LogSpec ls;
  ls.L = L;
  ls.lambda = lambda;
  for (double r : spec.r) ls.x.push_back(std::log(r) + k * std::log(2.0));
  ls.eps = choose_epsilons(ls.x);
  ls.validate();
  return {lambda, ls};
}

}  // namespace maxmod

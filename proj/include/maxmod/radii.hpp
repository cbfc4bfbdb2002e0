#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace maxmod {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite prefix of the target radii, strictly increasing and positive.
struct RadiiSpec {
  std::vector<double> r;
  std::optional<double> geometric_C;  // if set, requires r_{n+1} > C r_n

  void validate() const;
};

// Log-scale placement derived from the radii: x_n = log(lambda r_n) with the
// rescale factor lambda chosen so that x_1 clears L + 3.  Index 0 of x/eps is
// sector 1; the sentinels x_0 = eps_0 = 0 are implicit.
struct LogSpec {
  std::vector<double> x;
  std::vector<double> eps;
  double L = 2.5;
  double lambda = 1.0;

  void validate() const;
};

// eps_n at half its admissible supremum: (1/16) min{forward gap, backward
// gap, 1/2}, the forward gap of the last entry taken as infinite.
std::vector<double> choose_epsilons(const std::vector<double>& x);

// lambda = 1 if r_1 > e^{L+3}, else the smallest power of 2 clearing it.
std::pair<double, LogSpec> normalize_radii(const RadiiSpec& spec, double L);

}  // namespace maxmod

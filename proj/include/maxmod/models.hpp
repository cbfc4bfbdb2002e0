#pragma once

#include <complex>
#include <memory>
#include <variant>
#include <vector>

#include "maxmod/logcomplex.hpp"

namespace maxmod {

// Contour quadrature controls for the Cauchy-integral models.  The contour
// runs along the boundary of the half-strip {x > 0, |y| < pi}, truncated at
// Re t = truncation_x; the integrand on the horizontal edges decays like
// exp(-e^x), so the truncation error at x = 5 is already below 1e-60.
struct QuadratureParams {
  double truncation_x = 5.0;
  int nodes_per_unit = 64;
  double min_contour_distance = 0.05;

  void validate() const {
    if (truncation_x < 5.0) throw EvalError("QuadratureParams: truncation_x must be >= 5");
    if (nodes_per_unit < 16) throw EvalError("QuadratureParams: nodes_per_unit must be >= 16");
    if (!(min_contour_distance > 0)) throw EvalError("QuadratureParams: min_contour_distance must be > 0");
  }
};

struct Monomial {
  std::complex<double> c{1.0, 0.0};
  int n = 0;  // >= 0
};

struct Exponential {};

struct Polynomial {
  std::vector<std::complex<double>> coefficients;  // ascending powers
};

struct Hardy {
  double alpha = 1.0;   // > 0; scales the modulus by alpha, argmax-invariant
  double lambda = 1.0;  // argument rescale: evaluates at lambda * z
};

struct Tyler {};

struct PolyaCore {
  QuadratureParams quad;
};

// Sum of translated/rescaled copies g(a_n (z - b_n)), n = 0..N-1.
// Defaults a_n = 2^n, b_n = n (1 + 4 pi i); overrides must keep the
// half-strips {a_n (z - b_n) in G0} pairwise disjoint.
struct PolyaSum {
  int terms = 3;
  std::vector<double> a_seq;                 // filled with defaults if empty
  std::vector<std::complex<double>> b_seq;   // filled with defaults if empty
  QuadratureParams quad;
};

// Evaluation hook for the tract-based model: the conformal module provides
// log |f(e^w)| on the tract and the off-tract perturbation cap.
class TractModelData {
 public:
  virtual ~TractModelData() = default;
  virtual bool on_tract(std::complex<double> w) const = 0;
  virtual double log_modulus_at(std::complex<double> w) const = 0;
  virtual double off_tract_log_bound() const = 0;  // log of |h| cap
};

struct TractModel {
  std::shared_ptr<const TractModelData> data;
};

using FunctionModel = std::variant<Monomial, Exponential, Polynomial, Hardy,
                                   Tyler, PolyaCore, PolyaSum, TractModel>;

// Log-scale evaluation of every model variant.  The log-modulus field of the
// result is itself a double (e.g. exp(r^2) for Hardy at real r), so nothing
// here ever forms |f(z)| in linear scale.
LogComplex eval_log(const FunctionModel& model, std::complex<double> z);

// True if every defining coefficient is real (conjugation symmetry holds).
bool has_real_coefficients(const FunctionModel& model);

// Resolved sequences for a PolyaSum (defaults applied, disjointness checked).
struct PolyaSumResolved {
  std::vector<double> a;
  std::vector<std::complex<double>> b;
};
PolyaSumResolved resolve_polya_sum(const PolyaSum& m);

}  // namespace maxmod

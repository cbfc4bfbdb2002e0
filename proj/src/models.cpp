#include "maxmod/models.hpp"

#include <cmath>

#include "maxmod/polya.hpp"

namespace maxmod {

namespace {

// exp(z^2) as a complex value; the real exponent Re(z^2) must stay below
// double overflow, which bounds |z| by roughly 26.
std::complex<double> exp_z_squared(std::complex<double> z) {
  std::complex<double> z2 = z * z;
  if (z2.real() > 700.0) {
    throw EvalError("eval_log: Re(z^2) too large for double-scale exponent");
  }
  double m = std::exp(z2.real());
  return {m * std::cos(z2.imag()), m * std::sin(z2.imag())};
}

LogComplex from_inner_exponent(std::complex<double> w, double log_scale) {
  // f = scale * exp(w): log |f| = Re w + log scale, arg f = Im w.
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw EvalError("eval_log: non-finite intermediate");
  }
  return LogComplex::from_log_polar(w.real() + log_scale, wrap_angle(w.imag()));
}

}  // namespace

LogComplex eval_log(const FunctionModel& model, std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw EvalError("eval_log: non-finite argument");
  }
  return std::visit(
      [&](const auto& m) -> LogComplex {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          if (m.n < 0) throw EvalError("Monomial: negative degree");
          if (m.n == 0) return LogComplex::from_complex(m.c);
          if (z == std::complex<double>(0.0, 0.0) || m.c == std::complex<double>(0.0, 0.0)) {
            return LogComplex::zero();
          }
          return LogComplex::from_log_polar(
              std::log(std::abs(m.c)) + m.n * std::log(std::abs(z)),
              std::arg(m.c) + m.n * std::arg(z));
        } else if constexpr (std::is_same_v<T, Exponential>) {
          return LogComplex::from_log_polar(z.real(), wrap_angle(z.imag()));
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          if (m.coefficients.empty()) return LogComplex::zero();
          LogComplex acc = LogComplex::from_complex(m.coefficients.back());
          LogComplex zz = LogComplex::from_complex(z);
          for (size_t k = m.coefficients.size() - 1; k-- > 0;) {
            acc = acc * zz + LogComplex::from_complex(m.coefficients[k]);
          }
          return acc;
        } else if constexpr (std::is_same_v<T, Hardy>) {
          if (!(m.alpha > 0)) throw EvalError("Hardy: alpha must be > 0");
          std::complex<double> zz = m.lambda * z;
          std::complex<double> w = exp_z_squared(zz) + std::sin(zz);
          return from_inner_exponent(w, std::log(m.alpha));
        } else if constexpr (std::is_same_v<T, Tyler>) {
          std::complex<double> s = std::sin(z);
          std::complex<double> w = exp_z_squared(z) + 2.0 * z * s * s;
          return from_inner_exponent(w, 0.0);
        } else if constexpr (std::is_same_v<T, PolyaCore>) {
          m.quad.validate();
          return polya_g(z, m.quad);
        } else if constexpr (std::is_same_v<T, PolyaSum>) {
          return polya_sum(z, m);
        } else {
          static_assert(std::is_same_v<T, TractModel>);
          if (!m.data) throw EvalError("TractModel: missing data");
          if (z == std::complex<double>(0.0, 0.0)) {
            return LogComplex::from_log_polar(m.data->off_tract_log_bound(), 0.0);
          }
          std::complex<double> w{std::log(std::abs(z)), std::arg(z)};
          if (m.data->on_tract(w)) {
            return LogComplex::from_log_polar(m.data->log_modulus_at(w), 0.0);
          }
          return LogComplex::from_log_polar(m.data->off_tract_log_bound(), 0.0);
        }
      },
      model);
}

bool has_real_coefficients(const FunctionModel& model) {
  return std::visit(
      [](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Monomial>) {
          return m.c.imag() == 0.0;
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          for (const auto& c : m.coefficients) {
            if (c.imag() != 0.0) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, PolyaSum>) {
          return false;  // the translated strips break conjugation symmetry
        } else if constexpr (std::is_same_v<T, TractModel>) {
          return false;
        } else {
          return true;  // Exponential, Hardy, Tyler, PolyaCore
        }
      },
      model);
}

PolyaSumResolved resolve_polya_sum(const PolyaSum& m) {
  if (m.terms < 1) throw EvalError("PolyaSum: terms must be >= 1");
  m.quad.validate();
  PolyaSumResolved r;
  if (m.a_seq.empty()) {
    for (int n = 0; n < m.terms; ++n) r.a.push_back(std::pow(2.0, n));
  } else {
    if (static_cast<int>(m.a_seq.size()) != m.terms) {
      throw EvalError("PolyaSum: a_seq size mismatch");
    }
    r.a = m.a_seq;
  }
  if (m.b_seq.empty()) {
    for (int n = 0; n < m.terms; ++n) {
      r.b.emplace_back(n, 4.0 * kPi * n);
    }
  } else {
    if (static_cast<int>(m.b_seq.size()) != m.terms) {
      throw EvalError("PolyaSum: b_seq size mismatch");
    }
    r.b = m.b_seq;
  }
  for (double a : r.a) {
    if (!(a > 0)) throw EvalError("PolyaSum: a_n must be positive real");
  }
  // The strip for term n is {z : a_n (z - b_n) in G0}, a horizontal
  // half-strip of half-height pi/a_n centered at Im b_n.  Pairwise disjoint
  // iff the y-intervals are.
  std::vector<std::pair<double, double>> bands;
  for (int n = 0; n < m.terms; ++n) {
    double c = r.b[n].imag();
    double h = kPi / r.a[n];
    bands.emplace_back(c - h, c + h);
  }
  std::sort(bands.begin(), bands.end());
  for (size_t k = 1; k < bands.size(); ++k) {
    if (bands[k].first < bands[k - 1].second) {
      throw EvalError("PolyaSum: strips overlap; adjust a_seq/b_seq");
    }
  }
  return r;
}

}  // namespace maxmod

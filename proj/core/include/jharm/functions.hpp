#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "jharm/interp.hpp"

namespace jharm {

// Radial function f(t) on [0, inf): either a closed-form callable or a
// sampled grid evaluated by monotone cubic interpolation. Sampled functions
// are 0 beyond their grid. Copies are cheap and share identity (id), which
// keys transform-side memo caches.
class RadialFunction {
 public:
  // decay_rate: e-folding rate hint for half-line quadrature (0 = unknown).
  // support: pass when f vanishes identically beyond some t.
  static RadialFunction closed_form(std::function<double(double)> f,
                                    double decay_rate = 0.0,
                                    std::optional<double> support = {});
  static RadialFunction from_samples(std::vector<double> t,
                                     std::vector<double> values);

  double operator()(double t) const;

  bool is_sampled() const { return spline_ != nullptr; }
  double decay_rate() const { return decay_rate_; }
  std::optional<double> support_end() const { return support_end_; }
  const std::vector<double>& grid() const;     // sampled only
  const std::vector<double>& samples() const;  // sampled only
  std::uint64_t id() const { return id_; }

 private:
  RadialFunction() = default;

  std::function<double(double)> eval_;
  std::shared_ptr<const SteffenSpline> spline_;
  double decay_rate_ = 0.0;
  std::optional<double> support_end_{};
  std::uint64_t id_ = 0;
};

// Spectral-side function F(lambda), extended evenly to lambda < 0. Mirrors
// RadialFunction; values may be complex (sampled kinds interpolate real and
// imaginary parts separately).
class SpectralFunction {
 public:
  static SpectralFunction closed_form(
      std::function<std::complex<double>(double)> f, double decay_rate = 0.0);
  static SpectralFunction closed_form_real(std::function<double(double)> f,
                                           double decay_rate = 0.0);
  static SpectralFunction from_samples(std::vector<double> lambda,
                                       std::vector<std::complex<double>> values);

  std::complex<double> operator()(double lambda) const;
  double abs(double lambda) const { return std::abs((*this)(lambda)); }

  bool is_sampled() const { return grid_ != nullptr; }
  bool is_real() const { return real_; }
  double decay_rate() const { return decay_rate_; }
  std::optional<double> support_end() const { return support_end_; }
  const std::vector<double>& grid() const;                 // sampled only
  const std::vector<std::complex<double>>& samples() const;  // sampled only
  std::uint64_t id() const { return id_; }

 private:
  SpectralFunction() = default;

  std::function<std::complex<double>(double)> eval_;
  std::shared_ptr<const std::vector<double>> grid_;
  std::shared_ptr<const std::vector<std::complex<double>>> values_;
  std::shared_ptr<const SteffenSpline> re_, im_;
  bool real_ = false;
  double decay_rate_ = 0.0;
  std::optional<double> support_end_{};
  std::uint64_t id_ = 0;
};

}  // namespace jharm

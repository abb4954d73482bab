#include "jharm/phi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "jharm/errors.hpp"

namespace jharm {
namespace detail {

namespace {

using cd = std::complex<double>;

constexpr int kMaxSeriesTerms = 200000;
constexpr double kSeriesRelTol = 1e-15;

}  // namespace

double series_guard(double lambda, double t) {
  lambda = std::fabs(lambda);
  // t <= 0.66 is the direct-series zone (argument -sinh^2 t >= -1/2), where
  // the worst term grows like exp(lambda sinh t); the Pfaff zone grows like
  // exp(lambda tanh t).
  return lambda * (t <= 0.66 ? std::sinh(t) : std::tanh(t));
}

double series_switch_t(double lambda) {
  lambda = std::fabs(lambda);
  constexpr double kCap = 1.25;  // keeps the Pfaff series cheap (~100 terms)
  if (lambda * std::tanh(kCap) <= 8.0) return kCap;
  return std::atanh(8.0 / lambda);
}

double phi_series(const JacobiParams& p, double lambda, double t) {
  lambda = std::fabs(lambda);
  if (!(t >= 0.0)) throw DomainError("phi_series: t must be >= 0");
  if (t == 0.0) return 1.0;
  const double rho = p.rho();
  const double c = p.alpha + 1.0;
  const double sh = std::sinh(t);
  const double z = -sh * sh;
  if (z >= -0.5) {
    // The parameters a, b are conjugate, so term_{k+1}/term_k =
    // |a+k|^2 z / ((c+k)(k+1)) is real and the whole sum stays real.
    const double lq = 0.25 * lambda * lambda;
    double term = 1.0, sum = 1.0;
    int quiet = 0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
      const double kd = static_cast<double>(k);
      const double mod2 = (0.5 * rho + kd) * (0.5 * rho + kd) + lq;
      term *= mod2 * z / ((c + kd) * (kd + 1.0));
      sum += term;
      if (std::fabs(term) <= kSeriesRelTol * std::fabs(sum)) {
        if (++quiet >= 3) return sum;
      } else {
        quiet = 0;
      }
    }
    throw ConvergenceError("phi_series: direct series did not converge");
  }
  // Pfaff route: phi = (cosh t)^(-rho + i lambda) F(a, c-b; c; tanh^2 t) with
  // a = (rho - i lambda)/2. The value is real; the imaginary part is a
  // roundoff residue and is checked.
  const double th = std::tanh(t);
  const double w = th * th;
  const cd a(0.5 * rho, -0.5 * lambda);
  const cd cmb(0.5 * (p.alpha - p.beta + 1.0), -0.5 * lambda);
  cd term(1.0, 0.0), sum(1.0, 0.0);
  int quiet = 0;
  bool converged = false;
  for (int k = 0; k < kMaxSeriesTerms && !converged; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (cmb + kd) * (w / ((c + kd) * (kd + 1.0)));
    sum += term;
    if (std::abs(term) <= kSeriesRelTol * std::abs(sum)) {
      if (++quiet >= 3) converged = true;
    } else {
      quiet = 0;
    }
  }
  if (!converged)
    throw ConvergenceError("phi_series: Pfaff series did not converge");
  const double lch = std::log(std::cosh(t));
  const cd val = std::exp(cd(-rho * lch, lambda * lch)) * sum;
  if (std::fabs(val.imag()) > 1e-10 * std::max(1.0, std::fabs(val.real())))
    throw NumericError("phi_series: imaginary residue too large");
  return val.real();
}

double phi_series_deriv(const JacobiParams& p, double lambda, double t) {
  lambda = std::fabs(lambda);
  if (!(t >= 0.0)) throw DomainError("phi_series_deriv: t must be >= 0");
  if (t == 0.0) return 0.0;
  const double rho = p.rho();
  const double c1 = p.alpha + 2.0;
  // phi'(t) = -sinh(2t) (a b / c) F(a+1, b+1; c+1; -sinh^2 t), and
  // a b = |a|^2 = (rho^2 + lambda^2)/4 is real.
  const double pref =
      -std::sinh(2.0 * t) * (rho * rho + lambda * lambda) / (4.0 * (p.alpha + 1.0));
  const double sh = std::sinh(t);
  const double z = -sh * sh;
  if (z >= -0.5) {
    const double lq = 0.25 * lambda * lambda;
    double term = 1.0, sum = 1.0;
    int quiet = 0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
      const double kd = static_cast<double>(k);
      const double mod2 = (0.5 * rho + 1.0 + kd) * (0.5 * rho + 1.0 + kd) + lq;
      term *= mod2 * z / ((c1 + kd) * (kd + 1.0));
      sum += term;
      if (std::fabs(term) <= kSeriesRelTol * std::fabs(sum)) {
        if (++quiet >= 3) return pref * sum;
      } else {
        quiet = 0;
      }
    }
    throw ConvergenceError("phi_series_deriv: series did not converge");
  }
  // Pfaff applied to the shifted parameters: F(a+1, b+1; c+1; z) =
  // (cosh t)^(-(rho+2) + i lambda) F(a+1, c-b; c+1; tanh^2 t).
  const double th = std::tanh(t);
  const double w = th * th;
  const cd a1(0.5 * rho + 1.0, -0.5 * lambda);
  const cd cmb(0.5 * (p.alpha - p.beta + 1.0), -0.5 * lambda);
  cd term(1.0, 0.0), sum(1.0, 0.0);
  int quiet = 0;
  bool converged = false;
  for (int k = 0; k < kMaxSeriesTerms && !converged; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a1 + kd) * (cmb + kd) * (w / ((c1 + kd) * (kd + 1.0)));
    sum += term;
    if (std::abs(term) <= kSeriesRelTol * std::abs(sum)) {
      if (++quiet >= 3) converged = true;
    } else {
      quiet = 0;
    }
  }
  if (!converged)
    throw ConvergenceError("phi_series_deriv: Pfaff series did not converge");
  const double lch = std::log(std::cosh(t));
  const cd val = std::exp(cd(-(rho + 2.0) * lch, lambda * lch)) * sum;
  if (std::fabs(val.imag()) > 1e-9 * std::max(1.0, std::fabs(val.real())))
    throw NumericError("phi_series_deriv: imaginary residue too large");
  return pref * val.real();
}

double PhiOdeStepper::Segment::eval(double x) const {
  double f = c[kOrder];
  for (int j = kOrder - 1; j >= 0; --j) f = f * x + c[j];
  return f;
}

double PhiOdeStepper::Segment::eval_deriv(double x) const {
  double f = kOrder * c[kOrder];
  for (int j = kOrder - 1; j >= 1; --j) f = f * x + j * c[j];
  return f;
}

PhiOdeStepper::PhiOdeStepper(const JacobiParams& p, double lambda, double t,
                             double phi, double dphi)
    : a2p1_(2.0 * p.alpha + 1.0),
      b2p1_(2.0 * p.beta + 1.0),
      E_(lambda * lambda + p.rho() * p.rho()),
      t_(t),
      phi_(phi),
      dphi_(dphi) {
  if (!(t > 0.0)) throw DomainError("PhiOdeStepper: start t must be > 0");
}

void PhiOdeStepper::build_segment_coeffs() {
  constexpr int N = kOrder;
  // Both coth and tanh satisfy u' = 1 - u^2, which gives their local Taylor
  // coefficients u_{j+1} = (delta_{j0} - sum_i u_i u_{j-i}) / (j+1).
  double u[N + 1], v[N + 1], b[N + 1];
  u[0] = 1.0 / std::tanh(t_);
  v[0] = std::tanh(t_);
  for (int j = 0; j < N; ++j) {
    double cu = 0.0, cv = 0.0;
    for (int i = 0; i <= j; ++i) {
      cu += u[i] * u[j - i];
      cv += v[i] * v[j - i];
    }
    u[j + 1] = ((j == 0 ? 1.0 : 0.0) - cu) / (j + 1.0);
    v[j + 1] = ((j == 0 ? 1.0 : 0.0) - cv) / (j + 1.0);
  }
  for (int j = 0; j <= N; ++j) b[j] = a2p1_ * u[j] + b2p1_ * v[j];
  // Taylor recursion for the solution: (j+1)(j+2) c_{j+2} =
  // -(E c_j + sum_{i<=j} b_i (j+1-i) c_{j+1-i}).
  auto& c = seg_.c;
  c[0] = phi_;
  c[1] = dphi_;
  for (int j = 0; j + 2 <= N; ++j) {
    double conv = 0.0;
    for (int i = 0; i <= j; ++i) conv += b[i] * (j + 1.0 - i) * c[j + 1 - i];
    c[j + 2] = -(E_ * c[j] + conv) / ((j + 1.0) * (j + 2.0));
  }
  seg_.t0 = t_;
}

const PhiOdeStepper::Segment& PhiOdeStepper::step(double h_cap) {
  if (!(h_cap > 0.0)) throw DomainError("PhiOdeStepper::step: h_cap must be > 0");
  build_segment_coeffs();
  // Step limits: oscillation scale 1/sqrt(E), Taylor radius fraction 0.30 t
  // (also neutralizes the coefficient cancellation near the coth pole), hard
  // cap 0.5, caller cap.
  double h = std::min(std::min(1.5 / std::sqrt(E_ + 1.0), 0.30 * t_),
                      std::min(0.5, h_cap));
  for (int tries = 0; tries < 80; ++tries) {
    const double scale = std::fabs(seg_.c[0]) + h * std::fabs(seg_.c[1]) + 1e-280;
    double hp = 1.0;
    for (int j = 0; j < kOrder - 1; ++j) hp *= h;
    const double tail =
        std::fabs(seg_.c[kOrder]) * hp * h + std::fabs(seg_.c[kOrder - 1]) * hp;
    if (tail <= 1e-14 * scale || h <= 1e-12) break;
    h *= 0.7;
  }
  seg_.h = h;
  phi_ = seg_.eval(h);
  dphi_ = seg_.eval_deriv(h);
  t_ = seg_.t0 + h;
  return seg_;
}

void PhiOdeStepper::advance_to(double t_target) {
  if (!(t_target >= t_))
    throw DomainError("PhiOdeStepper::advance_to: target behind current t");
  while (t_ < t_target) step(t_target - t_);
}

}  // namespace detail

double jacobi_phi(const JacobiParams& p, double lambda, double t) {
  if (!(t >= 0.0)) throw DomainError("jacobi_phi: t must be >= 0");
  lambda = std::fabs(lambda);
  if (t == 0.0) return 1.0;
  if (detail::series_guard(lambda, t) <= detail::kSeriesGuardMax && t <= 4.2)
    return detail::phi_series(p, lambda, t);
  const double ts = detail::series_switch_t(lambda);
  detail::PhiOdeStepper st(p, lambda, ts, detail::phi_series(p, lambda, ts),
                           detail::phi_series_deriv(p, lambda, ts));
  st.advance_to(t);
  return st.phi();
}

std::vector<std::pair<double, double>> jacobi_phi_ode(const JacobiParams& p,
                                                      double lambda,
                                                      double t_max, int n_steps,
                                                      double t0) {
  if (!(t_max > 0.0)) throw DomainError("jacobi_phi_ode: t_max must be > 0");
  if (n_steps < 10) throw DomainError("jacobi_phi_ode: n_steps must be >= 10");
  if (!(t0 >= 1e-8) || t0 > 0.1 || t0 >= t_max)
    throw DomainError("jacobi_phi_ode: need 1e-8 <= t0 <= 0.1 and t0 < t_max");
  lambda = std::fabs(lambda);
  const double rho = p.rho();
  const double E = lambda * lambda + rho * rho;
  // Even startup polynomial of the regular solution about t = 0:
  // phi = 1 + c2 t^2 + c4 t^4 + O(t^6), from the ODE's Frobenius expansion.
  const double c2 = -E / (4.0 * (p.alpha + 1.0));
  const double c4 = -c2 *
                    (E + 2.0 * (2.0 * p.alpha + 1.0) / 3.0 +
                     2.0 * (2.0 * p.beta + 1.0)) /
                    (8.0 * (p.alpha + 2.0));
  const auto poly = [&](double tt) {
    const double t2 = tt * tt;
    return 1.0 + c2 * t2 + c4 * t2 * t2;
  };
  const auto dpoly = [&](double tt) {
    const double t2 = tt * tt;
    return 2.0 * c2 * tt + 4.0 * c4 * t2 * tt;
  };
  const double h = t_max / n_steps;
  std::vector<std::pair<double, double>> out;
  out.reserve(n_steps + 1);
  out.emplace_back(0.0, 1.0);
  int i = 1;
  for (; i <= n_steps && i * h <= t0; ++i) out.emplace_back(i * h, poly(i * h));
  detail::PhiOdeStepper st(p, lambda, t0, poly(t0), dpoly(t0));
  for (; i <= n_steps; ++i) {
    const double tt = i * h;
    st.advance_to(tt);
    out.emplace_back(tt, st.phi());
  }
  return out;
}

std::vector<double> phi_profile(const JacobiParams& p, double lambda,
                                const std::vector<double>& ts) {
  lambda = std::fabs(lambda);
  if (!ts.empty() && !(ts.front() >= 0.0))
    throw DomainError("phi_profile: t must be >= 0");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i] >= ts[i - 1]))
      throw DomainError("phi_profile: t values must be ascending");
  std::vector<double> out(ts.size());
  const double tsw = detail::series_switch_t(lambda);
  std::size_t i = 0;
  for (; i < ts.size() && ts[i] <= tsw; ++i)
    out[i] = (ts[i] == 0.0) ? 1.0 : detail::phi_series(p, lambda, ts[i]);
  if (i == out.size()) return out;
  detail::PhiOdeStepper st(p, lambda, tsw,
                           detail::phi_series(p, lambda, tsw),
                           detail::phi_series_deriv(p, lambda, tsw));
  for (; i < ts.size(); ++i) {
    st.advance_to(ts[i]);
    out[i] = st.phi();
  }
  return out;
}

PhiEvaluator::PhiEvaluator(const JacobiParams& p, double lambda)
    : p_(p),
      lambda_(std::fabs(lambda)),
      t_switch_(detail::series_switch_t(lambda_)),
      built_to_(0.0) {}

PhiEvaluator::~PhiEvaluator() = default;
PhiEvaluator::PhiEvaluator(PhiEvaluator&&) noexcept = default;
PhiEvaluator& PhiEvaluator::operator=(PhiEvaluator&&) noexcept = default;

double PhiEvaluator::operator()(double t) {
  if (!(t >= 0.0)) throw DomainError("PhiEvaluator: t must be >= 0");
  if (t == 0.0) return 1.0;
  if (t <= t_switch_) return detail::phi_series(p_, lambda_, t);
  if (!stepper_) {
    stepper_ = std::make_unique<detail::PhiOdeStepper>(
        p_, lambda_, t_switch_, detail::phi_series(p_, lambda_, t_switch_),
        detail::phi_series_deriv(p_, lambda_, t_switch_));
    built_to_ = t_switch_;
  }
  while (built_to_ < t) {
    const auto& s =
        stepper_->step(std::numeric_limits<double>::infinity());
    segments_.push_back(s);
    seg_starts_.push_back(s.t0);
    built_to_ = stepper_->t();
  }
  const auto it = std::upper_bound(seg_starts_.begin(), seg_starts_.end(), t);
  const std::size_t idx =
      (it == seg_starts_.begin()) ? 0 : static_cast<std::size_t>(it - seg_starts_.begin()) - 1;
  const auto& s = segments_[idx];
  return s.eval(t - s.t0);
}

}  // namespace jharm

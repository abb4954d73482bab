#include "jharm/functions.hpp"

#include <atomic>
#include <cmath>

#include "jharm/errors.hpp"

namespace jharm {

namespace {

std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace

RadialFunction RadialFunction::closed_form(std::function<double(double)> f,
                                           double decay_rate,
                                           std::optional<double> support) {
  if (!f) throw DomainError("RadialFunction: empty callable");
  RadialFunction r;
  r.eval_ = std::move(f);
  r.decay_rate_ = decay_rate;
  r.support_end_ = support;
  r.id_ = next_id();
  return r;
}

RadialFunction RadialFunction::from_samples(std::vector<double> t,
                                            std::vector<double> values) {
  RadialFunction r;
  r.spline_ = std::make_shared<SteffenSpline>(std::move(t), std::move(values));
  if (!(r.spline_->x_front() >= 0.0))
    throw DomainError("RadialFunction: sample grid must start at t >= 0");
  r.support_end_ = r.spline_->x_back();
  r.id_ = next_id();
  return r;
}

double RadialFunction::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("RadialFunction: t must be >= 0");
  if (spline_) return (*spline_)(t);
  if (support_end_ && t > *support_end_) return 0.0;
  return eval_(t);
}

const std::vector<double>& RadialFunction::grid() const {
  if (!spline_) throw DomainError("RadialFunction: not a sampled function");
  return spline_->nodes();
}

const std::vector<double>& RadialFunction::samples() const {
  if (!spline_) throw DomainError("RadialFunction: not a sampled function");
  return spline_->values();
}

SpectralFunction SpectralFunction::closed_form(
    std::function<std::complex<double>(double)> f, double decay_rate) {
  if (!f) throw DomainError("SpectralFunction: empty callable");
  SpectralFunction r;
  r.eval_ = std::move(f);
  r.decay_rate_ = decay_rate;
  r.id_ = next_id();
  return r;
}

SpectralFunction SpectralFunction::closed_form_real(
    std::function<double(double)> f, double decay_rate) {
  if (!f) throw DomainError("SpectralFunction: empty callable");
  SpectralFunction r;
  r.eval_ = [g = std::move(f)](double l) {
    return std::complex<double>(g(l), 0.0);
  };
  r.real_ = true;
  r.decay_rate_ = decay_rate;
  r.id_ = next_id();
  return r;
}

SpectralFunction SpectralFunction::from_samples(
    std::vector<double> lambda, std::vector<std::complex<double>> values) {
  if (lambda.size() != values.size())
    throw DomainError("SpectralFunction: size mismatch");
  SpectralFunction r;
  std::vector<double> re(values.size()), im(values.size());
  bool all_real = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    re[i] = values[i].real();
    im[i] = values[i].imag();
    if (im[i] != 0.0) all_real = false;
  }
  r.re_ = std::make_shared<SteffenSpline>(lambda, std::move(re));
  if (!all_real) r.im_ = std::make_shared<SteffenSpline>(lambda, std::move(im));
  if (!(r.re_->x_front() >= 0.0))
    throw DomainError("SpectralFunction: sample grid must start at lambda >= 0");
  r.real_ = all_real;
  r.support_end_ = r.re_->x_back();
  r.grid_ = std::make_shared<const std::vector<double>>(std::move(lambda));
  r.values_ =
      std::make_shared<const std::vector<std::complex<double>>>(std::move(values));
  r.id_ = next_id();
  return r;
}

std::complex<double> SpectralFunction::operator()(double lambda) const {
  lambda = std::fabs(lambda);  // even extension
  if (re_) {
    const double rv = (*re_)(lambda);
    const double iv = im_ ? (*im_)(lambda) : 0.0;
    return {rv, iv};
  }
  if (support_end_ && lambda > *support_end_) return {0.0, 0.0};
  return eval_(lambda);
}

const std::vector<double>& SpectralFunction::grid() const {
  if (!grid_) throw DomainError("SpectralFunction: not a sampled function");
  return *grid_;
}

const std::vector<std::complex<double>>& SpectralFunction::samples() const {
  if (!values_) throw DomainError("SpectralFunction: not a sampled function");
  return *values_;
}

}  // namespace jharm

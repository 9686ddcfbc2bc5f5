#include "operators.hpp"

namespace gsh {

namespace {

const Amplitude kI(0.0, 1.0);

void check_point_and_step(const SpherePoint &p, double h) {
  if (p.theta() < kPoleExclusion || p.theta() > kPi - kPoleExclusion)
    throw std::domain_error("point inside the pole-exclusion band");
  if (!(h > 0.0 && h <= kMaxStep))
    throw std::domain_error("finite-difference step must lie in (0, 1e-3]");
}

} // namespace

AngularOperator build_operator(OperatorLabel label, std::optional<Axis> a) {
  const bool primed = label == OperatorLabel::LxP ||
                      label == OperatorLabel::LyP ||
                      label == OperatorLabel::LzP;
  if (primed && !a)
    throw std::invalid_argument("primed operator label requires an axis");

  AngularOperator op{label, primed ? a : std::nullopt, nullptr, nullptr};
  switch (label) {
  case OperatorLabel::Lx:
    op.coef_dtheta = [](double, double p) { return kI * std::sin(p); };
    op.coef_dphi = [](double t, double p) {
      return kI * (std::cos(t) / std::sin(t)) * std::cos(p);
    };
    break;
  case OperatorLabel::Ly:
    op.coef_dtheta = [](double, double p) { return -kI * std::cos(p); };
    op.coef_dphi = [](double t, double p) {
      return kI * (std::cos(t) / std::sin(t)) * std::sin(p);
    };
    break;
  case OperatorLabel::Lz:
    op.coef_dtheta = [](double, double) { return Amplitude(0.0); };
    op.coef_dphi = [](double, double) { return -kI; };
    break;
  case OperatorLabel::LxP: {
    const double ctp = std::cos(a->theta()), stp = std::sin(a->theta());
    const double pp = a->phi();
    op.coef_dtheta = [ctp, pp](double, double p) {
      return -kI * ctp * std::sin(p - pp);
    };
    op.coef_dphi = [ctp, stp, pp](double t, double p) {
      return -kI *
             (ctp * (std::cos(t) / std::sin(t)) * std::cos(p - pp) + stp);
    };
    break;
  }
  case OperatorLabel::LyP: {
    const double pp = a->phi();
    op.coef_dtheta = [pp](double, double p) { return kI * std::cos(p - pp); };
    op.coef_dphi = [pp](double t, double p) {
      return -kI * (std::cos(t) / std::sin(t)) * std::sin(p - pp);
    };
    break;
  }
  case OperatorLabel::LzP: {
    const double ctp = std::cos(a->theta()), stp = std::sin(a->theta());
    const double pp = a->phi();
    op.coef_dtheta = [stp, pp](double, double p) {
      return kI * stp * std::sin(p - pp);
    };
    op.coef_dphi = [ctp, stp, pp](double t, double p) {
      return kI *
             (stp * (std::cos(t) / std::sin(t)) * std::cos(p - pp) - ctp);
    };
    break;
  }
  }
  return op;
}

Amplitude apply(const AngularOperator &op, const SphereField &f,
                const SpherePoint &p, double h) {
  check_point_and_step(p, h);
  const double t = p.theta(), ph = p.phi();
  const Amplitude dtheta = (f(t + h, ph) - f(t - h, ph)) / (2.0 * h);
  const Amplitude dphi = (f(t, ph + h) - f(t, ph - h)) / (2.0 * h);
  return op.coef_dtheta(t, ph) * dtheta + op.coef_dphi(t, ph) * dphi;
}

Amplitude apply_l2(const SphereField &f, const SpherePoint &p, double h) {
  check_point_and_step(p, h);
  const double t = p.theta(), ph = p.phi();
  const Amplitude fc = f(t, ph);
  const Amplitude dtt = (f(t + h, ph) - 2.0 * fc + f(t - h, ph)) / (h * h);
  const Amplitude dt = (f(t + h, ph) - f(t - h, ph)) / (2.0 * h);
  const Amplitude dpp = (f(t, ph + h) - 2.0 * fc + f(t, ph - h)) / (h * h);
  const double st = std::sin(t), ct = std::cos(t);
  return -(dtt + (ct / st) * dt + dpp / (st * st));
}

ResidualStats eigen_residual(EigenOperator kind, const GeneralizedHarmonic &h,
                             double expected,
                             std::span<const SpherePoint> points,
                             double step) {
  if (kind != EigenOperator::L2) {
    const bool match =
        (kind == EigenOperator::LzP && h.kind == AxisKind::W) ||
        (kind == EigenOperator::LxP && h.kind == AxisKind::U) ||
        (kind == EigenOperator::LyP && h.kind == AxisKind::V);
    if (!match)
      throw std::invalid_argument("operator kind does not match the "
                                  "harmonic's axis kind");
  }

  const SphereField f = [&h](double t, double p) {
    return evaluate(h, SpherePoint(t, p));
  };

  std::optional<AngularOperator> op;
  if (kind == EigenOperator::LzP)
    op = build_operator(OperatorLabel::LzP, h.axis);
  else if (kind == EigenOperator::LxP)
    op = build_operator(OperatorLabel::LxP, h.axis);
  else if (kind == EigenOperator::LyP)
    op = build_operator(OperatorLabel::LyP, h.axis);

  ResidualStats stats;
  stats.step = step;
  double sum = 0.0;
  for (const SpherePoint &p : points) {
    const Amplitude lhs =
        kind == EigenOperator::L2 ? apply_l2(f, p, step) : apply(*op, f, p, step);
    const double r = std::abs(lhs - expected * f(p.theta(), p.phi()));
    stats.max_abs = std::max(stats.max_abs, r);
    sum += r;
    ++stats.points_tested;
  }
  stats.mean_abs = stats.points_tested ? sum / stats.points_tested : 0.0;
  return stats;
}

} // namespace gsh

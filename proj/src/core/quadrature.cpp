#include "quadrature.hpp"

namespace gsh {

void gauss_legendre(int n, std::vector<double> &nodes,
                    std::vector<double> &weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence for P_n(x) and P_n'(x)
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15)
        break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

QuadratureRule sphere_rule(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2)
    throw std::invalid_argument("sphere rule requires at least 2 nodes per "
                                "direction");
  std::vector<double> x, w;
  gauss_legendre(n_theta, x, w);

  QuadratureRule rule;
  rule.n_theta = n_theta;
  rule.n_phi = n_phi;
  rule.nodes.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  const double wphi = kTwoPi / n_phi;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(x[i]);
    for (int j = 0; j < n_phi; ++j)
      rule.nodes.push_back({SpherePoint(theta, j * wphi), w[i] * wphi});
  }
  return rule;
}

Amplitude inner_product(const SphereField &f, const SphereField &g,
                        const QuadratureRule &rule) {
  Amplitude acc = 0.0;
  for (const auto &node : rule.nodes) {
    const double t = node.point.theta(), p = node.point.phi();
    acc += node.weight * std::conj(f(t, p)) * g(t, p);
  }
  return acc;
}

double integrate_density(const GeneralizedHarmonic &h,
                         const QuadratureRule &rule) {
  double acc = 0.0;
  for (const auto &node : rule.nodes)
    acc += node.weight * probability(h, node.point);
  return acc;
}

} // namespace gsh

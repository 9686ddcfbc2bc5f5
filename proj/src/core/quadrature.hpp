#pragma once
#include <vector>

#include "harmonics.hpp"
#include "operators.hpp"

namespace gsh {

//! Deterministic tensor-product sphere rule: Gauss-Legendre in cos(theta)
//! times uniform weights in phi. Weights are in steradians and sum to 4*pi.
struct QuadratureRule {
  struct Node {
    SpherePoint point;
    double weight;
  };
  std::vector<Node> nodes;
  int n_theta = 0;
  int n_phi = 0;
};

//! Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on the
//! Legendre recurrence to 1e-15.
void gauss_legendre(int n, std::vector<double> &nodes,
                    std::vector<double> &weights);

QuadratureRule sphere_rule(int n_theta, int n_phi);

//! sum over nodes of weight * conj(f) * g, accumulated in node order.
Amplitude inner_product(const SphereField &f, const SphereField &g,
                        const QuadratureRule &rule);

//! Integral of |evaluate(h, .)|^2 over the sphere.
double integrate_density(const GeneralizedHarmonic &h,
                         const QuadratureRule &rule);

} // namespace gsh

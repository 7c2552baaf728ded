#ifndef SMALLMINORS_BOUNDS_HPP
#define SMALLMINORS_BOUNDS_HPP

#include <cstdint>

#include "smallminors/rational.hpp"

namespace smallminors {

enum class KtVariant { weak, strong };

/// Guarantee functions of the finders. Thresholds are exact
/// rationals; the coefficients involve binary logarithms and are doubles,
/// used only in the final size comparison.
struct BoundProfile {
    Rational d;
    Rational d_prime;

    /// Throws std::invalid_argument unless d > d' > 0.
    BoundProfile(Rational d_, Rational d_prime_);

    double beta() const { return d.to_double() / d_prime.to_double(); }
    /// Diameter coefficient 2 / log2(beta) + 2.
    double p() const;
};

double p_coefficient(const Rational &d, const Rational &d_prime);

/// Short-cycle coefficient 2 p(2+eps, 2) + 1.
double girth_coefficient(const Rational &eps);
/// Small K4-model coefficient g(eps/2) + 3 p(4+eps, 4+eps/2).
double h_k4(const Rational &eps);
/// K3-model with branch sets of size >= 2: the K4 coefficient plus one vertex.
double h_k3_nice(const Rational &eps);
/// Recursive K_t coefficient, h(2, .) = 2. The strong variant starts its
/// recursion from the nice-K3 coefficient at t = 3.
double h_kt(int t, const Rational &eps, KtVariant variant);

/// Surface K4 coefficient: max(h_k4(eps) (1 + log2(24/eps + 6)), 2 + ceil(12/eps)).
double q_surface_k4(const Rational &eps);
/// Surface girth coefficient: max(6 + 12/eps, 2 p(2+eps,2)(1 + max(0, log2(3/eps))) + 1).
double h_surface_girth(const Rational &eps);

/// Density threshold 2^(t-1) + eps (strong) or 2^t + eps (weak).
Rational kt_density_threshold(int t, const Rational &eps, KtVariant variant);

/// value <= coefficient * log2(n) + additive, with 1e-9 slack.
bool within_log_bound(double value, double coefficient, double n, double additive = 0.0);

}  // namespace smallminors

#endif

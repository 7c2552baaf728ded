#include "smallminors/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smallminors {

BoundProfile::BoundProfile(Rational d_, Rational d_prime_) : d(d_), d_prime(d_prime_) {
    if (!(d_prime > Rational(0)) || !(d > d_prime)) throw std::invalid_argument("bound profile needs d > d' > 0");
}

double BoundProfile::p() const { return 2.0 / std::log2(beta()) + 2.0; }

double p_coefficient(const Rational &d, const Rational &d_prime) { return BoundProfile(d, d_prime).p(); }

double girth_coefficient(const Rational &eps) { return 2.0 * p_coefficient(Rational(2) + eps, Rational(2)) + 1.0; }

double h_k4(const Rational &eps) {
    return girth_coefficient(eps / Rational(2)) + 3.0 * p_coefficient(Rational(4) + eps, Rational(4) + eps / Rational(2));
}

double h_k3_nice(const Rational &eps) { return h_k4(eps) + 1.0; }

Rational kt_density_threshold(int t, const Rational &eps, KtVariant variant) {
    int exponent = variant == KtVariant::strong ? t - 1 : t;
    return Rational(std::int64_t{1} << exponent) + eps;
}

double h_kt(int t, const Rational &eps, KtVariant variant) {
    if (t < 2) throw std::invalid_argument("h_kt: t >= 2");
    if (t == 2) return 2.0;
    if (t == 3 && variant == KtVariant::strong) return h_k3_nice(eps);
    Rational top = kt_density_threshold(t, Rational(0), variant);
    return 2.0 + (t - 1) * p_coefficient(top + eps, top + eps / Rational(2)) + h_kt(t - 1, eps / Rational(4), variant);
}

double q_surface_k4(const Rational &eps) {
    double e = eps.to_double();
    double small_branch = h_k4(eps) * (1.0 + std::log2(24.0 / e + 6.0));
    double wheel_branch = 2.0 + static_cast<double>((Rational(12) / eps).ceil());
    return std::max(small_branch, wheel_branch);
}

double h_surface_girth(const Rational &eps) {
    double e = eps.to_double();
    double facial = 6.0 + 12.0 / e;
    double abstract = 2.0 * p_coefficient(Rational(2) + eps, Rational(2)) * (1.0 + std::max(0.0, std::log2(3.0 / e))) + 1.0;
    return std::max(facial, abstract);
}

bool within_log_bound(double value, double coefficient, double n, double additive) {
    return value <= coefficient * std::log2(n) + additive + 1e-9;
}

}  // namespace smallminors

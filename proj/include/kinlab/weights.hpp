#pragma once

#include "kinlab/collision.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kinlab {

struct WeightSpec {
    double epsilon = 1e-3;
    double delta = 0.05;
    double M = 10.0;
    double p = 2.0;
    double gamma = 0.0;
};

void validate(const WeightSpec& spec);

// Smooth non-increasing cutoff: 1 for s <= 1, 0 for s >= 2, built from the
// normalized integral of exp(-1 / (u (1 - u))).
double cutoff(double s);
double cutoff_derivative(double s);

// Shared profile of theta and rho in terms of the stretched position s and <xi>:
//   5 s^q (1 - chi(u)) + [(1 - chi(u)) s <xi>^{gamma-1} + 3 <xi>^p] chi(u),
// u = s / <xi>^{p+1-gamma}, q = p / (p + 1 - gamma). The first term is absent where chi(u) = 1,
// which covers every s <= 0.
double weight_profile(double s, double jxi, const WeightSpec& spec);
// d/ds of weight_profile.
double weight_profile_ds(double s, double jxi, const WeightSpec& spec);

double eval_theta(const Vec3& x, const Vec3& xi, const WeightSpec& spec);             // s = delta <x>
double eval_rho(double t, const Vec3& x, const Vec3& xi, const WeightSpec& spec);     // s = delta (<x> - M t)
double eval_weight(double t, const Vec3& x, const Vec3& xi, const WeightSpec& spec);  // exp(epsilon rho / 2)

// grad_x theta and grad_x rho (analytic, through weight_profile_ds).
Vec3 grad_x_theta(const Vec3& x, const Vec3& xi, const WeightSpec& spec);
Vec3 grad_x_rho(double t, const Vec3& x, const Vec3& xi, const WeightSpec& spec);

enum class DomainLabel { HPlus, HZero, HMinus };

// H+: s > 2 <xi>^{p+1-gamma}; H0: <xi>^{p+1-gamma} <= s <= 2 <xi>^{p+1-gamma}; H-: otherwise,
// with s = delta (<x> - M t).
DomainLabel classify_domain(double t, const Vec3& x, const Vec3& xi, const WeightSpec& spec);
const char* label_name(DomainLabel d);

struct GradientReport {
    double mu_gradient = 0.0;   // max |grad_x mu| / (epsilon delta <xi>^{gamma-1} mu), i.e. |grad_x theta| / (delta <xi>^{gamma-1})
    double c1 = 0.0;            // max |theta(x, xi) - theta(x, xi*)| / ||xi|^2 - |xi*|^2|
    double rho_gradient = 0.0;  // max |d rho / d x_i| / <xi>^{gamma-1}
    int samples = 0;
    std::uint64_t seed = 0;
};

// Random (t, x, xi) with |x| log-uniform up to x_max, |xi| uniform up to xi_max.
GradientReport verify_weight_gradients(const WeightSpec& spec, int samples, std::uint64_t seed,
                                       double x_max = 1e5, double xi_max = 10.0, double t_max = 1e4);

struct RhoMonotonicity {
    int samples = 0;
    double max_forward_slope = 0.0;  // max (rho(t + h) - rho(t)) / h
    int violations = 0;              // samples above the slack
};

RhoMonotonicity check_rho_monotone(const WeightSpec& spec, int samples, std::uint64_t seed, double h = 1e-3,
                                   double slack = 1e-12);

struct WeightedKReport {
    struct Row {
        double x = 0.0;          // |x| of the conjugation point (x along e1)
        double epsilon = 0.0;    // after the overflow cap
        double defect = 0.0;     // ||K_eps - K||
        double defect_half = 0.0;  // ||K_{eps/2} - K||
        double ratio = 0.0;
        double conjugated_norm = 0.0;  // ||K_eps||
        bool capped = false;
    };
    std::vector<Row> rows;
    double base_norm = 0.0;  // ||K||
    bool sigma_norm = false;
};

// K_eps = D K D^{-1} with D = diag(exp(eps theta(x, xi_i))). Norms are L^2_xi operator
// norms for gamma >= 0 and L^2_sigma bilinear-form norms for gamma < 0.
WeightedKReport weighted_K_comparison(const VelocityGrid& grid, const Mat& K, const WeightSpec& spec,
                                      const std::vector<double>& x_values, const std::vector<double>& epsilons,
                                      int iterations = 40);

}  // namespace kinlab

#pragma once

#include "kinlab/collision.hpp"

#include <vector>

namespace kinlab {

// Radial profile of the collision frequency: distinct node speeds with nu averaged
// over each speed shell, ascending in speed.
struct RadialNu {
    std::vector<double> speed;
    std::vector<double> nu;

    // Piecewise linear in speed, constant beyond the sampled range.
    double operator()(double r) const;
};

RadialNu radial_nu(const VelocityGrid& grid, const Vec& nu);

// nu on an N^3 lattice of half-width R, computed on orbit representatives only.
RadialNu fine_radial_nu(const PotentialModel& model, int N, double R);

struct EnvelopeSpec {
    double gamma = 0.0;
    double p = 2.0;
    double alpha = 1.0;
    std::vector<double> distances;  // |x - y| samples
    std::vector<double> times;      // t samples
    double d_fit_min = 0.0, d_fit_max = 0.0;  // spatial fit window
    double t_fit_min = 0.0, t_fit_max = 0.0;  // temporal fit window (soft only)
};

// Exponent of the damped-transport bound for a datum of unit
// L^inf(e^{alpha |xi|^p}) norm concentrated at y, evaluated along xi = (x - y) / t:
//   phi(d, t) = nu(d / t) t + alpha (d / t)^p.
// Phi_x(d) = min over lattice speeds r of d nu(r) / r + alpha r^p (best t for each d),
// Phi_t(t) = min over lattice speeds r of nu(r) t + alpha r^p (best d for each t).
struct EnvelopeReport {
    std::vector<double> distances, phi_x;
    std::vector<double> times, phi_t;
    double spatial_exponent = 0.0;   // slope of log Phi_x against log d
    double time_exponent = 0.0;      // slope of log Phi_t against log t; NaN for gamma >= 0
    double predicted_spatial = 0.0;  // p / (p + 1 - gamma)
    double predicted_time = 0.0;     // p / (p - gamma) or NaN
    double c0 = 0.0;                 // largest c with phi(d, t) >= c * envelope(d, t) on all samples
    double worst_ratio = 0.0;        // max e^{-phi} / e^{-c0 envelope}
};

double envelope_phi(const RadialNu& nu, double alpha, double p, double d, double t);

EnvelopeReport st_envelope_check(const RadialNu& nu, const EnvelopeSpec& spec);

}  // namespace kinlab

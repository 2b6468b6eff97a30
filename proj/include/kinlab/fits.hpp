#pragma once

#include <string>
#include <vector>

namespace kinlab {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;  // rms of y - (slope x + intercept)
    int points = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

enum class FitKind { Power, Exp, Stretched };

// power:     y = prefactor * t^exponent
// exp:       y = prefactor * e^{exponent t}
// stretched: y = y0 e^{-prefactor t^exponent}
struct DecayFit {
    FitKind kind = FitKind::Power;
    double exponent = 0.0;
    double prefactor = 0.0;
    double t_min = 0.0, t_max = 0.0;
    double residual = 0.0;  // rms in the linearized (log) coordinates
    int points = 0;
};

DecayFit fit_power(const std::vector<double>& t, const std::vector<double>& y, double t_min, double t_max);
DecayFit fit_exp(const std::vector<double>& t, const std::vector<double>& y, double t_min, double t_max);
// Regression of log(-log(y / y0)) on log t. With y0 <= 0 the sample at t = 0 is used.
DecayFit fit_stretched(const std::vector<double>& t, const std::vector<double>& y, double t_min, double t_max,
                       double y0 = 0.0);

struct PeakTrack {
    std::vector<double> times;
    std::vector<double> positions;
    double speed = 0.0;
    double intercept = 0.0;
    bool lost = false;
    double last_good_time = 0.0;
    std::string message;
};

// Argmax over x > x_min per profile with three-point parabolic refinement, then a
// straight-line fit of position against time. A profile whose maximum sits on the
// window edge or below noise_floor (relative to the largest profile value seen)
// ends the track.
PeakTrack track_peak(const std::vector<double>& times, const std::vector<double>& x,
                     const std::vector<std::vector<double>>& profiles, double x_min = 1.0,
                     double noise_floor = 1e-10);

struct ExponentCell {
    double gamma = 0.0, p = 0.0;
    double predicted_time = 0.0;   // NaN for the hard branch (pure exponential)
    double predicted_space = 0.0;
    double fitted_time = 0.0;      // NaN when not measured
    double fitted_space = 0.0;
    double tolerance = 0.05;
    std::string status;            // pass, fail or missing
};

double predicted_time_exponent(double gamma, double p);   // p / (p - gamma) for gamma < 0
double predicted_space_exponent(double gamma, double p);  // p / (p + 1 - gamma)

// Fills predictions and status for each cell; unmeasured cells are marked missing.
std::vector<ExponentCell> exponent_table(std::vector<ExponentCell> cells);

}  // namespace kinlab

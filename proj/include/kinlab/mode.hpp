#pragma once

#include "kinlab/sectors.hpp"

#include <array>
#include <functional>
#include <vector>

namespace kinlab {

// One Fourier mode with wavenumber eta * e1.
struct ModeProblem {
    double eta = 0.0;
    const SectorSystem* system = nullptr;
    CVec initial;  // nodal values on the grid
};

struct EvolveOptions {
    double T = 1.0;
    double dt = 0.0;  // 0 selects default_dt
    int sample_stride = 1;
    bool keep_states = false;
    // When nonempty, samples are taken only at t = 0 and at these times, which must
    // be multiples of the step.
    std::vector<double> record_times;
};

// Picard orders h^(0..6), remainder R^(6) integrated as its own equation, and f.
constexpr int kPicardOrders = 7;

struct ModeTrajectory {
    double eta = 0.0;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<double> f_norm;
    std::vector<std::array<double, kPicardOrders>> h_norm;
    std::vector<double> r_norm;
    std::vector<double> identity_defect;  // ||f - sum h - R|| / ||f(0)||
    std::vector<CVec> f, remainder;       // nodal states, only with keep_states
    std::vector<std::array<CVec, kPicardOrders>> h;
};

double default_dt(double eta, double R, double nu_max);

// S^t h0 in Fourier form: e^{-(i xi.eta + nu) t} h0 per node.
CVec damped_transport(const VelocityGrid& grid, const Vec& nu, const CVec& h0, double t, const Vec3& eta);

// S^t h0 on a periodic slab x_k = -L + 2L k / nx: h0(x - xi_1 t, xi) e^{-nu t}
// by periodic cubic interpolation. samples is nx x n (column per velocity node).
Mat damped_transport_slab(const VelocityGrid& grid, const Vec& nu, const Mat& samples, double L, double t);

// Integrates dh0 = D h0, dhj = D hj + K h(j-1), dR = (D + K) R + K h6, df = (D + K) f
// with D = -(i xi_1 eta + nu), using fourth-order Lawson Runge-Kutta so that D is exact.
ModeTrajectory evolve_mode(const ModeProblem& problem, const EvolveOptions& options);

std::vector<ModeTrajectory> evolve_modes(const std::vector<ModeProblem>& problems, const EvolveOptions& options,
                                         int jobs);

// Log-log slopes of ||h^(j)(t)|| e^{nu_min t} against t on samples t_min <= t <= t_max.
// The first steps are excluded by t_min: a four-stage step raises the Picard order
// by at most four, so high orders are not yet resolved there.
// Entry 0 is NaN (h^(0) starts at a nonzero value).
std::array<double, kPicardOrders> picard_small_time_exponents(const ModeTrajectory& traj, double nu_min,
                                                              double t_max = 0.5, double t_min = 0.05);

struct PhaseSpaceFunction {
    std::function<double(const Vec3& x, const Vec3& xi)> value;
    std::function<Vec3(const Vec3& x, const Vec3& xi)> grad_xi;
};

PhaseSpaceFunction gaussian_test_function();
PhaseSpaceFunction affine_test_function();

// Max over sampled (x, xi) of |D_t F - (grad_xi h0)(x - xi t, xi)| where F is the free
// transport of h0 and D_t = t grad_x + grad_xi is taken by centred differences of step `step`.
double dt_commutator_check(const VelocityGrid& grid, const PhaseSpaceFunction& h0, double box, double t,
                           double step, int samples, std::uint64_t seed);

struct RemainderReport {
    std::vector<double> times;
    std::vector<double> Z;
    std::vector<double> ratio;
    double sup_ratio = 0.0;
    double early_max = 0.0;  // max ratio on the first half of the window
    double late_max = 0.0;   // max ratio on the second half
    // Discrete boundedness: finite, and the second half never exceeds the first.
    bool bounded = false;
    bool soft = false;
};

// Z(t) = (sum_eta (1 + eta^2)^2 ||R(t, eta)||^2 d_eta)^{1/2}, divided by min(t^5, 1) (hard)
// or t^5 (1 + t)^2 (soft), over samples with t in [t_min, t_max].
RemainderReport remainder_smoothness_bound(const std::vector<ModeTrajectory>& trajectories,
                                           const std::vector<double>& eta_weights, bool soft, double t_min,
                                           double t_max);

}  // namespace kinlab

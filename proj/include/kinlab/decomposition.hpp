#pragma once

#include "kinlab/mode.hpp"
#include "kinlab/spectral.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kinlab {

// Spatial profiles supported in |x| < 1.
enum class SpatialProfile { Gaussian, Bump };

struct ProfileSpec {
    SpatialProfile kind = SpatialProfile::Bump;
    double sigma = 0.35;  // Gaussian width; the Gaussian is shifted to vanish at |x| = 1
};

double profile_value(const ProfileSpec& p, double x);
// int phi(x) e^{-i eta x} dx on the line.
double profile_transform_1d(const ProfileSpec& p, double eta);
// int phi(|x|) e^{-i eta . x} dx over R^3.
double profile_transform_3d(const ProfileSpec& p, double eta);

// Slab torus [-Lx, Lx) with modes eta_k = pi k / Lx, k = -Mx..Mx.
// f(t, x, xi) = sum_k coef[k][n](xi) e^{i eta_k x} at times[n].
struct SlabField {
    double Lx = 0.0;
    int Mx = 0;
    std::vector<double> eta;
    std::vector<double> times;
    std::vector<std::vector<CVec>> coef;  // [mode][time], mode m <-> k = m - Mx

    int modes() const { return static_cast<int>(eta.size()); }
};

SlabField slab_initial(const VelocityGrid& grid, const ProfileSpec& profile, const CVec& psi, double Lx, int Mx);

enum class Propagation { Integrate, Spectral };

struct SlabEvolveOptions {
    std::vector<double> times;
    Propagation method = Propagation::Spectral;
    double dt = 0.0;  // Integrate only; 0 selects default_dt
    int jobs = 1;
};

// Evolves every mode of the t = 0 slice of `initial` to the requested times.
SlabField evolve_slab(const SectorSystem& sys, const SlabField& initial, const SlabEvolveOptions& options);

// Spectrum at -eta from the spectrum at eta: Lambda(-eta) is the complex conjugate of Lambda(eta).
ModeSpectrum conjugate_spectrum(const ModeSpectrum& s);

// Eigen data for every mode of the field, restricted to sectors where the t = 0 data lives.
std::vector<ModeSpectrum> slab_spectra(const SectorSystem& sys, const SlabField& field, double delta, int jobs);

// Sharp partition by |eta_k| <= delta (long, ties included) and |eta_k| > delta (short).
std::pair<SlabField, SlabField> split_long_short(const SlabField& field, double delta);

// Fluid part sum_j e^{rho_j t} <f0, l_j> e_j per long-wave mode and its complement.
// spectra[m] must hold eigen data for every mode m with nonzero long-wave content.
std::pair<SlabField, SlabField> split_fluid(const SectorSystem& sys, const SlabField& longwave,
                                            const std::vector<ModeSpectrum>& spectra);

// Parseval: ||f(t_n)||_{L^2_{x,xi}} over the torus, optionally restricted to |eta_k| > delta.
double slab_norm(const SlabField& field, const VelocityGrid& grid, int time_index);
double short_wave_norm(const SlabField& field, const VelocityGrid& grid, int time_index, double delta);

struct SlabProfile {
    std::vector<double> x;
    std::vector<double> norm;  // |f(t, x, .)|_{L^2_xi}
    double imag_residue = 0.0;  // max |Im f| / max |f|
    std::string warning;        // set when the signal cone does not fit the torus
};

SlabProfile reconstruct_slab(const SlabField& field, const VelocityGrid& grid, const std::vector<double>& xs,
                             int time_index);

struct RadialBound {
    std::vector<double> times;
    std::vector<double> B;
    double eta_max = 0.0;
    int points = 0;
};

// B(t) = 4 pi int_0^eta_max eta^2 |e^{Lambda(eta e1) t} phi_hat(eta) psi|_{L^2_xi} d eta,
// Gauss-Legendre in eta, propagation through the eigendecomposition.
RadialBound radial_longwave_bound(const SectorSystem& sys, const ProfileSpec& profile, const CVec& psi,
                                  double eta_max, int points, const std::vector<double>& times, int jobs = 1);

}  // namespace kinlab

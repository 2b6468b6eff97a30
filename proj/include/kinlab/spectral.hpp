#pragma once

#include "kinlab/sectors.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace kinlab {

using cplx = std::complex<double>;

constexpr int kFluidBranches = 5;

// Eigendecomposition of Lblock - i eta diag(xi1) in one sector.
// Right vectors are the columns of V; left vectors are the rows of V^{-1}.
struct SectorEigen {
    int sector = -1;
    CVec values;
    CMat V;
    CMat Vinv;  // empty when vectors were not requested
};

struct EigenOptions {
    bool vectors = true;
    // Restrict to these sectors (empty: all). The complement abscissa is only
    // meaningful when every sector is present.
    std::vector<std::string> sectors;
    int jobs = 1;
};

// Mode operator Lambda(eta e1) = -i xi_1 eta + L.
struct ModeSpectrum {
    double eta = 0.0;
    std::vector<SectorEigen> sectors;
    // Candidates for the five fluid branches: the three rightmost EE+ values,
    // then the rightmost OE and EO values. Only the first fluid_count slots are
    // filled when some of those sectors were not solved.
    std::array<cplx, kFluidBranches> fluid{};
    std::array<int, kFluidBranches> fluid_sector{};
    std::array<int, kFluidBranches> fluid_index{};
    int fluid_count = 0;
    double complement_abscissa = 0.0;  // largest real part outside the five
    double abscissa = 0.0;             // largest real part overall

    const SectorEigen* find(int sector) const;
};

ModeSpectrum eigen_at(const SectorSystem& sys, double eta, const EigenOptions& options = {});

// Nodal right eigenvector, and the nodal left vector l with <f, l> the coefficient
// of f along that eigenvector (so <e_k, l_j> = delta_jk).
CVec right_vector(const SectorSystem& sys, const SectorEigen& se, int index);
CVec left_vector(const SectorSystem& sys, const SectorEigen& se, int index);

// Leading-order fluid eigenvectors for eta along e1.
std::array<Vec, kFluidBranches> fluid_limits(const VelocityGrid& grid, const InvariantBasis& basis);

struct SpectralBranchSet {
    std::vector<double> etaValues;
    std::array<std::vector<cplx>, kFluidBranches> branches;
    std::array<std::vector<CVec>, kFluidBranches> rightVectors;  // nodal, unit W-norm
    std::array<std::vector<CVec>, kFluidBranches> leftVectors;   // dual to rightVectors
    std::vector<double> minOverlap;  // smallest consecutive overlap per branch
    struct Fit {
        double a = 0.0, A = 0.0;
        double residual = 0.0;  // rms misfit relative to |rho|
        int points = 0;
    };
    std::array<Fit, kFluidBranches> fits;
};

// Eigen data on increasing eta > 0, branches labelled against fluid_limits at
// the first point and then followed by maximal eigenvector overlap.
SpectralBranchSet track_branches(const SectorSystem& sys, const InvariantBasis& basis,
                                 const std::vector<double>& etas, int jobs = 1);

// Least squares Im rho = -a eta, Re rho = -A eta^2 over eta <= eta_fit.
void fit_dispersion(SpectralBranchSet& set, double eta_fit, int min_points = 6);

struct OverlapReport {
    std::array<double, kFluidBranches> self{};   // |<e_j, E_j>|
    double max_cross = 0.0;                      // max_{j != l} |<e_j, E_l>|
    double max_cross_nondegenerate = 0.0;        // excluding pairs inside {2, 3, 4}
    std::array<double, kFluidBranches> cluster{};  // norm of the projection onto the span of its cluster
};

OverlapReport eigenvector_limits(const SpectralBranchSet& set, const VelocityGrid& grid,
                                 const InvariantBasis& basis);

struct GapScan {
    std::vector<double> eta;
    std::vector<double> max_real;
    double worst = 0.0;  // max over the scan
    double tau = 0.0;    // -worst when negative, else 0
    bool within_hypothesis = true;
    std::string flag;
};

GapScan gap_scan(const SectorSystem& sys, double gamma, const std::vector<double>& etas, int jobs = 1);

// e^{Lambda(eta) t} f0 through the eigendecomposition, for the sectors in `spec`.
// Components of f0 in sectors missing from `spec` must vanish.
CVec spectral_propagate(const SectorSystem& sys, const ModeSpectrum& spec, const CVec& f0, double t);

// Same in sector coordinates of one sector.
CVec spectral_propagate_sector(const SectorEigen& se, const CVec& x0, double t);

}  // namespace kinlab

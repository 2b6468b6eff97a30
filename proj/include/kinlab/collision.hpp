#pragma once

#include "kinlab/grid.hpp"
#include "kinlab/symmetry.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace kinlab {

// Off-grid evaluation of f at post-collision velocities, per-axis Lagrange
// stencils clamped inside the lattice; points outside [-R, R]^3 contribute zero.
enum class Interpolation { Trilinear, Triquadratic };

// Cross-section B = |cos theta| times |xi - xi_*|^gamma.
struct PotentialModel {
    double gamma = 0.0;
    int angularOrder = 16;  // Gauss-Legendre points in cos theta; azimuth uses twice as many
    Interpolation interpolation = Interpolation::Triquadratic;
};

void validate(const PotentialModel& model);

// Cell average of |u|^gamma over the unit cube centred at the origin.
double singular_cell_constant(double gamma);

// |xi_i - xi_j|^gamma; for gamma < 0 the cell average replaces it below half a spacing.
double interaction_power(const PotentialModel& model, const VelocityGrid& grid, double r);

struct KineticOperatorSet {
    double gamma = 0.0;
    int N = 0;
    double R = 0.0;
    int angularOrder = 0;
    Vec nu;
    Mat K;  // assembled -K1 + K2 after W-symmetrization, entries include quadrature weights
    Mat L;  // conservation-corrected -nu + K
    double asymmetryReport = 0.0;
    double correctionMagnitude = 0.0;
    double nu0 = 0.0, nu1 = 0.0;  // min / max of nu / (1 + |xi|)^gamma

    // K consistent with L, i.e. L + diag(nu).
    Mat corrected_K() const;
};

Vec compute_nu(const PotentialModel& model, const VelocityGrid& grid, const LatticeSymmetry& sym);
Vec compute_nu(const PotentialModel& model, const VelocityGrid& grid);

// Kernel density of K1 (without the quadrature weight of xi_j).
double kernel_k1(const PotentialModel& model, const VelocityGrid& grid, int i, int j);

struct AssemblyOptions {
    int jobs = 1;
    double correction_limit = 0.1;
};

// -K1 + K2 before symmetrization, rows generated from orbit representatives and
// averaged over their stabilizers, so K(g i, g j) = K(i, j) for every lattice symmetry g.
Mat assemble_K_raw(const PotentialModel& model, const VelocityGrid& grid, const LatticeSymmetry& sym,
                   int jobs = 1);

// Replaces K by its W-self-adjoint part; returns the relative defect removed.
double symmetrize_weighted(const VelocityGrid& grid, Mat& K);

KineticOperatorSet assemble_L(const PotentialModel& model, const VelocityGrid& grid,
                              const InvariantBasis& basis, const AssemblyOptions& options = {});

// L <- (I - P0) L (I - P0) with P0 the W-orthogonal invariant projector.
Mat conservation_correction(const VelocityGrid& grid, const InvariantBasis& basis, const Mat& L);

// Largest ||K chi_j - nu chi_j|| / ||nu chi_j|| over the five invariants.
double invariant_defect(const VelocityGrid& grid, const InvariantBasis& basis, const Vec& nu, const Mat& K);

// sum_j |K_ij|, the discrete integral of |k(xi_i, .)|.
Vec kernel_row_sums(const Mat& K);

// Largest singular value of W^{1/2} A W^{-1/2} by power iteration.
double weighted_operator_norm(const VelocityGrid& grid, const Mat& A, int iterations = 200);

struct KernelEnvelopeReport {
    double k1_constant = 0.0;  // smallest C with k1 <= C * envelope on the samples
    int k1_samples = 0;
    struct OperatorBound {
        double beta1, beta2, p;
        double constant;  // max ratio over the random inputs
    };
    std::vector<OperatorBound> operator_bounds;
    double chi0_ratio = 0.0;
};

// Smallest -<g, L g> / |P1 g|^2_{L^2_sigma} over `samples` random g (sigma weight <xi>^gamma).
// Positive when L is coercive on the complement of the invariants.
double coercivity_constant(const VelocityGrid& grid, const InvariantBasis& basis, const Mat& L, double gamma,
                           int samples, std::uint64_t seed);

// Artifact form: operators.json plus raw nu.bin and L.bin. A loaded set carries
// K = L + diag(nu), the conservation-consistent kernel.
void save_operators(const std::filesystem::path& dir, const KineticOperatorSet& ops);
KineticOperatorSet load_operators(const std::filesystem::path& dir);

KernelEnvelopeReport verify_kernel_envelope(const PotentialModel& model, const VelocityGrid& grid,
                                            const InvariantBasis& basis, const Mat& K,
                                            std::uint64_t seed, int pairs = 500, int inputs = 20);

}  // namespace kinlab

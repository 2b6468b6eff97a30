#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace kinlab {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

// Tensor lattice of N points per axis on [-R, R]^3 with trapezoidal weights.
// Node (a, b, c) has flat index (a * N + b) * N + c.
struct VelocityGrid {
    int N = 0;
    double R = 0.0;
    double h = 0.0;
    std::vector<double> axis;
    Eigen::Matrix<double, Eigen::Dynamic, 3> nodes;
    Vec weights;
    Vec maxwellian;
    Vec sqrt_maxwellian;
    Vec speed;

    int size() const { return static_cast<int>(weights.size()); }
    int index(int a, int b, int c) const { return (a * N + b) * N + c; }
    std::array<int, 3> triple(int i) const { return {i / (N * N), (i / N) % N, i % N}; }
    Vec3 node(int i) const { return nodes.row(i).transpose(); }
    std::uint64_t checksum() const;
};

VelocityGrid build_grid(int N, double R);

double maxwellian(const Vec3& xi);
double sqrt_maxwellian(const Vec3& xi);
inline double japanese(double r) { return std::sqrt(1.0 + r * r); }

// Five grid vectors, W-orthonormal, spanning {1, xi, |xi|^2} M^{1/2}.
struct InvariantBasis {
    std::array<Vec, 5> chi;
    Mat matrix() const;  // n x 5
};

// Closed-form invariants sampled on the grid, without discrete re-orthogonalization.
InvariantBasis analytic_invariants(const VelocityGrid& grid);
InvariantBasis build_basis(const VelocityGrid& grid);

template <typename Derived1, typename Derived2>
auto inner(const VelocityGrid& grid, const Eigen::MatrixBase<Derived1>& f,
           const Eigen::MatrixBase<Derived2>& g) {
    // <f, g> = sum_i w_i f_i conj(g_i)
    return (f.array() * grid.weights.array() * g.array().conjugate()).sum();
}

Vec project_macro(const VelocityGrid& grid, const InvariantBasis& basis, const Vec& g);
CVec project_macro(const VelocityGrid& grid, const InvariantBasis& basis, const CVec& g);
Vec macro_coefficients(const VelocityGrid& grid, const InvariantBasis& basis, const Vec& g);

enum class NormKind { L2, L2Sigma, LinfWeighted };

struct NormSpec {
    NormKind kind = NormKind::L2;
    double gamma = 0.0;  // L2Sigma weight <xi>^gamma
    double alpha = 0.0;  // LinfWeighted: e^{alpha |xi|^p} <xi>^beta
    double p = 2.0;
    double beta = 0.0;
};

double norm(const VelocityGrid& grid, const Vec& g, const NormSpec& spec = {});
double norm(const VelocityGrid& grid, const CVec& g, const NormSpec& spec = {});

}  // namespace kinlab

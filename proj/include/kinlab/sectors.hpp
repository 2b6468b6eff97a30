#pragma once

#include "kinlab/collision.hpp"
#include "kinlab/symmetry.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kinlab {

// Operator restricted to one symmetry sector, in W-orthonormal coordinates.
// Lblock is symmetric; the mode operator is Lblock - i eta diag(xi1).
struct SectorOperator {
    std::string name;
    Vec nu;
    Vec xi1;
    Mat Kblock;  // conservation-consistent K = L + diag(nu)
    Mat Lblock;
};

struct SectorSystem {
    std::shared_ptr<const VelocityGrid> grid;
    std::vector<SectorSpace> spaces;
    std::vector<SectorOperator> blocks;

    int find(const std::string& name) const;
    // Coordinates of f in every sector.
    std::vector<CVec> split(const CVec& f) const;
    CVec merge(const std::vector<CVec>& parts) const;
};

SectorSystem build_sector_system(std::shared_ptr<const VelocityGrid> grid, const KineticOperatorSet& ops);

// Eigenvalues of the corrected L collected from all sectors, ascending.
Vec sector_spectrum(const SectorSystem& sys);

}  // namespace kinlab

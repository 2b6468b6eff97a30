#pragma once

#include "kinlab/grid.hpp"

#include <array>
#include <string>
#include <vector>

namespace kinlab {

// Signed axis permutations of the lattice (the 48-element octahedral group).
// Element g maps index triple t to t' with t'[k] = t[perm[k]], reflected when flip[k].
struct LatticeSymmetry {
    struct Element {
        std::array<int, 3> perm;
        std::array<bool, 3> flip;
    };
    int N = 0;
    std::vector<Element> elements;
    std::vector<std::vector<int>> node_map;  // node_map[g][i] = g . i
    std::vector<std::vector<int>> inverse_map;
    std::vector<int> representatives;  // one node per orbit
    std::vector<int> orbit_of;         // node -> position in representatives
    std::vector<int> element_of;       // node -> g with g . rep = node

    explicit LatticeSymmetry(const VelocityGrid& grid);
};

// W-orthonormal basis of one symmetry sector for modes along e1.
// Each column is supported on one orbit of the stabilizer group of e1.
struct SectorSpace {
    struct Column {
        std::vector<int> nodes;
        std::vector<double> coef;
        int anchor = 0;  // a node of the orbit, used to read diagonal data
    };
    std::string name;
    std::vector<Column> columns;
    int dim() const { return static_cast<int>(columns.size()); }
};

// EE+, EE-, OO+, OO-, OE, EO: parities in xi_2, xi_3 and under xi_2 <-> xi_3.
// The mode operator for eta parallel to e1 is block diagonal in these spaces.
std::vector<SectorSpace> build_sectors(const VelocityGrid& grid);

Vec sector_project(const VelocityGrid& grid, const SectorSpace& s, const Vec& f);
CVec sector_project(const VelocityGrid& grid, const SectorSpace& s, const CVec& f);
Vec sector_expand(const VelocityGrid& grid, const SectorSpace& s, const Vec& x);
CVec sector_expand(const VelocityGrid& grid, const SectorSpace& s, const CVec& x);
Mat sector_block(const VelocityGrid& grid, const SectorSpace& s, const Mat& A);
Vec sector_diagonal(const SectorSpace& s, const Vec& d);

}  // namespace kinlab

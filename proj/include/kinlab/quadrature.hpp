#pragma once

#include <functional>
#include <vector>

namespace kinlab {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

double integrate(const std::function<double(double)>& f, double a, double b,
                 int points = 64, int panels = 1);

// Runs body(i) for i in [begin, end) on up to `jobs` threads.
// Each index is visited exactly once, so results written per index are
// independent of the thread count.
void parallel_for(int begin, int end, int jobs, const std::function<void(int)>& body);

}  // namespace kinlab

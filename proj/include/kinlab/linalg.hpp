#pragma once

#include "kinlab/grid.hpp"

#include <string>

namespace kinlab {

// Ascending eigenvalues of a real symmetric matrix (LAPACK dsyevd).
Vec symmetric_eigenvalues(Mat A);

struct ComplexEigen {
    CVec values;
    CMat vectors;  // columns, unit 2-norm
};

// General complex eigenproblem (LAPACK zgeev); throws with `context` on failure.
ComplexEigen complex_eigen(CMat A, bool want_vectors, const std::string& context = "");

}  // namespace kinlab

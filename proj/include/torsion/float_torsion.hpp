#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "torsion/basis.hpp"
#include "torsion/chain_complex.hpp"

namespace torsion {

/// Chain complex with double-precision boundaries; boundaries[q-1] is ∂_q.
struct FloatComplex {
    std::vector<std::size_t> dims;
    std::vector<Eigen::MatrixXd> boundaries;
};

struct FloatScaledVector {
    double scale = 1.0;
    Eigen::VectorXd coords;
};

/// basis[q] lists the homology representatives of degree q.
using FloatBasis = std::vector<std::vector<FloatScaledVector>>;

struct FloatTorsion {
    double value = 1.0;
    double error_bound = 0.0;          ///< first-order absolute error estimate
    std::vector<double> per_degree;    ///< |det_q|
};

FloatComplex to_float(const ChainComplex& c);
FloatBasis to_float(const GradedBasis& h);

/// Float evaluation of the torsion formula. Rank decisions keep singular values
/// ≥ tol · largest; an assembled matrix whose column-normalized determinant
/// falls below tol^size throws DegenerateBasisError. tol must lie in (0, 1e-3].
FloatTorsion torsion_float(const FloatComplex& c, const FloatBasis& h, double tol = 1e-10);

/// Numerical rank with the same singular-value threshold rule.
std::size_t float_rank(const Eigen::MatrixXd& m, double tol);

}  // namespace torsion

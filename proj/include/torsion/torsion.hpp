#pragma once

#include <cstddef>
#include <vector>

#include "torsion/basis.hpp"
#include "torsion/chain_complex.hpp"
#include "torsion/pi_radical.hpp"

namespace torsion {

/// Exact Reidemeister torsion together with the per-degree factors |det_q|.
struct ExactTorsion {
    PiRadical value;
    std::vector<PiRadical> per_degree;  ///< |det(∂b_{q+1}, h_q, b_q / c_q)| for q = 0..N
};

/// lifts[q] is a dim C_q × rank ∂_q matrix whose columns are the chains b_q;
/// lifts[0] is empty. The default picks the leftmost independent columns of ∂_q.
using BoundaryLifts = std::vector<RationalMatrix>;

BoundaryLifts default_lifts(const ChainComplex& c);

/// τ(C; h) = ∏_q |det(∂_{q+1} b_{q+1}, h_q, b_q / c_q)|^{(−1)^q}.
/// Throws InputError if C or h fail validation and InconsistencyError if some
/// assembled change of basis is singular.
ExactTorsion torsion_exact(const ChainComplex& c, const GradedBasis& h);

/// Same with caller-chosen boundary lifts; each lifts[q] must map onto B_{q−1}
/// injectively (InputError otherwise).
ExactTorsion torsion_exact(const ChainComplex& c, const GradedBasis& h, const BoundaryLifts& lifts);

/// Multiplies the volume element of degree q by alphas[q], realized by scaling
/// the first vector of each non-empty degree.
GradedBasis scale_basis(const GradedBasis& h, const std::vector<PiRadical>& alphas);

}  // namespace torsion

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torsion/basis.hpp"
#include "torsion/matrix.hpp"

namespace torsion {

/// Finite chain complex C_N → … → C_0 over the rationals with preferred bases.
/// boundary(q) is ∂_q : C_q → C_{q−1}, a dim C_{q−1} × dim C_q matrix.
/// Construction does not check ∂∘∂ = 0; use validate_complex.
class ChainComplex {
public:
    ChainComplex() = default;
    /// `boundaries[q-1]` holds ∂_q, so boundaries.size() must be dims.size() − 1.
    ChainComplex(std::vector<std::size_t> dims, std::vector<RationalMatrix> boundaries);

    /// Complex with the given dimensions and all boundaries zero.
    static ChainComplex zero(std::vector<std::size_t> dims);

    /// Highest degree N.
    [[nodiscard]] std::size_t top_degree() const { return dims_.size() - 1; }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
    [[nodiscard]] std::size_t dim(std::size_t q) const { return q < dims_.size() ? dims_[q] : 0; }
    [[nodiscard]] std::size_t total_dimension() const;

    /// ∂_q for 1 ≤ q ≤ N.
    [[nodiscard]] const RationalMatrix& boundary(std::size_t q) const;
    [[nodiscard]] const std::vector<RationalMatrix>& boundaries() const { return boundaries_; }
    /// rank ∂_q, taken as 0 for q = 0 and q > N.
    [[nodiscard]] std::size_t boundary_rank(std::size_t q) const;

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<RationalMatrix> boundaries_;
};

struct Violation {
    std::size_t degree = 0;
    std::string message;
};

/// nullopt when every boundary has the right shape and ∂_q∘∂_{q+1} = 0.
std::optional<Violation> validate_complex(const ChainComplex& c);

/// dim H_q = dim C_q − rank ∂_q − rank ∂_{q+1}, for q = 0..N.
std::vector<std::size_t> betti_numbers(const ChainComplex& c);

struct BoundaryLift {
    std::vector<std::size_t> columns;  ///< b_q as indices into the preferred basis of C_q
    RationalMatrix image;              ///< ∂_q restricted to those columns, a basis of B_{q−1}
};

/// Leftmost linearly independent columns of ∂_q. Requires 1 ≤ q ≤ N.
BoundaryLift select_boundary_lift(const ChainComplex& c, std::size_t q);

/// nullopt when h is a basis of H_q(C) in every degree.
std::optional<Violation> verify_homology_basis(const ChainComplex& c, const GradedBasis& h);

}  // namespace torsion

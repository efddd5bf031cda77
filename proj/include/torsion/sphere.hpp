#pragma once

#include <cstddef>
#include <cstdint>

#include "torsion/basis.hpp"
#include "torsion/chain_complex.hpp"
#include "torsion/group_ring.hpp"
#include "torsion/pi_radical.hpp"
#include "torsion/rational.hpp"

namespace torsion {

enum class CellModel {
    minimal,      ///< one 0-cell and one n-cell
    hemispheric,  ///< two cells in every dimension 0..n
};

/// Round sphere S^n of radius l with the trivial rank-m representation.
struct SphereSpec {
    std::size_t n = 1;
    Rational radius{1};
    std::size_t rank = 1;
    CellModel model = CellModel::minimal;
};

/// S^n_a × S^k_b with the product metric.
struct ProductSpec {
    std::size_t n = 1;
    std::size_t k = 1;
    Rational a{1};
    Rational b{1};
};

/// Throws InputError unless n ≥ 1, radius > 0 and rank ≥ 1.
void validate(const SphereSpec& spec);
void validate(const ProductSpec& spec);

/// Γ(j/2) for j ≥ 1.
PiRadical gamma_half(std::size_t j);

/// Vol(S^n_l) = 2 π^{(n+1)/2} l^n / Γ((n+1)/2).
PiRadical sphere_volume(std::size_t n, const Rational& radius);

/// Volume by iterated composite Simpson over the polar parameterization:
/// Vol(S^n) = Vol(S^{n−1}) ∫_0^π sin^{n−1}θ dθ, with the panel count doubled
/// at each level. `panels` must be even and at least 64.
double volume_quadrature(std::size_t n, const Rational& radius, std::size_t panels);

/// Cell structure over the group ring before twisting (rank-1 integer data).
GroupRingComplex sphere_group_ring_complex(std::size_t n, CellModel model);

ChainComplex minimal_complex(const SphereSpec& spec);
ChainComplex hemispheric_complex(const SphereSpec& spec);
ChainComplex sphere_complex(const SphereSpec& spec);

/// Homology basis induced by the orthonormal harmonic forms through the de Rham map.
GradedBasis harmonic_homology_basis(const SphereSpec& spec);

/// 1 for even n, Vol(S^n_l)^m for odd n.
PiRadical sphere_torsion_closed(const SphereSpec& spec);

/// 2 for even n, 0 for odd n.
int euler_characteristic(std::size_t n);

PiRadical product_torsion_closed(const ProductSpec& spec);

/// 2 π^{k+1} l^{2k+1} / k!, the analytic torsion of S^{2k+1}_l.
PiRadical weng_you_torsion(std::size_t k, const Rational& radius);

}  // namespace torsion

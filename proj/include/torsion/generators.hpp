#pragma once

#include <cstddef>
#include <random>
#include <utility>

#include "torsion/basis.hpp"
#include "torsion/chain_complex.hpp"
#include "torsion/torsion.hpp"

// Random inputs for the property suites.
namespace torsion::gen {

using Rng = std::mt19937_64;

/// Uniform p/q with |p| ≤ max_num, 1 ≤ q ≤ max_den; positive when requested, nonzero always.
Rational random_rational(Rng& rng, int max_num, int max_den, bool positive);

/// (G, G^{-1}) for a random integer matrix with determinant ±1.
std::pair<RationalMatrix, RationalMatrix> random_unimodular(Rng& rng, std::size_t n);

/// Random rational orthogonal matrix: a signed permutation times rational
/// Givens rotations built from Pythagorean triples.
RationalMatrix random_rational_orthogonal(Rng& rng, std::size_t n);

struct BasedComplex {
    ChainComplex complex;
    GradedBasis basis;
};

/// A valid complex with total dimension ≤ max_total and a homology basis that
/// shares one random scale per degree. Built as a sum of elementary pieces
/// conjugated by random unimodular changes of basis.
BasedComplex random_complex(Rng& rng, std::size_t max_total);

/// A random valid choice of boundary lifts: random column subsets, mixed by a
/// unimodular matrix, shifted by random cycles.
BoundaryLifts random_lifts(Rng& rng, const ChainComplex& c, const GradedBasis& h);

/// Applies a random rational orthogonal recombination to the vectors of every
/// degree whose vectors share a common scale.
GradedBasis random_orthogonal_recoordinatization(Rng& rng, const GradedBasis& h);

}  // namespace torsion::gen

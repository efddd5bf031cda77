#include "torsion/chain_complex.hpp"

#include <numeric>

#include "torsion/errors.hpp"
#include "torsion/linalg.hpp"

namespace torsion {

const std::vector<ScaledVector>& GradedBasis::at(std::size_t q) const {
    static const std::vector<ScaledVector> kEmpty;
    return q < degrees_.size() ? degrees_[q] : kEmpty;
}

std::vector<ScaledVector>& GradedBasis::at(std::size_t q) {
    if (q >= degrees_.size()) degrees_.resize(q + 1);
    return degrees_[q];
}

void GradedBasis::add(std::size_t q, ScaledVector v) { at(q).push_back(std::move(v)); }

ChainComplex::ChainComplex(std::vector<std::size_t> dims, std::vector<RationalMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw InputError("a chain complex needs at least one degree");
    if (boundaries_.size() + 1 != dims_.size()) {
        throw InputError("expected " + std::to_string(dims_.size() - 1) + " boundary matrices, got " +
                         std::to_string(boundaries_.size()));
    }
}

ChainComplex ChainComplex::zero(std::vector<std::size_t> dims) {
    std::vector<RationalMatrix> boundaries;
    for (std::size_t q = 1; q < dims.size(); ++q) boundaries.emplace_back(dims[q - 1], dims[q]);
    return ChainComplex(std::move(dims), std::move(boundaries));
}

std::size_t ChainComplex::total_dimension() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

const RationalMatrix& ChainComplex::boundary(std::size_t q) const {
    if (q == 0 || q > top_degree()) throw std::out_of_range("boundary degree " + std::to_string(q) + " out of range");
    return boundaries_[q - 1];
}

std::size_t ChainComplex::boundary_rank(std::size_t q) const {
    if (q == 0 || q > top_degree()) return 0;
    return rank_of(boundary(q));
}

std::optional<Violation> validate_complex(const ChainComplex& c) {
    for (std::size_t q = 1; q <= c.top_degree(); ++q) {
        const RationalMatrix& d = c.boundary(q);
        if (d.rows() != c.dim(q - 1) || d.cols() != c.dim(q)) {
            return Violation{q, "boundary " + std::to_string(q) + " has shape " + std::to_string(d.rows()) + "x" +
                                    std::to_string(d.cols()) + ", expected " + std::to_string(c.dim(q - 1)) + "x" +
                                    std::to_string(c.dim(q))};
        }
    }
    for (std::size_t q = 1; q < c.top_degree(); ++q) {
        if (!(c.boundary(q) * c.boundary(q + 1)).is_zero()) {
            return Violation{q, "boundary " + std::to_string(q) + " composed with boundary " + std::to_string(q + 1) +
                                    " is nonzero"};
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> betti_numbers(const ChainComplex& c) {
    std::vector<std::size_t> ranks(c.top_degree() + 2, 0);
    for (std::size_t q = 1; q <= c.top_degree(); ++q) ranks[q] = c.boundary_rank(q);
    std::vector<std::size_t> betti(c.top_degree() + 1);
    for (std::size_t q = 0; q <= c.top_degree(); ++q) betti[q] = c.dim(q) - ranks[q] - ranks[q + 1];
    return betti;
}

BoundaryLift select_boundary_lift(const ChainComplex& c, std::size_t q) {
    const RationalMatrix& d = c.boundary(q);
    BoundaryLift lift;
    lift.columns = pivot_columns(d);
    lift.image = d.select_columns(lift.columns);
    return lift;
}

std::optional<Violation> verify_homology_basis(const ChainComplex& c, const GradedBasis& h) {
    if (h.degree_count() > c.top_degree() + 1) {
        for (std::size_t q = c.top_degree() + 1; q < h.degree_count(); ++q) {
            if (!h.at(q).empty()) return Violation{q, "basis vectors given above the top degree"};
        }
    }
    const std::vector<std::size_t> betti = betti_numbers(c);
    for (std::size_t q = 0; q <= c.top_degree(); ++q) {
        const auto& vectors = h.at(q);
        if (vectors.size() != betti[q]) {
            return Violation{q, "expected " + std::to_string(betti[q]) + " homology vectors in degree " +
                                    std::to_string(q) + ", got " + std::to_string(vectors.size())};
        }
        std::vector<std::vector<Rational>> columns;
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            const auto& v = vectors[i].coords;
            if (v.size() != c.dim(q)) {
                return Violation{q, "vector " + std::to_string(i) + " has length " + std::to_string(v.size()) +
                                        ", expected " + std::to_string(c.dim(q))};
            }
            if (q >= 1) {
                const auto image = c.boundary(q).apply(v);
                for (const auto& x : image) {
                    if (!x.is_zero()) return Violation{q, "vector " + std::to_string(i) + " is not a cycle"};
                }
            }
            columns.push_back(v);
        }
        RationalMatrix combined = RationalMatrix::from_columns(c.dim(q), columns);
        std::size_t boundary_rank = 0;
        if (q < c.top_degree()) {
            combined = combined.hcat(c.boundary(q + 1));
            boundary_rank = c.boundary_rank(q + 1);
        }
        if (rank_of(combined) != vectors.size() + boundary_rank) {
            return Violation{q, "vectors in degree " + std::to_string(q) +
                                    " are dependent modulo boundaries"};
        }
    }
    return std::nullopt;
}

}  // namespace torsion

#include "torsion/torsion.hpp"

#include "torsion/errors.hpp"
#include "torsion/linalg.hpp"

namespace torsion {

namespace {

RationalMatrix unit_columns(std::size_t rows, const std::vector<std::size_t>& columns) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m(columns[j], j) = Rational(1);
    return m;
}

void check_lifts(const ChainComplex& c, const BoundaryLifts& lifts) {
    if (lifts.size() != c.top_degree() + 1) {
        throw InputError("expected " + std::to_string(c.top_degree() + 1) + " boundary lifts, got " +
                         std::to_string(lifts.size()));
    }
    if (lifts[0].cols() != 0) throw InputError("degree 0 admits no boundary lift");
    for (std::size_t q = 1; q <= c.top_degree(); ++q) {
        const RationalMatrix& b = lifts[q];
        const std::size_t r = c.boundary_rank(q);
        if (b.rows() != c.dim(q) || b.cols() != r) {
            throw InputError("boundary lift in degree " + std::to_string(q) + " must be " + std::to_string(c.dim(q)) +
                             "x" + std::to_string(r));
        }
        if (rank_of(c.boundary(q) * b) != r) {
            throw InputError("boundary lift in degree " + std::to_string(q) + " does not map onto the boundaries");
        }
    }
}

}  // namespace

BoundaryLifts default_lifts(const ChainComplex& c) {
    BoundaryLifts lifts(c.top_degree() + 1);
    lifts[0] = RationalMatrix(c.dim(0), 0);
    for (std::size_t q = 1; q <= c.top_degree(); ++q) {
        lifts[q] = unit_columns(c.dim(q), select_boundary_lift(c, q).columns);
    }
    return lifts;
}

ExactTorsion torsion_exact(const ChainComplex& c, const GradedBasis& h) { return torsion_exact(c, h, default_lifts(c)); }

ExactTorsion torsion_exact(const ChainComplex& c, const GradedBasis& h, const BoundaryLifts& lifts) {
    if (auto v = validate_complex(c)) {
        throw InputError("invalid complex at degree " + std::to_string(v->degree) + ": " + v->message);
    }
    if (auto v = verify_homology_basis(c, h)) {
        throw InputError("invalid homology basis at degree " + std::to_string(v->degree) + ": " + v->message);
    }
    check_lifts(c, lifts);

    ExactTorsion result;
    for (std::size_t q = 0; q <= c.top_degree(); ++q) {
        // Columns in order: ∂_{q+1}(b_{q+1}), h_q, b_q.
        RationalMatrix assembled(c.dim(q), 0);
        if (q < c.top_degree()) assembled = c.boundary(q + 1) * lifts[q + 1];

        PiRadical scale;
        std::vector<std::vector<Rational>> h_columns;
        for (const ScaledVector& v : h.at(q)) {
            scale = scale * v.scale;
            h_columns.push_back(v.coords);
        }
        assembled = assembled.hcat(RationalMatrix::from_columns(c.dim(q), h_columns)).hcat(lifts[q]);

        if (assembled.cols() != c.dim(q)) {
            throw InconsistencyError("degree " + std::to_string(q) + ": assembled basis has " +
                                     std::to_string(assembled.cols()) + " vectors for a module of dimension " +
                                     std::to_string(c.dim(q)));
        }
        const Rational det = determinant(assembled);
        if (det.is_zero()) {
            throw InconsistencyError("degree " + std::to_string(q) + ": change of basis is singular");
        }
        const PiRadical factor = PiRadical::from_rational(det.abs()) * scale;
        result.per_degree.push_back(factor);
        result.value = q % 2 == 0 ? result.value * factor : result.value / factor;
    }
    return result;
}

GradedBasis scale_basis(const GradedBasis& h, const std::vector<PiRadical>& alphas) {
    if (alphas.size() < h.degree_count()) {
        throw InputError("scale_basis needs one factor per degree: got " + std::to_string(alphas.size()) + " for " +
                         std::to_string(h.degree_count()) + " degrees");
    }
    GradedBasis out = h;
    for (std::size_t q = 0; q < out.degree_count(); ++q) {
        auto& vectors = out.at(q);
        if (!vectors.empty()) vectors.front().scale = vectors.front().scale * alphas[q];
    }
    return out;
}

}  // namespace torsion

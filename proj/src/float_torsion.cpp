#include "torsion/float_torsion.hpp"

#include <cmath>
#include <limits>

#include "torsion/errors.hpp"

namespace torsion {

namespace {

std::size_t rank_with_threshold(const Eigen::MatrixXd& m, double threshold) {
    if (m.size() == 0) return 0;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > 0.0 && sv(i) >= threshold) ++r;
    }
    return r;
}

double largest_singular_value(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

// Leftmost independent columns, scanning greedily.
std::vector<Eigen::Index> leftmost_independent(const Eigen::MatrixXd& d, double tol) {
    std::vector<Eigen::Index> chosen;
    const double threshold = tol * largest_singular_value(d);
    if (threshold == 0.0) return chosen;
    Eigen::MatrixXd selected(d.rows(), 0);
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
        Eigen::MatrixXd trial(d.rows(), selected.cols() + 1);
        trial << selected, d.col(j);
        if (rank_with_threshold(trial, threshold) == static_cast<std::size_t>(trial.cols())) {
            selected = std::move(trial);
            chosen.push_back(j);
        }
    }
    return chosen;
}

}  // namespace

std::size_t float_rank(const Eigen::MatrixXd& m, double tol) { return rank_with_threshold(m, tol * largest_singular_value(m)); }

FloatComplex to_float(const ChainComplex& c) {
    FloatComplex out;
    out.dims = c.dims();
    for (const RationalMatrix& b : c.boundaries()) {
        Eigen::MatrixXd m(b.rows(), b.cols());
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t col = 0; col < b.cols(); ++col) m(r, col) = b(r, col).to_double();
        }
        out.boundaries.push_back(std::move(m));
    }
    return out;
}

FloatBasis to_float(const GradedBasis& h) {
    FloatBasis out(h.degree_count());
    for (std::size_t q = 0; q < h.degree_count(); ++q) {
        for (const ScaledVector& v : h.at(q)) {
            FloatScaledVector f;
            f.scale = pr_to_float(v.scale);
            f.coords.resize(static_cast<Eigen::Index>(v.coords.size()));
            for (std::size_t i = 0; i < v.coords.size(); ++i) f.coords(static_cast<Eigen::Index>(i)) = v.coords[i].to_double();
            out[q].push_back(std::move(f));
        }
    }
    return out;
}

FloatTorsion torsion_float(const FloatComplex& c, const FloatBasis& h, double tol) {
    if (!(tol > 0.0 && tol <= 1e-3)) throw InputError("tolerance must lie in (0, 1e-3]");
    if (c.dims.empty() || c.boundaries.size() + 1 != c.dims.size()) throw InputError("malformed float complex");
    const std::size_t top = c.dims.size() - 1;
    for (std::size_t q = 1; q <= top; ++q) {
        const auto& d = c.boundaries[q - 1];
        if (static_cast<std::size_t>(d.rows()) != c.dims[q - 1] || static_cast<std::size_t>(d.cols()) != c.dims[q]) {
            throw InputError("float boundary " + std::to_string(q) + " has inconsistent shape");
        }
    }
    for (std::size_t q = top + 1; q < h.size(); ++q) {
        if (!h[q].empty()) throw InputError("basis vectors given above the top degree");
    }

    std::vector<std::vector<Eigen::Index>> lifts(top + 2);
    for (std::size_t q = 1; q <= top; ++q) lifts[q] = leftmost_independent(c.boundaries[q - 1], tol);

    constexpr double kEps = std::numeric_limits<double>::epsilon();
    FloatTorsion result;
    double log_torsion = 0.0;
    double relative_error = 0.0;
    for (std::size_t q = 0; q <= top; ++q) {
        const auto n = static_cast<Eigen::Index>(c.dims[q]);
        const std::vector<FloatScaledVector> empty;
        const auto& hq = q < h.size() ? h[q] : empty;
        const std::size_t upper = q < top ? lifts[q + 1].size() : 0;
        const std::size_t cols = upper + hq.size() + lifts[q].size();
        if (static_cast<Eigen::Index>(cols) != n) {
            throw DegenerateBasisError("numerically degenerate basis: degree " + std::to_string(q) + " assembles " +
                                       std::to_string(cols) + " vectors for dimension " + std::to_string(n));
        }
        if (n == 0) {
            result.per_degree.push_back(1.0);
            continue;
        }
        Eigen::MatrixXd a(n, n);
        Eigen::Index col = 0;
        double log_scale = 0.0;
        for (std::size_t j = 0; j < upper; ++j) a.col(col++) = c.boundaries[q].col(lifts[q + 1][j]);
        for (const auto& v : hq) {
            if (v.coords.size() != n) throw InputError("basis vector length mismatch in degree " + std::to_string(q));
            a.col(col++) = v.coords;
            log_scale += std::log(std::abs(v.scale));
        }
        for (Eigen::Index j : lifts[q]) a.col(col++) = Eigen::VectorXd::Unit(n, j);

        // Normalize columns so the degeneracy test is scale free.
        for (Eigen::Index j = 0; j < n; ++j) {
            const double norm = a.col(j).norm();
            if (norm == 0.0) throw DegenerateBasisError("numerically degenerate basis: zero vector in degree " + std::to_string(q));
            a.col(j) /= norm;
            log_scale += std::log(norm);
        }
        const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
        double log_det = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double u = std::abs(lu.matrixLU()(i, i));
            log_det = u == 0.0 ? -std::numeric_limits<double>::infinity() : log_det + std::log(u);
        }
        if (!(log_det >= static_cast<double>(n) * std::log(tol))) {
            throw DegenerateBasisError("numerically degenerate basis in degree " + std::to_string(q));
        }
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
        const auto& sv = svd.singularValues();
        relative_error += static_cast<double>(n) * kEps * (sv(0) / sv(n - 1));

        const double log_factor = log_det + log_scale;
        result.per_degree.push_back(std::exp(log_factor));
        log_torsion += q % 2 == 0 ? log_factor : -log_factor;
    }
    result.value = std::exp(log_torsion);
    if (!std::isfinite(result.value) || result.value == 0.0) {
        throw OverflowError("float torsion is outside the double range");
    }
    result.error_bound = result.value * relative_error;
    return result;
}

}  // namespace torsion

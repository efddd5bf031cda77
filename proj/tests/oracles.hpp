#pragma once

// Independent reference computations. None of these call into the library's
// elimination, lift selection or torsion code.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "torsion/matrix.hpp"

namespace oracle {

using torsion::Rational;
using torsion::RationalMatrix;

// Leibniz expansion over all permutations; fine up to 8×8.
inline Rational leibniz_determinant(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
    Eigen::MatrixXd f(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_double();
    return f;
}

// Rank as the count of singular values above 1e-9 · max.
inline std::size_t svd_rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > 1e-9 * sv(0) ? 1 : 0;
    return r;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

// Float torsion of a complex given by rational boundaries and plain float homology
// columns (scale already applied). Lifts are the LAST independent column subset
// found by exhaustive search; determinants by Leibniz expansion in doubles.
inline double brute_force_torsion(const std::vector<std::size_t>& dims, const std::vector<RationalMatrix>& boundaries,
                                  const std::vector<std::vector<std::vector<double>>>& homology) {
    const std::size_t top = dims.size() - 1;
    std::vector<std::vector<std::size_t>> lifts(top + 2);
    for (std::size_t q = 1; q <= top; ++q) {
        const RationalMatrix& d = boundaries[q - 1];
        const std::size_t r = svd_rank(d);
        for (const auto& s : subsets(dims[q], r)) {
            if (svd_rank(d.select_columns(s)) == r) lifts[q] = s;
        }
    }
    double log_tau = 0.0;
    for (std::size_t q = 0; q <= top; ++q) {
        const std::size_t n = dims[q];
        Eigen::MatrixXd a(static_cast<Eigen::Index>(n), 0);
        auto append = [&](const Eigen::VectorXd& v) {
            a.conservativeResize(Eigen::NoChange, a.cols() + 1);
            a.col(a.cols() - 1) = v;
        };
        if (q < top) {
            const Eigen::MatrixXd d = to_eigen(boundaries[q]);
            for (std::size_t j : lifts[q + 1]) append(d.col(static_cast<Eigen::Index>(j)));
        }
        for (const auto& h : homology[q]) append(Eigen::Map<const Eigen::VectorXd>(h.data(), static_cast<Eigen::Index>(h.size())));
        for (std::size_t j : lifts[q]) append(Eigen::VectorXd::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j)));
        if (static_cast<std::size_t>(a.cols()) != n) return std::nan("");
        // Leibniz in doubles.
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        double det = 0.0;
        do {
            int inversions = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
            double term = inversions % 2 == 0 ? 1.0 : -1.0;
            for (std::size_t i = 0; i < n; ++i) term *= a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
            det += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        const double log_det = n == 0 ? 0.0 : std::log(std::abs(det));
        log_tau += q % 2 == 0 ? log_det : -log_det;
    }
    return std::exp(log_tau);
}

}  // namespace oracle

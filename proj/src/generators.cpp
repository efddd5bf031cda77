#include "torsion/generators.hpp"

#include <algorithm>
#include <numeric>

#include "torsion/linalg.hpp"

namespace torsion::gen {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

RationalMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(uniform_int(rng, -bound, bound));
    }
    return m;
}

}  // namespace

Rational random_rational(Rng& rng, int max_num, int max_den, bool positive) {
    int p = 0;
    while (p == 0) p = uniform_int(rng, positive ? 1 : -max_num, max_num);
    return Rational(p, uniform_int(rng, 1, max_den));
}

std::pair<RationalMatrix, RationalMatrix> random_unimodular(Rng& rng, std::size_t n) {
    RationalMatrix g = RationalMatrix::identity(n);
    RationalMatrix inv = RationalMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && uniform_int(rng, 0, 1) == 1) {
            g(0, 0) = Rational(-1);
            inv(0, 0) = Rational(-1);
        }
        return {g, inv};
    }
    for (std::size_t step = 0; step < 3 * n; ++step) {
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 2));
        if (j >= i) ++j;
        const Rational k(uniform_int(rng, -2, 2));
        if (k.is_zero()) continue;
        // g ← (I + k e_i e_jᵀ) g and inv ← inv (I − k e_i e_jᵀ)
        for (std::size_t c = 0; c < n; ++c) g(i, c) += k * g(j, c);
        for (std::size_t r = 0; r < n; ++r) inv(r, j) -= k * inv(r, i);
    }
    return {g, inv};
}

RationalMatrix random_rational_orthogonal(Rng& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    RationalMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, perm[i]) = Rational(uniform_int(rng, 0, 1) == 0 ? 1 : -1);
    if (n < 2) return q;
    for (std::size_t step = 0; step < n; ++step) {
        const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 2));
        if (j >= i) ++j;
        const int a = uniform_int(rng, 1, 4);
        const int b = uniform_int(rng, 1, 4);
        const Rational hyp(a * a + b * b);
        const Rational cosine = Rational(a * a - b * b) / hyp;
        const Rational sine = Rational(2 * a * b) / hyp;
        RationalMatrix rot = RationalMatrix::identity(n);
        rot(i, i) = cosine;
        rot(j, j) = cosine;
        rot(i, j) = -sine;
        rot(j, i) = sine;
        q = rot * q;
    }
    return q;
}

BasedComplex random_complex(Rng& rng, std::size_t max_total) {
    const auto top = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    std::vector<std::size_t> singles(top + 1);
    std::vector<std::size_t> pairs(top + 2, 0);  // pairs[q]: elementary pieces C_q → C_{q−1}
    for (auto& a : singles) a = static_cast<std::size_t>(uniform_int(rng, 0, 2));
    for (std::size_t q = 1; q <= top; ++q) pairs[q] = static_cast<std::size_t>(uniform_int(rng, 0, 2));

    auto total = [&] {
        std::size_t t = 0;
        for (std::size_t q = 0; q <= top; ++q) t += singles[q] + pairs[q] + pairs[q + 1];
        return t;
    };
    while (total() > max_total) {
        for (std::size_t q = 0; q <= top && total() > max_total; ++q) {
            if (pairs[q + 1] > 0) --pairs[q + 1];
            else if (singles[q] > 0) --singles[q];
        }
    }

    // Layout of C_q: [targets of pairs from q+1 | sources of pairs to q−1 | homology singles].
    std::vector<std::size_t> dims(top + 1);
    for (std::size_t q = 0; q <= top; ++q) dims[q] = pairs[q + 1] + pairs[q] + singles[q];
    std::vector<RationalMatrix> standard;
    for (std::size_t q = 1; q <= top; ++q) {
        RationalMatrix d(dims[q - 1], dims[q]);
        for (std::size_t p = 0; p < pairs[q]; ++p) {
            d(p, pairs[q + 1] + p) = random_rational(rng, 6, 4, false);
        }
        standard.push_back(std::move(d));
    }

    std::vector<std::pair<RationalMatrix, RationalMatrix>> changes;
    for (std::size_t q = 0; q <= top; ++q) changes.push_back(random_unimodular(rng, dims[q]));
    std::vector<RationalMatrix> boundaries;
    for (std::size_t q = 1; q <= top; ++q) {
        boundaries.push_back(changes[q - 1].first * standard[q - 1] * changes[q].second);
    }
    ChainComplex complex(dims, std::move(boundaries));

    GradedBasis basis(top + 1);
    for (std::size_t q = 0; q <= top; ++q) {
        const PiRadical scale(random_rational(rng, 9, 9, true), uniform_int(rng, -3, 3));
        for (std::size_t i = 0; i < singles[q]; ++i) {
            std::vector<Rational> e(dims[q], Rational(0));
            e[pairs[q + 1] + pairs[q] + i] = random_rational(rng, 5, 3, false);
            std::vector<Rational> v = changes[q].first.apply(e);
            if (q < top && complex.dim(q + 1) > 0) {
                // Shift by a random boundary; the homology class is unchanged.
                const RationalMatrix w = random_integer_matrix(rng, complex.dim(q + 1), 1, 2);
                const std::vector<Rational> b = complex.boundary(q + 1).apply(w.column(0));
                for (std::size_t r = 0; r < v.size(); ++r) v[r] += b[r];
            }
            basis.add(q, {scale, std::move(v)});
        }
    }
    return {std::move(complex), std::move(basis)};
}

BoundaryLifts random_lifts(Rng& rng, const ChainComplex& c, const GradedBasis& h) {
    BoundaryLifts lifts(c.top_degree() + 1);
    lifts[0] = RationalMatrix(c.dim(0), 0);
    for (std::size_t q = 1; q <= c.top_degree(); ++q) {
        const RationalMatrix& d = c.boundary(q);
        std::vector<std::size_t> order(c.dim(q));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::size_t> chosen;
        std::size_t current_rank = 0;
        for (std::size_t j : order) {
            std::vector<std::size_t> trial = chosen;
            trial.push_back(j);
            const std::size_t r = rank_of(d.select_columns(trial));
            if (r > current_rank) {
                chosen = std::move(trial);
                current_rank = r;
            }
        }
        RationalMatrix b(c.dim(q), chosen.size());
        for (std::size_t k = 0; k < chosen.size(); ++k) b(chosen[k], k) = Rational(1);
        b = b * random_unimodular(rng, chosen.size()).first;

        // Add cycles: boundaries from degree q+1 and the homology vectors.
        std::vector<std::vector<Rational>> cycles;
        if (q < c.top_degree()) {
            for (std::size_t j = 0; j < c.dim(q + 1); ++j) cycles.push_back(c.boundary(q + 1).column(j));
        }
        for (const auto& v : h.at(q)) cycles.push_back(v.coords);
        for (std::size_t k = 0; k < b.cols() && !cycles.empty(); ++k) {
            const auto& z = cycles[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(cycles.size()) - 1))];
            const Rational t = random_rational(rng, 3, 2, false);
            for (std::size_t r = 0; r < b.rows(); ++r) b(r, k) += t * z[r];
        }
        lifts[q] = std::move(b);
    }
    return lifts;
}

GradedBasis random_orthogonal_recoordinatization(Rng& rng, const GradedBasis& h) {
    GradedBasis out = h;
    for (std::size_t q = 0; q < h.degree_count(); ++q) {
        const auto& vectors = h.at(q);
        if (vectors.empty()) continue;
        const bool common = std::all_of(vectors.begin(), vectors.end(),
                                        [&](const ScaledVector& v) { return v.scale == vectors.front().scale; });
        if (!common) continue;
        const std::size_t k = vectors.size();
        const std::size_t len = vectors.front().coords.size();
        const RationalMatrix q_mat = random_rational_orthogonal(rng, k);
        auto& target = out.at(q);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Rational> mixed(len, Rational(0));
            for (std::size_t i = 0; i < k; ++i) {
                if (q_mat(i, j).is_zero()) continue;
                for (std::size_t r = 0; r < len; ++r) mixed[r] += q_mat(i, j) * vectors[i].coords[r];
            }
            target[j].coords = std::move(mixed);
        }
    }
    return out;
}

}  // namespace torsion::gen

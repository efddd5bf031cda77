#include "torsion/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace torsion {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row. Returns the integer matrix and the product
// of the row multipliers, so det(m) = det(result) / multiplier.
IntMatrix to_integer_rows(const RationalMatrix& m, mpz_class* multiplier) {
    IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
    mpz_class total = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class row_lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).gmp().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& x = m(r, c).gmp();
            out[r][c] = x.get_num() * (row_lcm / x.get_den());
        }
        total *= row_lcm;
    }
    if (multiplier != nullptr) *multiplier = total;
    return out;
}

struct Echelon {
    std::vector<std::size_t> pivots;
    int swap_sign = 1;
    mpz_class last_pivot = 1;
};

// Fraction-free row reduction in place. Every division below is exact: after
// step k each active entry is a (k+1)-minor of the original matrix.
Echelon bareiss(IntMatrix& a, std::size_t cols) {
    Echelon e;
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            e.swap_sign = -e.swap_sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    e.last_pivot = prev;
    return e;
}

}  // namespace

std::size_t rank_of(const RationalMatrix& m) { return pivot_columns(m).size(); }

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
    IntMatrix a = to_integer_rows(m, nullptr);
    return bareiss(a, m.cols()).pivots;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    mpz_class multiplier;
    IntMatrix a = to_integer_rows(m, &multiplier);
    const Echelon e = bareiss(a, m.cols());
    if (e.pivots.size() < m.rows()) return Rational(0);
    return Rational(e.last_pivot * e.swap_sign, multiplier);
}

}  // namespace torsion

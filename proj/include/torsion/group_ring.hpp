#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "torsion/chain_complex.hpp"
#include "torsion/matrix.hpp"

namespace torsion {

/// A freely reduced word in the generators of a free group. No relations are
/// imposed; a presentation mismatch shows up as ∂∂ ≠ 0 after twisting.
class GroupWord {
public:
    struct Letter {
        std::size_t generator = 0;
        std::int64_t exponent = 0;
        friend bool operator==(const Letter&, const Letter&) = default;
        friend auto operator<=>(const Letter&, const Letter&) = default;
    };

    GroupWord() = default;
    /// Reduces the input: merges adjacent powers of one generator, drops zero exponents.
    explicit GroupWord(std::vector<Letter> letters);

    static GroupWord generator(std::size_t g, std::int64_t exponent = 1) { return GroupWord({{g, exponent}}); }

    [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    [[nodiscard]] GroupWord inverse() const;

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Finite sum Σ c_i·w_i in the real group algebra; words distinct, coefficients nonzero.
class GroupRingElement {
public:
    struct Term {
        Rational coefficient;
        GroupWord word;
        friend bool operator==(const Term&, const Term&) = default;
    };

    GroupRingElement() = default;
    explicit GroupRingElement(std::vector<Term> terms);
    /// c·e for the identity element e.
    static GroupRingElement scalar(const Rational& c);

    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    std::vector<Term> terms_;
};

class GroupRingMatrix {
public:
    GroupRingMatrix() = default;
    GroupRingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// Integer matrix embedded via the identity element.
    static GroupRingMatrix from_rational(const RationalMatrix& m);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    GroupRingElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const GroupRingElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const GroupRingMatrix&, const GroupRingMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GroupRingElement> entries_;
};

/// Boundary data of C(K̃; Rπ) as free modules over the group ring:
/// ranks per degree plus ∂_q for q = 1..N (boundaries[q-1]).
struct GroupRingComplex {
    std::vector<std::size_t> dims;
    std::vector<GroupRingMatrix> boundaries;
};

/// Orthogonal representation π → O(m) given by rational generator images.
class Representation {
public:
    /// Throws InputError unless every image is m×m with RᵀR = I exactly.
    Representation(std::size_t rank, std::vector<RationalMatrix> images);

    static Representation trivial(std::size_t rank, std::size_t generator_count = 0);

    [[nodiscard]] std::size_t rank() const { return rank_; }
    [[nodiscard]] const std::vector<RationalMatrix>& images() const { return images_; }

private:
    std::size_t rank_;
    std::vector<RationalMatrix> images_;
};

/// ρ(w) as an m×m matrix; inverse letters use the transpose.
/// Throws InputError for a generator the representation does not cover.
RationalMatrix evaluate_word(const Representation& rep, const GroupWord& w);

/// The twisted complex C(K; R^m_ρ): each entry Σ c_i w_i becomes Σ c_i ρ(w_i).
/// Throws InputError if the shapes are inconsistent or the result has ∂∂ ≠ 0.
ChainComplex twist(const GroupRingComplex& complex, const Representation& rep);

}  // namespace torsion

#include "torsion/group_ring.hpp"

#include <algorithm>
#include <map>

#include "torsion/errors.hpp"

namespace torsion {

GroupWord::GroupWord(std::vector<Letter> letters) {
    for (const Letter& letter : letters) {
        if (letter.exponent == 0) continue;
        if (!letters_.empty() && letters_.back().generator == letter.generator) {
            letters_.back().exponent += letter.exponent;
            if (letters_.back().exponent == 0) letters_.pop_back();
        } else {
            letters_.push_back(letter);
        }
    }
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& letter : out) letter.exponent = -letter.exponent;
    return GroupWord(std::move(out));
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<GroupWord::Letter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord(std::move(letters));
}

GroupRingElement::GroupRingElement(std::vector<Term> terms) {
    std::map<GroupWord, Rational> combined;
    for (auto& term : terms) combined[term.word] += term.coefficient;
    for (auto& [word, coefficient] : combined) {
        if (!coefficient.is_zero()) terms_.push_back({coefficient, word});
    }
}

GroupRingElement GroupRingElement::scalar(const Rational& c) { return GroupRingElement({{c, GroupWord()}}); }

GroupRingMatrix GroupRingMatrix::from_rational(const RationalMatrix& m) {
    GroupRingMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GroupRingElement::scalar(m(r, c));
    }
    return out;
}

Representation::Representation(std::size_t rank, std::vector<RationalMatrix> images)
    : rank_(rank), images_(std::move(images)) {
    if (rank_ == 0) throw InputError("representation rank must be positive");
    const RationalMatrix id = RationalMatrix::identity(rank_);
    for (std::size_t g = 0; g < images_.size(); ++g) {
        const RationalMatrix& r = images_[g];
        if (r.rows() != rank_ || r.cols() != rank_) {
            throw InputError("image of generator " + std::to_string(g) + " is not " + std::to_string(rank_) + "x" +
                             std::to_string(rank_));
        }
        const RationalMatrix gram = r.transpose() * r;
        for (std::size_t i = 0; i < rank_; ++i) {
            for (std::size_t j = 0; j < rank_; ++j) {
                if (gram(i, j) != id(i, j)) {
                    throw InputError("image of generator " + std::to_string(g) + " is not orthogonal: (R^T R)[" +
                                     std::to_string(i) + "][" + std::to_string(j) + "] = " + gram(i, j).to_string());
                }
            }
        }
    }
}

Representation Representation::trivial(std::size_t rank, std::size_t generator_count) {
    return Representation(rank, std::vector<RationalMatrix>(generator_count, RationalMatrix::identity(rank)));
}

RationalMatrix evaluate_word(const Representation& rep, const GroupWord& w) {
    RationalMatrix out = RationalMatrix::identity(rep.rank());
    for (const auto& letter : w.letters()) {
        if (letter.generator >= rep.images().size()) {
            throw InputError("generator " + std::to_string(letter.generator) + " has no image (representation has " +
                             std::to_string(rep.images().size()) + " generators)");
        }
        const RationalMatrix& image = rep.images()[letter.generator];
        const RationalMatrix step = letter.exponent > 0 ? image : image.transpose();
        const std::int64_t count = letter.exponent > 0 ? letter.exponent : -letter.exponent;
        for (std::int64_t i = 0; i < count; ++i) out = out * step;
    }
    return out;
}

ChainComplex twist(const GroupRingComplex& complex, const Representation& rep) {
    const std::size_t m = rep.rank();
    if (complex.dims.empty()) throw InputError("group-ring complex has no degrees");
    if (complex.boundaries.size() + 1 != complex.dims.size()) {
        throw InputError("group-ring complex: expected " + std::to_string(complex.dims.size() - 1) +
                         " boundary matrices, got " + std::to_string(complex.boundaries.size()));
    }
    std::vector<std::size_t> dims;
    for (std::size_t d : complex.dims) dims.push_back(d * m);
    std::vector<RationalMatrix> boundaries;
    for (std::size_t q = 1; q < complex.dims.size(); ++q) {
        const GroupRingMatrix& b = complex.boundaries[q - 1];
        if (b.rows() != complex.dims[q - 1] || b.cols() != complex.dims[q]) {
            throw InputError("group-ring boundary " + std::to_string(q) + " has inconsistent shape");
        }
        RationalMatrix out(b.rows() * m, b.cols() * m);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) {
                for (const auto& term : b(r, c).terms()) {
                    const RationalMatrix block = evaluate_word(rep, term.word);
                    for (std::size_t i = 0; i < m; ++i) {
                        for (std::size_t j = 0; j < m; ++j) {
                            if (!block(i, j).is_zero()) out(r * m + i, c * m + j) += term.coefficient * block(i, j);
                        }
                    }
                }
            }
        }
        boundaries.push_back(std::move(out));
    }
    ChainComplex result(std::move(dims), std::move(boundaries));
    if (auto violation = validate_complex(result)) {
        throw InputError("twisted complex fails validation at degree " + std::to_string(violation->degree) + ": " +
                         violation->message);
    }
    return result;
}

}  // namespace torsion

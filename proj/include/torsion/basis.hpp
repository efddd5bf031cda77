#pragma once

#include <cstddef>
#include <vector>

#include "torsion/pi_radical.hpp"
#include "torsion/rational.hpp"

namespace torsion {

/// The chain scale · Σ coords[i] c_i in the preferred basis of C_q.
struct ScaledVector {
    PiRadical scale;
    std::vector<Rational> coords;

    friend bool operator==(const ScaledVector&, const ScaledVector&) = default;
};

/// Homology representatives per degree. Degrees past the end are empty.
class GradedBasis {
public:
    GradedBasis() = default;
    explicit GradedBasis(std::size_t degree_count) : degrees_(degree_count) {}

    [[nodiscard]] std::size_t degree_count() const { return degrees_.size(); }
    [[nodiscard]] const std::vector<ScaledVector>& at(std::size_t q) const;
    std::vector<ScaledVector>& at(std::size_t q);

    void add(std::size_t q, ScaledVector v);

    friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

private:
    std::vector<std::vector<ScaledVector>> degrees_;
};

}  // namespace torsion

#pragma once

#include <cstdint>
#include <iosfwd>

#include "torsion/rational.hpp"

namespace torsion {

/// A positive exact real of the form sqrt(s * pi^u) with s a positive rational
/// and u an integer. Because pi is transcendental the pair (s, u) is a unique
/// representation, so equality is component-wise.
///
/// The set is closed under products, quotients and integer powers. Square
/// roots exist only for values that are rational times an integer power of pi.
class PiRadical {
public:
    /// The value 1.
    PiRadical() = default;
    /// sqrt(s * pi^u). Throws DomainError unless s > 0.
    PiRadical(Rational s, std::int64_t u);

    /// Embeds a positive rational q as (q^2, 0). Throws DomainError unless q > 0.
    static PiRadical from_rational(const Rational& q);
    /// pi^k.
    static PiRadical pi_power(std::int64_t k) { return PiRadical(Rational(1), 2 * k); }

    [[nodiscard]] const Rational& s() const { return s_; }
    [[nodiscard]] std::int64_t u() const { return u_; }

    /// True when the value is rational times an integer power of pi.
    [[nodiscard]] bool has_exact_sqrt() const { return u_ % 2 == 0 && s_.is_perfect_square(); }

    friend bool operator==(const PiRadical&, const PiRadical&) = default;

private:
    Rational s_{1};
    std::int64_t u_ = 0;
};

PiRadical pr_mul(const PiRadical& a, const PiRadical& b);
PiRadical pr_div(const PiRadical& a, const PiRadical& b);
PiRadical pr_int_pow(const PiRadical& a, std::int64_t k);
/// Throws DomainError ("not a representable square root") unless a.has_exact_sqrt().
PiRadical pr_sqrt(const PiRadical& a);
/// Double nearest to the value, evaluated with 256-bit intermediates.
/// Throws OverflowError when the value is outside the finite double range.
double pr_to_float(const PiRadical& a);

inline PiRadical operator*(const PiRadical& a, const PiRadical& b) { return pr_mul(a, b); }
inline PiRadical operator/(const PiRadical& a, const PiRadical& b) { return pr_div(a, b); }

std::ostream& operator<<(std::ostream& os, const PiRadical& v);

}  // namespace torsion

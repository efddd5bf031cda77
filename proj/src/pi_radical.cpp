#include "torsion/pi_radical.hpp"

#include <cmath>
#include <ostream>

#include <mpfr.h>

#include "torsion/errors.hpp"

namespace torsion {

PiRadical::PiRadical(Rational s, std::int64_t u) : s_(std::move(s)), u_(u) {
    if (s_.sign() <= 0) throw DomainError("PiRadical requires s > 0, got " + s_.to_string());
}

PiRadical PiRadical::from_rational(const Rational& q) {
    if (q.sign() <= 0) throw DomainError("only positive rationals embed, got " + q.to_string());
    return PiRadical(q * q, 0);
}

PiRadical pr_mul(const PiRadical& a, const PiRadical& b) { return PiRadical(a.s() * b.s(), a.u() + b.u()); }

PiRadical pr_div(const PiRadical& a, const PiRadical& b) { return PiRadical(a.s() / b.s(), a.u() - b.u()); }

PiRadical pr_int_pow(const PiRadical& a, std::int64_t k) { return PiRadical(a.s().pow(k), a.u() * k); }

PiRadical pr_sqrt(const PiRadical& a) {
    if (!a.has_exact_sqrt()) {
        throw DomainError("not a representable square root: sqrt(" + a.s().to_string() + "*pi^" +
                          std::to_string(a.u()) + ") has no square root in the domain");
    }
    return PiRadical(*a.s().exact_sqrt(), a.u() / 2);
}

double pr_to_float(const PiRadical& a) {
    constexpr mpfr_prec_t kPrecision = 256;
    mpfr_t s, pi, result;
    mpfr_inits2(kPrecision, s, pi, result, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(s, a.s().gmp().get_mpq_t(), MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    // value = sqrt(s) * sqrt(pi)^u
    mpfr_sqrt(s, s, MPFR_RNDN);
    mpfr_sqrt(pi, pi, MPFR_RNDN);
    mpfr_pow_si(result, pi, static_cast<long>(a.u()), MPFR_RNDN);
    mpfr_mul(result, result, s, MPFR_RNDN);
    const double out = mpfr_get_d(result, MPFR_RNDN);
    mpfr_clears(s, pi, result, static_cast<mpfr_ptr>(nullptr));
    if (!std::isfinite(out) || out == 0.0) {
        throw OverflowError("value sqrt(" + a.s().to_string() + "*pi^" + std::to_string(a.u()) +
                            ") is outside the double range");
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PiRadical& v) {
    return os << "sqrt(" << v.s() << "*pi^" << v.u() << ")";
}

}  // namespace torsion

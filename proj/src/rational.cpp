#include "torsion/rational.hpp"

#include <cctype>
#include <ostream>

#include "torsion/errors.hpp"

namespace torsion {

namespace {

bool is_integer_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
    value_ = mpq_class(z);
}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) return Rational(parse_integer(num_text), mpz_class(1));
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class den = parse_integer(den_text);
    if (den == 0) throw InputError("rational '" + std::string(text) + "' has zero denominator");
    return Rational(parse_integer(num_text), den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

bool Rational::is_perfect_square() const {
    return sign() >= 0 && mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (!is_perfect_square()) return std::nullopt;
    mpz_class num;
    mpz_class den;
    mpz_sqrt(num.get_mpz_t(), value_.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), value_.get_den_mpz_t());
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace torsion

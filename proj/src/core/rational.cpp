#include "invgen/rational.hpp"

#include "invgen/errors.hpp"

namespace invgen {

Rational::Rational(long num, long den) {
    if (den == 0) throw ContractError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ContractError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(text)));
        return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ContractError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace invgen

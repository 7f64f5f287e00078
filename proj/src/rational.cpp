#include "iklp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace iklp {

BigRational::BigRational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    v_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
    v_.canonicalize();
}

BigRational::BigRational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

std::optional<BigRational> BigRational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string_view t) { return t[0] == '+' ? t.substr(1) : t; };
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(s)) return std::nullopt;
        return BigRational(mpz_class(std::string(strip_plus(s)), 10));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    mpz_class q(std::string(strip_plus(den)), 10);
    if (sgn(q) == 0) return std::nullopt;
    return BigRational(mpz_class(std::string(strip_plus(num)), 10), q);
}

std::string BigRational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.v_ = -v_;
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    v_ += o.v_;
    return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
    v_ -= o.v_;
    return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
    v_ *= o.v_;
    return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::abs() const {
    BigRational r;
    r.v_ = ::abs(v_);
    return r;
}

BigRational BigRational::inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    return BigRational(1) /= *this;
}

BigRational BigRational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class floor_of(const BigRational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

mpz_class ceil_of(const BigRational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return q;
}

}  // namespace iklp

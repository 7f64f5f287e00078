#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace iklp {

/// Exact arbitrary-precision rational.
///
/// Invariants: always stored in lowest terms with a positive denominator.
/// Every arithmetic operation is exact; there is no rounding anywhere.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    BigRational(long num, long den);
    BigRational(const mpz_class& n) : v_(n) {}
    BigRational(const mpz_class& num, const mpz_class& den);
    explicit BigRational(mpq_class q);

    /// Parses "p" or "p/q" in base 10. Returns nullopt on malformed input or q = 0.
    static std::optional<BigRational> parse(std::string_view s);

    /// Canonical form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
    }

    BigRational abs() const;
    BigRational inverse() const;  // throws on zero
    BigRational pow(unsigned long e) const;

    /// Double approximation, for display and test oracles only.
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;  // kept canonical at all times
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

/// Floor and the smallest integer strictly greater than r.
mpz_class floor_of(const BigRational& r);
mpz_class ceil_of(const BigRational& r);

}  // namespace iklp

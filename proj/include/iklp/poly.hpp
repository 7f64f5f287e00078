#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iklp/rational.hpp"

namespace iklp {

/// Dense univariate polynomial over BigRational, coefficient i multiplying t^i.
///
/// The highest stored coefficient is always nonzero; the zero polynomial
/// stores nothing and its degree() is nullopt (the "minus infinity" sentinel).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<BigRational> coeffs_low_to_high);
    explicit Poly(std::vector<BigRational> coeffs_low_to_high);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly{BigRational(1)}; }
    static Poly constant(BigRational c);
    static Poly monomial(BigRational c, std::size_t power);
    /// (1 + t)^n with exact binomial coefficients.
    static Poly one_plus_t_pow(unsigned long n);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const;
    std::size_t size() const { return c_.size(); }
    std::span<const BigRational> coeffs() const { return c_; }
    /// Coefficient of t^i; zero beyond the degree.
    const BigRational& coeff(std::size_t i) const;
    const BigRational& leading() const;  // requires a nonzero polynomial

    BigRational eval(const BigRational& x) const;
    int sign_at(const BigRational& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    Poly derivative() const;
    Poly monic() const;  // requires a nonzero polynomial
    /// Integer-coefficient primitive multiple with positive leading coefficient.
    Poly primitive_int() const;  // requires a nonzero polynomial
    /// f(t + alpha).
    Poly taylor_shift(const BigRational& alpha) const;
    /// Coefficient-wise reversal: t^deg * f(1/t). Zero maps to zero.
    Poly reversed() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigRational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
    friend Poly operator*(const BigRational& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(unsigned long e) const;

    /// Human-readable form, low powers first: "3 + 2t - t^2".
    std::string str() const;
    /// Coefficients as canonical "p/q" strings, index = power.
    std::vector<std::string> coeff_strings() const;
    static std::optional<Poly> from_coeff_strings(std::span<const std::string> strings);

private:
    void trim();
    std::vector<BigRational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Exact Euclidean division: f = g*quotient + remainder, deg remainder < deg g.
DivRem poly_div_rem(const Poly& f, const Poly& g);

/// Monic greatest common divisor. gcd(f, 0) = monic(f).
Poly poly_gcd(const Poly& f, const Poly& g);

struct SquarefreeFactor {
    Poly factor;            // monic, squarefree, degree >= 1
    unsigned multiplicity;  // every root of `factor` has this multiplicity in f
};

struct SquarefreeDecomposition {
    Poly radical;  // monic f / gcd(f, f'); same distinct roots as f, all simple
    std::vector<SquarefreeFactor> factors;  // Yun factors, multiplicity increasing
};

/// Yun squarefree decomposition over the rationals.
SquarefreeDecomposition squarefree_part(const Poly& f);

/// W[f, g] = f'g - fg'.
Poly wronskian(const Poly& f, const Poly& g);

/// 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 for a t^3 + b t^2 + c t + d.
/// A positive value certifies that the cubic (or the quadratic when a = 0)
/// has only real, distinct roots.
BigRational cubic_discriminant(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& d);

}  // namespace iklp

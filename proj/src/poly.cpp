#include "iklp/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "iklp/errors.hpp"

namespace iklp {

namespace {
const BigRational kZero(0);
}

Poly::Poly(std::initializer_list<BigRational> coeffs_low_to_high)
    : c_(coeffs_low_to_high) {
    trim();
}

Poly::Poly(std::vector<BigRational> coeffs_low_to_high) : c_(std::move(coeffs_low_to_high)) {
    trim();
}

Poly Poly::constant(BigRational c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(BigRational c, std::size_t power) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(power, kZero);
    p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::one_plus_t_pow(unsigned long n) {
    std::vector<BigRational> c;
    c.reserve(n + 1);
    for (unsigned long i = 0; i <= n; ++i) c.emplace_back(binomial(n, i));
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

const BigRational& Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const BigRational& Poly::leading() const {
    if (c_.empty()) throw ZeroPolynomialError("leading coefficient");
    return c_.back();
}

BigRational Poly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

int Poly::sign_at(const BigRational& x) const { return eval(x).sign(); }

int Poly::sign_at_pos_inf() const { return c_.empty() ? 0 : c_.back().sign(); }

int Poly::sign_at_neg_inf() const {
    if (c_.empty()) return 0;
    int s = c_.back().sign();
    return (c_.size() - 1) % 2 == 0 ? s : -s;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<BigRational> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * BigRational(mpz_class(i)));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty()) throw ZeroPolynomialError("monic");
    Poly r = *this;
    const BigRational inv = c_.back().inverse();
    for (auto& x : r.c_) x *= inv;
    return r;
}

Poly Poly::primitive_int() const {
    if (c_.empty()) throw ZeroPolynomialError("primitive_int");
    mpz_class den_lcm = 1;
    for (const auto& x : c_) {
        mpz_class d = x.denominator();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class content = 0;
    std::vector<mpz_class> ints;
    ints.reserve(c_.size());
    for (const auto& x : c_) {
        mpz_class v = x.numerator() * (den_lcm / x.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.back() < 0) content = -content;
    std::vector<BigRational> out;
    out.reserve(ints.size());
    for (auto& v : ints) out.emplace_back(mpz_class(v / content));
    return Poly(std::move(out));
}

Poly Poly::taylor_shift(const BigRational& alpha) const {
    // Horner on f(t) with t replaced by (t + alpha).
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= Poly{alpha, BigRational(1)};
        acc += Poly::constant(c_[i]);
    }
    return acc;
}

Poly Poly::reversed() const {
    std::vector<BigRational> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly Poly::pow(unsigned long e) const {
    Poly result = Poly::one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const BigRational& a = c_[i];
        if (a.is_zero()) continue;
        BigRational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == BigRational(1));
        if (i == 0 || !unit) {
            if (!mag.is_integer() && i > 0)
                os << "(" << mag.str() << ")";
            else
                os << mag.str();
        }
        if (i == 1)
            os << "t";
        else if (i > 1)
            os << "t^" << i;
    }
    return os.str();
}

std::vector<std::string> Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.str());
    return out;
}

std::optional<Poly> Poly::from_coeff_strings(std::span<const std::string> strings) {
    std::vector<BigRational> c;
    c.reserve(strings.size());
    for (const auto& s : strings) {
        auto r = BigRational::parse(s);
        if (!r) return std::nullopt;
        c.push_back(std::move(*r));
    }
    return Poly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

DivRem poly_div_rem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZeroPolyError();
    if (f.is_zero() || f.size() < g.size()) return {Poly(), f};
    std::vector<BigRational> rem(f.coeffs().begin(), f.coeffs().end());
    const std::size_t dg = g.size() - 1;
    const BigRational lead_inv = g.leading().inverse();
    std::vector<BigRational> quot(f.size() - g.size() + 1, BigRational(0));
    for (std::size_t top = f.size(); top-- > dg;) {
        if (rem[top].is_zero()) continue;
        BigRational q = rem[top] * lead_inv;
        std::size_t shift = top - dg;
        quot[shift] = q;
        for (std::size_t j = 0; j <= dg; ++j) rem[shift + j] -= q * g.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw BothZeroError();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    // Primitive Euclidean remainder sequence keeps coefficient growth tame.
    Poly a = f.primitive_int();
    Poly b = g.primitive_int();
    while (!b.is_zero()) {
        Poly r = poly_div_rem(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.primitive_int();
    }
    return a.monic();
}

SquarefreeDecomposition squarefree_part(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("squarefree_part");
    SquarefreeDecomposition out;
    if (f.size() == 1) {
        out.radical = Poly::one();
        return out;
    }
    const Poly fp = f.derivative();
    Poly g = poly_gcd(f, fp);
    // Yun's algorithm. w and y must stay exactly f/g and f'/g; only the
    // extracted factors are normalized (poly_gcd returns monic output).
    Poly w = poly_div_rem(f, g).quotient;
    Poly y = poly_div_rem(fp, g).quotient;
    unsigned i = 1;
    Poly radical = Poly::one();
    while (w.size() > 1) {
        Poly z = y - w.derivative();
        Poly p = poly_gcd(w, z);
        if (p.size() > 1) {
            out.factors.push_back({p, i});
            radical *= p;
        }
        w = poly_div_rem(w, p).quotient;
        y = poly_div_rem(z, p).quotient;
        ++i;
    }
    out.radical = std::move(radical);
    return out;
}

Poly wronskian(const Poly& f, const Poly& g) { return f.derivative() * g - f * g.derivative(); }

BigRational cubic_discriminant(const BigRational& a, const BigRational& b, const BigRational& c,
                               const BigRational& d) {
    return BigRational(18) * a * b * c * d - BigRational(4) * b * b * b * d + b * b * c * c -
           BigRational(4) * a * c * c * c - BigRational(27) * a * a * d * d;
}

}  // namespace iklp

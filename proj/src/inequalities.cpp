#include "iklp/inequalities.hpp"

#include <string>

#include "iklp/errors.hpp"
#include "iklp/poly.hpp"
#include "iklp/realroots.hpp"

namespace iklp {

WitnessVerdict is_log_concave_no_internal_zeros(const CoeffSequence& s) {
    const auto& a = s.values;
    if (a.empty()) throw InvalidParamsError("empty coefficient sequence");
    // Nonzero entries must form one consecutive block.
    std::size_t first_nonzero = a.size(), last_nonzero = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero()) {
            if (first_nonzero == a.size()) first_nonzero = i;
            last_nonzero = i;
        }
    }
    if (first_nonzero < a.size()) {
        for (std::size_t i = first_nonzero; i <= last_nonzero; ++i)
            if (a[i].is_zero()) return {false, i, BigRational(0)};
    }
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        BigRational lhs = a[i] * a[i];
        BigRational rhs = a[i - 1] * a[i + 1];
        if (lhs < rhs) return {false, i, lhs - rhs};
    }
    return {};
}

WitnessVerdict higher_order_turan(const CoeffSequence& s) {
    const auto& a = s.values;
    if (a.empty()) throw InvalidParamsError("empty coefficient sequence");
    for (std::size_t i = 1; i + 2 < a.size(); ++i) {
        BigRational t1 = a[i] * a[i] - a[i - 1] * a[i + 1];
        BigRational t2 = a[i + 1] * a[i + 1] - a[i] * a[i + 2];
        BigRational t3 = a[i] * a[i + 1] - a[i - 1] * a[i + 2];
        BigRational value = BigRational(4) * t1 * t2 - t3 * t3;
        if (value.sign() < 0) return {false, i, value};
    }
    return {};
}

WitnessVerdict newton_ultra_log_concave(const CoeffSequence& s, unsigned long n) {
    const auto& a = s.values;
    if (a.empty()) throw InvalidParamsError("empty coefficient sequence");
    if (a.size() > n + 1) throw InvalidParamsError("sequence longer than n+1");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].sign() < 0) throw NegativeInputError("a_" + std::to_string(i));
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        BigRational bi = a[i] * BigRational(binomial(n, i));
        BigRational blo = a[i - 1] * BigRational(binomial(n, i - 1));
        BigRational bhi = a[i + 1] * BigRational(binomial(n, i + 1));
        // i(n-i) b_i^2 >= (i+1)(n-i+1) b_{i-1} b_{i+1}, division-free
        BigRational lhs = BigRational(mpz_class(i)) * BigRational(mpz_class(n - i)) * bi * bi;
        BigRational rhs =
            BigRational(mpz_class(i + 1)) * BigRational(mpz_class(n - i + 1)) * blo * bhi;
        if (lhs < rhs) return {false, i, lhs - rhs};
    }
    return {};
}

WitnessVerdict newton_log_concave(const CoeffSequence& s, unsigned long n) {
    const auto& a = s.values;
    if (a.empty()) throw InvalidParamsError("empty coefficient sequence");
    if (a.size() > n + 1) throw InvalidParamsError("sequence longer than n+1");
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        BigRational bi = a[i] * BigRational(binomial(n, i));
        BigRational blo = a[i - 1] * BigRational(binomial(n, i - 1));
        BigRational bhi = a[i + 1] * BigRational(binomial(n, i + 1));
        if (bi * bi < blo * bhi) return {false, i, bi * bi - blo * bhi};
    }
    return {};
}

bool is_n_sequence(const GammaSequence& g, unsigned long n) {
    if (g.values.size() < n + 1)
        throw LengthTooShortError("is_n_sequence needs gamma_0..gamma_n, got " +
                                  std::to_string(g.values.size()) + " entries for n=" +
                                  std::to_string(n));
    std::vector<BigRational> coeffs;
    coeffs.reserve(n + 1);
    for (unsigned long i = 0; i <= n; ++i)
        coeffs.push_back(g.values[i] * BigRational(binomial(n, i)));
    Poly p(std::move(coeffs));
    if (p.is_zero()) return true;  // gamma annihilates (1+t)^n entirely
    return roots_all_real_same_sign(p);
}

GammaSequence ms1_sequence(unsigned long l, unsigned long k, std::size_t length) {
    if (l < 1 || k < l) throw InvalidRangeError("ms1_sequence requires k >= l >= 1");
    if (length < 1) throw InvalidRangeError("ms1_sequence requires length >= 1");
    GammaSequence g;
    g.values.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        mpz_class denom = factorial(i);
        for (unsigned long j = l; j <= k; ++j) denom *= mpz_class(i + j);
        g.values.emplace_back(mpz_class(1), denom);
    }
    return g;
}

GammaSequence ns1_sequence(unsigned long d, unsigned long l, unsigned long k) {
    if (l < 1 || k < l) throw InvalidRangeError("ns1_sequence requires k >= l >= 1");
    GammaSequence g;
    g.values.reserve(d + 1);
    for (unsigned long i = 0; i <= d; ++i) {
        mpz_class denom = factorial(d - i);
        for (unsigned long j = l; j <= k; ++j) denom *= mpz_class(d - i + j);
        g.values.emplace_back(mpz_class(1), denom);
    }
    return g;
}

}  // namespace iklp

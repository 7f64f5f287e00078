#include "iklp/klcore.hpp"

#include <sstream>

#include "iklp/errors.hpp"

namespace iklp {

std::string PavingData::lambda_spec() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [h, count] : lambda) {
        if (count == 0) continue;
        if (!first) os << ",";
        os << h << ":" << count;
        first = false;
    }
    return os.str();
}

QPolynomial inverse_kl_uniform(UniformParams p) {
    if (p.m < 1 || p.d < 1) throw InvalidParamsError("inverse_kl_uniform requires m, d >= 1");
    const unsigned long m = p.m, d = p.d;
    const unsigned long top = (d - 1) / 2;
    const BigRational lead_binom{binomial(m + d, d)};
    std::vector<BigRational> coeffs;
    coeffs.reserve(top + 1);
    for (unsigned long i = 0; i <= top; ++i) {
        BigRational c = BigRational(mpz_class(m * (d - 2 * i))) /
                        BigRational(mpz_class((m + i) * (d - i + m)));
        c *= lead_binom;
        c *= BigRational(binomial(d, i));
        if (!c.is_integer() || c.sign() <= 0)
            throw NonIntegerCoefficientError("uniform m=" + std::to_string(m) +
                                             " d=" + std::to_string(d) +
                                             " i=" + std::to_string(i) + " -> " + c.str());
        coeffs.push_back(std::move(c));
    }
    QPolynomial q;
    q.poly = Poly(std::move(coeffs));
    q.source = QSource::Uniform;
    q.m_or_h = p.m;
    q.d = p.d;
    return q;
}

QPolynomial uniform_difference(unsigned h, unsigned d) {
    if (d < 2) throw InvalidRankError("uniform_difference requires d >= 2");
    if (h < 1) throw InvalidParamsError("uniform_difference requires h >= 1");
    QPolynomial hi = inverse_kl_uniform({h, d});
    QPolynomial lo = inverse_kl_uniform({h, d - 1});
    QPolynomial q;
    q.poly = hi.poly - lo.poly;
    q.source = QSource::Difference;
    q.m_or_h = h;
    q.d = d;
    return q;
}

QPolynomial inverse_kl_paving(const PavingData& data) {
    if (data.m < 1 || data.d < 1) throw InvalidParamsError("inverse_kl_paving requires m, d >= 1");
    bool any_lambda = false;
    for (const auto& [h, count] : data.lambda) {
        if (h < 1 || h > data.m)
            throw InvalidParamsError("lambda key h=" + std::to_string(h) + " outside [1, m]");
        if (count > 0) any_lambda = true;
    }
    if (any_lambda && data.d < 2)
        throw InvalidRankError("inverse_kl_paving requires d >= 2 when any lambda_h > 0");

    Poly acc = inverse_kl_uniform({data.m, data.d}).poly;
    for (const auto& [h, count] : data.lambda) {
        if (count == 0) continue;
        acc -= BigRational(mpz_class(count)) * uniform_difference(h, data.d).poly;
    }

    QPolynomial q;
    q.poly = std::move(acc);
    q.source = QSource::Paving;
    q.m_or_h = data.m;
    q.d = data.d;
    q.paving = data;
    for (std::size_t i = 0; i < q.poly.size(); ++i) {
        if (q.poly.coeff(i).sign() < 0) {
            q.validity = QValidity::NegativeCoefficient;
            q.negative_index = i;
            break;
        }
    }
    return q;
}

Poly hadamard_binomial(const Poly& p, unsigned long n) {
    if (p.is_zero()) return Poly();
    if (*p.degree() > n) throw DegreeExceedsNError();
    std::vector<BigRational> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out.push_back(p.coeff(i) * BigRational(binomial(n, i)));
    return Poly(std::move(out));
}

Poly b_transform(const QPolynomial& q) {
    if (q.poly.is_zero()) throw ZeroPolynomialError("b_transform");
    return hadamard_binomial(q.poly, *q.poly.degree());
}

PositivityProfile positivity_profile(const QPolynomial& q) {
    if (!q.valid()) throw InvalidParamsError("positivity_profile requires a Valid Q polynomial");
    PositivityProfile profile;
    profile.top_index = q.top_degree();
    profile.interior_positive.reserve(profile.top_index);
    for (unsigned i = 0; i < profile.top_index; ++i)
        profile.interior_positive.push_back(q.poly.coeff(i).sign() > 0);
    profile.top_is_zero = q.poly.coeff(profile.top_index).is_zero();
    return profile;
}

}  // namespace iklp

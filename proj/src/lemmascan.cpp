#include "iklp/lemmascan.hpp"

#include <chrono>

#include "iklp/errors.hpp"
#include "iklp/inequalities.hpp"

namespace iklp {

std::string to_string(FamilyId id) {
    switch (id) {
        case FamilyId::P1: return "p1";
        case FamilyId::P2: return "p2";
        case FamilyId::P3: return "p3";
        case FamilyId::P4: return "p4";
        case FamilyId::P5: return "p5";
    }
    return "?";
}

std::optional<FamilyId> family_from_string(const std::string& s) {
    if (s == "p1" || s == "P1") return FamilyId::P1;
    if (s == "p2" || s == "P2") return FamilyId::P2;
    if (s == "p3" || s == "P3") return FamilyId::P3;
    if (s == "p4" || s == "P4") return FamilyId::P4;
    if (s == "p5" || s == "P5") return FamilyId::P5;
    return std::nullopt;
}

namespace {

bool is_quadratic_family(FamilyId id) { return id == FamilyId::P2 || id == FamilyId::P4; }

void validate_family_params(FamilyId id, const FamilyParams& p) {
    if (p.n < 3) throw InvalidParamsError("family grids require n >= 3");
    switch (id) {
        case FamilyId::P1:
            if (p.m_or_h < 2) throw InvalidParamsError("p1 requires m >= 2");
            break;
        case FamilyId::P3:
            if (p.m_or_h < 2) throw InvalidParamsError("p3 requires h >= 2");
            break;
        case FamilyId::P5:
            if (p.m_or_h < 1) throw InvalidParamsError("p5 requires m >= 1");
            break;
        case FamilyId::P2:
        case FamilyId::P4:
            break;  // the m = 1 / h = 1 specializations carry no extra parameter
    }
}

BigRational integrand(FamilyId id, long d, long mh, const BigRational& k, long i) {
    const BigRational d2i{d - 2 * i};
    switch (id) {
        case FamilyId::P1:
            return k * d2i * BigRational(d - i + 1) +
                   BigRational(d - 2 * i + 1) * BigRational(i + mh) * BigRational(d - i + mh);
        case FamilyId::P2:
            return k * d2i + BigRational(d - 2 * i + 1) * BigRational(i + 1);
        case FamilyId::P3: {
            const long h = mh;
            BigRational first = k * BigRational(d + h) * BigRational(d + h - i - 1) *
                                (d2i * BigRational(d + h + 1 - i) + BigRational(i));
            BigRational second = BigRational(h) * BigRational(d + h - i + 1) *
                                 (d2i * BigRational(d + h - i) + BigRational(i));
            return first + second;
        }
        case FamilyId::P4:
            return BigRational(d + 1) * k * (d2i * BigRational(d - i + 2) + BigRational(i)) +
                   BigRational(d - 2 * i + 1) * BigRational(d - i + 2);
        case FamilyId::P5:
            return (k + BigRational(1)) * d2i * BigRational(d + mh) *
                       BigRational(d - i + mh - 1) -
                   k * BigRational(d - 2 * i - 1) * BigRational(d - i) * BigRational(d - i + mh);
    }
    throw InvalidParamsError("unknown family");
}

}  // namespace

Poly family_summand_poly(FamilyId id, const FamilyParams& p) {
    validate_family_params(id, p);
    if (!p.k) throw InvalidParamsError("family_summand_poly requires a concrete k");
    const long d = static_cast<long>(p.d());
    const long mh = static_cast<long>(p.m_or_h);
    std::vector<BigRational> coeffs;
    coeffs.reserve(p.n + 1);
    for (long i = 0; i <= static_cast<long>(p.n); ++i)
        coeffs.push_back(integrand(id, d, mh, *p.k, i) * BigRational(binomial(p.n, i)));
    return Poly(std::move(coeffs));
}

Poly family_core_poly(FamilyId id, const FamilyParams& p) {
    validate_family_params(id, p);
    const unsigned e = is_quadratic_family(id) ? p.n - 2 : p.n - 3;
    Poly summand = family_summand_poly(id, p);
    DivRem dr = poly_div_rem(summand, Poly::one_plus_t_pow(e));
    if (!dr.remainder.is_zero())
        throw NonzeroRemainderError(to_string(id) + " n=" + std::to_string(p.n) +
                                    " d=" + std::to_string(p.d()) +
                                    " m_or_h=" + std::to_string(p.m_or_h) +
                                    " k=" + p.k->str() + " remainder=" + dr.remainder.str());
    return dr.quotient;
}

Poly discriminant_in_k(FamilyId id, const FamilyParams& p) {
    validate_family_params(id, p);
    FamilyParams at0 = p, at1 = p;
    at0.k = BigRational(0);
    at1.k = BigRational(1);
    // Every core coefficient is affine in k, so two exact samples pin the
    // whole coefficient line (and a zero remainder at both samples forces a
    // zero remainder identically).
    Poly core0 = family_core_poly(id, at0);
    Poly core1 = family_core_poly(id, at1);
    auto coeff_in_k = [&](std::size_t j) {
        BigRational c0 = core0.coeff(j);
        return Poly{c0, core1.coeff(j) - c0};
    };
    if (is_quadratic_family(id)) {
        Poly a = coeff_in_k(2), b = coeff_in_k(1), c = coeff_in_k(0);
        return b * b - BigRational(4) * a * c;
    }
    Poly a = coeff_in_k(3), b = coeff_in_k(2), c = coeff_in_k(1), e = coeff_in_k(0);
    return BigRational(18) * a * b * c * e - BigRational(4) * b * b * b * e + b * b * c * c -
           BigRational(4) * a * c * c * c - BigRational(27) * a * a * e * e;
}

Poly p2_discriminant_closed_form(unsigned n, unsigned d) {
    const long ln = n, ld = d;
    const BigRational base{ld * ln - 2 * ld + 3 * ln};
    const BigRational slope{2 * ln};
    Poly square = Poly{base, slope} * Poly{base, slope};
    BigRational tail = BigRational(4) * BigRational(ln - 1) *
                       (BigRational(ld) * BigRational(ld - ln) + BigRational(2 * ln));
    return square + Poly::constant(tail);
}

PositivityCertificate certify_positive_for_all_k(const Poly& q) {
    if (q.is_zero()) throw ZeroPolynomialError("certify_positive_for_all_k");
    if (q.sign_at(BigRational(0)) <= 0)
        return {false, IsolatingInterval{BigRational(0), BigRational(0), 1}};
    if (sturm_root_count(q, ExtendedRational::neg_inf(), ExtendedRational::pos_inf()) == 0)
        return {true, std::nullopt};
    return {false, isolate_roots(q).front()};
}

BigRational wronskian_constant_closed_form(WronskianFormId id, unsigned m_or_h, unsigned d) {
    if (m_or_h < 1 || d < 3)
        throw InvalidParamsError("wronskian_constant_closed_form requires m_or_h >= 1, d >= 3");
    const BigRational n1{mpz_class((d - 1) / 2)};  // C(floor((d-1)/2), 1)
    const long m = m_or_h;
    const long ld = d;
    switch (id) {
        case WronskianFormId::M1: {
            BigRational num = BigRational(ld * m) + BigRational(ld - 1).pow(2) +
                              BigRational(m).pow(2);
            num *= BigRational(factorial(d + m - 2));
            return -n1 * num / (BigRational(factorial(d - 1)) * BigRational(factorial(m + 1)));
        }
        case WronskianFormId::HH1: {
            const long h = m;
            return -n1 * BigRational(binomial(d + h - 3, h - 1)) *
                   BigRational(binomial(d + h - 1, h)) / BigRational(ld + h - 1);
        }
        case WronskianFormId::MD: {
            BigRational num = BigRational(m).pow(2) +
                              BigRational(ld - 1) * BigRational(ld + 2 * m - 2) + BigRational(1);
            return -n1 * num * BigRational(binomial(d + m - 3, m - 1)) *
                   BigRational(binomial(d + m, m + 1)) /
                   (BigRational(ld + m - 1) * BigRational(ld + m));
        }
    }
    throw InvalidParamsError("unknown wronskian form");
}

std::string to_string(LemmaId id) {
    switch (id) {
        case LemmaId::M1: return "m1";
        case LemmaId::HH1: return "hh1";
        case LemmaId::MD: return "md";
        case LemmaId::HM: return "hm";
    }
    return "?";
}

std::optional<LemmaId> lemma_from_string(const std::string& s) {
    if (s == "m1" || s == "M1") return LemmaId::M1;
    if (s == "hh1" || s == "HH1") return LemmaId::HH1;
    if (s == "md" || s == "MD") return LemmaId::MD;
    if (s == "hm" || s == "HM") return LemmaId::HM;
    return std::nullopt;
}

std::pair<Poly, Poly> lemma_pair(LemmaId which, unsigned m, unsigned d,
                                 std::optional<unsigned> h) {
    if (d < 3) throw InvalidParamsError("interlacing lemmas require d >= 3");
    const unsigned n = (d - 1) / 2;
    auto bq = [&](const QPolynomial& q) { return hadamard_binomial(q.poly, n); };
    switch (which) {
        case LemmaId::M1:
            return {bq(inverse_kl_uniform({m, d})), bq(uniform_difference(1, d))};
        case LemmaId::HH1: {
            unsigned hh = h.value_or(m);
            return {bq(uniform_difference(hh + 1, d)), bq(uniform_difference(hh, d))};
        }
        case LemmaId::MD:
            return {bq(inverse_kl_uniform({m, d})), bq(uniform_difference(m, d))};
        case LemmaId::HM: {
            if (!h) throw InvalidParamsError("lemma hm requires h");
            if (*h < 1 || *h > m) throw InvalidParamsError("lemma hm requires 1 <= h <= m");
            return {bq(inverse_kl_uniform({m, d})), bq(uniform_difference(*h, d))};
        }
    }
    throw InvalidParamsError("unknown lemma");
}

LemmaVerdict verify_interlacing_lemma(LemmaId which, unsigned m, unsigned d,
                                      std::optional<unsigned> h) {
    LemmaVerdict out;
    try {
        auto [left, right] = lemma_pair(which, m, d, h);
        InterlaceVerdict v = interlaces(right, left);  // LEFT << RIGHT means g=left, f=right
        out.relation = v.relation;
        out.pass = v.relation == InterlaceRelation::GInterlacesF ||
                   v.relation == InterlaceRelation::Both;
        if (!out.pass) out.note = "left does not interlace right";
    } catch (const NotRealRootedError& e) {
        out.pass = false;
        out.note = e.what();
    }
    return out;
}

CheckReport theorem_pipeline(const PavingData& data) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    r.input["m"] = data.m;
    r.input["d"] = data.d;
    nlohmann::ordered_json lj = nlohmann::ordered_json::object();
    for (const auto& [hkey, count] : data.lambda)
        if (count > 0) lj[std::to_string(hkey)] = count;
    r.input["lambda"] = std::move(lj);

    QPolynomial q = inverse_kl_paving(data);
    r.coefficients = q.poly.coeff_strings();

    auto add = [&](const std::string& name, CheckVerdict v, std::string detail = "") {
        r.checks.push_back({name, v, std::move(detail)});
    };

    if (!q.valid()) {
        add("matroidal", CheckVerdict::NotMatroidal,
            "negative coefficient at index " + std::to_string(*q.negative_index));
        for (const char* name : {"real_rooted_b_explicit_n", "real_rooted_b_natural",
                                 "log_concave_no_internal_zeros", "higher_order_turan",
                                 "positivity"})
            add(name, CheckVerdict::Skipped);
    } else {
        add("matroidal", CheckVerdict::Pass);
        const unsigned n = q.top_degree();
        if (q.poly.is_zero()) {
            add("real_rooted_b_explicit_n", CheckVerdict::Pass, "zero polynomial (vacuous)");
            add("real_rooted_b_natural", CheckVerdict::Pass, "zero polynomial (vacuous)");
        } else {
            bool explicit_ok = is_real_rooted(hadamard_binomial(q.poly, n));
            add("real_rooted_b_explicit_n", explicit_ok ? CheckVerdict::Pass : CheckVerdict::Fail,
                explicit_ok ? "" : "B_n(Q) has a nonreal root, n=" + std::to_string(n));
            bool natural_ok = is_real_rooted(b_transform(q));
            add("real_rooted_b_natural", natural_ok ? CheckVerdict::Pass : CheckVerdict::Fail,
                natural_ok ? "" : "B(Q) has a nonreal root at its own degree");
        }

        CoeffSequence seq;
        if (q.poly.is_zero())
            seq.values.push_back(BigRational(0));
        else
            seq.values.assign(q.poly.coeffs().begin(), q.poly.coeffs().end());

        WitnessVerdict lc = is_log_concave_no_internal_zeros(seq);
        add("log_concave_no_internal_zeros", lc.pass ? CheckVerdict::Pass : CheckVerdict::Fail,
            lc.pass ? "" : "violated at index " + std::to_string(*lc.witness_index));

        if (seq.values.size() >= 4) {
            WitnessVerdict turan = higher_order_turan(seq);
            add("higher_order_turan", turan.pass ? CheckVerdict::Pass : CheckVerdict::Fail,
                turan.pass ? "" : "violated at index " + std::to_string(*turan.witness_index));
        } else {
            add("higher_order_turan", CheckVerdict::Skipped, "fewer than 4 coefficients");
        }

        PositivityProfile profile = positivity_profile(q);
        std::string detail;
        if (profile.top_is_zero) detail = "top coefficient is zero (recorded)";
        if (profile.all_interior_positive()) {
            add("positivity", CheckVerdict::Pass, detail);
        } else {
            std::size_t bad = 0;
            while (profile.interior_positive[bad]) ++bad;
            add("positivity", CheckVerdict::Fail,
                "coefficient at index " + std::to_string(bad) + " is not positive");
        }
    }

    r.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
}

}  // namespace iklp

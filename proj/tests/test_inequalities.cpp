#include <doctest.h>

#include <algorithm>

#include "iklp/errors.hpp"
#include "iklp/inequalities.hpp"
#include "iklp/klcore.hpp"
#include "iklp/realroots.hpp"

using namespace iklp;

namespace {
CoeffSequence seq(std::initializer_list<long> values) {
    CoeffSequence s;
    for (long v : values) s.values.emplace_back(v);
    return s;
}
}  // namespace

TEST_CASE("log-concavity with no internal zeros") {
    CHECK(is_log_concave_no_internal_zeros(seq({1, 2, 1})).pass);
    auto v = is_log_concave_no_internal_zeros(seq({1, 1, 2}));
    CHECK_FALSE(v.pass);
    CHECK(v.witness_index == 1);
    v = is_log_concave_no_internal_zeros(seq({1, 0, 1}));
    CHECK_FALSE(v.pass);
    CHECK(v.witness_index == 1);  // the internal zero
    CHECK(is_log_concave_no_internal_zeros(seq({5})).pass);
    CHECK(is_log_concave_no_internal_zeros(seq({2, 3})).pass);
    CHECK(is_log_concave_no_internal_zeros(seq({0, 0, 0})).pass);
    CHECK(is_log_concave_no_internal_zeros(seq({0, 1, 2, 1, 0})).pass);  // leading zeros fine
}

TEST_CASE("higher-order Turan inequality") {
    CHECK(higher_order_turan(seq({1, 1, 1, 1})).pass);
    CHECK(higher_order_turan(seq({1, 2, 2, 1})).pass);
    // direct expansion at i = 1 for (1,2,2,1): 4*(4-2)*(4-2) - (4-1)^2 = 16 - 9 = 7
    {
        BigRational a0(1), a1(2), a2(2), a3(1);
        BigRational value = BigRational(4) * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3) -
                            (a1 * a2 - a0 * a3) * (a1 * a2 - a0 * a3);
        CHECK(value == BigRational(7));
    }
    auto v = higher_order_turan(seq({1, 10, 1, 10}));
    CHECK_FALSE(v.pass);
    CHECK(v.witness_index == 1);
    CHECK(higher_order_turan(seq({1, 2, 1})).pass);  // vacuous below length 4
}

TEST_CASE("sharp Newton inequality on transformed coefficients") {
    CHECK(newton_ultra_log_concave(seq({1, 1, 1}), 2).pass);   // (1+t)^2, equality
    CHECK(newton_ultra_log_concave(seq({3, 2}), 1).pass);      // vacuous
    CHECK_FALSE(newton_ultra_log_concave(seq({1, 1, 2}), 2).pass);
    CHECK_THROWS_AS(newton_ultra_log_concave(seq({1, -1, 1}), 2), NegativeInputError);
    CHECK_THROWS_AS(newton_ultra_log_concave(seq({1, 1, 1, 1}), 2), InvalidParamsError);
}

TEST_CASE("weak Newton form is implied but not equivalent") {
    // B_2(1,1,2) = 1 + 2t + 2t^2 is not real-rooted; the sharp test fails
    // while plain log-concavity of the transformed coefficients still holds.
    CHECK_FALSE(newton_ultra_log_concave(seq({1, 1, 2}), 2).pass);
    CHECK(newton_log_concave(seq({1, 1, 2}), 2).pass);
}

TEST_CASE("is_n_sequence") {
    GammaSequence ones;
    for (int i = 0; i < 7; ++i) ones.values.emplace_back(1);
    for (unsigned n = 1; n <= 6; ++n) CHECK(is_n_sequence(ones, n));

    GammaSequence g;
    g.values = {BigRational(1, 2), BigRational(1), BigRational(1)};
    CHECK(is_n_sequence(g, 2));

    GammaSequence bad;
    bad.values = {BigRational(1), BigRational(0), BigRational(1)};
    CHECK_FALSE(is_n_sequence(bad, 2));

    CHECK_THROWS_AS(is_n_sequence(bad, 3), LengthTooShortError);
}

TEST_CASE("ms1 sequences") {
    GammaSequence g = ms1_sequence(1, 1, 3);
    REQUIRE(g.values.size() == 3);
    CHECK(g.values[0] == BigRational(1));
    CHECK(g.values[1] == BigRational(1, 2));
    CHECK(g.values[2] == BigRational(1, 6));

    g = ms1_sequence(2, 2, 2);
    CHECK(g.values[0] == BigRational(1, 2));
    CHECK(g.values[1] == BigRational(1, 3));

    CHECK_THROWS_AS(ms1_sequence(2, 1, 3), InvalidRangeError);
    CHECK_THROWS_AS(ms1_sequence(0, 1, 3), InvalidRangeError);
}

TEST_CASE("ms1 entries equal the factorial-ratio identity") {
    // 1/(i! prod_{j=l..k}(i+j)) = prod_{j=1..l-1}(i+j) / (i+k)!  since
    // (i+k)! = i! * prod_{j=1..k}(i+j).
    for (unsigned long l = 1; l <= 4; ++l)
        for (unsigned long k = l; k <= 4; ++k) {
            GammaSequence g = ms1_sequence(l, k, 8);
            for (std::size_t i = 0; i < g.values.size(); ++i) {
                mpz_class prod = 1;
                for (unsigned long j = 1; j < l; ++j) prod *= mpz_class(i + j);
                CHECK(g.values[i] == BigRational(prod, factorial(i + k)));
            }
        }
}

TEST_CASE("ns1 sequences and the reversal identity") {
    GammaSequence g = ns1_sequence(2, 1, 1);
    REQUIRE(g.values.size() == 3);
    CHECK(g.values[0] == BigRational(1, 6));
    CHECK(g.values[1] == BigRational(1, 2));
    CHECK(g.values[2] == BigRational(1));

    g = ns1_sequence(0, 1, 2);
    REQUIRE(g.values.size() == 1);
    CHECK(g.values[0] == BigRational(1, 2));

    for (unsigned long d = 0; d <= 8; ++d)
        for (unsigned long l = 1; l <= 3; ++l)
            for (unsigned long k = l; k <= 3; ++k) {
                GammaSequence ns = ns1_sequence(d, l, k);
                GammaSequence ms = ms1_sequence(l, k, d + 1);
                for (unsigned long i = 0; i <= d; ++i)
                    CHECK(ns.values[i] == ms.values[d - i]);
            }
}

TEST_CASE("reversal preserves the n-sequence verdict") {
    std::vector<GammaSequence> gammas = {
        ms1_sequence(1, 2, 5),
        ns1_sequence(4, 1, 1),
        {{BigRational(1), BigRational(2), BigRational(1), BigRational(1, 3), BigRational(1, 10)}},
        {{BigRational(1), BigRational(0), BigRational(1), BigRational(2), BigRational(1)}},
    };
    for (const auto& g : gammas) {
        unsigned long n = g.values.size() - 1;
        GammaSequence reversed;
        reversed.values.assign(g.values.rbegin(), g.values.rend());
        CHECK(is_n_sequence(g, n) == is_n_sequence(reversed, n));
    }
}

TEST_CASE("ns1 and ms1 satisfy the d-sequence property on a small grid") {
    for (unsigned long d = 0; d <= 8; ++d)
        for (unsigned long l = 1; l <= 3; ++l)
            for (unsigned long k = l; k <= 3; ++k)
                CHECK(is_n_sequence(ns1_sequence(d, l, k), d));
    for (unsigned long n = 1; n <= 8; ++n)
        for (unsigned long l = 1; l <= 3; ++l)
            for (unsigned long k = l; k <= 3; ++k)
                CHECK(is_n_sequence(ms1_sequence(l, k, n + 1), n));
}

TEST_CASE("real-rooted binomial transforms force log-concavity") {
    // coefficient families whose hadamard transform is real-rooted
    std::vector<std::pair<CoeffSequence, unsigned long>> cases;
    QPolynomial u25 = inverse_kl_uniform({2, 5});
    CoeffSequence s;
    s.values.assign(u25.poly.coeffs().begin(), u25.poly.coeffs().end());
    cases.push_back({s, 2});
    cases.push_back({seq({1, 1, 1}), 2});
    cases.push_back({seq({6, 11, 6, 1}), 3});
    for (const auto& [cs, n] : cases) {
        Poly transformed = hadamard_binomial(Poly(std::vector<BigRational>(cs.values)), n);
        REQUIRE(is_real_rooted(transformed));
        bool nonneg = std::all_of(cs.values.begin(), cs.values.end(),
                                  [](const BigRational& v) { return v.sign() >= 0; });
        REQUIRE(nonneg);
        CHECK(newton_ultra_log_concave(cs, n).pass);
        CHECK(is_log_concave_no_internal_zeros(cs).pass);
    }
}

TEST_CASE("empty sequences are rejected") {
    CoeffSequence empty;
    CHECK_THROWS_AS(is_log_concave_no_internal_zeros(empty), InvalidParamsError);
    CHECK_THROWS_AS(higher_order_turan(empty), InvalidParamsError);
}

#include <doctest.h>

#include <map>

#include "iklp/errors.hpp"
#include "iklp/realroots.hpp"

using namespace iklp;

namespace {

Poly from_roots(const std::vector<BigRational>& roots) {
    Poly p = Poly::one();
    for (const auto& r : roots) p *= Poly{-r, BigRational(1)};
    return p;
}

const ExtendedRational kNegInf = ExtendedRational::neg_inf();
const ExtendedRational kPosInf = ExtendedRational::pos_inf();

bool contains_sign_change(const Poly& f, const IsolatingInterval& iv) {
    if (iv.is_point()) return f.sign_at(iv.lo) == 0;
    return f.sign_at(iv.lo) * f.sign_at(iv.hi) < 0;
}

}  // namespace

TEST_CASE("sturm_root_count basics") {
    CHECK(sturm_root_count(Poly{-2, 0, 1}, kNegInf, kPosInf) == 2);   // t^2 - 2
    CHECK(sturm_root_count(Poly{1, 0, 1}, kNegInf, kPosInf) == 0);    // t^2 + 1
    CHECK(sturm_root_count(Poly{1, -2, 1}, kNegInf, kPosInf) == 1);   // (t-1)^2, distinct
    CHECK(sturm_root_count(Poly{-2, 0, 1}, ExtendedRational(0), kPosInf) == 1);
    CHECK(sturm_root_count(Poly{7}, kNegInf, kPosInf) == 0);
    CHECK_THROWS_AS(sturm_root_count(Poly(), kNegInf, kPosInf), ZeroPolynomialError);
    CHECK_THROWS_AS(sturm_root_count(Poly{0, 1}, ExtendedRational(1), ExtendedRational(0)),
                    InvalidRangeError);
}

TEST_CASE("sturm counts on half-open intervals include the right endpoint") {
    Poly f{0, 1};  // t
    CHECK(sturm_root_count(f, ExtendedRational(-1), ExtendedRational(0)) == 1);
    CHECK(sturm_root_count(f, ExtendedRational(0), ExtendedRational(1)) == 0);
}

TEST_CASE("sturm count equals radical count and is bounded by the degree") {
    Poly f = from_roots({BigRational(1), BigRational(1), BigRational(-2)});  // (t-1)^2(t+2)
    auto sq = squarefree_part(f);
    CHECK(sturm_root_count(f, kNegInf, kPosInf) ==
          sturm_root_count(sq.radical, kNegInf, kPosInf));
    CHECK(sturm_root_count(f, kNegInf, kPosInf) <= *f.degree());
}

TEST_CASE("is_real_rooted") {
    CHECK(is_real_rooted(Poly{1, 4, 3}));           // roots -1, -1/3
    CHECK_FALSE(is_real_rooted(Poly{1, 0, 1}));     // t^2 + 1
    CHECK(is_real_rooted(Poly::one_plus_t_pow(5))); // (1+t)^5
    CHECK(is_real_rooted(Poly{42}));
    CHECK(is_real_rooted(Poly{3, 5}));
    CHECK_FALSE(is_real_rooted(Poly{1, 1, 1, 1, 1}));  // cyclotomic-like, complex roots
    CHECK_THROWS_AS(is_real_rooted(Poly()), ZeroPolynomialError);
}

TEST_CASE("isolate_roots separates the two square roots of 2") {
    auto roots = isolate_roots(Poly{-2, 0, 1});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].hi < roots[1].lo);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 1);
    Poly f{-2, 0, 1};
    CHECK(contains_sign_change(f, roots[0]));
    CHECK(contains_sign_change(f, roots[1]));
    CHECK(roots[0].hi <= BigRational(0));
    CHECK(roots[1].lo >= BigRational(0));
}

TEST_CASE("isolate_roots returns exact points for rational roots") {
    // (t+1)^2 (t+3)
    Poly f = Poly{1, 1} * Poly{1, 1} * Poly{3, 1};
    auto roots = isolate_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].is_point());
    CHECK(roots[0].lo == BigRational(-3));
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].is_point());
    CHECK(roots[1].lo == BigRational(-1));
    CHECK(roots[1].multiplicity == 2);
}

TEST_CASE("isolate_roots separates the golden-ratio pair") {
    Poly f{-1, 1, 1};  // t^2 + t - 1, roots (-1 +- sqrt 5)/2
    auto roots = isolate_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(contains_sign_change(f, roots[0]));
    CHECK(contains_sign_change(f, roots[1]));
    CHECK(roots[0].hi < roots[1].lo);
    // the positive root is 0.618..., the negative one -1.618...
    CHECK(roots[1].lo >= BigRational(0));
    CHECK(roots[1].hi <= BigRational(1));
    CHECK(roots[0].lo >= BigRational(-2));
    CHECK(roots[0].hi <= BigRational(-1));
}

TEST_CASE("all-rational-root polynomials come back as exact points") {
    std::vector<std::vector<BigRational>> families = {
        {BigRational(1, 3)},
        {BigRational(-5, 2), BigRational(1, 3), BigRational(4)},
        {BigRational(0), BigRational(0), BigRational(7, 5)},
        {BigRational(-1), BigRational(-1), BigRational(-1), BigRational(2, 7)},
        {BigRational(11, 13), BigRational(-13, 11)},
    };
    for (const auto& rts : families) {
        Poly f = from_roots(rts);
        auto isolated = isolate_roots(f);
        // expected distinct roots with multiplicities
        std::map<BigRational, unsigned> expected;
        for (const auto& r : rts) expected[r]++;
        REQUIRE(isolated.size() == expected.size());
        std::size_t i = 0;
        for (const auto& [root, mult] : expected) {
            CHECK(isolated[i].is_point());
            CHECK(isolated[i].lo == root);
            CHECK(isolated[i].multiplicity == mult);
            ++i;
        }
    }
}

TEST_CASE("isolate_roots multiplicity sum counts roots with multiplicity") {
    // (t^2 - 2)^2 (t - 1/2): degree 5, three distinct real roots
    Poly f = Poly{-2, 0, 1}.pow(2) * Poly{BigRational(-1, 2), BigRational(1)};
    auto roots = isolate_roots(f);
    REQUIRE(roots.size() == 3);
    unsigned total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == 5);
    // ordering: -sqrt2 < 1/2 < sqrt2
    CHECK(roots[1].is_point());
    CHECK(roots[1].lo == BigRational(1, 2));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[2].multiplicity == 2);
}

TEST_CASE("simplest_rational_between") {
    CHECK(simplest_rational_between(BigRational(1, 3), BigRational(1, 2)) == BigRational(2, 5));
    CHECK(simplest_rational_between(BigRational(-3, 2), BigRational(-6, 5)) ==
          BigRational(-4, 3));
    CHECK(simplest_rational_between(BigRational(0), BigRational(1)) == BigRational(1, 2));
    CHECK(simplest_rational_between(BigRational(2), BigRational(3)) == BigRational(5, 2));
    CHECK(simplest_rational_between(BigRational(-1, 2), BigRational(1, 2)) == BigRational(0));
    CHECK(simplest_rational_between(BigRational(1, 2), BigRational(3)) == BigRational(1));
    CHECK_THROWS_AS(simplest_rational_between(BigRational(1), BigRational(1)),
                    InvalidRangeError);
}

TEST_CASE("roots_all_real_same_sign") {
    CHECK(roots_all_real_same_sign(Poly::one_plus_t_pow(4)));
    CHECK_FALSE(roots_all_real_same_sign(Poly{-1, 0, 1}));  // roots +-1
    CHECK(roots_all_real_same_sign(Poly{BigRational(1, 2), BigRational(2), BigRational(1)}));
    CHECK_FALSE(roots_all_real_same_sign(Poly{1, 0, 1}));  // not real-rooted
    // weak sign convention: a root at zero joins either side
    CHECK(roots_all_real_same_sign(Poly{0, 1, 1}));  // t(t+1), roots 0 and -1
    CHECK(roots_all_real_same_sign(Poly{7}));
}

TEST_CASE("roots_all_real_same_sign rejects genuinely mixed signs") {
    Poly mixed = from_roots({BigRational(-1), BigRational(2)});
    CHECK_FALSE(roots_all_real_same_sign(mixed));
    CHECK_FALSE(roots_all_real_same_sign(Poly{0, -1, 0, 1}));  // t^3 - t, roots -1, 0, 1
    // all-positive roots count as one sign too
    CHECK(roots_all_real_same_sign(from_roots({BigRational(1), BigRational(2)})));
    CHECK(roots_all_real_same_sign(from_roots({BigRational(0), BigRational(3, 2)})));
}

TEST_CASE("interlaces verdicts on the worked examples") {
    // f = (t+1)(t+3), g = t+2: g interlaces f
    auto v = interlaces(Poly{3, 4, 1}, Poly{2, 1});
    CHECK(v.relation == InterlaceRelation::GInterlacesF);
    // equal linear polynomials
    v = interlaces(Poly{1, 1}, Poly{1, 1});
    CHECK(v.relation == InterlaceRelation::Both);
}

TEST_CASE("interlaces detects the fg-gf root pattern as not alternating") {
    // f = (t+1)(t+4), g = (t+2)(t+3): roots order f g g f; neither ordering of
    // the definition holds, and HKO confirms it: f - 2g has discriminant
    // 25 - 32 < 0 after sign normalization, so that combination is not
    // real-rooted.
    Poly f = from_roots({BigRational(-1), BigRational(-4)});
    Poly g = from_roots({BigRational(-2), BigRational(-3)});
    auto v = interlaces(f, g);
    CHECK(v.relation == InterlaceRelation::NotAlternating);
    REQUIRE(v.witness.has_value());
    Poly combo = f - BigRational(2) * g;
    Poly monic_combo = -combo;  // t^2 + 5t + 8
    CHECK_FALSE(is_real_rooted(monic_combo));
}

TEST_CASE("interlaces handles shared roots exactly") {
    Poly f = from_roots({BigRational(-3), BigRational(-1)});
    Poly g = from_roots({BigRational(-2), BigRational(-1)});
    CHECK(interlaces(f, g).relation == InterlaceRelation::FInterlacesG);

    Poly f2 = from_roots({BigRational(-1), BigRational(-1)});
    Poly g2 = from_roots({BigRational(-2), BigRational(-1)});
    CHECK(interlaces(f2, g2).relation == InterlaceRelation::GInterlacesF);
}

TEST_CASE("interlaces degree rules") {
    // degree gap of two: never alternating
    Poly f = from_roots({BigRational(-1), BigRational(-2), BigRational(-3)});
    Poly g = Poly{5, 1};
    CHECK(interlaces(f, g).relation == InterlaceRelation::NotAlternating);
    // constants interlace everything of degree <= 1
    CHECK(interlaces(Poly{3}, Poly{2}).relation == InterlaceRelation::Both);
    CHECK(interlaces(Poly{0, 0, 0, 1}, Poly{4}).relation == InterlaceRelation::NotAlternating);
    CHECK(interlaces(Poly{1, 1}, Poly{4}).relation == InterlaceRelation::GInterlacesF);
    CHECK(interlaces(Poly{4}, Poly{1, 1}).relation == InterlaceRelation::FInterlacesG);
}

TEST_CASE("interlaces zero-polynomial convention") {
    CHECK(interlaces(Poly(), Poly{1, 3, 1}).relation == InterlaceRelation::Both);
    CHECK(interlaces(Poly{1, 1}, Poly()).relation == InterlaceRelation::Both);
    CHECK(interlaces(Poly(), Poly()).relation == InterlaceRelation::Both);
}

TEST_CASE("interlaces validates its preconditions") {
    CHECK_THROWS_AS(interlaces(Poly{1, 0, 1}, Poly{1, 1}), NotRealRootedError);
    CHECK_THROWS_AS(interlaces(Poly{1, 1}, Poly{1, 0, 1}), NotRealRootedError);
    CHECK_THROWS_AS(interlaces(Poly{1, -1}, Poly{1, 1}), NegativeLeadingCoefficientError);
    CHECK_THROWS_AS(interlaces(Poly(), Poly{1, 0, 1}), NotRealRootedError);
}

TEST_CASE("alternating verdicts agree with sampled HKO combinations") {
    struct Pair {
        Poly f, g;
    };
    std::vector<Pair> pairs = {
        {from_roots({BigRational(-1), BigRational(-3)}), Poly{2, 1}},
        {from_roots({BigRational(-1), BigRational(-3)}),
         from_roots({BigRational(-2), BigRational(-4)})},
        {from_roots({BigRational(0), BigRational(-2), BigRational(-4)}),
         from_roots({BigRational(-1), BigRational(-3)})},
        {from_roots({BigRational(-1), BigRational(-1)}),
         from_roots({BigRational(-1), BigRational(-2)})},
    };
    std::uint64_t s = 99;
    auto next_rational = [&s] {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        long num = static_cast<long>(s % 41) - 20;
        long den = 1 + static_cast<long>((s >> 32) % 7);
        return BigRational(num, den);
    };
    for (const auto& [f, g] : pairs) {
        auto v = interlaces(f, g);
        REQUIRE(v.alternating());
        for (int i = 0; i < 100; ++i) {
            BigRational lambda = next_rational(), mu = next_rational();
            Poly combo = lambda * f + mu * g;
            if (combo.is_zero()) continue;
            CHECK(is_real_rooted(combo));
        }
    }
}

TEST_CASE("interlacing is transitive along constructed chains") {
    Poly f0 = from_roots({BigRational(-6), BigRational(-3)});
    Poly f1 = from_roots({BigRational(-5), BigRational(-2)});
    Poly f2 = from_roots({BigRational(-4), BigRational(-1)});
    CHECK(interlaces(f1, f0).relation == InterlaceRelation::GInterlacesF);  // f0 << f1
    CHECK(interlaces(f2, f1).relation == InterlaceRelation::GInterlacesF);  // f1 << f2
    CHECK(interlaces(f2, f0).relation == InterlaceRelation::GInterlacesF);  // f0 << f2
}

TEST_CASE("interlacing is preserved under sums with a common interlacer") {
    // f << g and f << h with nonnegative coefficients implies f << g + h
    Poly f = from_roots({BigRational(-3), BigRational(-1)});
    Poly g = from_roots({BigRational(-2), BigRational(-1, 2)});
    Poly h = from_roots({BigRational(-5, 2), BigRational(-1, 4)});
    REQUIRE(interlaces(g, f).relation == InterlaceRelation::GInterlacesF);  // f << g
    REQUIRE(interlaces(h, f).relation == InterlaceRelation::GInterlacesF);  // f << h
    CHECK(interlaces(g + h, f).relation == InterlaceRelation::GInterlacesF);
}

TEST_CASE("wronskian_orientation") {
    CHECK(wronskian_orientation(Poly{3, 2}, Poly{1, 2}) == -1);  // W = -4
    CHECK(wronskian_orientation(Poly{0, 1}, Poly{1, 1}) == 1);   // W = 1
    CHECK(wronskian_orientation(Poly{1, 5, 2}, Poly{1, 5, 2}) == 0);
    Poly f = from_roots({BigRational(-1), BigRational(-4)});
    Poly g = from_roots({BigRational(-2), BigRational(-3)});
    CHECK_THROWS_AS(wronskian_orientation(f, g), NotAlternatingError);
}

TEST_CASE("wronskian orientation matches the interlacing direction") {
    // f << g certified by W[f, g] <= 0
    Poly f = from_roots({BigRational(-3), BigRational(-1)});
    Poly g = from_roots({BigRational(-2), BigRational(-1, 2)});
    REQUIRE(interlaces(g, f).relation == InterlaceRelation::GInterlacesF);  // f << g
    CHECK(wronskian_orientation(f, g) <= 0);
    CHECK(wronskian_orientation(g, f) >= 0);
}

TEST_CASE("cauchy bound encloses every real root") {
    Poly f = from_roots({BigRational(5), BigRational(-17, 2), BigRational(1, 3)});
    BigRational bound = cauchy_root_bound(f);
    for (const auto& iv : isolate_roots(f)) {
        CHECK(iv.lo > -bound);
        CHECK(iv.hi < bound);
    }
}

#pragma once

#include <optional>
#include <string>
#include <utility>

#include "iklp/klcore.hpp"
#include "iklp/poly.hpp"
#include "iklp/realroots.hpp"
#include "iklp/report.hpp"

namespace iklp {

/// The five interlacing-proof families. P1/P3/P5 have a cubic core after
/// dividing by (1+t)^(n-3); P2/P4 have a quadratic core after (1+t)^(n-2).
enum class FamilyId { P1, P2, P3, P4, P5 };

std::string to_string(FamilyId id);
std::optional<FamilyId> family_from_string(const std::string& s);

enum class Parity { Odd, Even };  // d = 2n+1 or d = 2n+2

struct FamilyParams {
    unsigned n = 3;  // n = floor((d-1)/2), n >= 3
    Parity parity = Parity::Odd;
    unsigned m_or_h = 1;              // m for P1/P5, h for P3; unused by P2/P4
    std::optional<BigRational> k;     // combination scalar; nullopt = symbolic

    unsigned d() const { return parity == Parity::Odd ? 2 * n + 1 : 2 * n + 2; }
};

/// The raw combination sum: coefficient of t^i is (family integrand at i) * C(n, i).
/// Requires a concrete k.
Poly family_summand_poly(FamilyId id, const FamilyParams& p);

/// The cubic/quadratic core left after exact division by the (1+t) power.
/// A nonzero remainder would falsify the factorization this family relies
/// on; it raises NonzeroRemainderError, which grid scans record as a finding.
Poly family_core_poly(FamilyId id, const FamilyParams& p);

/// The core's discriminant as an exact polynomial in k (each core
/// coefficient is affine in k, so the result has degree <= 4, and <= 2 for
/// the quadratic families). The k field of p is ignored.
Poly discriminant_in_k(FamilyId id, const FamilyParams& p);

/// The quadratic-family discriminant in the closed form
/// ((dn - 2d + 3n) + 2kn)^2 + 4(n-1)(d(d-n) + 2n), as a polynomial in k.
Poly p2_discriminant_closed_form(unsigned n, unsigned d);

struct PositivityCertificate {
    bool positive_for_all_k = false;
    /// On failure: an interval of k values containing a point where q <= 0.
    std::optional<IsolatingInterval> witness;
};

/// Exact certificate that q(k) > 0 for every real k: q has no real roots
/// and q(0) > 0. Otherwise returns a witness interval.
PositivityCertificate certify_positive_for_all_k(const Poly& q_in_k);

enum class WronskianFormId { M1, HH1, MD };

/// Closed forms for the constant term of the Wronskian of the two
/// B-transformed polynomials in the interlacing lemmas; always negative.
BigRational wronskian_constant_closed_form(WronskianFormId id, unsigned m_or_h, unsigned d);

enum class LemmaId { M1, HH1, MD, HM };

std::string to_string(LemmaId id);
std::optional<LemmaId> lemma_from_string(const std::string& s);

/// The (left, right) pair of B-transformed polynomials (with n = floor((d-1)/2))
/// whose relation LEFT << RIGHT the lemma asserts.
///   M1:  B(Q_{U_{m,d}})    << B(Q_{U_{1,d}} - Q_{U_{1,d-1}})
///   HH1: B(D_{h+1,d})      << B(D_{h,d})          (h from the h parameter)
///   MD:  B(Q_{U_{m,d}})    << B(D_{m,d})
///   HM:  B(Q_{U_{m,d}})    << B(D_{h,d})          (1 <= h <= m)
std::pair<Poly, Poly> lemma_pair(LemmaId which, unsigned m, unsigned d,
                                 std::optional<unsigned> h = std::nullopt);

struct LemmaVerdict {
    bool pass = false;
    InterlaceRelation relation = InterlaceRelation::NotAlternating;
    std::string note;  // failure reason / propagated finding
};

/// Runs the exact interlacing check for one lemma instance.
LemmaVerdict verify_interlacing_lemma(LemmaId which, unsigned m, unsigned d,
                                      std::optional<unsigned> h = std::nullopt);

/// Full certification pipeline for one paving input: construct Q_M, then
/// (for nonnegative profiles) check real-rootedness of both B transforms,
/// log-concavity with no internal zeros, the higher-order Turan inequality,
/// and the coefficient positivity profile.
CheckReport theorem_pipeline(const PavingData& data);

}  // namespace iklp

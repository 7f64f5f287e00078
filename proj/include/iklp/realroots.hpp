#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iklp/poly.hpp"

namespace iklp {

/// A rational number extended with the two infinities, for interval endpoints.
class ExtendedRational {
public:
    enum class Kind { NegInf, Finite, PosInf };

    static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }
    static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
    ExtendedRational(BigRational v) : kind_(Kind::Finite), v_(std::move(v)) {}
    ExtendedRational(long v) : kind_(Kind::Finite), v_(v) {}

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const BigRational& value() const { return v_; }

    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);

private:
    explicit ExtendedRational(Kind k) : kind_(k) {}
    Kind kind_;
    BigRational v_;
};

/// Number of distinct real roots of f in the half-open interval (lo, hi],
/// by Sturm sign-variation differences on the squarefree radical of f.
unsigned sturm_root_count(const Poly& f, const ExtendedRational& lo, const ExtendedRational& hi);

/// True iff every complex root of f is real. Constants and degree-1
/// polynomials are real-rooted; repeated real roots are fine.
bool is_real_rooted(const Poly& f);

/// A certified enclosure of exactly one distinct real root.
/// lo == hi means the root is exactly the rational lo; otherwise the root
/// lies in the open interval (lo, hi) and the endpoints are not roots.
struct IsolatingInterval {
    BigRational lo;
    BigRational hi;
    unsigned multiplicity = 1;

    bool is_point() const { return lo == hi; }
};

/// Isolating intervals for all real roots of f, in increasing order, with
/// multiplicities from the squarefree decomposition. Rational roots are
/// returned as exact points.
std::vector<IsolatingInterval> isolate_roots(const Poly& f);

/// True iff f is real-rooted and its roots are all <= 0 or all >= 0.
bool roots_all_real_same_sign(const Poly& f);

enum class InterlaceRelation {
    GInterlacesF,    // g << f
    FInterlacesG,    // f << g
    Both,            // both orderings hold (equal roots / degree-0 edge cases)
    AlternatingOnly, // reserved; never produced by the exact classifier
    NotAlternating,
};

struct InterlaceVerdict {
    InterlaceRelation relation;
    /// On NotAlternating: a pair of root enclosures violating the ordering.
    std::optional<std::pair<IsolatingInterval, IsolatingInterval>> witness;

    bool alternating() const { return relation != InterlaceRelation::NotAlternating; }
};

/// Classifies the root-alternation relation between two real-rooted
/// polynomials with positive leading coefficients. Either argument may be
/// the zero polynomial, which interlaces (and is interlaced by) everything.
/// Shared roots are compared exactly and never break alternation.
InterlaceVerdict interlaces(const Poly& f, const Poly& g);

/// Constant sign of W[f, g] on the real line for an alternating pair:
/// -1, 0 (only when W is identically zero) or +1. A nonpositive sign
/// certifies f << g. Throws NotAlternatingError when the pair is not
/// alternating.
int wronskian_orientation(const Poly& f, const Poly& g);

/// The unique minimal-denominator rational in the open interval (lo, hi).
BigRational simplest_rational_between(const BigRational& lo, const BigRational& hi);

/// Cauchy bound: every real root of f has absolute value strictly below this.
BigRational cauchy_root_bound(const Poly& f);

}  // namespace iklp

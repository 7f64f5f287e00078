#include "iklp/realroots.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "iklp/errors.hpp"

namespace iklp {

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    using K = ExtendedRational::Kind;
    if (a.kind() == K::NegInf) return b.kind() != K::NegInf;
    if (a.kind() == K::PosInf) return false;
    if (b.kind() == K::PosInf) return true;
    if (b.kind() == K::NegInf) return false;
    return a.value() < b.value();
}

namespace {

/// Integer-coefficient primitive multiple of p, preserving the sign of every
/// coefficient (scaling by a positive rational only). A Sturm chain scaled
/// this way stays a Sturm chain.
Poly primitive_signed(const Poly& p) {
    Poly q = p.primitive_int();
    if (p.leading().sign() < 0) return -q;
    return q;
}

/// Canonical Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const Poly& squarefree) {
        seq_.push_back(primitive_signed(squarefree));
        if (seq_.front().size() <= 1) return;
        seq_.push_back(primitive_signed(seq_.front().derivative()));
        while (true) {
            const Poly& a = seq_[seq_.size() - 2];
            const Poly& b = seq_.back();
            Poly r = poly_div_rem(a, b).remainder;
            if (r.is_zero()) break;
            seq_.push_back(primitive_signed(-r));
        }
    }

    unsigned variations(const ExtendedRational& x) const {
        int prev = 0;
        unsigned flips = 0;
        for (const Poly& p : seq_) {
            int s;
            switch (x.kind()) {
                case ExtendedRational::Kind::NegInf: s = p.sign_at_neg_inf(); break;
                case ExtendedRational::Kind::PosInf: s = p.sign_at_pos_inf(); break;
                default: s = p.sign_at(x.value());
            }
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++flips;
            prev = s;
        }
        return flips;
    }

    /// Distinct roots in (lo, hi].
    unsigned count(const ExtendedRational& lo, const ExtendedRational& hi) const {
        unsigned vlo = variations(lo);
        unsigned vhi = variations(hi);
        assert(vlo >= vhi);
        return vlo - vhi;
    }

private:
    std::vector<Poly> seq_;
};

unsigned multiplicity_in(const SquarefreeDecomposition& decomp, const IsolatingInterval& iv) {
    for (const auto& [factor, mult] : decomp.factors) {
        if (iv.is_point()) {
            if (factor.sign_at(iv.lo) == 0) return mult;
        } else if (factor.sign_at(iv.lo) * factor.sign_at(iv.hi) < 0) {
            return mult;
        }
    }
    return 0;
}

struct Isolator {
    const Poly& radical_int;  // primitive integer squarefree polynomial
    const SturmChain& chain;
    const SquarefreeDecomposition& decomp;  // of the original polynomial
    bool pin_rationals;
    std::vector<IsolatingInterval>* out;

    void emit_point(const BigRational& r) {
        unsigned mult = multiplicity_in(decomp, {r, r, 1});
        assert(mult > 0);
        out->push_back({r, r, mult});
    }

    void emit_interval(BigRational lo, BigRational hi) {
        // Exactly one simple root of radical_int in (lo, hi), endpoints nonzero.
        const int slo = radical_int.sign_at(lo);
        if (pin_rationals) {
            // A rational root p/q in lowest terms has q dividing the leading
            // coefficient; once the width drops below 1/lc^2 the interval holds
            // at most one rational with so small a denominator, and the
            // minimal-denominator rational of the interval is the only
            // candidate left to test.
            const BigRational lc2 = BigRational(radical_int.leading().abs()).pow(2);
            while ((hi - lo) * lc2 >= BigRational(1)) {
                BigRational mid = (lo + hi) / BigRational(2);
                int sm = radical_int.sign_at(mid);
                if (sm == 0) {
                    emit_point(mid);
                    return;
                }
                (sm == slo ? lo : hi) = mid;
            }
            BigRational candidate = simplest_rational_between(lo, hi);
            if (radical_int.sign_at(candidate) == 0) {
                emit_point(candidate);
                return;
            }
        }
        unsigned mult = multiplicity_in(decomp, {lo, hi, 1});
        assert(mult > 0);
        out->push_back({lo, hi, mult});
    }

    void bisect(const BigRational& lo, const BigRational& hi) {
        unsigned n = chain.count(ExtendedRational(lo), ExtendedRational(hi));
        if (n == 0) return;
        if (n == 1) {
            emit_interval(lo, hi);
            return;
        }
        BigRational mid = (lo + hi) / BigRational(2);
        if (radical_int.sign_at(mid) != 0) {
            bisect(lo, mid);
            bisect(mid, hi);
            return;
        }
        // Exact root at the midpoint: carve out a clean gap around it.
        BigRational w = (hi - lo) / BigRational(4);
        BigRational left = mid - w, right = mid + w;
        while (radical_int.sign_at(left) == 0 || radical_int.sign_at(right) == 0 ||
               chain.count(ExtendedRational(left), ExtendedRational(right)) != 1) {
            w /= BigRational(2);
            left = mid - w;
            right = mid + w;
        }
        bisect(lo, left);
        emit_point(mid);
        bisect(right, hi);
    }
};

std::vector<IsolatingInterval> isolate_impl(const Poly& f, bool pin_rationals) {
    if (f.is_zero()) throw ZeroPolynomialError("isolate_roots");
    SquarefreeDecomposition decomp = squarefree_part(f);
    std::vector<IsolatingInterval> out;
    if (decomp.radical.size() <= 1) return out;
    Poly radical_int = decomp.radical.primitive_int();
    SturmChain chain(radical_int);
    BigRational bound = cauchy_root_bound(radical_int);
    Isolator iso{radical_int, chain, decomp, pin_rationals, &out};
    iso.bisect(-bound, bound);
    return out;
}

}  // namespace

unsigned sturm_root_count(const Poly& f, const ExtendedRational& lo, const ExtendedRational& hi) {
    if (f.is_zero()) throw ZeroPolynomialError("sturm_root_count");
    if (!(lo < hi)) throw InvalidRangeError("sturm_root_count requires lo < hi");
    SquarefreeDecomposition decomp = squarefree_part(f);
    if (decomp.radical.size() <= 1) return 0;
    SturmChain chain(decomp.radical);
    return chain.count(lo, hi);
}

bool is_real_rooted(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("is_real_rooted");
    SquarefreeDecomposition decomp = squarefree_part(f);
    auto deg = decomp.radical.degree();
    if (*deg == 0) return true;
    SturmChain chain(decomp.radical);
    return chain.count(ExtendedRational::neg_inf(), ExtendedRational::pos_inf()) == *deg;
}

std::vector<IsolatingInterval> isolate_roots(const Poly& f) { return isolate_impl(f, true); }

bool roots_all_real_same_sign(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("roots_all_real_same_sign");
    if (!is_real_rooted(f)) return false;
    SquarefreeDecomposition decomp = squarefree_part(f);
    if (decomp.radical.size() <= 1) return true;
    SturmChain chain(decomp.radical);
    const ExtendedRational zero{BigRational(0)};
    unsigned strictly_positive = chain.count(zero, ExtendedRational::pos_inf());
    unsigned up_to_zero = chain.count(ExtendedRational::neg_inf(), zero);
    bool root_at_zero = decomp.radical.sign_at(BigRational(0)) == 0;
    unsigned strictly_negative = up_to_zero - (root_at_zero ? 1u : 0u);
    return strictly_positive == 0 || strictly_negative == 0;
}

namespace {

/// Ascending root ids of one polynomial, repeated with multiplicity, relative
/// to the merged distinct-root list of a polynomial pair.
std::vector<std::size_t> root_ids_with_multiplicity(
    const std::vector<IsolatingInterval>& merged, const SquarefreeDecomposition& decomp) {
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < merged.size(); ++j) {
        unsigned mult = multiplicity_in(decomp, merged[j]);
        for (unsigned r = 0; r < mult; ++r) ids.push_back(j);
    }
    return ids;
}

struct ChainCheck {
    bool holds = false;
    std::size_t bad_lhs = 0, bad_rhs = 0;  // merged-root ids on failure
};

/// Ascending interlacing chain b1 <= a1 <= b2 <= a2 <= ... for equal lengths,
/// or a1 <= b1 <= a2 <= ... when a is one longer.
ChainCheck chain_holds(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    ChainCheck c;
    if (a.size() == b.size()) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (b[i] > a[i]) return {false, b[i], a[i]};
            if (i + 1 < b.size() && a[i] > b[i + 1]) return {false, a[i], b[i + 1]};
        }
        c.holds = true;
        return c;
    }
    if (a.size() == b.size() + 1) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (a[i] > b[i]) return {false, a[i], b[i]};
            if (b[i] > a[i + 1]) return {false, b[i], a[i + 1]};
        }
        c.holds = true;
        return c;
    }
    return c;
}

}  // namespace

InterlaceVerdict interlaces(const Poly& f, const Poly& g) {
    auto validate = [](const Poly& p, const char* which) {
        if (p.is_zero()) return;
        if (p.leading().sign() < 0) throw NegativeLeadingCoefficientError(which);
        if (!is_real_rooted(p)) throw NotRealRootedError(which);
    };
    validate(f, "f");
    validate(g, "g");
    if (f.is_zero() || g.is_zero()) return {InterlaceRelation::Both, std::nullopt};

    const std::size_t df = *f.degree();
    const std::size_t dg = *g.degree();
    if (df == 0 && dg == 0) return {InterlaceRelation::Both, std::nullopt};

    std::vector<IsolatingInterval> merged = isolate_impl(f * g, false);
    SquarefreeDecomposition decomp_f = squarefree_part(f);
    SquarefreeDecomposition decomp_g = squarefree_part(g);
    std::vector<std::size_t> roots_f = root_ids_with_multiplicity(merged, decomp_f);
    std::vector<std::size_t> roots_g = root_ids_with_multiplicity(merged, decomp_g);
    assert(roots_f.size() == df);
    assert(roots_g.size() == dg);

    // g << f: roots of g thread below/between the roots of f.
    ChainCheck g_ll_f = chain_holds(roots_f, roots_g);
    ChainCheck f_ll_g = chain_holds(roots_g, roots_f);

    if (g_ll_f.holds && f_ll_g.holds) return {InterlaceRelation::Both, std::nullopt};
    if (g_ll_f.holds) return {InterlaceRelation::GInterlacesF, std::nullopt};
    if (f_ll_g.holds) return {InterlaceRelation::FInterlacesG, std::nullopt};

    InterlaceVerdict v{InterlaceRelation::NotAlternating, std::nullopt};
    const ChainCheck& pick =
        (df == dg || df == dg + 1) ? g_ll_f : f_ll_g;  // the degree-compatible attempt
    if (!merged.empty() && (df == dg || df == dg + 1 || dg == df + 1))
        v.witness = std::make_pair(merged[pick.bad_lhs], merged[pick.bad_rhs]);
    return v;
}

int wronskian_orientation(const Poly& f, const Poly& g) {
    InterlaceVerdict v = interlaces(f, g);
    if (!v.alternating()) throw NotAlternatingError();
    Poly w = wronskian(f, g);
    if (w.is_zero()) return 0;
    // W keeps one sign on the whole line for an alternating pair; read it off
    // at the first integer that is not one of its finitely many zeros.
    long probe = 0;
    while (true) {
        int s = w.sign_at(BigRational(probe));
        if (s != 0) return s;
        probe = probe <= 0 ? -probe + 1 : -probe;
    }
}

BigRational simplest_rational_between(const BigRational& lo, const BigRational& hi) {
    if (!(lo < hi)) throw InvalidRangeError("simplest_rational_between requires lo < hi");
    mpz_class fl = floor_of(lo);
    BigRational next_int{mpz_class(fl + 1)};
    if (next_int < hi) return next_int;  // lo < fl+1 always holds
    BigRational fa = lo - BigRational(fl);
    BigRational fb = hi - BigRational(fl);
    if (fa.is_zero()) {
        // simplest in (0, fb) is 1/(floor(1/fb) + 1)
        mpz_class q = floor_of(fb.inverse()) + 1;
        return BigRational(fl) + BigRational(mpz_class(1), q);
    }
    BigRational inner = simplest_rational_between(fb.inverse(), fa.inverse());
    return BigRational(fl) + inner.inverse();
}

BigRational cauchy_root_bound(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("cauchy_root_bound");
    BigRational max(0);
    const BigRational lead = f.leading().abs();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        BigRational v = f.coeff(i).abs() / lead;
        if (v > max) max = v;
    }
    return max + BigRational(1);
}

}  // namespace iklp

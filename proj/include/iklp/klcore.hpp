#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "iklp/poly.hpp"

namespace iklp {

/// Uniform matroid U_{m,d}: rank d, corank m, ground set of size m + d.
struct UniformParams {
    unsigned m = 1;
    unsigned d = 1;
};

/// Paving matroid data: lambda[h] counts the stressed hyperplanes of
/// cardinality h + d - 1. Absent keys mean zero.
struct PavingData {
    unsigned m = 1;
    unsigned d = 2;
    std::map<unsigned, unsigned long> lambda;  // keys in [1, m]

    std::string lambda_spec() const;  // "1:2,3:1" style echo, sorted by h
};

enum class QSource { Uniform, Difference, Paving };
enum class QValidity { Valid, NegativeCoefficient };

/// An inverse Kazhdan-Lusztig polynomial together with its provenance.
struct QPolynomial {
    Poly poly;
    QSource source = QSource::Uniform;
    unsigned m_or_h = 1;  // m for uniform/paving, h for differences
    unsigned d = 1;
    std::optional<PavingData> paving;  // set when source == Paving
    QValidity validity = QValidity::Valid;
    std::optional<std::size_t> negative_index;  // first offending power, if any

    unsigned top_degree() const { return (d - 1) / 2; }  // floor((d-1)/2)
    bool valid() const { return validity == QValidity::Valid; }
};

/// Q_{U_{m,d}}: coefficient of t^i is
/// m(d-2i) / ((m+i)(d-i+m)) * C(m+d, d) * C(d, i) for 0 <= i <= floor((d-1)/2).
/// Every coefficient is verified to be a positive integer.
QPolynomial inverse_kl_uniform(UniformParams p);

/// Q_{U_{h,d}} - Q_{U_{h,d-1}}, exact coefficientwise difference. Requires d >= 2.
QPolynomial uniform_difference(unsigned h, unsigned d);

/// Q_M = Q_{U_{m,d}} - sum_h lambda_h (Q_{U_{h,d}} - Q_{U_{h,d-1}}).
/// Never throws for well-formed data: a profile whose combination goes
/// negative is marked NegativeCoefficient (no actual matroid produces one).
QPolynomial inverse_kl_paving(const PavingData& data);

/// Coefficient i becomes C(n, i) * a_i. Requires deg p <= n.
Poly hadamard_binomial(const Poly& p, unsigned long n);

/// hadamard_binomial with n equal to the polynomial's own degree.
Poly b_transform(const QPolynomial& q);

struct PositivityProfile {
    unsigned top_index = 0;                // floor((d-1)/2)
    std::vector<bool> interior_positive;   // index i < top_index: a_i > 0?
    bool top_is_zero = false;              // a_top == 0 is recorded, not failed

    bool all_interior_positive() const {
        for (bool b : interior_positive)
            if (!b) return false;
        return true;
    }
};

/// Coefficient positivity report for a Valid Q polynomial: all indices below
/// floor((d-1)/2) are expected positive; the top coefficient may be zero.
PositivityProfile positivity_profile(const QPolynomial& q);

}  // namespace iklp

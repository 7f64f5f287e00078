#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "iklp/rational.hpp"

namespace iklp {

/// A finite coefficient sequence a_0..a_n. Must be nonempty.
struct CoeffSequence {
    std::vector<BigRational> values;
};

/// Pass/fail with the first violating index and the violated quantity.
struct WitnessVerdict {
    bool pass = true;
    std::optional<std::size_t> witness_index;
    std::optional<BigRational> witness_value;
};

/// a_i^2 >= a_{i-1} a_{i+1} for all interior i, and the nonzero entries
/// occupy a consecutive index range. Sequences shorter than 3 pass.
WitnessVerdict is_log_concave_no_internal_zeros(const CoeffSequence& s);

/// 4(a_i^2 - a_{i-1}a_{i+1})(a_{i+1}^2 - a_i a_{i+2}) >= (a_i a_{i+1} - a_{i-1}a_{i+2})^2
/// for 1 <= i <= n-2. Sequences shorter than 4 pass vacuously.
WitnessVerdict higher_order_turan(const CoeffSequence& s);

/// Sharp Newton inequality on b_i = a_i C(n,i):
/// i(n-i) b_i^2 >= (i+1)(n-i+1) b_{i-1} b_{i+1}. Requires nonnegative input
/// with length <= n+1.
WitnessVerdict newton_ultra_log_concave(const CoeffSequence& s, unsigned long n);

/// Weak consequence of the above: plain log-concavity of b_i = a_i C(n,i).
WitnessVerdict newton_log_concave(const CoeffSequence& s, unsigned long n);

/// Coefficientwise multiplier candidates gamma_0..gamma_n.
struct GammaSequence {
    std::vector<BigRational> values;
};

/// Algebraic n-sequence test: gamma applied to (1+t)^n must have all-real
/// roots of one sign. Requires at least n+1 entries.
bool is_n_sequence(const GammaSequence& g, unsigned long n);

/// gamma_i = 1 / (i! * prod_{j=l..k} (i+j)) for i = 0..length-1. Requires k >= l >= 1.
GammaSequence ms1_sequence(unsigned long l, unsigned long k, std::size_t length);

/// gamma_i = 1 / ((d-i)! * prod_{j=l..k} (d-i+j)) for i = 0..d; the reversal
/// of an ms1-type sequence truncated to d+1 entries.
GammaSequence ns1_sequence(unsigned long d, unsigned long l, unsigned long k);

}  // namespace iklp

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iklp/lemmascan.hpp"
#include "iklp/report.hpp"

namespace iklp {

struct ScanConfig {
    // Random paving batches.
    unsigned d_min = 2;
    unsigned d_max = 9;
    unsigned m_max = 5;
    unsigned lambda_max = 2;
    unsigned profiles_per_cell = 200;
    std::uint64_t seed = 42;
    unsigned jobs = 1;

    // Family grids (selected when `families` is nonempty).
    std::vector<FamilyId> families;
    unsigned n_min = 3;
    unsigned n_max = 12;
    unsigned param_max = 8;

    void validate() const;  // throws InvalidParamsError
};

struct ScanResult {
    std::vector<CheckReport> reports;  // deterministic order
    unsigned cases = 0;
    unsigned passes = 0;
    unsigned fails = 0;
    unsigned not_matroidal = 0;

    std::string summary() const;
    /// 1 iff some case that should pass did not.
    int exit_code() const { return passes < cases - not_matroidal ? 1 : 0; }
};

/// Deterministic profile: lambda_h drawn uniformly from [0, lambda_max] by a
/// SplitMix64 hash of (seed, m, d, index, h). Identical on every platform.
PavingData random_paving_profile(std::uint64_t seed, unsigned m, unsigned d, unsigned index,
                                 unsigned lambda_max);

/// theorem_pipeline over every (m, d) cell with profiles_per_cell seeded
/// random profiles each. Report order: (m, d, profile index).
ScanResult run_paving_scan(const ScanConfig& config);

/// Family grids: factorization remainders over the k sample set, the
/// discriminant-in-k positivity certificate, the quadratic-family closed-form
/// identity, and the real-rootedness cross-check of sampled cores.
ScanResult run_family_scan(const ScanConfig& config);

/// k values every factorization grid point is sampled at.
const std::vector<BigRational>& factorization_k_samples();

/// CSV summary (family,n,d,m_or_h,verdict,witness) for a family scan.
std::string family_scan_csv(const ScanResult& result);

}  // namespace iklp

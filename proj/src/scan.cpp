#include "iklp/scan.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "iklp/errors.hpp"

namespace iklp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

CheckReport error_report(const std::string& what) {
    CheckReport r;
    r.input["error"] = what;
    r.checks.push_back({"evaluation", CheckVerdict::Fail, what});
    return r;
}

std::vector<CheckReport> run_tasks(const std::vector<std::function<CheckReport()>>& tasks,
                                   unsigned jobs) {
    std::vector<CheckReport> reports(tasks.size());
    auto run_one = [&](std::size_t i) {
        try {
            reports[i] = tasks[i]();
        } catch (const std::exception& e) {
            reports[i] = error_report(e.what());
        }
    };
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            run_one(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<std::size_t>(jobs, tasks.size());
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

ScanResult tally(std::vector<CheckReport> reports) {
    ScanResult r;
    r.reports = std::move(reports);
    r.cases = static_cast<unsigned>(r.reports.size());
    for (const auto& rep : r.reports) {
        if (rep.not_matroidal())
            ++r.not_matroidal;
        else if (rep.any_fail())
            ++r.fails;
        else
            ++r.passes;
    }
    return r;
}

}  // namespace

void ScanConfig::validate() const {
    if (d_min < 2) throw InvalidParamsError("scan requires d_min >= 2");
    if (d_max < d_min) throw InvalidParamsError("scan requires d_max >= d_min");
    if (m_max < 1) throw InvalidParamsError("scan requires m_max >= 1");
    if (jobs < 1) throw InvalidParamsError("scan requires jobs >= 1");
    if (n_max < n_min) throw InvalidParamsError("scan requires n_max >= n_min");
    if (n_min < 3) throw InvalidParamsError("family scans require n_min >= 3");
}

std::string ScanResult::summary() const {
    std::ostringstream os;
    os << cases << " cases, " << passes << " pass, " << fails << " fail, " << not_matroidal
       << " not-matroidal";
    return os.str();
}

PavingData random_paving_profile(std::uint64_t seed, unsigned m, unsigned d, unsigned index,
                                 unsigned lambda_max) {
    PavingData data;
    data.m = m;
    data.d = d;
    for (unsigned h = 1; h <= m; ++h) {
        std::uint64_t s = seed;
        s = splitmix64(s ^ m);
        s = splitmix64(s ^ (std::uint64_t(d) << 16));
        s = splitmix64(s ^ (std::uint64_t(index) << 32));
        s = splitmix64(s ^ (std::uint64_t(h) << 48));
        unsigned long v = s % (std::uint64_t(lambda_max) + 1);
        if (v > 0) data.lambda[h] = v;
    }
    return data;
}

ScanResult run_paving_scan(const ScanConfig& config) {
    config.validate();
    std::vector<std::function<CheckReport()>> tasks;
    for (unsigned m = 1; m <= config.m_max; ++m)
        for (unsigned d = config.d_min; d <= config.d_max; ++d)
            for (unsigned idx = 0; idx < config.profiles_per_cell; ++idx) {
                PavingData data =
                    random_paving_profile(config.seed, m, d, idx, config.lambda_max);
                tasks.emplace_back([data] { return theorem_pipeline(data); });
            }
    return tally(run_tasks(tasks, config.jobs));
}

const std::vector<BigRational>& factorization_k_samples() {
    static const std::vector<BigRational> samples = {
        BigRational(-10), BigRational(-1), BigRational(-1, 2), BigRational(0),
        BigRational(1, 2), BigRational(1), BigRational(10)};
    return samples;
}

namespace {

CheckReport family_grid_report(FamilyId id, const FamilyParams& base) {
    CheckReport r;
    r.input["family"] = to_string(id);
    r.input["n"] = base.n;
    r.input["d"] = base.d();
    r.input["m_or_h"] = base.m_or_h;

    bool factorization_ok = true;
    std::string factorization_detail;
    bool cores_real_rooted = true;
    std::string core_detail;
    for (const BigRational& k : factorization_k_samples()) {
        FamilyParams p = base;
        p.k = k;
        try {
            Poly core = family_core_poly(id, p);
            if (!core.is_zero() && !is_real_rooted(core)) {
                cores_real_rooted = false;
                core_detail = "core not real-rooted at k=" + k.str() + ": " + core.str();
            }
        } catch (const NonzeroRemainderError& e) {
            factorization_ok = false;
            factorization_detail = e.what();
        }
    }
    r.checks.push_back({"factorization", factorization_ok ? CheckVerdict::Pass : CheckVerdict::Fail,
                        factorization_detail});

    Poly disc = discriminant_in_k(id, base);
    r.coefficients = disc.coeff_strings();
    PositivityCertificate cert = certify_positive_for_all_k(disc);
    std::string cert_detail;
    if (!cert.positive_for_all_k && cert.witness)
        cert_detail = "k in [" + cert.witness->lo.str() + ", " + cert.witness->hi.str() + "]";
    r.checks.push_back({"discriminant_positive_for_all_k",
                        cert.positive_for_all_k ? CheckVerdict::Pass : CheckVerdict::Fail,
                        cert_detail});

    if (id == FamilyId::P2) {
        Poly closed = p2_discriminant_closed_form(base.n, base.d());
        bool same = disc == closed;
        r.checks.push_back({"closed_form_identity", same ? CheckVerdict::Pass : CheckVerdict::Fail,
                            same ? "" : "computed " + disc.str() + " vs closed form " +
                                            closed.str()});
    }

    r.checks.push_back({"sampled_cores_real_rooted",
                        cores_real_rooted ? CheckVerdict::Pass : CheckVerdict::Fail, core_detail});
    return r;
}

}  // namespace

ScanResult run_family_scan(const ScanConfig& config) {
    config.validate();
    std::vector<std::function<CheckReport()>> tasks;
    for (FamilyId id : config.families) {
        for (unsigned n = config.n_min; n <= config.n_max; ++n) {
            for (Parity parity : {Parity::Odd, Parity::Even}) {
                unsigned lo = 1, hi = config.param_max;
                if (id == FamilyId::P1 || id == FamilyId::P3) lo = 2;
                if (id == FamilyId::P2 || id == FamilyId::P4) hi = lo = 1;
                for (unsigned mh = lo; mh <= hi; ++mh) {
                    FamilyParams p{n, parity, mh, std::nullopt};
                    tasks.emplace_back([id, p] { return family_grid_report(id, p); });
                }
            }
        }
    }
    return tally(run_tasks(tasks, config.jobs));
}

namespace {
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace

std::string family_scan_csv(const ScanResult& result) {
    std::ostringstream os;
    os << "family,n,d,m_or_h,verdict,witness\n";
    for (const auto& r : result.reports) {
        std::string verdict = "PASS";
        std::string witness;
        for (const auto& c : r.checks) {
            if (c.verdict == CheckVerdict::Fail) {
                verdict = "FAIL";
                witness = c.detail;
                break;
            }
        }
        os << r.input.at("family").get<std::string>() << "," << r.input.at("n") << ","
           << r.input.at("d") << "," << r.input.at("m_or_h") << "," << verdict << ","
           << csv_escape(witness) << "\n";
    }
    return os.str();
}

}  // namespace iklp

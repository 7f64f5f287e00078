#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iklp/errors.hpp"
#include "iklp/inequalities.hpp"
#include "iklp/klcore.hpp"
#include "iklp/lemmascan.hpp"
#include "iklp/realroots.hpp"
#include "iklp/scan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using iklp::BigRational;
using iklp::Poly;

std::optional<Poly> parse_poly_csv(const std::string& spec) {
    std::vector<BigRational> coeffs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto r = BigRational::parse(item);
        if (!r) return std::nullopt;
        coeffs.push_back(std::move(*r));
    }
    if (coeffs.empty()) return std::nullopt;
    return Poly(std::move(coeffs));
}

std::optional<std::map<unsigned, unsigned long>> parse_lambda_spec(const std::string& spec) {
    std::map<unsigned, unsigned long> lambda;
    if (spec.empty()) return lambda;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) return std::nullopt;
        try {
            std::size_t used = 0;
            long h = std::stol(item.substr(0, colon), &used);
            if (used != colon || h < 1) return std::nullopt;
            std::string count_str = item.substr(colon + 1);
            long count = std::stol(count_str, &used);
            if (used != count_str.size() || count < 0) return std::nullopt;
            lambda[static_cast<unsigned>(h)] += static_cast<unsigned long>(count);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return lambda;
}

int write_or_print(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return kExitIo;
    }
    out << content;
    return out ? kExitOk : kExitIo;
}

std::string relation_name(iklp::InterlaceRelation r) {
    switch (r) {
        case iklp::InterlaceRelation::GInterlacesF: return "G_INTERLACES_F";
        case iklp::InterlaceRelation::FInterlacesG: return "F_INTERLACES_G";
        case iklp::InterlaceRelation::Both: return "BOTH";
        case iklp::InterlaceRelation::AlternatingOnly: return "ALTERNATING_ONLY";
        case iklp::InterlaceRelation::NotAlternating: return "NOT_ALTERNATING";
    }
    return "?";
}

int cmd_uniform(unsigned m, unsigned d, bool with_b, bool as_json) {
    iklp::QPolynomial q = iklp::inverse_kl_uniform({m, d});
    const unsigned n = q.top_degree();
    if (as_json) {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["d"] = d;
        j["coeffs"] = q.poly.coeff_strings();
        j["degree"] = *q.poly.degree();
        if (with_b) {
            j["b_natural"] = iklp::b_transform(q).coeff_strings();
            j["b_explicit_n"] = iklp::hadamard_binomial(q.poly, n).coeff_strings();
            j["n"] = n;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << q.poly.str() << "\n";
        if (with_b) {
            std::cout << "B(Q) = " << iklp::b_transform(q).str() << "\n";
            std::cout << "B_n(Q) = " << iklp::hadamard_binomial(q.poly, n).str() << " (n = " << n
                      << ")\n";
        }
    }
    return kExitOk;
}

int cmd_paving(const iklp::PavingData& data, bool as_json, const std::string& output) {
    iklp::CheckReport report = iklp::theorem_pipeline(data);
    std::string content = as_json ? report.to_json(true).dump() + "\n" : report.to_text();
    int io = write_or_print(content, output);
    if (io != kExitOk) return io;
    return report.any_fail() ? kExitMathFail : kExitOk;
}

int cmd_check(const std::string& input_path, const std::string& output) {
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot read " << input_path << "\n";
        return kExitIo;
    }
    std::ostringstream out;
    bool any_fail = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(line, nullptr, false);
        auto emit_parse_error = [&](const std::string& reason) {
            nlohmann::ordered_json err;
            err["error"] = "parse";
            err["line"] = line_no;
            err["reason"] = reason;
            out << err.dump() << "\n";
            any_fail = true;
        };
        if (parsed.is_discarded()) {
            emit_parse_error("invalid JSON");
            continue;
        }
        iklp::PavingData data;
        try {
            data.m = parsed.at("m").get<unsigned>();
            data.d = parsed.at("d").get<unsigned>();
            if (parsed.contains("lambda"))
                for (const auto& [key, value] : parsed.at("lambda").items())
                    data.lambda[static_cast<unsigned>(std::stoul(key))] =
                        value.get<unsigned long>();
            if (data.m < 1 || data.d < 1) throw iklp::InvalidParamsError("m, d >= 1");
            for (const auto& [h, count] : data.lambda)
                if (h < 1 || h > data.m) throw iklp::InvalidParamsError("lambda key range");
        } catch (const std::exception& e) {
            emit_parse_error(e.what());
            continue;
        }
        iklp::CheckReport report = iklp::theorem_pipeline(data);
        if (report.any_fail()) any_fail = true;
        out << report.to_json(false).dump() << "\n";
    }
    int io = write_or_print(out.str(), output);
    if (io != kExitOk) return io;
    return any_fail ? kExitMathFail : kExitOk;
}

int cmd_scan(const iklp::ScanConfig& config, const std::string& output, const std::string& csv) {
    iklp::ScanResult result = config.families.empty() ? iklp::run_paving_scan(config)
                                                      : iklp::run_family_scan(config);
    std::ostringstream lines;
    for (const auto& r : result.reports) lines << r.to_json(false).dump() << "\n";
    int io = write_or_print(lines.str(), output);
    if (io != kExitOk) return io;
    if (!csv.empty()) {
        if (config.families.empty()) {
            std::cerr << "error: --csv applies to family scans only\n";
            return kExitUsage;
        }
        io = write_or_print(iklp::family_scan_csv(result), csv);
        if (io != kExitOk) return io;
    }
    std::cerr << result.summary() << "\n";
    return result.exit_code();
}

int cmd_lemma(iklp::LemmaId which, unsigned m, unsigned d, std::optional<unsigned> h,
              bool as_json) {
    iklp::LemmaVerdict verdict = iklp::verify_interlacing_lemma(which, m, d, h);

    std::optional<BigRational> w_const;
    std::optional<BigRational> w_closed;
    try {
        auto [left, right] = iklp::lemma_pair(which, m, d, h);
        w_const = iklp::wronskian(left, right).coeff(0);
        switch (which) {
            case iklp::LemmaId::M1:
                w_closed = iklp::wronskian_constant_closed_form(iklp::WronskianFormId::M1, m, d);
                break;
            case iklp::LemmaId::HH1:
                w_closed = iklp::wronskian_constant_closed_form(iklp::WronskianFormId::HH1,
                                                                h.value_or(m), d);
                break;
            case iklp::LemmaId::MD:
                w_closed = iklp::wronskian_constant_closed_form(iklp::WronskianFormId::MD, m, d);
                break;
            case iklp::LemmaId::HM: break;
        }
    } catch (const iklp::Error&) {
        // leave the Wronskian fields empty; the verdict already reports the finding
    }

    if (as_json) {
        nlohmann::ordered_json j;
        j["lemma"] = iklp::to_string(which);
        j["m"] = m;
        j["d"] = d;
        if (h) j["h"] = *h;
        j["pass"] = verdict.pass;
        j["relation"] = relation_name(verdict.relation);
        j["note"] = verdict.note.empty() ? nlohmann::ordered_json()
                                         : nlohmann::ordered_json(verdict.note);
        j["wronskian_constant"] = w_const ? nlohmann::ordered_json(w_const->str())
                                          : nlohmann::ordered_json();
        j["closed_form"] = w_closed ? nlohmann::ordered_json(w_closed->str())
                                    : nlohmann::ordered_json();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "lemma " << iklp::to_string(which) << " m=" << m << " d=" << d;
        if (h) std::cout << " h=" << *h;
        std::cout << ": " << (verdict.pass ? "PASS" : "FAIL");
        if (!verdict.note.empty()) std::cout << " (" << verdict.note << ")";
        std::cout << "\n";
        if (w_const) std::cout << "wronskian constant term: " << w_const->str() << "\n";
        if (w_closed) std::cout << "closed form: " << w_closed->str() << "\n";
    }
    return verdict.pass ? kExitOk : kExitMathFail;
}

int cmd_interlace(const Poly& f, const Poly& g, bool as_json) {
    iklp::InterlaceVerdict verdict = iklp::interlaces(f, g);
    std::optional<int> orientation;
    if (verdict.alternating()) orientation = iklp::wronskian_orientation(f, g);

    if (as_json) {
        nlohmann::ordered_json j;
        j["relation"] = relation_name(verdict.relation);
        if (verdict.witness) {
            auto iv = [](const iklp::IsolatingInterval& i) {
                nlohmann::ordered_json w;
                w["lo"] = i.lo.str();
                w["hi"] = i.hi.str();
                w["mult"] = i.multiplicity;
                return w;
            };
            j["witness"] = {iv(verdict.witness->first), iv(verdict.witness->second)};
        } else {
            j["witness"] = nullptr;
        }
        j["wronskian_sign"] =
            orientation ? nlohmann::ordered_json(*orientation) : nlohmann::ordered_json();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << relation_name(verdict.relation) << "\n";
        if (verdict.witness) {
            auto iv = [](const iklp::IsolatingInterval& i) {
                return i.is_point() ? i.lo.str() : "(" + i.lo.str() + ", " + i.hi.str() + ")";
            };
            std::cout << "violating root pair: " << iv(verdict.witness->first) << " vs "
                      << iv(verdict.witness->second) << "\n";
        }
        if (orientation) {
            if (*orientation < 0)
                std::cout << "W[f,g] < 0: f << g certified\n";
            else if (*orientation > 0)
                std::cout << "W[f,g] > 0: g << f certified\n";
            else
                std::cout << "W[f,g] = 0 identically\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact inverse Kazhdan-Lusztig polynomial toolkit"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help and exit");
    app.option_defaults()->configurable(false);

    // uniform
    auto* uni = app.add_subcommand("uniform", "Compute Q for a uniform matroid U_{m,d}");
    unsigned uni_m = 1, uni_d = 1;
    bool uni_b = false, uni_json = false;
    uni->add_option("--m", uni_m, "corank (>= 1)")->required();
    uni->add_option("--d", uni_d, "rank (>= 1)")->required();
    uni->add_flag("--b-transform", uni_b, "also print both binomial transforms");
    uni->add_flag("--json", uni_json, "JSON output");

    // paving
    auto* pav = app.add_subcommand("paving", "Run the certification pipeline on a paving input");
    unsigned pav_m = 1, pav_d = 2;
    std::string pav_lambda, pav_output;
    bool pav_json = false;
    pav->add_option("--m", pav_m, "corank (>= 1)")->required();
    pav->add_option("--d", pav_d, "rank")->required();
    pav->add_option("--lambda", pav_lambda, "profile \"h:count[,h:count]*\" (duplicates sum)");
    pav->add_flag("--json", pav_json, "JSON output");
    pav->add_option("--output", pav_output, "write the report to a file");

    // check
    auto* chk = app.add_subcommand("check", "Batch-verify JSONL paving inputs");
    std::string chk_input, chk_output;
    chk->add_option("--input", chk_input, "JSONL file, one {m, d, lambda} object per line")
        ->required();
    chk->add_option("--output", chk_output, "write reports to a file (default stdout)");

    // scan
    auto* scn = app.add_subcommand("scan", "Grid scans: random paving batches or lemma families");
    iklp::ScanConfig config;
    std::string scn_families, scn_output, scn_csv;
    scn->add_option("--d-min", config.d_min, "minimum rank (default 2)");
    scn->add_option("--d-max", config.d_max, "maximum rank (default 9)");
    scn->add_option("--m-max", config.m_max, "maximum corank (default 5)");
    scn->add_option("--lambda-max", config.lambda_max, "maximum lambda_h (default 2)");
    scn->add_option("--profiles", config.profiles_per_cell, "profiles per (m,d) cell");
    scn->add_option("--seed", config.seed, "profile generator seed (default 42)");
    scn->add_option("--jobs", config.jobs, "worker threads (default 1)");
    scn->add_option("--families", scn_families, "comma list p1..p5 selects a family grid scan");
    scn->add_option("--n-min", config.n_min, "family grid minimum n (default 3)");
    scn->add_option("--n-max", config.n_max, "family grid maximum n (default 12)");
    scn->add_option("--param-max", config.param_max, "family grid m/h bound (default 8)");
    scn->add_option("--output", scn_output, "JSONL output file (default stdout)");
    scn->add_option("--csv", scn_csv, "summary CSV file (family scans)");

    // lemma
    auto* lem = app.add_subcommand("lemma", "Verify one interlacing lemma instance");
    lem->set_help_flag("--help", "Print help and exit");  // frees --h for the parameter
    std::string lem_which;
    unsigned lem_m = 1, lem_d = 3;
    unsigned lem_h = 0;
    bool lem_json = false;
    lem->add_option("--which", lem_which, "m1 | hh1 | md | hm")->required();
    lem->add_option("--m", lem_m, "m (or h for hh1)");
    lem->add_option("--d", lem_d, "rank d >= 3")->required();
    lem->add_option("--h", lem_h, "h (hm: 1 <= h <= m)");
    lem->add_flag("--json", lem_json, "JSON output");

    // interlace
    auto* inter = app.add_subcommand("interlace", "Classify root alternation of two polynomials");
    std::string inter_f, inter_g;
    bool inter_json = false;
    inter->add_option("--f", inter_f, "comma-separated coefficients, low power first")->required();
    inter->add_option("--g", inter_g, "comma-separated coefficients, low power first")->required();
    inter->add_flag("--json", inter_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*uni) {
            if (uni_m < 1 || uni_d < 1) {
                std::cerr << "error: uniform requires m >= 1 and d >= 1\n";
                return kExitUsage;
            }
            return cmd_uniform(uni_m, uni_d, uni_b, uni_json);
        }
        if (*pav) {
            auto lambda = parse_lambda_spec(pav_lambda);
            if (!lambda || pav_m < 1 || pav_d < 1) {
                std::cerr << "error: bad paving parameters or lambda spec\n";
                return kExitUsage;
            }
            for (const auto& [h, count] : *lambda) {
                if (h > pav_m) {
                    std::cerr << "error: lambda key h=" << h << " exceeds m=" << pav_m << "\n";
                    return kExitUsage;
                }
                if (count > 0 && pav_d < 2) {
                    std::cerr << "error: lambda profiles require d >= 2\n";
                    return kExitUsage;
                }
            }
            iklp::PavingData data{pav_m, pav_d, *lambda};
            return cmd_paving(data, pav_json, pav_output);
        }
        if (*chk) return cmd_check(chk_input, chk_output);
        if (*scn) {
            if (const char* env = std::getenv("IKLP_JOBS")) {
                try {
                    config.jobs = static_cast<unsigned>(std::stoul(env));
                } catch (const std::exception&) {
                    std::cerr << "error: IKLP_JOBS is not a number\n";
                    return kExitUsage;
                }
            }
            if (!scn_families.empty()) {
                std::stringstream ss(scn_families);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto id = iklp::family_from_string(item);
                    if (!id) {
                        std::cerr << "error: unknown family " << item << "\n";
                        return kExitUsage;
                    }
                    config.families.push_back(*id);
                }
            }
            try {
                config.validate();
            } catch (const iklp::InvalidParamsError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
            return cmd_scan(config, scn_output, scn_csv);
        }
        if (*lem) {
            auto which = iklp::lemma_from_string(lem_which);
            if (!which || lem_d < 3) {
                std::cerr << "error: bad lemma selector or d < 3\n";
                return kExitUsage;
            }
            std::optional<unsigned> h;
            if (lem->count("--h") > 0) h = lem_h;
            if (*which == iklp::LemmaId::HM && (!h || *h < 1 || *h > lem_m)) {
                std::cerr << "error: lemma hm requires --h in [1, m]\n";
                return kExitUsage;
            }
            return cmd_lemma(*which, lem_m, lem_d, h, lem_json);
        }
        if (*inter) {
            auto f = parse_poly_csv(inter_f);
            auto g = parse_poly_csv(inter_g);
            if (!f || !g) {
                std::cerr << "error: polynomials are comma-separated rationals (\"3,2\" or "
                             "\"1/2,0,1\")\n";
                return kExitUsage;
            }
            return cmd_interlace(*f, *g, inter_json);
        }
    } catch (const iklp::NotRealRootedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const iklp::NegativeLeadingCoefficientError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const iklp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

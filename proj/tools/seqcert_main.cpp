#include "seqcert/bfile.hpp"
#include "seqcert/catalog.hpp"
#include "seqcert/certify.hpp"
#include "seqcert/errors.hpp"
#include "seqcert/gamma_mono.hpp"
#include "seqcert/json_io.hpp"
#include "seqcert/log_behavior.hpp"
#include "seqcert/sequence.hpp"
#include "seqcert/term_cache.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace seqcert;

constexpr int kExitHolds = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "text";
    std::string command;
    json inputs = json::object();
    json outcome = json::object();
    std::vector<std::string> text_lines;

    void emit(std::chrono::steady_clock::time_point start) const {
        if (format == "json") {
            json rep;
            rep["command"] = command;
            rep["inputs"] = inputs;
            rep["outcome"] = outcome;
            rep["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
            std::cout << rep.dump(2) << "\n";
        } else {
            for (const auto& line : text_lines) std::cout << line << "\n";
        }
    }
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

SequenceDef resolve_sequence(const std::string& name, const std::string& def_file,
                             const std::string& terms_csv) {
    int given = (!name.empty()) + (!def_file.empty()) + (!terms_csv.empty());
    if (given != 1) throw UsageError("give exactly one of: <sequence>, --def FILE, --terms CSV");
    if (!name.empty()) return catalog_lookup(name);
    if (!def_file.empty()) {
        std::ifstream in(def_file);
        if (!in) throw UsageError("cannot open " + def_file);
        return sequence_def_from_json(json::parse(in));
    }
    SequenceDef def;
    def.name = "explicit";
    std::vector<BigRat> terms;
    for (const auto& t : split_csv(terms_csv)) terms.push_back(BigRat::parse(t));
    // inline windows may be shorter than the >= 5 rule for stored documents
    if (terms.size() < 3) throw UsageError("--terms needs at least 3 values");
    def.kind = terms;
    return def;
}

std::string outcome_text(const CheckOutcome& oc) {
    std::string s = oc.holds ? "holds" : "fails";
    s += " on [" + std::to_string(oc.checked_range.first) + ", " +
         (oc.checked_range.second < 0 ? std::string("inf")
                                      : std::to_string(oc.checked_range.second)) +
         "]" + (oc.strict ? " (strict)" : "");
    if (oc.first_violation)
        s += "; first violation at n = " + std::to_string(oc.first_violation->index) + ": lhs = " +
             oc.first_violation->lhs.str() + ", rhs = " + oc.first_violation->rhs.str();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    CLI::App app{"seqcert: exact log-behavior checks and ratio-log-convexity certificates\n"
                 "for combinatorial sequences given by three-term recurrences"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int exit_code = kExitHolds;

    // ---- list ----
    auto* list_cmd = app.add_subcommand("list", "List the built-in sequence catalog");
    list_cmd->callback([&] {
        out.command = "list";
        json arr = json::array();
        for (const auto& n : catalog_names()) {
            arr.push_back(n);
            out.text_lines.push_back(n);
        }
        out.outcome["catalog"] = arr;
        json certs = json::array();
        for (const auto& n : builtin_certificate_names()) certs.push_back(n);
        out.outcome["builtin_certificates"] = certs;
    });

    // ---- gen ----
    std::string gen_name, gen_def, gen_cache;
    long long gen_count = 10;
    bool gen_assert_integral = false;
    auto* gen_cmd = app.add_subcommand("gen", "Generate exact terms");
    gen_cmd->add_option("sequence", gen_name, "Catalog sequence name");
    gen_cmd->add_option("--def", gen_def, "Sequence definition JSON file");
    gen_cmd->add_option("--count", gen_count, "Number of terms")->required();
    gen_cmd->add_option("--cache", gen_cache, "Term cache directory");
    gen_cmd->add_flag("--assert-integral", gen_assert_integral,
                      "Fail if any generated term is not an integer");
    gen_cmd->callback([&] {
        out.command = "gen";
        SequenceDef def = resolve_sequence(gen_name, gen_def, "");
        out.inputs = {{"sequence", def.name}, {"count", gen_count}};
        std::vector<BigRat> terms = gen_cache.empty() ? generate_terms(def, gen_count)
                                                      : load_cached(def, gen_cache, gen_count);
        if (gen_assert_integral && !terms_are_integral(terms))
            throw Error("integrality assertion failed for " + def.name);
        json arr = json::array();
        long long idx = def.first_index();
        for (const auto& t : terms) {
            arr.push_back(t.str());
            out.text_lines.push_back(std::to_string(idx++) + " " + t.str());
        }
        out.outcome["first_index"] = def.first_index();
        out.outcome["terms"] = arr;
    });

    // ---- check ----
    std::string chk_name, chk_def, chk_terms, chk_prop;
    long long chk_from = 0, chk_to = 0;
    bool chk_strict = false;
    auto* chk_cmd = app.add_subcommand("check", "Check a log-behavior property on [from, to]");
    chk_cmd->add_option("sequence", chk_name, "Catalog sequence name");
    chk_cmd->add_option("--def", chk_def, "Sequence definition JSON file");
    chk_cmd->add_option("--terms", chk_terms, "Inline explicit terms (CSV)");
    chk_cmd->add_option("--property", chk_prop, "Property")
        ->required()
        ->check(CLI::IsMember({"log-convex", "log-concave", "ratio-log-convex",
                               "ratio-log-concave"}));
    chk_cmd->add_option("--from", chk_from, "First index checked")->required();
    chk_cmd->add_option("--to", chk_to, "Last index checked")->required();
    chk_cmd->add_flag("--strict", chk_strict, "Require strict inequalities");
    chk_cmd->callback([&] {
        out.command = "check";
        SequenceDef def = resolve_sequence(chk_name, chk_def, chk_terms);
        out.inputs = {{"sequence", def.name}, {"property", chk_prop}, {"from", chk_from},
                      {"to", chk_to},         {"strict", chk_strict}};
        if (chk_to < chk_from) throw UsageError("--to must be >= --from");
        long long first = def.first_index();
        long long lead = (chk_prop == "ratio-log-convex") ? 2 : 1;
        long long trail = (chk_prop.rfind("ratio", 0) == 0) ? 2 : 1;
        if (chk_from - lead < first)
            throw UsageError("window needs terms from index " + std::to_string(chk_from - lead) +
                             " but the sequence starts at " + std::to_string(first));
        auto all = generate_terms(def, chk_to + trail - first + 1);
        std::vector<BigRat> window(all.begin() + static_cast<std::ptrdiff_t>(chk_from - lead - first),
                                   all.end());
        long long wfirst = chk_from - lead;
        CheckOutcome oc;
        if (chk_prop == "log-convex")
            oc = check_log_convex(window, wfirst, chk_strict);
        else if (chk_prop == "log-concave")
            oc = check_log_concave(window, wfirst, chk_strict);
        else if (chk_prop == "ratio-log-convex")
            oc = check_ratio_log_convex(window, wfirst, chk_from, chk_strict);
        else
            oc = check_ratio_log_concave(window, wfirst, chk_from, chk_strict);
        out.outcome = to_json(oc);
        out.text_lines.push_back(chk_prop + " " + outcome_text(oc));
        exit_code = oc.holds ? kExitHolds : kExitViolation;
    });

    // ---- order ----
    std::string ord_name, ord_def;
    int ord_k = 2;
    long long ord_horizon = 100;
    auto* ord_cmd = app.add_subcommand("order", "Check log-monotonicity of order k on a window");
    ord_cmd->add_option("sequence", ord_name, "Catalog sequence name");
    ord_cmd->add_option("--def", ord_def, "Sequence definition JSON file");
    ord_cmd->add_option("--k", ord_k, "Order")->required();
    ord_cmd->add_option("--horizon", ord_horizon, "Last index of the window")->required();
    ord_cmd->callback([&] {
        out.command = "order";
        SequenceDef def = resolve_sequence(ord_name, ord_def, "");
        out.inputs = {{"sequence", def.name}, {"k", ord_k}, {"horizon", ord_horizon}};
        long long first = def.first_index();
        auto terms = generate_terms(def, ord_horizon - first + 1);
        auto levels = log_monotonic_order(terms, first, ord_k, false);
        json arr = json::array();
        bool all = true;
        for (std::size_t r = 0; r < levels.size(); ++r) {
            arr.push_back(to_json(levels[r]));
            all = all && levels[r].holds;
            out.text_lines.push_back("level " + std::to_string(r) + " (" +
                                     (r % 2 == 0 ? "log-convex" : "log-concave") +
                                     "): " + outcome_text(levels[r]));
        }
        out.outcome["levels"] = arr;
        out.outcome["order_holds"] = all;
        out.text_lines.push_back(std::string("order-") + std::to_string(ord_k) +
                                 (all ? " holds" : " fails") + " on the window");
        exit_code = all ? kExitHolds : kExitViolation;
    });

    // ---- certify ----
    std::string cert_name, cert_file;
    bool cert_builtin = false;
    auto* cert_cmd = app.add_subcommand("certify", "Verify a ratio-log-convexity certificate");
    cert_cmd->add_option("sequence", cert_name, "Catalog sequence name (with --builtin)");
    cert_cmd->add_flag("--builtin", cert_builtin, "Use the built-in published certificate");
    cert_cmd->add_option("--file", cert_file, "Certificate JSON document");
    cert_cmd->callback([&] {
        out.command = "certify";
        Certificate cert = [&]() -> Certificate {
            if (cert_builtin) {
                if (cert_name.empty()) throw UsageError("--builtin needs a sequence name");
                return builtin_certificate(cert_name);
            }
            if (cert_file.empty()) throw UsageError("give --file CERT.json or <name> --builtin");
            std::ifstream in(cert_file);
            if (!in) throw UsageError("cannot open " + cert_file);
            return certificate_from_json(json::parse(in));
        }();
        out.inputs = {{"source", cert_builtin ? "builtin:" + cert_name : cert_file}};
        CertificateReport rep = verify_certificate(cert);
        out.outcome = to_json(rep);
        for (const auto& h : rep.hypotheses)
            out.text_lines.push_back(std::string(h.ok ? "[ok]   " : "[FAIL] ") + h.name + " -- " +
                                     h.detail);
        for (const auto& n : rep.notes) out.text_lines.push_back("note: " + n);
        out.text_lines.push_back("verdict: " + to_string(rep.verdict) + " (conclusion covers n >= " +
                                 std::to_string(rep.covered_from) + ")");
        exit_code = rep.verdict == CertVerdict::Certified   ? kExitHolds
                    : rep.verdict == CertVerdict::Refuted   ? kExitViolation
                                                            : kExitUsage;
    });

    // ---- gamma-check ----
    std::string gq_params;
    int gq_verify_k = 0;
    long long gq_count = 60;
    auto* gq_cmd = app.add_subcommand("gamma-check", "Gamma-quotient infinite-log-monotonicity "
                                                     "eligibility");
    gq_cmd->add_option("--params", gq_params, "n0,k0,k0bar,a,b,bbar")->required();
    gq_cmd->add_option("--verify-k", gq_verify_k, "Also verify a finite order-k slice");
    gq_cmd->add_option("--count", gq_count, "Terms for the finite slice")->capture_default_str();
    gq_cmd->callback([&] {
        out.command = "gamma-check";
        auto parts = split_csv(gq_params);
        if (parts.size() != 6) throw UsageError("--params needs n0,k0,k0bar,a,b,bbar");
        GammaQuotientDef g;
        unsigned long* slots[6] = {&g.n0, &g.k0, &g.k0bar, &g.a, &g.b, &g.bbar};
        for (int i = 0; i < 6; ++i) *slots[i] = std::stoul(parts[static_cast<std::size_t>(i)]);
        out.inputs = {{"params", gq_params}, {"verify_k", gq_verify_k}};
        EligibilityResult res = check_gamma_eligibility(g);
        out.outcome["eligibility"] = to_json(res);
        out.text_lines.push_back(std::string("eligible: ") + (res.eligible ? "yes" : "no") +
                                 "  u = " + res.u.str() + ", p = " + res.p.str() +
                                 ", q = " + res.q.str() +
                                 (res.failed_condition ? "  (fails: " + *res.failed_condition + ")"
                                                       : ""));
        bool ok = res.eligible;
        if (gq_verify_k > 0) {
            auto levels = verify_finite_log_monotonicity(g, gq_verify_k, gq_count);
            json arr = json::array();
            for (std::size_t r = 0; r < levels.size(); ++r) {
                arr.push_back(to_json(levels[r]));
                ok = ok && levels[r].holds;
                out.text_lines.push_back("level " + std::to_string(r) + ": " +
                                         outcome_text(levels[r]));
            }
            out.outcome["finite_slice"] = arr;
        }
        exit_code = ok ? kExitHolds : kExitViolation;
    });

    // ---- onset ----
    std::string on_name, on_def;
    int on_k = 2;
    long long on_horizon = 100;
    auto* on_cmd = app.add_subcommand("onset", "Window-relative order-k onset scan");
    on_cmd->add_option("sequence", on_name, "Catalog sequence name");
    on_cmd->add_option("--def", on_def, "Sequence definition JSON file");
    on_cmd->add_option("--k", on_k, "Order")->required();
    on_cmd->add_option("--horizon", on_horizon, "Scan horizon (index)")->required();
    on_cmd->callback([&] {
        out.command = "onset";
        SequenceDef def = resolve_sequence(on_name, on_def, "");
        out.inputs = {{"sequence", def.name}, {"k", on_k}, {"horizon", on_horizon}};
        auto onset = order_onset(def, on_k, on_horizon);
        out.outcome["onset"] = onset ? json(*onset) : json(nullptr);
        out.outcome["window_relative"] = true;
        out.text_lines.push_back(onset ? "onset N = " + std::to_string(*onset) +
                                             " (window-relative; violations beyond the horizon "
                                             "are undetectable)"
                                       : "no valid onset within the window");
        exit_code = onset ? kExitHolds : kExitViolation;
    });

    // ---- oeis-diff ----
    std::string od_name, od_def, od_bfile;
    auto* od_cmd = app.add_subcommand("oeis-diff", "Cross-validate against a local OEIS b-file");
    od_cmd->add_option("sequence", od_name, "Catalog sequence name");
    od_cmd->add_option("--def", od_def, "Sequence definition JSON file");
    od_cmd->add_option("--bfile", od_bfile, "Path to the b-file")->required();
    od_cmd->callback([&] {
        out.command = "oeis-diff";
        SequenceDef def = resolve_sequence(od_name, od_def, "");
        out.inputs = {{"sequence", def.name}, {"bfile", od_bfile}};
        std::ifstream in(od_bfile);
        if (!in) throw UsageError("cannot open " + od_bfile);
        BFile bf = parse_bfile(in, def.oeis_id.value_or(""));
        CheckOutcome oc = cross_validate(def, bf);
        out.outcome = to_json(oc);
        out.text_lines.push_back(oc.holds ? "match (" + std::to_string(bf.entries.size()) +
                                                " b-file entries, overlap checked exactly)"
                                          : "MISMATCH " + outcome_text(oc));
        exit_code = oc.holds ? kExitHolds : kExitViolation;
    });

    // ---- h-kernel ----
    std::string hk_p = "2", hk_q = "2", hk_t = "1", hk_u = "0";
    unsigned hk_digits = 50;
    auto* hk_cmd = app.add_subcommand("h-kernel", "Evaluate the Gamma-quotient kernel h(t,u) on a "
                                                  "grid (numeric evidence, not proof)");
    hk_cmd->add_option("--p", hk_p, "p (rational)")->capture_default_str();
    hk_cmd->add_option("--q", hk_q, "q (rational)")->capture_default_str();
    hk_cmd->add_option("--t", hk_t, "grid of t values (CSV, decimal)")->capture_default_str();
    hk_cmd->add_option("--u", hk_u, "grid of u values (CSV, rational in [-1,0])")
        ->capture_default_str();
    hk_cmd->add_option("--digits", hk_digits, "working precision")->capture_default_str();
    hk_cmd->callback([&] {
        out.command = "h-kernel";
        out.inputs = {{"p", hk_p}, {"q", hk_q}, {"t", hk_t}, {"u", hk_u}, {"digits", hk_digits}};
        std::vector<BigRat> us;
        for (const auto& u : split_csv(hk_u)) us.push_back(BigRat::parse(u));
        HKernelGridReport rep =
            h_kernel_grid_check(BigRat::parse(hk_p), BigRat::parse(hk_q), split_csv(hk_t), us,
                                hk_digits);
        out.outcome = to_json(rep);
        for (const auto& r : rep.rows) out.text_lines.push_back(r);
        out.text_lines.push_back(std::string(rep.outcome.holds ? "all positive" : "NOT all positive") +
                                 " (" + rep.label + ")");
        exit_code = rep.outcome.holds ? kExitHolds : kExitViolation;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitHolds : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    out.emit(start);
    return exit_code;
}

#include <CLI11.hpp>
#include <json.hpp>

#include <sumrec/asymptotics.hpp>
#include <sumrec/celine.hpp>
#include <sumrec/exprparse.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace sumrec;

namespace {

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kNotFound = 3;
constexpr int kTimeoutExhausted = 4;
constexpr int kVerifyFailed = 5;

std::vector<RatFunc> parse_init_list(const std::string& csv) {
    std::vector<RatFunc> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parse_ratfunc_expr(item));
    }
    if (out.empty()) throw sumrec::ParseError("empty initial-value list", 0);
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    for (auto& v : parse_init_list(csv)) {
        if (!v.is_constant()) throw sumrec::ParseError("initial values must be rational here", 0);
        out.push_back(v.constant_value());
    }
    return out;
}

json operator_json(const RecOperator& op) {
    json j;
    j["order"] = op.order();
    json coeffs = json::array();
    auto strs = operator_coeff_strings(op);
    for (std::size_t i = 0; i < strs.size(); ++i) {
        std::string mono = i == 0 ? "1" : (i == 1 ? "N" : "N^" + std::to_string(i));
        coeffs.push_back(json::array({mono, strs[i]}));
    }
    j["coeffs"] = coeffs;
    return j;
}

json fit_json(const AsymptoticFit& fit) {
    json j;
    j["conclusive"] = fit.conclusive;
    j["growth"] = fit.growth;
    j["theta"] = fit.theta;
    j["constant"] = fit.constant;
    j["corrections"] = fit.corrections;
    j["n_lo"] = fit.n_lo;
    j["n_hi"] = fit.n_hi;
    j["residual"] = fit.residual;
    j["message"] = fit.message;
    return j;
}

void print_fit_text(const AsymptoticFit& fit) {
    std::printf("fit: x_n ~ c * r^n * n^theta * (1 + b1/n + b2/n^2 + ...)\n");
    std::printf("  r     = %.12g\n", fit.growth);
    std::printf("  theta = %.12g\n", fit.theta);
    std::printf("  c     = %.12g\n", fit.constant);
    if (fit.corrections.size() >= 2)
        std::printf("  b1    = %.8g\n  b2    = %.8g\n", fit.corrections[0], fit.corrections[1]);
    std::printf("  window n = %ld..%ld, rms residual %.3g\n", fit.n_lo, fit.n_hi, fit.residual);
}

void print_attempts(const std::vector<AttemptDiag>& attempts, std::FILE* to) {
    for (auto& a : attempts)
        std::fprintf(to, "  attempt I=%d J=%d: %s (%zux%zu, %.2fs)\n", a.I, a.J, a.outcome.c_str(), a.rows,
                     a.cols, a.seconds);
}

void print_verification(const VerifyReport& rep) {
    std::printf("verified against brute-force sums for n = 0..%ld%s\n", rep.checked_upto,
                rep.holds ? "" : " [FAILED]");
    if (rep.valid_from > 0) std::printf("operator valid for n >= %ld\n", rep.valid_from);
    if (!rep.skipped.empty()) {
        std::printf("skipped (leading coefficient zero):");
        for (long v : rep.skipped) std::printf(" %ld", v);
        std::printf("\n");
    }
}

struct StageOutput {
    RecOperator op;
    long valid_from;
};

int run_findrec(const std::string& rec_text, const std::string& init_csv, const std::string& term_text,
                long d, int imax, int jmax, double timeout, long verify_upto, bool emit_json) {
    RecOperator rec = parse_operator(rec_text, "k");
    HoloSeq seq(rec, parse_init_list(init_csv), "a");
    HyperTerm term = HyperTerm::parse(term_text);
    CelineProblem prob{term, seq, d, imax,
                       jmax >= 0 ? std::optional<int>(jmax) : std::nullopt, timeout};
    CelineResult res;
    try {
        res = findrec(prob);
    } catch (const NotFoundError& e) {
        std::fprintf(stderr, "no recurrence found: %s\n", e.what());
        print_attempts(e.attempts, stderr);
        return e.all_timeouts ? kTimeoutExhausted : kNotFound;
    }
    VerifyReport extra = res.verification;
    if (verify_upto > res.verification.checked_upto)
        extra = verify_operator(res.op, seq, term, d, verify_upto);
    if (emit_json) {
        json j;
        j["operator"] = operator_json(res.op);
        j["valid_from"] = extra.valid_from;
        j["I_used"] = res.I_used;
        j["J_used"] = res.J_used;
        j["verified_upto"] = extra.checked_upto;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("operator: %s\n", operator_to_string(res.op).c_str());
        std::printf("found at I=%d, J=%d\n", res.I_used, res.J_used);
        print_verification(extra);
    }
    return extra.holds ? kOk : kVerifyFailed;
}

int run_kingwalks(int dim, long nverify, bool do_asym, long nmax_asym, int imax, double timeout,
                  bool emit_json) {
    HoloSeq tri = central_trinomial_seq();
    HyperTerm term = HyperTerm::parse("binomial(n,k)*(-1)^(n-k)");
    long d = dim;

    CelineResult res;
    bool found = false;
    int tries = 0;
    int cur_imax = imax;
    double cur_timeout = timeout;
    std::vector<AttemptDiag> all_attempts;
    while (!found && tries < 3) {
        CelineProblem prob{term, tri, d, cur_imax, std::nullopt, cur_timeout};
        prob.I_min = tries == 0 ? 1 : cur_imax - 1;
        try {
            res = findrec(prob);
            found = true;
        } catch (const NotFoundError& e) {
            all_attempts.insert(all_attempts.end(), e.attempts.begin(), e.attempts.end());
            ++tries;
            std::fprintf(stderr, "bounds I<=%d exhausted; retrying with raised bounds\n", cur_imax);
            cur_imax += 2;
            cur_timeout *= 2;
        }
    }
    if (!found) {
        std::fprintf(stderr, "king walk search exhausted at dim=%d\n", dim);
        print_attempts(all_attempts, stderr);
        return kNotFound;
    }

    // independent verification against the lattice dynamic programming
    bool walks_ok = true;
    {
        auto counts = king_walk_counts(dim, nverify);
        std::vector<RatFunc> xs;
        xs.reserve(counts.size());
        for (auto& c : counts) xs.emplace_back(Rational(c));
        long upto = nverify - res.op.order();
        auto rep = operator_annihilates(res.op, xs, res.verification.valid_from, upto);
        walks_ok = rep.holds;
    }

    json j;
    if (emit_json) {
        j["dim"] = dim;
        j["operator"] = operator_json(res.op);
        j["valid_from"] = res.verification.valid_from;
        j["I_used"] = res.I_used;
        j["J_used"] = res.J_used;
        j["walk_check"] = walks_ok ? "pass" : "fail";
    } else {
        std::printf("dim %d king-walk operator (order %d):\n%s\n", dim, res.op.order(),
                    operator_to_string(res.op).c_str());
        std::printf("found at I=%d, J=%d\n", res.I_used, res.J_used);
        print_verification(res.verification);
        std::printf("lattice-walk check (n <= %ld): %s\n", nverify, walks_ok ? "pass" : "FAIL");
    }

    if (do_asym) {
        std::vector<Rational> init;
        long need = res.verification.valid_from + res.op.order() + 2;
        auto xs = brute_sum(tri, term, d, need);
        for (auto& v : xs) init.push_back(v.is_zero() ? Rational(0) : v.constant_value());
        AsymptoticFit fit = estimate_growth(res.op, init, nmax_asym);
        if (emit_json)
            j["fit"] = fit_json(fit);
        else if (fit.conclusive)
            print_fit_text(fit);
        else
            std::printf("asymptotic fit inconclusive: %s\n", fit.message.c_str());
    }
    if (emit_json) std::cout << j.dump(2) << "\n";
    return walks_ok ? kOk : kVerifyFailed;
}

int run_multisum(const std::vector<std::string>& summands, std::string vars_csv,
                 const std::string& d_csv, int imax, int jmax, double timeout, bool emit_json) {
    if (summands.empty()) throw sumrec::ParseError("need at least one --summand", 0);
    std::vector<std::string> vars;
    {
        if (vars_csv.empty()) {
            if (summands.size() == 1)
                vars_csv = "k,n";
            else if (summands.size() == 2)
                vars_csv = "k,i,n";
            else
                throw sumrec::ParseError("--vars required for more than two summands", 0);
        }
        std::stringstream ss(vars_csv);
        std::string item;
        while (std::getline(ss, item, ',')) vars.push_back(item);
    }
    if (vars.size() != summands.size() + 1)
        throw sumrec::ParseError("--vars must name one more variable than there are summands", 0);
    std::vector<long> ds(summands.size(), 1);
    if (!d_csv.empty()) {
        std::stringstream ss(d_csv);
        std::string item;
        std::size_t t = 0;
        while (std::getline(ss, item, ',') && t < ds.size()) ds[t++] = std::stol(item);
    }

    // direct chained summation; independent ground truth for initial values
    // and for the final verification
    const long kChainDepth = 40;
    std::vector<std::vector<Rational>> chain;  // chain[t][v] = stage-t sums
    {
        std::vector<Rational> prev(static_cast<std::size_t>(kChainDepth + 1), Rational(1));
        for (std::size_t t = 0; t < summands.size(); ++t) {
            HyperTerm h = HyperTerm::parse(summands[t], {{vars[t + 1], "n"}, {vars[t], "k"}});
            std::vector<Rational> cur(static_cast<std::size_t>(kChainDepth + 1), Rational(0));
            for (long v = 0; v <= kChainDepth; ++v) {
                Rational acc(0);
                for (long u = 0; u <= v; ++u) {
                    RatFunc hv = h.eval(v, u);
                    if (hv.is_zero()) continue;
                    acc += pow_rational(prev[static_cast<std::size_t>(u)], ds[t]) * hv.constant_value();
                }
                cur[static_cast<std::size_t>(v)] = acc;
            }
            chain.push_back(cur);
            prev = cur;
        }
    }

    std::vector<StageOutput> stages;
    json jstages = json::array();
    HoloSeq a = constant_one_seq();
    for (std::size_t t = 0; t < summands.size(); ++t) {
        HyperTerm h = HyperTerm::parse(summands[t], {{vars[t + 1], "n"}, {vars[t], "k"}});
        CelineProblem prob{h, a, ds[t], imax, jmax >= 0 ? std::optional<int>(jmax) : std::nullopt, timeout};
        CelineResult res;
        try {
            res = findrec(prob);
        } catch (const NotFoundError& e) {
            std::fprintf(stderr, "stage %zu failed: %s\n", t, e.what());
            print_attempts(e.attempts, stderr);
            return e.all_timeouts ? kTimeoutExhausted : kNotFound;
        }
        stages.push_back({res.op, res.verification.valid_from});
        if (emit_json) {
            json js;
            js["stage"] = t;
            js["operator"] = operator_json(res.op);
            js["valid_from"] = res.verification.valid_from;
            jstages.push_back(js);
        } else {
            std::printf("stage %zu operator: %s\n", t, operator_to_string(res.op).c_str());
            if (res.verification.valid_from > 0)
                std::printf("  (valid for index >= %ld)\n", res.verification.valid_from);
        }
        if (t + 1 == summands.size()) break;
        // the found operator, re-anchored to k, defines the next stage's sequence;
        // initial values come from the direct chain sums
        RecOperator in_k;
        in_k.shift_var = Symbols::intern("k");
        for (auto& c : res.op.coeffs)
            in_k.coeffs.push_back(c.subst_poly(kVarN, MultiPoly::variable(Symbols::intern("k"))));
        long ninit = res.verification.valid_from + res.op.order();
        std::vector<RatFunc> init;
        for (long v = 0; v < std::max<long>(ninit, res.op.order()); ++v)
            init.emplace_back(chain[t][static_cast<std::size_t>(v)]);
        a = HoloSeq(in_k, init, "stage-" + std::to_string(t + 1));
    }

    // final verification against the direct chain
    const auto& final_vals = chain.back();
    std::vector<RatFunc> xs;
    for (auto& v : final_vals) xs.emplace_back(v);
    const StageOutput& last = stages.back();
    auto rep = operator_annihilates(last.op, xs, last.valid_from,
                                    kChainDepth - last.op.order());
    if (emit_json) {
        json j;
        j["stages"] = jstages;
        j["operator"] = operator_json(last.op);
        j["valid_from"] = last.valid_from;
        j["final_check"] = rep.holds ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("final operator: %s\n", operator_to_string(last.op).c_str());
        std::printf("direct-summation check: %s\n", rep.holds ? "pass" : "FAIL");
    }
    return rep.holds ? kOk : kVerifyFailed;
}

int run_asym(const std::string& op_text, const std::string& init_csv, long nmax, int depth,
             bool emit_json) {
    RecOperator op = parse_operator(op_text, "n");
    std::vector<Rational> init = parse_rational_list(init_csv);
    AsymptoticFit fit = estimate_growth(op, init, nmax, depth);
    if (emit_json) {
        json j;
        j["fit"] = fit_json(fit);
        std::cout << j.dump(2) << "\n";
    } else if (fit.conclusive) {
        print_fit_text(fit);
    } else {
        std::printf("inconclusive: %s\n", fit.message.c_str());
    }
    return fit.conclusive ? kOk : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recurrence discovery for sums of powers of linearly recurrent sequences"};
    app.require_subcommand(1);

    // findrec
    std::string rec_text, init_csv, term_text;
    long d = 1;
    int imax = 6, jmax = 8;
    double timeout = 60.0;
    long verify_upto = 0;
    bool emit_json = false;
    auto* cmd_findrec = app.add_subcommand("findrec", "find a recurrence for sum_k a_k^d H(n,k)");
    cmd_findrec->add_option("--rec", rec_text, "recurrence for a_k in shift-operator notation, in k")->required();
    cmd_findrec->add_option("--init", init_csv, "comma-separated initial values of a")->required();
    cmd_findrec->add_option("--term", term_text, "hypergeometric term H(n,k)")->required();
    cmd_findrec->add_option("-d,--power", d, "exponent applied to a_k (default 1)");
    cmd_findrec->add_option("--imax", imax, "largest order tried (default 6)");
    cmd_findrec->add_option("--jmax", jmax, "shift window bound; -1 for the adaptive default (default 8)");
    cmd_findrec->add_option("--timeout", timeout, "seconds per attempt (default 60)");
    cmd_findrec->add_option("--verify-upto", verify_upto, "extend the final brute-force verification range");
    cmd_findrec->add_flag("--json", emit_json, "machine-readable output");

    // kingwalks
    int dim = 2;
    long nverify = -1, nmax_asym = 5000;
    bool do_asym = false;
    int king_imax = 8;
    double king_timeout = 600.0;
    bool king_json = false;
    auto* cmd_king = app.add_subcommand("kingwalks", "closed king walks on Z^dim");
    cmd_king->add_option("--dim", dim, "dimension, 1..4 by default resource limits")->required();
    cmd_king->add_option("--nverify", nverify, "lattice DP verification range (default per dim)");
    cmd_king->add_flag("--asym", do_asym, "also fit the asymptotic growth");
    cmd_king->add_option("--nmax-asym", nmax_asym, "terms for the asymptotic fit (default 5000)");
    cmd_king->add_option("--imax", king_imax, "initial order bound before checkpointed retries");
    cmd_king->add_option("--timeout", king_timeout, "seconds per attempt (default 600)");
    cmd_king->add_flag("--json", king_json, "machine-readable output");

    // multisum
    std::vector<std::string> summands;
    std::string vars_csv, d_csv;
    int ms_imax = 6, ms_jmax = -1;
    double ms_timeout = 120.0;
    bool ms_json = false;
    auto* cmd_ms = app.add_subcommand("multisum", "chained summation, innermost summand first");
    cmd_ms->add_option("--summand", summands, "summand expressions, innermost first")->required();
    cmd_ms->add_option("--vars", vars_csv, "summation variables innermost-first plus the outer index, e.g. k,i,n");
    cmd_ms->add_option("--d", d_csv, "per-stage exponents (default all 1)");
    cmd_ms->add_option("--imax", ms_imax, "largest order tried per stage");
    cmd_ms->add_option("--jmax", ms_jmax, "shift window bound; -1 for the adaptive default");
    cmd_ms->add_option("--timeout", ms_timeout, "seconds per attempt");
    cmd_ms->add_flag("--json", ms_json, "machine-readable output");

    // asym
    std::string op_text, asym_init;
    long asym_nmax = 5000;
    int depth = 4;
    bool asym_json = false;
    auto* cmd_as = app.add_subcommand("asym", "asymptotic growth from a verified recurrence");
    cmd_as->add_option("--op", op_text, "operator in n")->required();
    cmd_as->add_option("--init", asym_init, "comma-separated initial terms")->required();
    cmd_as->add_option("--nmax", asym_nmax, "terms to generate (default 5000)");
    cmd_as->add_option("--depth", depth, "Richardson depth (default 4)");
    cmd_as->add_flag("--json", asym_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_findrec->parsed())
            return run_findrec(rec_text, init_csv, term_text, d, imax, jmax, timeout, verify_upto, emit_json);
        if (cmd_king->parsed()) {
            if (nverify < 0) nverify = dim <= 2 ? 40 : (dim == 3 ? 25 : 20);
            return run_kingwalks(dim, nverify, do_asym, nmax_asym, king_imax, king_timeout, king_json);
        }
        if (cmd_ms->parsed())
            return run_multisum(summands, vars_csv, d_csv, ms_imax, ms_jmax, ms_timeout, ms_json);
        if (cmd_as->parsed()) return run_asym(op_text, asym_init, asym_nmax, depth, asym_json);
    } catch (const sumrec::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kParseError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kParseError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return kOk;
}

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "addix/arith.hpp"
#include "addix/error.hpp"
#include "addix/harness.hpp"

namespace addix {

Json params_json(const CheckParams& p) {
    Json j;
    if (p.p != 0) {
        j["p"] = p.p;
        j["n"] = p.n;
    }
    j["T"] = p.T ? Json(*p.T) : Json(nullptr);
    j["m"] = p.m;
    j["seed"] = p.seed;
    if (p.basis) j["basis"] = *p.basis;
    if (p.T_max) j["T_max"] = *p.T_max;
    if (p.r) j["r"] = *p.r;
    if (p.budget_ms) j["budget_ms"] = *p.budget_ms;
    return j;
}

CheckParams params_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "params must be a JSON object");
    try {
        CheckParams p;
        auto opt = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
        if (opt("p")) p.p = j["p"].get<std::uint32_t>();
        if (opt("n")) p.n = j["n"].get<unsigned>();
        if (opt("T")) p.T = j["T"].get<std::uint64_t>();
        if (opt("m")) p.m = j["m"].get<std::uint64_t>();
        if (opt("seed")) p.seed = j["seed"].get<std::uint64_t>();
        if (opt("basis")) p.basis = j["basis"].get<std::vector<Digits>>();
        if (opt("T_max")) p.T_max = j["T_max"].get<std::uint64_t>();
        if (opt("r")) p.r = j["r"].get<unsigned>();
        if (opt("budget_ms")) p.budget_ms = j["budget_ms"].get<std::uint64_t>();
        for (const auto& [key, value] : j.items()) {
            static const char* known[] = {"p", "n", "T", "m", "seed", "basis", "T_max", "r", "budget_ms"};
            if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return key == k; }) ==
                std::end(known))
                throw Error(ErrorKind::InvalidArgument, "unknown parameter " + key);
        }
        if ((p.p == 0) != (p.n == 0)) throw Error(ErrorKind::InvalidArgument, "p and n go together");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("bad parameter value: ") + e.what());
    }
}

Json report_json(const CheckReport& r, bool with_elapsed) {
    Json j;
    j["check_id"] = r.check_id;
    j["params"] = params_json(r.params);
    j["hypothesis_holds"] = r.hypothesis_holds;
    if (r.bound) {
        j["bound"] = rational_string(r.bound->radicand);
        if (r.bound->root != 1) j["bound_root"] = r.bound->root;
    } else {
        j["bound"] = nullptr;
    }
    if (r.exact) j["exact"] = *r.exact;
    else if (r.certified_codim) j["exact"] = Json{{"certified_codim_at_least", *r.certified_codim}};
    else j["exact"] = nullptr;
    j["pass"] = to_string(r.verdict);
    j["form"] = r.form;
    j["witness"] = r.witness;
    j["detail"] = r.detail;
    if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"desk", "counting", "sweep", "appendix"};
    return ids;
}

namespace {

CheckSpec spec(std::string id, std::uint32_t p, unsigned n, std::optional<std::uint64_t> T = std::nullopt,
               std::uint64_t m = 0) {
    CheckSpec s;
    s.check_id = std::move(id);
    s.params.p = p;
    s.params.n = n;
    s.params.T = T;
    s.params.m = m;
    return s;
}

std::vector<std::pair<std::uint32_t, unsigned>> prime_powers_upto(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, std::pair<std::uint32_t, unsigned>>> all;
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        for (unsigned n = 1; q <= limit; ++n, q *= p) all.push_back({q, {p, n}});
    }
    std::sort(all.begin(), all.end());
    std::vector<std::pair<std::uint32_t, unsigned>> out;
    for (const auto& e : all) out.push_back(e.second);
    return out;
}

}  // namespace

std::vector<CheckSpec> suite_specs(const std::string& suite_id) {
    std::vector<CheckSpec> out;
    if (suite_id == "desk") {
        static const std::vector<std::string> bounds = {
            "dh04",        "t2",         "thm_a",      "q_over_4m1", "dhtlarge", "eq_lt",  "summands", "hB",
            "n_pow_132",   "eps_theorem", "disclog_q1", "discloggen", "dl_q34",   "dl_q12", "dl_eps",   "oldlog"};
        static const std::vector<std::string> props = {"prop_key_identity", "xix1", "xixa", "linmaplinpoly",
                                                       "equivdef"};
        const std::vector<std::pair<std::uint32_t, unsigned>> fields = {{2, 2}, {2, 3}, {3, 2}, {2, 4},
                                                                        {5, 2}, {3, 3}, {7, 2}};
        for (auto [p, n] : fields) {
            const std::uint64_t q = ipow_sat(p, n);
            for (std::uint64_t T : divisors(q - 1))
                for (std::uint64_t m : {0, 1})
                    for (const auto& id : bounds) out.push_back(spec(id, p, n, T, m));
            for (const auto& id : props) out.push_back(spec(id, p, n));
        }
    } else if (suite_id == "counting") {
        for (const char* id : {"stangl", "squaresmodT", "nteps", "sqroots"}) out.push_back(spec(id, 0, 0));
    } else if (suite_id == "sweep") {
        for (auto [p, n] : prime_powers_upto(343)) {
            const std::uint64_t q = ipow_sat(p, n);
            for (std::uint64_t T : divisors(q - 1))
                for (const char* id : {"intersInvers", "weilcor", "glru", "sumset_r"})
                    out.push_back(spec(id, p, n, T));
        }
    } else if (suite_id == "appendix") {
        const std::vector<std::pair<std::uint32_t, unsigned>> fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
        for (auto [p, n] : fields) out.push_back(spec("ikik1_q4", p, n));
        for (auto [p, n] : fields)
            if (ipow_sat(p, n) > 2) out.push_back(spec("almostall_q4", p, n));
        out.push_back(spec("equivdef", 2, 2));
        out.push_back(spec("linmaplinpoly", 2, 2));
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown suite " + suite_id);
    }
    // check_id first, then the generation order of the parameters
    const auto& ids = check_ids();
    auto rank = [&](const CheckSpec& s) { return std::find(ids.begin(), ids.end(), s.check_id) - ids.begin(); };
    std::stable_sort(out.begin(), out.end(), [&](const CheckSpec& a, const CheckSpec& b) { return rank(a) < rank(b); });
    return out;
}

SuiteResult run_suite(const std::string& suite_id, unsigned threads) {
    const std::vector<CheckSpec> specs = suite_specs(suite_id);
    SuiteResult res;
    res.suite = suite_id;
    res.results.resize(specs.size());
    TruthCache cache;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
            try {
                res.results[i] = run_check(specs[i], &cache);
            } catch (const Error& e) {
                CheckReport& r = res.results[i];
                r.check_id = specs[i].check_id;
                r.params = specs[i].params;
                r.witness = nullptr;
                r.verdict = Verdict::Indeterminate;
                r.detail["error"] = e.what();
            }
        }
    };
    const unsigned nthreads = std::max(1u, threads);
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const auto& r : res.results) {
        switch (r.verdict) {
            case Verdict::Pass: ++res.summary.pass; break;
            case Verdict::Fail: ++res.summary.fail; break;
            case Verdict::Vacuous: ++res.summary.vacuous; break;
            case Verdict::Indeterminate: ++res.summary.indeterminate; break;
        }
    }
    if (suite_id == "appendix") {
        Json table = Json::object();
        for (const auto& r : res.results)
            if (r.check_id == "ikik1_q4" && r.detail.contains("I"))
                table[std::to_string(ipow_sat(r.params.p, r.params.n))] = r.detail["I"];
        res.extra["I_k_by_q"] = table;
    }
    return res;
}

Json suite_json(const SuiteResult& s, bool with_elapsed) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = s.suite;
    j["summary"] = Json{{"pass", s.summary.pass},
                        {"fail", s.summary.fail},
                        {"vacuous", s.summary.vacuous},
                        {"indeterminate", s.summary.indeterminate}};
    for (const auto& [k, v] : s.extra.items()) j[k] = v;
    Json results = Json::array();
    for (const auto& r : s.results) results.push_back(report_json(r, with_elapsed));
    j["results"] = results;
    return j;
}

std::string suite_csv(const SuiteResult& s) {
    std::ostringstream os;
    os << "q,T,check_id,lhs,rhs,pass\n";
    auto quote = [](const std::string& v) { return v.find(',') == std::string::npos ? v : "\"" + v + "\""; };
    for (const auto& r : s.results) {
        if (r.params.p != 0) os << ipow_sat(r.params.p, r.params.n);
        os << ',';
        if (r.params.T) os << *r.params.T;
        else if (r.params.T_max) os << "<=" << *r.params.T_max;
        os << ',' << r.check_id << ',' << quote(r.lhs) << ',' << quote(r.rhs) << ',' << to_string(r.verdict) << '\n';
    }
    return os.str();
}

void write_suite(const SuiteResult& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot open " + path);
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    if (csv) out << suite_csv(s);
    else out << suite_json(s).dump(2) << '\n';
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}  // namespace addix

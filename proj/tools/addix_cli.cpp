// addix: finite-field additive index tool.
//
// Exit codes: 0 success or pass, 1 a check failed, 2 usage or input error,
// 3 budget exhausted or result indeterminate.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "addix/additive_index.hpp"
#include "addix/error.hpp"
#include "addix/harness.hpp"
#include "addix/json_io.hpp"
#include "addix/maps.hpp"
#include "addix/residues.hpp"

namespace {

using addix::Json;

constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitBudget = 3;

struct FieldOpts {
    std::uint32_t p = 0;
    unsigned n = 0;
    std::vector<std::uint32_t> modulus;
    std::string spec_path;
};

void add_field_opts(CLI::App* app, FieldOpts& f) {
    app->add_option("--p", f.p, "characteristic");
    app->add_option("--n", f.n, "extension degree");
    app->add_option("--modulus", f.modulus, "modulus coefficients c_0 .. c_n")->delimiter(',');
    app->add_option("--field", f.spec_path, "JSON field spec file");
}

addix::FieldPtr make_field(const FieldOpts& f) {
    addix::FieldSpec spec;
    if (!f.spec_path.empty()) {
        std::ifstream in(f.spec_path);
        if (!in) throw addix::Error(addix::ErrorKind::IoError, "cannot read " + f.spec_path);
        spec = addix::field_spec_from_json(Json::parse(in));
    } else {
        if (f.p == 0 || f.n == 0) throw addix::Error(addix::ErrorKind::InvalidArgument, "--p and --n are required");
        spec.p = f.p;
        spec.n = f.n;
    }
    if (!f.modulus.empty()) spec.modulus = f.modulus;
    return addix::build_field(spec);
}

void emit(const Json& j, const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (format == "text") {
        for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else {
        os << j.dump(2) << '\n';
    }
    if (out_path.empty()) {
        std::cout << os.str();
        return;
    }
    std::ofstream out(out_path);
    if (!out || !(out << os.str())) throw addix::Error(addix::ErrorKind::IoError, "cannot write " + out_path);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw addix::Error(addix::ErrorKind::IoError, "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw addix::Error(addix::ErrorKind::InvalidArgument, path + ": " + e.what());
    }
}

int verdict_exit(addix::Verdict v) {
    switch (v) {
        case addix::Verdict::Fail: return kExitFail;
        case addix::Verdict::Indeterminate: return kExitBudget;
        default: return kExitOk;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Additive index of maps on small finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json", out_path;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "output file");

    // field find
    auto* field_cmd = app.add_subcommand("field", "field construction");
    field_cmd->require_subcommand(1);
    field_cmd->fallthrough();
    auto* find_cmd = field_cmd->add_subcommand("find", "canonical modulus and generator");
    FieldOpts find_field;
    add_field_opts(find_cmd, find_field);

    // index
    auto* index_cmd = app.add_subcommand("index", "least codimension of a map");
    FieldOpts index_field;
    add_field_opts(index_cmd, index_field);
    std::string map_sel, verify_path;
    std::optional<std::uint64_t> T_opt, k_max;
    std::uint64_t m = 0, seed = 0;
    bool outliers = false;
    index_cmd->add_option("--map", map_sel, "dh, disclog or table:PATH")->required();
    index_cmd->add_option("--T", T_opt, "subgroup order (default q - 1)");
    index_cmd->add_option("--m", m, "number of changed points");
    index_cmd->add_option("--seed", seed, "perturbation seed");
    index_cmd->add_option("--k-max", k_max, "largest codimension to try");
    index_cmd->add_flag("--outliers", outliers, "minimize over all choices of m dropped points instead of perturbing");
    index_cmd->add_option("--verify-witness", verify_path, "check a witness file against the map");

    // count
    auto* count_cmd = app.add_subcommand("count", "squares and square roots modulo T");
    std::string what;
    std::uint64_t count_T = 0;
    std::optional<std::uint64_t> count_s, count_a;
    count_cmd->add_option("--what", what, "NT, NsT or LT")->required()->check(CLI::IsMember({"NT", "NsT", "LT"}));
    count_cmd->add_option("--T", count_T, "modulus")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("--s", count_s, "divisor of T (NsT)");
    count_cmd->add_option("--a", count_a, "class modulo s (NsT)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run one check");
    std::string check_id, params_arg;
    verify_cmd->add_option("--check", check_id, "check id")->required();
    verify_cmd->add_option("--params", params_arg, "JSON object or @file");

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "run a suite and write its report");
    std::string suite_id;
    suite_cmd->add_option("--id", suite_id, "suite id")->required()->check(CLI::IsMember({"desk", "counting", "sweep",
                                                                                         "appendix"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*find_cmd) {
            const auto ctx = make_field(find_field);
            Json j;
            j["schema_version"] = addix::kSchemaVersion;
            const Json fj = addix::field_json(*ctx);
            for (const auto& [k, v] : fj.items()) j[k] = v;
            emit(j, format, out_path);
            return kExitOk;
        }

        if (*index_cmd) {
            const auto ctx = make_field(index_field);
            addix::PartialMap F;
            Json map_info;
            if (map_sel == "dh" || map_sel == "disclog") {
                const std::uint64_t T = T_opt.value_or(ctx->q() - 1);
                const auto G = addix::subgroup(*ctx, T);
                F = map_sel == "dh" ? addix::dh_map(ctx, G) : addix::disclog_map(ctx, G);
                map_info["T"] = T;
            } else if (map_sel.rfind("table:", 0) == 0) {
                std::ifstream in(map_sel.substr(6));
                if (!in) throw addix::Error(addix::ErrorKind::IoError, "cannot read " + map_sel.substr(6));
                F = addix::read_map_csv(in, ctx);
            } else {
                throw addix::Error(addix::ErrorKind::InvalidArgument, "--map must be dh, disclog or table:PATH");
            }
            map_info = Json{{"kind", map_sel}, {"T", map_info.value("T", Json(nullptr))}, {"m", m}, {"seed", seed},
                            {"domain_size", F.size()}};

            if (!verify_path.empty()) {
                Json w = read_json_file(verify_path);
                if (w.contains("result")) w = w["result"];
                if (w.contains("witness")) w = w["witness"];
                if (w.is_null()) throw addix::Error(addix::ErrorKind::InvalidArgument, "file holds no witness");
                const bool ok = addix::verify_witness(F, addix::witness_from_json(*ctx, w));
                emit(Json{{"schema_version", addix::kSchemaVersion}, {"map", map_info}, {"witness_valid", ok}}, format,
                     out_path);
                return ok ? kExitOk : kExitFail;
            }

            addix::SearchOptions opts = addix::default_search_options();
            opts.threads = threads;
            opts.k_max = k_max;
            addix::IndexResult res;
            if (m > 0 && outliers) {
                res = addix::least_codimension_with_outliers(F, m, opts);
            } else {
                if (m > 0) F = addix::perturb(F, m, seed);
                res = addix::least_codimension(F, opts);
            }
            emit(Json{{"schema_version", addix::kSchemaVersion},
                      {"field", addix::field_json(*ctx)},
                      {"map", map_info},
                      {"result", addix::index_result_json(*ctx, res)}},
                 format, out_path);
            return res.complete ? kExitOk : kExitBudget;
        }

        if (*count_cmd) {
            const addix::CountReport c = addix::count_report(what, count_T, count_s, count_a);
            if (format == "csv") {
                std::ostringstream os;
                os << "what,T,s,a,formula_value,oracle_value,agreed\n"
                   << c.what << ',' << c.T << ',' << (c.s ? std::to_string(*c.s) : "") << ','
                   << (c.a ? std::to_string(*c.a) : "") << ',' << c.formula_value << ','
                   << (c.oracle_value ? std::to_string(*c.oracle_value) : "") << ',' << (c.agreed ? "true" : "false")
                   << '\n';
                if (out_path.empty()) std::cout << os.str();
                else emit(Json(os.str()), "text", out_path);
            } else if (format == "text" && out_path.empty()) {
                std::cout << c.formula_value << '\n';
            } else {
                Json j{{"schema_version", addix::kSchemaVersion}, {"what", c.what}, {"T", c.T}};
                j["s"] = c.s ? Json(*c.s) : Json(nullptr);
                j["a"] = c.a ? Json(*c.a) : Json(nullptr);
                j["formula_value"] = c.formula_value;
                j["oracle_value"] = c.oracle_value ? Json(*c.oracle_value) : Json(nullptr);
                j["agreed"] = c.agreed;
                emit(j, format, out_path);
            }
            return c.agreed ? kExitOk : kExitFail;
        }

        if (*verify_cmd) {
            addix::CheckSpec spec;
            spec.check_id = check_id;
            if (!addix::is_check_id(check_id))
                throw addix::Error(addix::ErrorKind::UnknownCheck, check_id);
            Json params = Json::object();
            if (!params_arg.empty()) {
                if (params_arg[0] == '@') params = read_json_file(params_arg.substr(1));
                else {
                    try {
                        params = Json::parse(params_arg);
                    } catch (const nlohmann::json::exception& e) {
                        throw addix::Error(addix::ErrorKind::InvalidArgument, std::string("--params: ") + e.what());
                    }
                }
            }
            spec.params = addix::params_from_json(params);
            spec.params.threads = threads;
            const addix::CheckReport r = addix::run_check(spec);
            Json j{{"schema_version", addix::kSchemaVersion}};
            const Json rj = addix::report_json(r);
            for (const auto& [k, v] : rj.items()) j[k] = v;
            emit(j, format, out_path);
            return verdict_exit(r.verdict);
        }

        if (*suite_cmd) {
            const addix::SuiteResult s = addix::run_suite(suite_id, threads);
            if (!out_path.empty()) addix::write_suite(s, out_path);
            else std::cout << (format == "csv" ? addix::suite_csv(s) : addix::suite_json(s).dump(2) + "\n");
            std::cerr << suite_id << ": " << s.summary.pass << " pass, " << s.summary.fail << " fail, "
                      << s.summary.vacuous << " vacuous, " << s.summary.indeterminate << " indeterminate\n";
            if (s.summary.fail) return kExitFail;
            return s.summary.indeterminate ? kExitBudget : kExitOk;
        }
    } catch (const addix::Error& e) {
        std::cerr << "addix: " << e.what() << '\n';
        return e.kind() == addix::ErrorKind::BudgetExceeded ? kExitBudget : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "addix: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

#pragma once

// Executable checks of the lower bounds on the least additive index of the
// Diffie-Hellman and discrete-logarithm maps, and of the counting and sumset
// facts they rely on. Each check evaluates its hypothesis exactly, computes
// the bound as an exact rational (possibly under a root) and compares it
// with the least codimension found by exhaustive search.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "addix/json_io.hpp"

namespace addix {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Verdict { Pass, Fail, Vacuous, Indeterminate };
std::string to_string(Verdict v);

/// radicand^(1/root). A non-positive radicand is met by every k.
struct Bound {
    Rational radicand = 0;
    unsigned root = 1;
};

/// True iff bound <= p^k, decided exactly.
bool bound_met(const Bound& b, std::uint64_t p, unsigned k);
/// Three-way comparison; non-positive radicands order below positive ones.
int compare_bounds(const Bound& a, const Bound& b);
double bound_approx(const Bound& b);
std::string rational_string(const Rational& r);

struct CheckParams {
    std::uint32_t p = 0;
    unsigned n = 0;
    std::optional<std::uint64_t> T;  // subgroup order; q - 1 when absent
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
    std::optional<std::vector<Digits>> basis;
    std::optional<std::uint64_t> T_max;  // range for the counting checks
    std::optional<unsigned> r;           // fixes the number of summands (discloggen)
    std::optional<std::uint64_t> budget_ms;
    unsigned threads = 1;
};

struct CheckSpec {
    std::string check_id;
    CheckParams params;
};

struct CheckReport {
    std::string check_id;
    CheckParams params;
    bool hypothesis_holds = false;
    std::optional<Bound> bound;
    std::optional<std::uint64_t> exact;           // p^{k*}
    std::optional<unsigned> certified_codim;      // set when the search was cut short
    std::optional<unsigned> codim;                // k* or the certified level
    Verdict verdict = Verdict::Vacuous;
    std::int64_t elapsed_ms = 0;
    std::string form;  // which statement was checked
    Json witness;      // null, a witness or a counterexample
    Json detail = Json::object();
    std::string lhs, rhs;  // compact sides of the inequality for CSV rows
};

const std::vector<std::string>& check_ids();
bool is_check_id(const std::string& id);

/// Memoizes search results shared between checks on the same map.
class TruthCache {
public:
    TruthCache();
    ~TruthCache();
    struct Impl;
    Impl& impl() { return *impl_; }

private:
    std::unique_ptr<Impl> impl_;
};

/// Throws UnknownCheck, BudgetExceeded or field construction errors.
CheckReport run_check(const CheckSpec& spec, TruthCache* cache = nullptr);

Json params_json(const CheckParams& p);
CheckParams params_from_json(const Json& j);
Json report_json(const CheckReport& r, bool with_elapsed = true);

struct SuiteSummary {
    std::size_t pass = 0, fail = 0, vacuous = 0, indeterminate = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckReport> results;
    SuiteSummary summary;
    Json extra = Json::object();  // suite-level tables
};

const std::vector<std::string>& suite_ids();

/// The parameter list of a suite, in report order.
std::vector<CheckSpec> suite_specs(const std::string& suite_id);

SuiteResult run_suite(const std::string& suite_id, unsigned threads = 1);

Json suite_json(const SuiteResult& s, bool with_elapsed = true);
/// Columns q,T,check_id,lhs,rhs,pass.
std::string suite_csv(const SuiteResult& s);
/// Writes JSON or CSV (by extension, .csv => CSV). Throws IoError.
void write_suite(const SuiteResult& s, const std::string& path);

}  // namespace addix

#include <doctest.h>

#include <cmath>
#include <random>

#include "addix/additive_index.hpp"
#include "addix/arith.hpp"
#include "addix/error.hpp"
#include "addix/harness.hpp"
#include "addix/json_io.hpp"
#include "addix/maps.hpp"

using namespace addix;

namespace {

// a/b <= p^(k*root), checked with 128-bit integers
bool met_by_int128(std::int64_t a, std::int64_t b, std::uint64_t p, unsigned k, unsigned root) {
    if (a <= 0) return true;
    unsigned __int128 rhs = b;
    for (unsigned i = 0; i < k * root; ++i) rhs *= p;
    return static_cast<unsigned __int128>(a) <= rhs;
}

CheckReport run(const std::string& id, std::uint32_t p, unsigned n, std::optional<std::uint64_t> T = {},
                std::uint64_t m = 0) {
    CheckSpec s;
    s.check_id = id;
    s.params.p = p;
    s.params.n = n;
    s.params.T = T;
    s.params.m = m;
    return run_check(s);
}

}  // namespace

TEST_CASE("bound_met agrees with integer comparison") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % 200000) - 1000;
        const std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 500);
        const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11}[rng() % 5];
        const unsigned k = rng() % 5, root = 1 + rng() % 3;
        const Bound bd{Rational(a, b), root};
        INFO(a << "/" << b << " root " << root << " p " << p << " k " << k);
        REQUIRE(bound_met(bd, p, k) == met_by_int128(a, b, p, k, root));
    }
}

TEST_CASE("bound_met boundary values") {
    CHECK(bound_met(Bound{6, 1}, 5, 2));
    CHECK_FALSE(bound_met(Bound{6, 1}, 5, 1));
    CHECK(bound_met(Bound{5, 1}, 5, 1));
    CHECK(bound_met(Bound{1, 1}, 3, 0));
    CHECK_FALSE(bound_met(Bound{Rational(3, 2), 1}, 3, 0));
    CHECK(bound_met(Bound{Rational(23, 8), 2}, 7, 1));
    CHECK(bound_met(Bound{-4, 1}, 2, 0));
}

TEST_CASE("compare_bounds matches floating point when well separated") {
    std::mt19937_64 rng(11);
    int compared = 0;
    for (int i = 0; i < 5000; ++i) {
        const Bound x{Rational(static_cast<long>(1 + rng() % 5000), static_cast<long>(1 + rng() % 50)),
                      static_cast<unsigned>(1 + rng() % 4)};
        const Bound y{Rational(static_cast<long>(1 + rng() % 5000), static_cast<long>(1 + rng() % 50)),
                      static_cast<unsigned>(1 + rng() % 4)};
        const double dx = bound_approx(x), dy = bound_approx(y);
        if (std::abs(dx - dy) < 1e-9 * std::max(dx, dy)) continue;
        ++compared;
        REQUIRE(compare_bounds(x, y) == (dx < dy ? -1 : 1));
    }
    CHECK(compared > 4000);
    CHECK(compare_bounds(Bound{4, 2}, Bound{2, 1}) == 0);
    CHECK(compare_bounds(Bound{8, 3}, Bound{4, 2}) == 0);
    CHECK(compare_bounds(Bound{-1, 1}, Bound{0, 2}) < 0);
    CHECK(compare_bounds(Bound{-1, 1}, Bound{1, 2}) < 0);
}

TEST_CASE("rational_string") {
    CHECK(rational_string(Rational(6)) == "6/1");
    CHECK(rational_string(Rational(27, 5)) == "27/5");
    CHECK(rational_string(Rational(12, 8)) == "3/2");
}

TEST_CASE("Diffie-Hellman check at q=25") {
    const CheckReport r = run("dh04", 5, 2, 24);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.hypothesis_holds);
    REQUIRE(r.exact);
    CHECK(*r.exact == 25);
    REQUIRE(r.bound);
    CHECK(r.bound->radicand == 6);
    // T = 6 is not divisible by 4
    CHECK(run("dh04", 5, 2, 6).verdict == Verdict::Vacuous);
}

TEST_CASE("discrete log checks") {
    const CheckReport q1 = run("disclog_q1", 3, 3);
    CHECK(q1.verdict == Verdict::Pass);
    CHECK(q1.bound->radicand == Rational(27, 5));
    const CheckReport old = run("oldlog", 5, 2, 8);
    CHECK(old.verdict == Verdict::Pass);
    CHECK(old.bound->radicand == 2);
}

TEST_CASE("outliers loosen the bound") {
    const CheckReport r0 = run("dh04", 3, 2, 8, 0), r1 = run("dh04", 3, 2, 8, 1);
    CHECK(r0.bound->radicand == 3);
    CHECK(r1.bound->radicand == 1);
    CHECK(r1.verdict == Verdict::Pass);
}

TEST_CASE("check errors") {
    CHECK_THROWS_AS(run("no_such_check", 2, 2), Error);
    try {
        run("dh04", 3, 2, 5);
        FAIL("expected NotADivisor");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotADivisor);
    }
    for (const auto& id : check_ids()) CHECK(is_check_id(id));
    CHECK_FALSE(is_check_id("dh05"));
}

TEST_CASE("params JSON round trip and validation") {
    CheckParams p;
    p.p = 7;
    p.n = 2;
    p.T = 16;
    p.m = 1;
    p.seed = 42;
    p.r = 3;
    const Json j = params_json(p);
    const CheckParams back = params_from_json(j);
    CHECK(back.p == 7);
    CHECK(back.n == 2);
    CHECK(back.T == std::optional<std::uint64_t>(16));
    CHECK(back.m == 1);
    CHECK(back.seed == 42);
    CHECK(back.r == std::optional<unsigned>(3));
    CHECK(params_json(back) == j);
    CHECK_THROWS_AS(params_from_json(Json{{"p", 2}, {"n", 2}, {"bogus", 1}}), Error);
    CHECK_THROWS_AS(params_from_json(Json{{"p", 2}}), Error);
    CHECK_THROWS_AS(params_from_json(Json{{"p", "two"}, {"n", 2}}), Error);
    CHECK_THROWS_AS(params_from_json(Json::array()), Error);
}

TEST_CASE("report JSON key order") {
    const Json j = report_json(run("dh04", 5, 2, 24));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    const std::vector<std::string> expected = {"check_id", "params", "hypothesis_holds", "bound", "exact",
                                               "pass",     "form",   "witness",          "detail", "elapsed_ms"};
    CHECK(keys == expected);
    CHECK(j["bound"] == "6/1");
    CHECK(j["exact"] == 25);
    CHECK(j["pass"] == "pass");
    CHECK_FALSE(report_json(run("dh04", 5, 2, 24), false).contains("elapsed_ms"));
}

TEST_CASE("witness JSON round trip") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
        const auto ctx = build_field(p, n);
        for (std::uint64_t T : divisors(ctx->q() - 1)) {
            const PartialMap F = disclog_map(ctx, subgroup(*ctx, T));
            const IndexResult r = least_codimension(F);
            REQUIRE(r.witness);
            const Json j = witness_json(*ctx, *r.witness);
            const AffineWitness w = witness_from_json(*ctx, Json::parse(j.dump()));
            CHECK(verify_witness(F, w));
            CHECK(witness_json(*ctx, w) == j);
        }
    }
    const auto ctx = build_field(3, 2);
    Json bad = witness_json(*ctx, *least_codimension(dh_map(ctx, subgroup(*ctx, 8))).witness);
    bad["M_coeffs"].push_back(Json::array({0, 0}));
    CHECK_THROWS_AS(witness_from_json(*ctx, bad), Error);
}

TEST_CASE("suites are deterministic across thread counts") {
    for (const char* id : {"appendix", "counting"}) {
        const Json a = suite_json(run_suite(id, 1), false), b = suite_json(run_suite(id, 3), false);
        CHECK(a == b);
        CHECK(a["summary"]["fail"] == 0);
        CHECK(a["summary"]["indeterminate"] == 0);
    }
}

TEST_CASE("appendix index counts") {
    const SuiteResult s = run_suite("appendix", 2);
    const Json& I = s.extra["I_k_by_q"];
    CHECK(I["4"] == Json::array({64, 64, 256}));
    CHECK(I["3"] == Json::array({9, 27}));
    CHECK(I["5"] == Json::array({25, 3125}));
    CHECK(I["2"] == Json::array({4, 4}));
}

TEST_CASE("suite CSV") {
    const std::string csv = suite_csv(run_suite("counting", 1));
    CHECK(csv.rfind("q,T,check_id,lhs,rhs,pass\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK_THROWS_AS(suite_specs("nope"), Error);
}

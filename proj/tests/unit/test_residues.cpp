#include <doctest.h>

#include <cmath>
#include <set>

#include "addix/arith.hpp"
#include "addix/error.hpp"
#include "addix/residues.hpp"

using namespace addix;

namespace {

// independent: squares as a set
std::uint64_t squares_by_set(std::uint64_t T) {
    std::set<std::uint64_t> s;
    for (std::uint64_t x = 0; x < T; ++x) s.insert(x * x % T);
    return s.size();
}

}  // namespace

TEST_CASE("count_squares examples") {
    CHECK(count_squares(9) == 4);
    CHECK(count_squares(8) == 3);
    CHECK(count_squares(24) == 6);
    CHECK(count_squares(1) == 1);
    CHECK(count_squares_oracle(1) == 1);
    CHECK(count_squares_oracle(12) == 4);
    CHECK(count_squares_oracle(8) == 3);
    CHECK(count_squares_oracle(24) == 6);
    try {
        count_squares_oracle(10'000'001);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("formula equals enumeration") {
    for (std::uint64_t T = 1; T <= 3000; ++T) REQUIRE(count_squares(T) == count_squares_oracle(T));
    for (std::uint64_t T = 1; T <= 300; ++T) REQUIRE(count_squares(T) == squares_by_set(T));
}

TEST_CASE("lower bounds for prime powers") {
    for (std::uint64_t q = 2; q <= 10000; ++q) {
        const auto f = factorize(q);
        if (f.size() != 1) continue;
        const auto N = count_squares(q);
        if (f[0].first == 2) CHECK(6 * N >= q);
        else CHECK(3 * N >= q);
    }
}

TEST_CASE("squares in classes") {
    CHECK(class_max(2, 4) == 1);
    CHECK(count_squares_in_class(0, 2, 8) == 2);
    CHECK(count_squares_in_class(1, 2, 8) == 1);
    CHECK(class_max(2, 8) == 2);
    for (std::uint64_t T : {5u, 12u, 36u})
        for (std::uint64_t a = 0; a < T; ++a) CHECK(count_squares_in_class(a, T, T) == 1);
    CHECK(class_max(1, 24) == count_squares(24));
    try {
        class_max(5, 8);
        FAIL("expected NotADivisor");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotADivisor);
    }
    for (std::uint64_t T = 2; T <= 300; ++T)
        for (auto s : divisors(T)) {
            if (s == 1) continue;
            CHECK(9 * class_max(s, T) <= 8 * count_squares(T));
        }
}

TEST_CASE("square root counts") {
    CHECK(sqrt_count(1, 8) == 4);
    CHECK(sqrt_count_max(8) == 4);
    CHECK(sqrt_count_max(7) == 2);
    CHECK(sqrt_count_max(2) == 1);
    CHECK(sqrt_count_max(12) == 4);
    CHECK(sqrt_count(4, 12) == 4);
    for (std::uint64_t T = 1; T <= 1000; ++T) {
        REQUIRE(sqrt_count_max_multiplicative(T) == sqrt_count_max(T));
        CHECK(static_cast<double>(sqrt_count_max(T)) <= 2.0 * std::sqrt(static_cast<double>(T)));
    }
    for (std::uint64_t r = 3; r < 500; ++r)
        if (is_prime(r)) CHECK(sqrt_count_max(r) == 2);
}

TEST_CASE("count reports") {
    const auto r = count_report("NT", 24);
    CHECK(r.formula_value == 6);
    CHECK(r.agreed);
    const auto l = count_report("LT", 12);
    CHECK(l.formula_value == 4);
    CHECK(l.oracle_value == 4u);
    CHECK(count_report("NsT", 8, 2).formula_value == 2);
    CHECK_THROWS_AS(count_report("XX", 8), Error);
}

#include <doctest.h>

#include <set>
#include <sstream>

#include "addix/error.hpp"
#include "addix/maps.hpp"
#include "helpers.hpp"

using namespace addix;
using testing_util::el;

TEST_CASE("Diffie-Hellman map examples") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    const auto G = subgroup(F, 8);
    const auto d = dh_map(f9, G);
    CHECK(d.provenance == Provenance::DiffieHellman);
    CHECK(d.domain == G.elements);
    CHECK(d.values[0] == F.one());
    CHECK(d.domain[3] == el(F, {1, 2}));
    CHECK(d.values[3] == el(F, {1, 1}));
    CHECK(distinct_values(d) == 3);

    auto f4 = build_field(2, 2);
    const auto G3 = subgroup(*f4, 3);
    const auto d4 = dh_map(f4, G3);
    CHECK(d4.values[2] == G3.gamma);
}

TEST_CASE("discrete logarithm map examples") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    const auto G = subgroup(F, 8);
    const auto P = disclog_map(f9, G);
    CHECK(P.values[0] == F.zero());
    CHECK(P.domain[5] == el(F, {2, 2}));
    CHECK(P.values[5] == el(F, {2, 1}));
    CHECK(P.values[1] == F.one());
    CHECK(distinct_values(P) == 8);
    const auto G4 = subgroup(F, 4);
    CHECK(distinct_values(disclog_map(f9, G4)) == 4);
}

TEST_CASE("table maps") {
    auto f4 = build_field(2, 2);
    const auto c = table_map(f4, std::vector<Elem>(4, Elem{1}));
    CHECK(distinct_values(c) == 1);
    CHECK(c.domain.size() == 4);
    CHECK_THROWS_AS(table_map(f4, std::vector<Elem>(3)), Error);
}

TEST_CASE("perturbation") {
    auto f27 = build_field(3, 3);
    const auto G = subgroup(*f27, 26);
    const auto d = dh_map(f27, G);
    auto diff = [&](const PartialMap& a) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < a.size(); ++i) k += a.values[i] != d.values[i];
        return k;
    };
    CHECK(perturb(d, 0, 9).values == d.values);
    const auto p1 = perturb(d, 1, 7);
    CHECK(diff(p1) == 1);
    CHECK(p1.provenance == Provenance::Perturbed);
    CHECK(p1.perturbed_m == 1);
    CHECK(diff(perturb(d, 26, 3)) == 26);
    for (std::uint64_t m = 0; m <= 26; m += 5) CHECK(diff(perturb(d, m, m * 31 + 1)) == m);
    CHECK(perturb(d, 4, 99).values == perturb(d, 4, 99).values);
    try {
        perturb(d, 27, 1);
        FAIL("expected MTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MTooLarge);
    }
}

TEST_CASE("csv round trip") {
    auto f9 = build_field(3, 2);
    const auto d = dh_map(f9, subgroup(*f9, 8));
    std::stringstream ss;
    write_map_csv(ss, d);
    CHECK(ss.str().rfind("x,domain_element_digits,value_digits\n", 0) == 0);
    const auto back = read_map_csv(ss, f9);
    CHECK(back.domain == d.domain);
    CHECK(back.values == d.values);
}

TEST_CASE("restriction") {
    auto f9 = build_field(3, 2);
    const auto d = dh_map(f9, subgroup(*f9, 8));
    const auto r = restrict_without(d, {0, 7});
    CHECK(r.size() == 6);
    CHECK(r.domain.front() == d.domain[1]);
    CHECK(r.domain.back() == d.domain[6]);
}

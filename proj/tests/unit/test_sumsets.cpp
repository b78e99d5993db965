#include <doctest.h>

#include <cmath>

#include "addix/arith.hpp"
#include "addix/error.hpp"
#include "addix/sumsets.hpp"
#include "helpers.hpp"

using namespace addix;
using testing_util::el;

namespace {

template <class Fn>
void for_each_field(std::uint32_t max_q, Fn fn) {
    for (std::uint32_t q = 2; q <= max_q; ++q) {
        const auto f = factorize(q);
        if (f.size() != 1) continue;
        fn(build_field(static_cast<std::uint32_t>(f[0].first), f[0].second));
    }
}

}  // namespace

TEST_CASE("sumset and product basics") {
    auto f7 = build_field(7, 1);
    const ElementSet G(f7, subgroup(*f7, 3).elements);
    CHECK(G.size() == 3);
    const ElementSet zero(f7, std::vector<Elem>{Elem{0}});
    const ElementSet one(f7, std::vector<Elem>{Elem{1}});
    CHECK(sumset(G, zero) == G);
    CHECK(product_set(G, one) == G);
    CHECK(sumset(G, G).includes(ElementSet::nonzero(f7)));
    CHECK(G.contains(Elem{2}));
    CHECK(G.contains(Elem{4}));
}

TEST_CASE("covering numbers") {
    auto f7 = build_field(7, 1);
    CHECK(sum_closure_r(f7, subgroup(*f7, 6)) == 1u);
    CHECK(sum_closure_r(f7, subgroup(*f7, 3)) == 2u);
    auto f4 = build_field(2, 2);
    CHECK_FALSE(sum_closure_r(f4, subgroup(*f4, 1)).has_value());
    auto f9 = build_field(3, 2);
    // G = F_3^* never leaves F_3
    CHECK_FALSE(sum_closure_r(f9, subgroup(*f9, 2)).has_value());
}

TEST_CASE("A and B sets") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    const auto full = ab_sets(f9, subgroup(F, 8));
    CHECK(full.B.size() >= 4);
    CHECK(full.A.size() >= 4);
    CHECK(full.B_symmetric);
    CHECK(full.G_symmetric);
    const auto G4 = subgroup(F, 4);
    const ElementSet g4(f9, G4.elements);
    std::vector<Elem> hits;
    for (Elem x : G4.elements)
        if (g4.contains(F.sub(x, F.inv(x)))) hits.push_back(x);
    CHECK(hits.size() == 2);
    for (Elem x : hits) CHECK((x == el(F, {0, 1}) || x == el(F, {0, 2})));
    CHECK(invers_count(F, G4) == 2);

    for_each_field(64, [](const FieldPtr& F) {
        for (auto T : divisors(F->q() - 1)) {
            const auto G = subgroup(*F, T);
            const auto s = ab_sets(F, G);
            if (T % 2 == 0) CHECK(s.G_symmetric);
            CHECK(s.G_symmetric != s.G_antisymmetric);
            CHECK(2 * s.A.size() >= T);
            CHECK(2 * s.B.size() >= T);
        }
    });
}

TEST_CASE("degeneracy") {
    auto f4 = build_field(2, 2);
    const auto d4 = degenerate(f4, subgroup(*f4, 3));
    CHECK(d4.A_in_subfield);
    CHECK_FALSE(d4.G_in_subfield);
    CHECK(d4.A_in_subfield_direct);
    auto f16 = build_field(2, 4);
    CHECK(degenerate(f16, subgroup(*f16, 5)).A_in_subfield);
    for (auto [p, n] : {std::pair{2u, 3u}, {3u, 3u}, {2u, 5u}, {5u, 3u}}) {
        auto F = build_field(p, n);
        const auto d = degenerate(F, subgroup(*F, F->q() - 1));
        CHECK_FALSE(d.G_in_subfield);
        CHECK_FALSE(d.A_in_subfield);
    }
    // arithmetic and direct tests agree
    for_each_field(343, [](const FieldPtr& F) {
        for (auto T : divisors(F->q() - 1)) {
            const auto d = degenerate(F, subgroup(*F, T));
            CHECK(d.G_in_subfield == d.G_in_subfield_direct);
            CHECK(d.A_in_subfield == d.A_in_subfield_direct);
        }
    });
}

TEST_CASE("invers_count values") {
    auto f9 = build_field(3, 2);
    CHECK(invers_count(*f9, subgroup(*f9, 1)) == 0);
    for_each_field(343, [](const FieldPtr& F) {
        if (F->p() == 2) return;
        CHECK(invers_count(*F, subgroup(*F, F->q() - 1)) == F->q() - 3);
    });
}

TEST_CASE("characters") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    const auto G4 = subgroup(F, 4);
    const CharacterTable quad(f9, 4);
    CHECK(quad.order() == 2);
    const double mag = weil_check(F, G4, quad);
    const double expect = std::abs(quad(el(F, {0, 2})) + quad(el(F, {0, 1})));
    CHECK(mag == doctest::Approx(expect));
    CHECK(mag <= 2.0 + 1e-9);
    try {
        weil_check(F, G4, CharacterTable(f9, 0));
        FAIL("expected TrivialCharacter");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TrivialCharacter);
    }
    // multiplicativity
    for (std::uint64_t c : {1u, 2u, 4u}) {
        const CharacterTable chi(f9, c);
        for (std::uint32_t x = 1; x < 9; ++x)
            for (std::uint32_t y = 1; y < 9; ++y)
                CHECK(std::abs(chi(F.mul(Elem{x}, Elem{y})) - chi(Elem{x}) * chi(Elem{y})) < 1e-12);
        CHECK(chi(F.zero()) == std::complex<double>(0, 0));
    }
    // trivial on G exactly for multiples of T
    for (std::uint64_t T : {2u, 4u}) {
        const auto G = subgroup(F, T);
        for (auto c : characters_trivial_on(F, T)) {
            const CharacterTable chi(f9, c);
            for (Elem g : G.elements) CHECK(std::abs(chi(g) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("sum representations") {
    auto f27 = build_field(3, 3);
    const auto G = subgroup(*f27, 13);
    const Elem target = f27->sub(G.gamma, f27->one());
    const auto reps = sum_representations(*f27, G, target, 6);
    REQUIRE_FALSE(reps.empty());
    CHECK(reps.front().r == 2);
    for (const auto& r : reps) CHECK(check_representation(*f27, G, target, r));
    SumRepresentation bad = reps.front();
    bad.exponents[0] = (bad.exponents[0] + 1) % 13;
    CHECK_FALSE(check_representation(*f27, G, target, bad));
}

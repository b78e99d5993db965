#include <doctest.h>

#include <random>

#include "addix/error.hpp"
#include "addix/linearised.hpp"
#include "helpers.hpp"

using namespace addix;
using testing_util::el;

TEST_CASE("evaluation examples") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    const auto X = LinearisedPoly::identity(F);
    for (std::uint32_t x = 0; x < 9; ++x) CHECK(lp_eval(F, X, Elem{x}) == Elem{x});
    LinearisedPoly X3 = LinearisedPoly::zero(F);
    X3.coeffs[1] = F.one();
    CHECK(lp_eval(F, X3, el(F, {1, 1})) == el(F, {1, 2}));
    CHECK(lp_eval(F, LinearisedPoly::zero(F), el(F, {2, 2})) == F.zero());
    CHECK(X3.degree_index() == 1);
    CHECK(LinearisedPoly::zero(F).degree_index() == -1);
}

TEST_CASE("matrix correspondence examples") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    const MatrixFp I = lp_to_matrix(F, LinearisedPoly::identity(F));
    CHECK(I(0, 0) == 1);
    CHECK(I(1, 1) == 1);
    CHECK(I(0, 1) == 0);
    CHECK(I(1, 0) == 0);
    LinearisedPoly X3 = LinearisedPoly::zero(F);
    X3.coeffs[1] = F.one();
    const MatrixFp A = lp_to_matrix(F, X3);
    CHECK(A(0, 0) == 1);
    CHECK(A(1, 0) == 0);
    CHECK(A(0, 1) == 0);
    CHECK(A(1, 1) == 2);
    CHECK(lp_from_matrix(F, A) == X3);
}

TEST_CASE("matrix round trip") {
    std::mt19937_64 rng(3);
    for (auto [p, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {2u, 4u}, {5u, 2u}, {3u, 3u}}) {
        auto F = build_field(p, n);
        for (int t = 0; t < 100; ++t) {
            MatrixFp A(n, n, p);
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = 0; c < n; ++c) A(r, c) = static_cast<std::uint32_t>(rng() % p);
            const LinearisedPoly M = lp_from_matrix(*F, A);
            REQUIRE(lp_to_matrix(*F, M) == A);
            // the matrix really is the map
            for (std::uint32_t x = 0; x < F->q(); ++x)
                REQUIRE(F->from_digits(A.apply(F->digits(Elem{x}))) == lp_eval(*F, M, Elem{x}));
            LinearisedPoly R = LinearisedPoly::zero(*F);
            for (auto& c : R.coeffs) c = Elem{static_cast<std::uint32_t>(rng() % F->q())};
            REQUIRE(lp_from_matrix(*F, lp_to_matrix(*F, R)) == R);
        }
    }
}

TEST_CASE("linearity, exhaustive on small fields") {
    std::mt19937_64 rng(17);
    for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}}) {
        auto F = build_field(p, n);
        for (int t = 0; t < 5; ++t) {
            LinearisedPoly M = LinearisedPoly::zero(*F);
            for (auto& c : M.coeffs) c = Elem{static_cast<std::uint32_t>(rng() % F->q())};
            for (std::uint32_t x = 0; x < F->q(); ++x)
                for (std::uint32_t y = 0; y < F->q(); ++y)
                    for (std::uint32_t a = 0; a < p; ++a)
                        for (std::uint32_t b = 0; b < p; ++b) {
                            const Elem lhs = lp_eval(*F, M, F->add(F->scale(a, Elem{x}), F->scale(b, Elem{y})));
                            const Elem rhs =
                                F->add(F->scale(a, lp_eval(*F, M, Elem{x})), F->scale(b, lp_eval(*F, M, Elem{y})));
                            REQUIRE(lhs == rhs);
                        }
        }
    }
}

TEST_CASE("fit examples") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    Subspace U(3, 2, {Digits{1, 0}});
    const Elem a = el(F, {0, 1});
    const std::vector<Elem> t1{a};
    LinearisedPoly expect = LinearisedPoly::zero(F);
    expect.coeffs[0] = a;
    CHECK(lp_fit_on_subspace(F, U, t1) == expect);
    const std::vector<Elem> t0{F.zero()};
    CHECK(lp_fit_on_subspace(F, U, t0) == LinearisedPoly::zero(F));

    auto f8 = build_field(2, 3);
    Subspace V(2, 3, {Digits{1, 0, 0}, Digits{0, 1, 0}});
    const Elem al = el(*f8, {0, 1});
    const Elem al2 = f8->mul(al, al);
    // V's canonical basis is (1, a): targets 1 -> 1, a -> a^2
    REQUIRE(V.basis_elements(*f8) == std::vector<Elem>{f8->one(), al});
    const std::vector<Elem> t2{f8->one(), al2};
    const LinearisedPoly M = lp_fit_on_subspace(*f8, V, t2);
    CHECK(M.degree_index() <= 1);
    CHECK(f8->add(M.coeffs[0], M.coeffs[1]) == f8->one());
    CHECK(lp_eval(*f8, M, al) == al2);
    for (Elem v : V.elements(*f8)) {
        // linear extension: 1 -> 1, a -> a^2, 1+a -> 1+a^2, i.e. v -> v^2 on V
        CHECK(lp_eval(*f8, M, v) == f8->mul(v, v));
    }
    CHECK_THROWS_AS(lp_fit_on_subspace(F, U, std::vector<Elem>{}), Error);
}

TEST_CASE("fit correctness and uniqueness for q <= 49") {
    std::mt19937_64 rng(23);
    for (auto [p, n] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {2u, 4u}, {5u, 2u}, {3u, 3u}, {2u, 5u}, {7u, 2u}}) {
        auto F = build_field(p, n);
        for (unsigned r = 0; r <= n; ++r) {
            for (const auto& U : enumerate_subspaces(*F, r)) {
                const auto basis = U.basis_elements(*F);
                const auto elems = U.elements(*F);
                for (int t = 0; t < 50; ++t) {
                    std::vector<Elem> targets(r);
                    for (auto& v : targets) v = Elem{static_cast<std::uint32_t>(rng() % F->q())};
                    const LinearisedPoly M = lp_fit_on_subspace(*F, U, targets);
                    REQUIRE(M.degree_index() < static_cast<int>(r));
                    for (unsigned i = 0; i < r; ++i) REQUIRE(lp_eval(*F, M, basis[i]) == targets[i]);
                    // full solution space is a single point: uniqueness on U
                    if (r > 0) {
                        const auto sys = lp_fit_system(*F, U, targets);
                        REQUIRE(sys.consistent);
                        REQUIRE(sys.kernel_basis.empty());
                    }
                    // values on U are those of the linear extension
                    for (Elem v : elems) {
                        const Digits c = U.coordinates(*F, v);
                        Elem expect = F->zero();
                        for (unsigned i = 0; i < r; ++i) expect = F->add(expect, F->scale(c[i], targets[i]));
                        REQUIRE(lp_eval(*F, M, v) == expect);
                    }
                }
            }
        }
    }
}

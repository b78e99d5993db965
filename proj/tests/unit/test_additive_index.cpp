#include <doctest.h>

#include <random>

#include "addix/additive_index.hpp"
#include "addix/error.hpp"
#include "helpers.hpp"
#include "oracles/brute_index.hpp"

using namespace addix;
using testing_util::el;

namespace {

PartialMap random_total(const FieldPtr& F, std::mt19937_64& rng) {
    std::vector<Elem> v(F->q());
    for (auto& e : v) e = Elem{static_cast<std::uint32_t>(rng() % F->q())};
    return table_map(F, v);
}

std::vector<std::optional<std::uint32_t>> as_oracle_values(const PartialMap& F) {
    std::vector<std::optional<std::uint32_t>> v(F.ctx->q());
    for (std::size_t i = 0; i < F.size(); ++i) v[F.domain[i].code] = F.values[i].code;
    return v;
}

}  // namespace

TEST_CASE("affine total map fits every subspace") {
    auto f4 = build_field(2, 2);
    const FieldCtx& F = *f4;
    const Elem w = el(F, {0, 1});
    std::vector<Elem> vals(4);
    for (std::uint64_t x = 0; x < 4; ++x) {
        const Elem e = F.element_of_index(x);
        vals[x] = F.add(F.mul(w, e), F.one());
    }
    const auto A = table_map(f4, vals);
    LinearisedPoly wX = LinearisedPoly::zero(F);
    wX.coeffs[0] = w;
    for (unsigned r = 1; r <= 2; ++r)
        for (const auto& U : enumerate_subspaces(F, r)) {
            auto wit = fit_witness(A, U);
            REQUIRE(wit);
            CHECK(wit->M == wX);
            for (Elem c : wit->constants) CHECK(c == F.one());
            CHECK(verify_witness(A, *wit));
        }
    CHECK(least_codimension(A).least_codim == 0);
}

TEST_CASE("infeasible examples") {
    auto f4 = build_field(2, 2);
    const auto T = table_map(f4, {Elem{0}, Elem{0}, Elem{0}, Elem{1}});
    REQUIRE(T.values[3] == Elem{1});
    REQUIRE(T.domain[3] == el(*f4, {1, 1}));
    const Subspace U(2, 2, {Digits{1, 0}});
    CHECK_FALSE(fit_witness(T, U));
    CHECK_FALSE(is_feasible(T, U));
    for (const auto& V : enumerate_subspaces(*f4, 1)) CHECK_FALSE(is_feasible(T, V));
    const auto res = least_codimension(T);
    CHECK(res.least_codim == 2);
    CHECK(res.complete);
    REQUIRE(res.witness);
    CHECK(verify_witness(T, *res.witness));
    CHECK(res.per_k.size() == 3);
    CHECK(res.per_k[1].subspaces_tested == 3);

    auto f9 = build_field(3, 2);
    const auto d = dh_map(f9, subgroup(*f9, 8));
    const Subspace whole(3, 2, {Digits{1, 0}, Digits{0, 1}});
    CHECK_FALSE(fit_witness(d, whole));
    CHECK_FALSE(is_feasible(d, whole));
    CHECK(least_codimension(d).least_codim >= 1);
}

TEST_CASE("linearised total maps have codimension 0") {
    for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}}) {
        auto F = build_field(p, n);
        std::vector<Elem> id(F->q()), fr(F->q());
        for (std::uint64_t x = 0; x < F->q(); ++x) {
            id[x] = F->element_of_index(x);
            fr[x] = F->frobenius(id[x]);
        }
        CHECK(least_codimension(table_map(F, id)).least_codim == 0);
        const auto r = least_codimension(table_map(F, fr));
        CHECK(r.least_codim == 0);
        REQUIRE(r.witness);
        LinearisedPoly Xp = LinearisedPoly::zero(*F);
        Xp.coeffs[1] = F->one();
        CHECK(r.witness->M == Xp);
    }
}

TEST_CASE("witness checks") {
    auto f9 = build_field(3, 2);
    const FieldCtx& F = *f9;
    const auto d = dh_map(f9, subgroup(F, 8));
    const auto res = least_codimension(d);
    REQUIRE(res.witness);
    const AffineWitness& w = *res.witness;
    CHECK(verify_witness(d, w));
    for (std::size_t L = 0; L < w.constants.size(); ++L) {
        AffineWitness bad = w;
        bad.constants[L] = F.add(bad.constants[L], F.one());
        bool used = false;
        for (Elem x : d.domain) used = used || w.U.coset_label(F, x) == L;
        CHECK(verify_witness(d, bad) == !used);
    }

    // partial map on F_3 with a nonzero linear map vanishing on its domain
    PartialMap small;
    small.ctx = f9;
    small.domain = {F.one(), el(F, {2})};
    small.values = {el(F, {0, 1}), el(F, {0, 2})};
    const Subspace whole(3, 2, {Digits{1, 0}, Digits{0, 1}});
    auto fit = fit_witness(small, whole);
    REQUIRE(fit);
    CHECK(verify_witness(small, *fit));
    MatrixFp A(0, 4, 3);
    Digits rhs;
    for (Elem x : small.domain) append_lp_equations(F, 2, x, F.zero(), A, rhs);
    const auto sol = solve(A, rhs);
    REQUIRE(sol.consistent);
    REQUIRE_FALSE(sol.kernel_basis.empty());
    const LinearisedPoly N = lp_from_solution(F, sol.kernel_basis[0], 2);
    CHECK(N.degree_index() >= 0);
    AffineWitness shifted = *fit;
    for (unsigned j = 0; j < 2; ++j) shifted.M.coeffs[j] = F.add(shifted.M.coeffs[j], N.coeffs[j]);
    CHECK(shifted.M != fit->M);
    CHECK(verify_witness(small, shifted));

    // degree bound enforced
    AffineWitness high = w;
    if (w.k() > 0) {
        high.M.coeffs[F.n() - 1] = F.one();
        CHECK_FALSE(verify_witness(d, high));
    }
}

TEST_CASE("fast feasibility agrees with the full system; degree reduction keeps values") {
    std::mt19937_64 rng(41);
    for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}}) {
        auto F = build_field(p, n);
        for (int t = 0; t < 12; ++t) {
            PartialMap M = random_total(F, rng);
            // structured maps make feasible cases common
            if (t % 3 == 1) {
                const Subspace U = SubspaceEnumeration(p, n, n - 1).at(rng() % gaussian_binomial(n, n - 1, p));
                for (std::size_t i = 0; i < M.size(); ++i)
                    M.values[i] = Elem{static_cast<std::uint32_t>(U.coset_label(*F, M.domain[i]) * 7 % F->q())};
            }
            if (t % 3 == 2) M = restrict_without(M, {0, 2, 3});
            for (unsigned r = 0; r <= n; ++r) {
                for (const auto& U : enumerate_subspaces(*F, r)) {
                    const bool fast = is_feasible(M, U);
                    const auto raw = solve_witness_system(M, U);
                    REQUIRE(fast == raw.has_value());
                    if (!raw) continue;
                    const AffineWitness red = degree_reduce(*F, *raw);
                    for (std::uint32_t x = 0; x < F->q(); ++x)
                        REQUIRE(red.eval(*F, Elem{x}) == raw->eval(*F, Elem{x}));
                    CHECK(red.M.degree_index() < static_cast<int>(r));
                    const auto w = fit_witness(M, U);
                    REQUIRE(w);
                    CHECK(verify_witness(M, *w));
                }
            }
        }
    }
}

TEST_CASE("agreement with the brute-force oracle at q = 4 and q = 8") {
    {
        auto f4 = build_field(2, 2);
        oracle::BruteIndex B(oracle::Space(2, 2));
        std::array<unsigned, 3> I{};
        for (std::uint32_t code = 0; code < 256; ++code) {
            std::vector<Elem> v(4);
            for (unsigned i = 0; i < 4; ++i) v[i] = Elem{(code >> (2 * i)) & 3u};
            const auto T = table_map(f4, v);
            const unsigned k = least_codimension(T).least_codim;
            REQUIRE(k == B.least_codim(as_oracle_values(T)));
            for (unsigned j = k; j <= 2; ++j) ++I[j];
        }
        CHECK(I[0] == 64);
        CHECK(I[2] == 256);
        CHECK(I[1] >= 64);
        CHECK(I[1] < 256);
    }
    {
        auto f8 = build_field(2, 3);
        oracle::BruteIndex B(oracle::Space(2, 3));
        std::mt19937_64 rng(8);
        for (int t = 0; t < 2000; ++t) {
            const auto T = random_total(f8, rng);
            REQUIRE(least_codimension(T).least_codim == B.least_codim(as_oracle_values(T)));
        }
    }
    {
        auto f9 = build_field(3, 2);
        oracle::BruteIndex B(oracle::Space(3, 2));
        for (std::uint64_t T : {2u, 4u, 8u}) {
            const auto G = subgroup(*f9, T);
            for (const auto& M : {dh_map(f9, G), disclog_map(f9, G)})
                CHECK(least_codimension(M).least_codim == B.least_codim(as_oracle_values(M)));
        }
    }
}

TEST_CASE("monotonicity under restriction and along chains") {
    std::mt19937_64 rng(77);
    auto F = build_field(2, 4);
    for (int t = 0; t < 20; ++t) {
        const auto M = random_total(F, rng);
        const auto sub = restrict_without(M, {1, 5, 9, 13});
        CHECK(least_codimension(sub).least_codim <= least_codimension(M).least_codim);
        for (unsigned r = 1; r <= 4; ++r)
            for (const auto& U : enumerate_subspaces(*F, r)) {
                if (!is_feasible(sub, U)) continue;
                // drop the last basis row: a subspace of U
                auto rows = U.basis();
                rows.pop_back();
                CHECK(is_feasible(sub, Subspace(2, 4, rows)));
            }
    }
}

TEST_CASE("search results do not depend on the thread count") {
    for (auto [p, n, T] : {std::tuple{2u, 4u, 15u}, {5u, 2u, 24u}, {3u, 3u, 26u}, {2u, 6u, 63u}}) {
        auto F = build_field(p, n);
        const auto G = subgroup(*F, T);
        for (const auto& M : {dh_map(F, G), disclog_map(F, G)}) {
            SearchOptions one;
            SearchOptions many;
            many.threads = 4;
            const auto a = least_codimension(M, one);
            const auto b = least_codimension(M, many);
            CHECK(a.least_codim == b.least_codim);
            REQUIRE(a.witness);
            REQUIRE(b.witness);
            CHECK(a.witness->U == b.witness->U);
            CHECK(a.witness->M == b.witness->M);
            CHECK(a.witness->constants == b.witness->constants);
            REQUIRE(a.per_k.size() == b.per_k.size());
            for (std::size_t i = 0; i < a.per_k.size(); ++i)
                CHECK(a.per_k[i].subspaces_tested == b.per_k[i].subspaces_tested);
        }
    }
}

TEST_CASE("known least codimensions") {
    auto f25 = build_field(5, 2);
    const auto d = dh_map(f25, subgroup(*f25, 24));
    CHECK(least_codimension(d).least_codim == 2);

    auto f27 = build_field(3, 3);
    const auto P = disclog_map(f27, subgroup(*f27, 26));
    for (const auto& U : enumerate_subspaces(*f27, 2)) CHECK_FALSE(is_feasible(P, U));
    CHECK(least_codimension(P).least_codim >= 2);

    SearchOptions capped;
    capped.k_max = 0;
    const auto r = least_codimension(d, capped);
    CHECK_FALSE(r.complete);
    CHECK(r.least_codim == 1);
    CHECK_FALSE(r.witness);
}

TEST_CASE("outlier search") {
    auto f9 = build_field(3, 2);
    const auto d = dh_map(f9, subgroup(*f9, 8));
    CHECK(least_codimension_with_outliers(d, 0).least_codim == least_codimension(d).least_codim);
    const auto all = least_codimension_with_outliers(d, 8);
    CHECK(all.least_codim == 0);
    CHECK(all.dropped.size() == 8);
    const auto one = least_codimension_with_outliers(d, 1);
    CHECK(one.least_codim <= least_codimension(d).least_codim);
    REQUIRE(one.witness);
    CHECK(verify_witness(restrict_without(d, one.dropped), *one.witness));
    // exact: no single drop does better
    for (std::size_t i = 0; i < d.size(); ++i)
        CHECK(least_codimension(restrict_without(d, {i})).least_codim >= one.least_codim);

    auto f256 = build_field(2, 8);
    const auto big = dh_map(f256, subgroup(*f256, 255));
    try {
        least_codimension_with_outliers(big, 1);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("deadline yields a partial certificate") {
    auto f = build_field(2, 8);
    const auto P = disclog_map(f, subgroup(*f, 255));
    SearchOptions o;
    o.deadline = std::chrono::steady_clock::now();
    const auto r = least_codimension(P, o);
    CHECK_FALSE(r.complete);
    CHECK(r.least_codim == 0);
}

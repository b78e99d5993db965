#include "addix/additive_index.hpp"

#include "addix/arith.hpp"
#include "addix/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

namespace addix {

Elem AffineWitness::eval(const FieldCtx& ctx, Elem x) const {
    return ctx.add(lp_eval(ctx, M, x), constants.at(U.coset_label(ctx, x)));
}

// ---------------------------------------------------------------------------
// Fast feasibility
//
// Write x = rep(x) + sum_i c_i(x) u_i. Points x, y in one coset satisfy
// F(x) - F(y) = sum_i (c_i(x) - c_i(y)) M(u_i), a system over F_p in the
// unknowns M(u_i) in F_q. The u_i are independent, so any assignment of the
// M(u_i) extends to a linear map, and the system is solvable iff the witness
// system is.

FeasibilityTester::FeasibilityTester(const PartialMap& F) : F_(&F) {
    const FieldCtx& ctx = *F.ctx;
    const std::uint32_t p = ctx.p();
    inv_p_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = 1; b < p; ++b)
            if (a * b % p == 1) inv_p_[a] = b;
    anchor_.assign(ctx.q(), 0);
    stamp_.assign(ctx.q(), 0);
    coords_.assign(F.size() * ctx.n(), 0);
}

bool FeasibilityTester::operator()(const Subspace& U) { return run(U, nullptr); }

bool FeasibilityTester::operator()(const Subspace& U, const std::vector<bool>& skip) { return run(U, &skip); }

bool FeasibilityTester::insert(std::vector<std::uint32_t>& coeff, Elem rhs) {
    const FieldCtx& ctx = *F_->ctx;
    const std::uint32_t p = ctx.p();
    const std::size_t r = coeff.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::uint32_t c = coeff[piv_[i]];
        if (c == 0) continue;
        const auto& row = rows_[i];
        for (std::size_t j = 0; j < r; ++j) coeff[j] = (coeff[j] + (p - c) * row[j]) % p;
        rhs = ctx.sub(rhs, ctx.scale(c, rhs_[i]));
    }
    std::size_t lead = 0;
    while (lead < r && coeff[lead] == 0) ++lead;
    if (lead == r) return rhs == ctx.zero();
    const std::uint32_t s = inv_p_[coeff[lead]];
    for (auto& v : coeff) v = v * s % p;
    rows_.push_back(coeff);
    rhs_.push_back(ctx.scale(s, rhs));
    piv_.push_back(static_cast<unsigned>(lead));
    return true;
}

bool FeasibilityTester::run(const Subspace& U, const std::vector<bool>* skip) {
    const FieldCtx& ctx = *F_->ctx;
    const unsigned r = U.dim(), n = ctx.n();
    const std::uint32_t p = ctx.p();
    if (r == 0) return true;
    const auto basis = U.basis_elements(ctx);
    const auto& pivots = U.pivots();
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    rows_.clear();
    rhs_.clear();
    piv_.clear();
    std::vector<std::uint32_t> coeff(r);
    for (std::size_t pos = 0; pos < F_->size(); ++pos) {
        if (skip && (*skip)[pos]) continue;
        const Elem x = F_->domain[pos];
        std::uint32_t* c = &coords_[pos * n];
        Elem rep = x;
        for (unsigned i = 0; i < r; ++i) {
            c[i] = ctx.digit(x, pivots[i]);
            if (c[i]) rep = ctx.sub(rep, ctx.scale(c[i], basis[i]));
        }
        if (stamp_[rep.code] != epoch_) {
            stamp_[rep.code] = epoch_;
            anchor_[rep.code] = static_cast<std::uint32_t>(pos);
            continue;
        }
        const std::size_t a = anchor_[rep.code];
        const std::uint32_t* ca = &coords_[a * n];
        for (unsigned i = 0; i < r; ++i) coeff[i] = (c[i] + p - ca[i]) % p;
        if (!insert(coeff, ctx.sub(F_->values[pos], F_->values[a]))) return false;
    }
    return true;
}

bool is_feasible(const PartialMap& F, const Subspace& U) {
    FeasibilityTester t(F);
    return t(U);
}

// ---------------------------------------------------------------------------
// Witness construction

std::optional<AffineWitness> solve_witness_system(const PartialMap& F, const Subspace& U) {
    const FieldCtx& ctx = *F.ctx;
    const unsigned n = ctx.n();
    const std::uint32_t p = ctx.p();
    const std::uint64_t cosets = U.num_cosets();

    // occupied cosets in order of first appearance get consecutive slots
    std::vector<std::uint64_t> labels(F.size());
    std::map<std::uint64_t, std::size_t> slot;
    for (std::size_t i = 0; i < F.size(); ++i) {
        labels[i] = U.coset_label(ctx, F.domain[i]);
        slot.emplace(labels[i], 0);
    }
    std::size_t next = 0;
    for (auto& [label, s] : slot) s = next++;

    const std::size_t nm = std::size_t{n} * n;
    const std::size_t vars = nm + slot.size() * n;
    MatrixFp A(0, vars, p);
    Digits rhs;
    Digits row(vars);
    for (std::size_t i = 0; i < F.size(); ++i) {
        const Digits xd = ctx.digits(F.domain[i]);
        const Digits yd = ctx.digits(F.values[i]);
        const std::size_t base = nm + slot.at(labels[i]) * n;
        for (unsigned r = 0; r < n; ++r) {
            std::fill(row.begin(), row.end(), 0);
            for (unsigned c = 0; c < n; ++c) row[std::size_t{r} * n + c] = xd[c];
            row[base + r] = 1;
            A.append_row(row);
            rhs.push_back(yd[r]);
        }
    }
    const SolveResult res = solve(A, rhs);
    if (!res.consistent) return std::nullopt;
    const Digits sol = lex_min_in_coset(*res.particular, res.kernel_basis, p);

    MatrixFp Mm(n, n, p);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) Mm(r, c) = sol[std::size_t{r} * n + c];
    AffineWitness w;
    w.U = U;
    w.M = lp_from_matrix(ctx, Mm);
    w.constants.assign(cosets, ctx.zero());
    for (const auto& [label, s] : slot) {
        const auto first = sol.begin() + static_cast<std::ptrdiff_t>(nm + s * n);
        w.constants[label] = ctx.from_digits(Digits(first, first + n));
    }
    return w;
}

AffineWitness degree_reduce(const FieldCtx& ctx, const AffineWitness& w) {
    const auto basis = w.U.basis_elements(ctx);
    std::vector<Elem> targets;
    targets.reserve(basis.size());
    for (Elem u : basis) targets.push_back(lp_eval(ctx, w.M, u));
    AffineWitness out;
    out.U = w.U;
    out.M = lp_fit_on_subspace(ctx, w.U, targets);
    out.constants.resize(w.constants.size());
    for (std::uint64_t L = 0; L < w.constants.size(); ++L) {
        const Elem rep = w.U.representative_of_label(ctx, L);
        out.constants[L] = ctx.add(w.constants[L], ctx.sub(lp_eval(ctx, w.M, rep), lp_eval(ctx, out.M, rep)));
    }
    return out;
}

std::optional<AffineWitness> fit_witness(const PartialMap& F, const Subspace& U) {
    auto raw = solve_witness_system(F, U);
    if (!raw) return std::nullopt;
    AffineWitness w = degree_reduce(*F.ctx, *raw);
    std::vector<bool> occupied(w.constants.size(), false);
    for (Elem x : F.domain) occupied[U.coset_label(*F.ctx, x)] = true;
    for (std::size_t L = 0; L < occupied.size(); ++L)
        if (!occupied[L]) w.constants[L] = F.ctx->zero();
    return w;
}

bool verify_witness(const PartialMap& F, const AffineWitness& w) {
    const FieldCtx& ctx = *F.ctx;
    if (w.U.n() != ctx.n() || w.U.p() != ctx.p()) return false;
    if (w.M.coeffs.size() != ctx.n()) return false;
    if (w.constants.size() != w.U.num_cosets()) return false;
    for (unsigned j = w.U.dim(); j < ctx.n(); ++j)
        if (w.M.coeffs[j] != ctx.zero()) return false;
    for (std::size_t i = 0; i < F.size(); ++i)
        if (w.eval(ctx, F.domain[i]) != F.values[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Search

namespace {

using Clock = std::chrono::steady_clock;

struct ScanOutcome {
    std::optional<std::uint64_t> found;
    bool timed_out = false;
    std::uint64_t scanned = 0;
};

unsigned resolve_threads(unsigned t) {
    if (t != 0) return t;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Least index in [0, total) accepted by a predicate. Each worker owns the
// predicate returned by make_pred. Chunks are claimed in increasing order and
// the running minimum only decreases, so every index below the final minimum
// has been examined whatever the interleaving.
template <class MakePred>
ScanOutcome scan_first(std::uint64_t total, unsigned threads, std::optional<Clock::time_point> deadline,
                       MakePred make_pred) {
    constexpr std::uint64_t kChunk = 16;
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> next{0}, best{kNone}, scanned{0};
    std::atomic<bool> timed_out{false};

    auto worker = [&] {
        auto pred = make_pred();
        for (;;) {
            const std::uint64_t start = next.fetch_add(kChunk);
            if (start >= total || start >= best.load() || timed_out.load()) return;
            const std::uint64_t end = std::min(total, start + kChunk);
            for (std::uint64_t i = start; i < end; ++i) {
                if (i >= best.load()) return;
                if (deadline && Clock::now() > *deadline) {
                    timed_out = true;
                    return;
                }
                scanned.fetch_add(1);
                if (pred(i)) {
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    return;
                }
            }
        }
    };

    threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(1, total / kChunk)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    ScanOutcome out;
    out.timed_out = timed_out.load();
    out.scanned = scanned.load();
    if (!out.timed_out && best.load() != kNone) out.found = best.load();
    return out;
}

// Drives the ascending-k scan. accept(U, index) runs inside workers and must
// be thread-safe given a per-worker tester from make_tester.
template <class MakeAccept>
IndexResult scan_codims(const PartialMap& F, const SearchOptions& opts, MakeAccept make_accept,
                        std::optional<AffineWitness> (*witness_of)(const PartialMap&, const Subspace&,
                                                                   std::uint64_t, void*),
                        void* ctxptr) {
    const FieldCtx& ctx = *F.ctx;
    const unsigned n = ctx.n();
    const unsigned kmax = std::min(n, opts.k_max.value_or(n));
    IndexResult res;
    for (unsigned k = 0; k <= kmax; ++k) {
        const SubspaceEnumeration E(ctx.p(), n, n - k);
        CodimRecord rec;
        rec.k = k;
        rec.subspaces_total = E.size();
        const ScanOutcome out = scan_first(E.size(), opts.threads, opts.deadline, [&] {
            auto accept = make_accept();
            return [&E, accept](std::uint64_t i) mutable { return accept(E.at(i), i); };
        });
        if (out.timed_out) {
            rec.complete = false;
            rec.subspaces_tested = out.scanned;
            res.per_k.push_back(rec);
            res.least_codim = k;
            res.complete = false;
            return res;
        }
        rec.feasible = out.found.has_value();
        rec.subspaces_tested = out.found ? *out.found + 1 : E.size();
        res.per_k.push_back(rec);
        if (out.found) {
            res.least_codim = k;
            if (!(opts.suppress_trivial_witness && k == n))
                res.witness = witness_of(F, E.at(*out.found), *out.found, ctxptr);
            return res;
        }
    }
    // nothing up to k_max < n
    res.least_codim = kmax + 1;
    res.complete = false;
    return res;
}

std::optional<AffineWitness> plain_witness(const PartialMap& F, const Subspace& U, std::uint64_t, void*) {
    return fit_witness(F, U);
}

// Lexicographically first m-subset of positions whose removal makes F
// feasible on U, written to `chosen`.
bool feasible_after_drop(FeasibilityTester& t, const Subspace& U, std::size_t size, std::size_t m,
                         std::vector<std::size_t>& chosen) {
    chosen.resize(m);
    for (std::size_t i = 0; i < m; ++i) chosen[i] = i;
    if (t(U)) return true;  // restriction keeps feasibility; first subset works
    if (m == 0) return false;
    std::vector<bool> skip(size, false);
    for (;;) {
        std::fill(skip.begin(), skip.end(), false);
        for (auto c : chosen) skip[c] = true;
        if (t(U, skip)) return true;
        std::size_t i = m;
        while (i > 0 && chosen[i - 1] == size - m + (i - 1)) --i;
        if (i == 0) return false;
        ++chosen[i - 1];
        for (std::size_t j = i; j < m; ++j) chosen[j] = chosen[j - 1] + 1;
    }
}

struct OutlierState {
    std::size_t m = 0;
    std::mutex mu;
    std::map<std::uint64_t, std::vector<std::size_t>> drops;
    std::vector<std::size_t> last_drop;
};

std::optional<AffineWitness> outlier_witness(const PartialMap& F, const Subspace& U, std::uint64_t index,
                                             void* state) {
    auto* st = static_cast<OutlierState*>(state);
    std::lock_guard lock(st->mu);
    st->last_drop = st->drops.at(index);
    return fit_witness(restrict_without(F, st->last_drop), U);
}

}  // namespace

SearchOptions default_search_options() {
    SearchOptions o;
    if (const char* env = std::getenv("ADDIX_BUDGET_MS")) {
        char* end = nullptr;
        const long long ms = std::strtoll(env, &end, 10);
        if (end != env && ms > 0) o.deadline = Clock::now() + std::chrono::milliseconds(ms);
    }
    return o;
}

IndexResult least_codimension(const PartialMap& F, const SearchOptions& opts) {
    F.validate();
    return scan_codims(
        F, opts,
        [&F] {
            return [t = std::make_shared<FeasibilityTester>(F)](const Subspace& U, std::uint64_t) { return (*t)(U); };
        },
        &plain_witness, nullptr);
}

IndexResult least_codimension_with_outliers(const PartialMap& F, std::uint64_t m, const SearchOptions& opts) {
    F.validate();
    if (m == 0) return least_codimension(F, opts);
    const std::size_t size = F.size();
    const std::size_t mm = static_cast<std::size_t>(std::min<std::uint64_t>(m, size));
    if (size > kOutlierMaxDomain)
        throw Error(ErrorKind::BudgetExceeded, "outlier search limited to domains of at most 64 points");
    if (binomial(size, mm) > kOutlierMaxSubsets)
        throw Error(ErrorKind::BudgetExceeded, "outlier search would examine more than 50000 subsets per subspace");

    OutlierState st;
    st.m = mm;
    IndexResult res = scan_codims(
        F, opts,
        [&F, &st, size, mm] {
            auto t = std::make_shared<FeasibilityTester>(F);
            return [t, &st, size, mm](const Subspace& U, std::uint64_t index) {
                std::vector<std::size_t> chosen;
                if (!feasible_after_drop(*t, U, size, mm, chosen)) return false;
                std::lock_guard lock(st.mu);
                st.drops[index] = chosen;
                return true;
            };
        },
        &outlier_witness, &st);
    if (res.witness) res.dropped = st.last_drop;
    return res;
}

}  // namespace addix

#include "addix/residues.hpp"

#include "addix/arith.hpp"
#include "addix/error.hpp"

#include <algorithm>

namespace addix {

namespace {

void guard(std::uint64_t T) {
    if (T == 0) throw Error(ErrorKind::InvalidArgument, "T must be positive");
    if (T > kResidueOracleCap) throw Error(ErrorKind::BudgetExceeded, "enumeration limited to T <= 10^7");
}

std::uint64_t sqmod(std::uint64_t x, std::uint64_t T) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % T);
}

}  // namespace

std::uint64_t count_squares_prime_power(std::uint64_t p, unsigned l) {
    if (l == 0) return 1;
    unsigned __int128 pl1 = 1;
    for (unsigned i = 0; i <= l; ++i) pl1 *= p;
    unsigned __int128 v;
    if (p == 2) {
        const unsigned __int128 h = pl1 / 4;  // 2^{l-1}
        v = (l % 2 == 0) ? (h + 4) / 3 : (h + 5) / 3;
    } else {
        v = (l % 2 == 0) ? (pl1 + p + 2) / (2 * (p + 1)) : (pl1 + 2 * p + 1) / (2 * (p + 1));
    }
    return static_cast<std::uint64_t>(v);
}

std::uint64_t count_squares(std::uint64_t T) {
    if (T == 0) throw Error(ErrorKind::InvalidArgument, "T must be positive");
    std::uint64_t r = 1;
    for (auto [p, l] : factorize(T)) r *= count_squares_prime_power(p, l);
    return r;
}

std::uint64_t count_squares_oracle(std::uint64_t T) {
    guard(T);
    std::vector<bool> seen(T, false);
    std::uint64_t c = 0;
    for (std::uint64_t x = 0; x < T; ++x) {
        const auto y = sqmod(x, T);
        if (!seen[y]) {
            seen[y] = true;
            ++c;
        }
    }
    return c;
}

std::vector<std::uint64_t> class_square_counts(std::uint64_t s, std::uint64_t T) {
    guard(T);
    if (s == 0 || T % s != 0) throw Error(ErrorKind::NotADivisor, "s must divide T");
    std::vector<std::uint64_t> out(s, 0);
    // last class that reached each square, so each (a, y) is counted once
    std::vector<std::uint64_t> mark(T, UINT64_MAX);
    for (std::uint64_t a = 0; a < s; ++a)
        for (std::uint64_t x = a; x < T; x += s) {
            const auto y = sqmod(x, T);
            if (mark[y] != a) {
                mark[y] = a;
                ++out[a];
            }
        }
    return out;
}

std::uint64_t count_squares_in_class(std::uint64_t a, std::uint64_t s, std::uint64_t T) {
    const auto c = class_square_counts(s, T);
    return c[a % s];
}

std::uint64_t class_max(std::uint64_t s, std::uint64_t T) {
    const auto c = class_square_counts(s, T);
    return *std::max_element(c.begin(), c.end());
}

std::vector<std::uint64_t> sqrt_count_table(std::uint64_t T) {
    guard(T);
    std::vector<std::uint64_t> L(T, 0);
    for (std::uint64_t x = 0; x < T; ++x) ++L[sqmod(x, T)];
    return L;
}

std::uint64_t sqrt_count(std::uint64_t j, std::uint64_t T) { return sqrt_count_table(T).at(j % T); }

std::uint64_t sqrt_count_max(std::uint64_t T) {
    const auto L = sqrt_count_table(T);
    return *std::max_element(L.begin(), L.end());
}

std::uint64_t sqrt_count_max_multiplicative(std::uint64_t T) {
    std::uint64_t r = 1;
    for (auto [p, l] : factorize(T)) r *= sqrt_count_max(ipow_sat(p, l));
    return r;
}

CountReport count_report(const std::string& what, std::uint64_t T, std::optional<std::uint64_t> s,
                         std::optional<std::uint64_t> a) {
    CountReport r;
    r.what = what;
    r.T = T;
    if (what == "NT") {
        r.formula_value = count_squares(T);
        r.oracle_value = count_squares_oracle(T);
    } else if (what == "NsT") {
        if (!s) throw Error(ErrorKind::InvalidArgument, "NsT needs s");
        r.s = s;
        r.a = a;
        r.formula_value = a ? count_squares_in_class(*a, *s, T) : class_max(*s, T);
    } else if (what == "LT") {
        r.formula_value = sqrt_count_max_multiplicative(T);
        r.oracle_value = sqrt_count_max(T);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown count '" + what + "'");
    }
    r.agreed = !r.oracle_value || *r.oracle_value == r.formula_value;
    return r;
}

}  // namespace addix

#pragma once

// Squares modulo T and square-root counts: N(T), N(a, s, T), N(s, T),
// L_T(j) and L_T, by closed formula and by direct enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace addix {

inline constexpr std::uint64_t kResidueOracleCap = 10'000'000;

/// Number of squares modulo p^l (p prime, l >= 1) by closed formula.
std::uint64_t count_squares_prime_power(std::uint64_t p, unsigned l);

/// N(T): product of the prime-power counts.
std::uint64_t count_squares(std::uint64_t T);

/// |{x^2 mod T}| by enumeration. Throws BudgetExceeded for T > 10^7.
std::uint64_t count_squares_oracle(std::uint64_t T);

/// For each class a mod s, the number of distinct squares x^2 mod T with
/// x = a mod s. Throws NotADivisor unless s | T.
std::vector<std::uint64_t> class_square_counts(std::uint64_t s, std::uint64_t T);

/// N(a, s, T).
std::uint64_t count_squares_in_class(std::uint64_t a, std::uint64_t s, std::uint64_t T);

/// N(s, T) = max_a N(a, s, T).
std::uint64_t class_max(std::uint64_t s, std::uint64_t T);

/// L_T(j) for every j in [0, T).
std::vector<std::uint64_t> sqrt_count_table(std::uint64_t T);

/// L_T(j) = #{x mod T : x^2 = j}.
std::uint64_t sqrt_count(std::uint64_t j, std::uint64_t T);

/// L_T = max_j L_T(j).
std::uint64_t sqrt_count_max(std::uint64_t T);

/// L_T as the product of L over the prime-power parts of T.
std::uint64_t sqrt_count_max_multiplicative(std::uint64_t T);

struct CountReport {
    std::string what;  // "NT", "NsT" or "LT"
    std::uint64_t T = 0;
    std::optional<std::uint64_t> a, s;
    std::uint64_t formula_value = 0;
    std::optional<std::uint64_t> oracle_value;
    bool agreed = true;
};

/// NT: formula and oracle. NsT: class maximum (or one class when a is given),
/// formula value is the enumeration. LT: multiplicative product vs maximum.
CountReport count_report(const std::string& what, std::uint64_t T, std::optional<std::uint64_t> s = std::nullopt,
                         std::optional<std::uint64_t> a = std::nullopt);

}  // namespace addix

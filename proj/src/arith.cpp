#include "addix/arith.hpp"
#include "addix/error.hpp"

#include <limits>

namespace addix {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MTooLarge: return "MTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::uint64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t x) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= x; d += (d == 2 ? 1 : 2)) {
        if (x % d != 0) continue;
        unsigned e = 0;
        while (x % d == 0) {
            x /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (auto [r, e] : factorize(x)) out.push_back(r);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t x) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= x; ++d) {
        if (x % d != 0) continue;
        small.push_back(d);
        if (d != x / d) large.push_back(x / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t ipow_sat(std::uint64_t b, unsigned e) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > kMax / b) return kMax;
        r *= b;
    }
    return r;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace addix

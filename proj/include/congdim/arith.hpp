// Exact integer arithmetic used by every other module: overflow-checked
// 64-bit ops, Kronecker symbol, Moebius function, divisor sum, deterministic
// primality and factorization. All inputs fit in 63 bits; anything that
// would wrap raises std::overflow_error instead.
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace congdim {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

[[noreturn]] inline void overflow_fail(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) overflow_fail("add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) overflow_fail("sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) overflow_fail("mul");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i128 checked_add128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) overflow_fail("add128");
    return r;
}

inline i128 checked_sub128(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) overflow_fail("sub128");
    return r;
}

inline i128 checked_mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) overflow_fail("mul128");
    return r;
}

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? (u128)0 - (u128)v : (u128)v;
    std::string s;
    while (x > 0) {
        s.push_back(char('0' + (int)(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

// floor(sqrt(n)) for n >= 0; the fix-up loops compare in 128 bits so the
// probe (r+1)^2 cannot wrap near the top of the i64 range.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    i64 r = (i64)std::sqrt((double)n);
    if (r < 1) r = 1;
    while (r > 0 && (u128)r * (u128)r > (u128)n) --r;
    while ((u128)(r + 1) * (u128)(r + 1) <= (u128)n) ++r;
    return r;
}

inline bool is_perfect_square(i64 n, i64* root = nullptr) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

// Kronecker symbol (a/n), n != 0. Extends the Jacobi symbol to even and
// negative lower arguments with the usual conventions for (a/2) and (a/-1).
inline int kronecker(i64 a, i64 n) {
    if (n == 0) throw std::invalid_argument("kronecker: n must be nonzero");
    int result = 1;
    if (n < 0) {
        n = checked_neg(n);
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        while (n % 2 == 0) {
            n /= 2;
            i64 am8 = ((a % 8) + 8) % 8;
            if (am8 == 3 || am8 == 5) result = -result;
        }
    }
    // n is odd and positive: standard Jacobi reciprocity loop
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

namespace detail {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; the base set below is known to be exact for
// all n < 3.3e24, well past the 63-bit range this library supports.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = (u64)n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = detail::powmod_u64(a, d, (u64)n);
        if (x == 1 || x == (u64)n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = detail::mulmod_u64(x, x, (u64)n);
            if (x == (u64)n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

struct PrimePower {
    i64 p;
    int e;
    bool operator==(const PrimePower&) const = default;
};

// Trial division; ample for the scale this library targets (|n| well below
// 2^63 with small factors in practice).
inline std::vector<PrimePower> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<PrimePower> out;
    auto take = [&](i64 p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    };
    take(2);
    take(3);
    for (i64 d = 5; d * d <= n; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline bool is_squarefree(i64 n) {
    if (n < 1) throw std::invalid_argument("is_squarefree: n must be >= 1");
    for (const auto& pp : factorize(n))
        if (pp.e > 1) return false;
    return true;
}

inline int mobius(i64 n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
    int count = 0;
    for (const auto& pp : factorize(n)) {
        if (pp.e > 1) return 0;
        ++count;
    }
    return count % 2 == 0 ? 1 : -1;
}

inline i64 sigma1(i64 n) {
    if (n < 1) throw std::invalid_argument("sigma1: n must be >= 1");
    i64 total = 1;
    for (const auto& pp : factorize(n)) {
        // (p^(e+1) - 1) / (p - 1), built multiplicatively
        i64 term = 1, power = 1;
        for (int i = 0; i < pp.e; ++i) {
            power = checked_mul(power, pp.p);
            term = checked_add(term, power);
        }
        total = checked_mul(total, term);
    }
    return total;
}

// All positive divisors, unsorted.
inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (const auto& pp : factorize(n)) {
        std::size_t base = out.size();
        i64 power = 1;
        for (int i = 0; i < pp.e; ++i) {
            power = checked_mul(power, pp.p);
            for (std::size_t j = 0; j < base; ++j) out.push_back(checked_mul(out[j], power));
        }
    }
    return out;
}

}  // namespace congdim

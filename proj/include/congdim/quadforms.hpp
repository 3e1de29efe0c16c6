// Binary quadratic forms of negative discriminant: reduced-form enumeration,
// class numbers, Hurwitz class numbers via the conductor sum, and the
// residue-class factor b(p) used throughout the congruence checks.
#pragma once

#include <vector>

#include "congdim/arith.hpp"
#include "congdim/rational.hpp"

namespace congdim {

// A negative discriminant together with its unique decomposition
// value = fundamental_part * conductor^2.
struct Discriminant {
    i64 value = 0;
    i64 fundamental_part = 0;
    i64 conductor = 1;

    bool fundamental() const { return conductor == 1; }

    static Discriminant of(i64 value) {
        if (value >= 0) throw std::invalid_argument("Discriminant: value must be negative");
        i64 r = ((value % 4) + 4) % 4;
        if (r != 0 && r != 1)
            throw std::invalid_argument("Discriminant: value must be 0 or 1 mod 4, got " +
                                        std::to_string(value));
        // squarefree part s and cofactor f1 with |value| = s * f1^2
        i64 s = 1, f1 = 1;
        for (const auto& pp : factorize(-value)) {
            if (pp.e % 2 == 1) s = checked_mul(s, pp.p);
            for (int i = 0; i < pp.e / 2; ++i) f1 = checked_mul(f1, pp.p);
        }
        Discriminant d;
        d.value = value;
        if (((-s % 4) + 4) % 4 == 1) {
            d.fundamental_part = -s;
            d.conductor = f1;
        } else {
            // -s = 2,3 mod 4 forces f1 even, since value = 0,1 mod 4
            d.fundamental_part = checked_mul(-4, s);
            d.conductor = f1 / 2;
        }
        return d;
    }
};

// Delta_n for squarefree n >= 1: the discriminant of Q(sqrt(-n)).
inline Discriminant fundamental_discriminant(i64 n) {
    if (n < 1) throw std::invalid_argument("fundamental_discriminant: n must be >= 1");
    if (!is_squarefree(n))
        throw std::invalid_argument("fundamental_discriminant: n must be squarefree, got " +
                                    std::to_string(n));
    i64 v = (n % 4 == 3) ? -n : checked_mul(-4, n);
    Discriminant d;
    d.value = v;
    d.fundamental_part = v;
    d.conductor = 1;
    return d;
}

struct QuadForm {
    i64 a = 0, b = 0, c = 0;

    i64 disc() const { return checked_sub(checked_mul(b, b), checked_mul(4, checked_mul(a, c))); }

    bool is_reduced() const {
        i64 ab = b < 0 ? -b : b;
        if (!(ab <= a && a <= c)) return false;
        if ((ab == a || a == c) && b < 0) return false;
        return true;
    }

    bool is_primitive() const { return std::gcd(std::gcd(a, b < 0 ? -b : b), c) == 1; }

    bool operator==(const QuadForm&) const = default;
};

// The complete list of primitive reduced forms of discriminant D.
// Bounds: |b| <= a <= sqrt(|D|/3), c = (b^2 - D) / (4a).
inline std::vector<QuadForm> reduced_forms(const Discriminant& D) {
    std::vector<QuadForm> out;
    i64 absD = -D.value;
    i64 parity = ((D.value % 2) + 2) % 2;
    for (i64 a = 1; 3 * a * a <= absD; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            if (((b % 2) + 2) % 2 != parity) continue;
            i64 num = checked_add(checked_mul(b, b), absD);
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            QuadForm f{a, b, c};
            if (!f.is_reduced() || !f.is_primitive()) continue;
            out.push_back(f);
        }
    }
    return out;
}

inline i64 class_number(const Discriminant& D) { return (i64)reduced_forms(D).size(); }

// Unit count of the quadratic order of discriminant d: 6 and 4 only for the
// two discriminants with extra units.
inline int unit_count(i64 d) { return d == -3 ? 6 : (d == -4 ? 4 : 2); }

// Hurwitz class number H(D) = (2 h(Delta) / w(Delta)) * sum over d | f of
// mu(d) (Delta/d) sigma1(f/d), where D = Delta f^2 with Delta fundamental.
inline Rational hurwitz(const Discriminant& D) {
    i64 h = class_number(Discriminant::of(D.fundamental_part));
    i64 sum = 0;
    for (i64 d : divisors(D.conductor)) {
        i64 term = checked_mul((i64)mobius(d), (i64)kronecker(D.fundamental_part, d));
        term = checked_mul(term, sigma1(D.conductor / d));
        sum = checked_add(sum, term);
    }
    return Rational(checked_mul(2, h), unit_count(D.fundamental_part)) * Rational(sum);
}

struct ClassData {
    i64 h = 0;        // primitive reduced form count for the given discriminant
    int w = 2;        // units of that discriminant's order
    Rational hurwitz; // weighted class number via the conductor sum
};

inline ClassData class_data(const Discriminant& D) {
    return ClassData{class_number(D), unit_count(D.value), hurwitz(D)};
}

// Class number of Q(sqrt(-p)).
inline i64 class_number_qfield(i64 p) { return class_number(fundamental_discriminant(p)); }

// b(p) for odd primes p >= 5: 1, 2, or 4 depending on p mod 8.
inline int b_factor(i64 p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("b_factor: requires a prime p >= 5, got " + std::to_string(p));
    if (p % 4 == 1) return 1;
    return p % 8 == 7 ? 2 : 4;
}

}  // namespace congdim

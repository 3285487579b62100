#pragma once

#include <cstdint>
#include <string>

#include "kpn/errors.hpp"

namespace kpn {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul");
    return r;
}

// The abelian group pi (and coefficient group G): the integers, or integers mod m.
// Elements are long long, kept in [0, m) when modular.
struct CoeffGroup {
    long long modulus = 0;  // 0 = Z, m >= 2 = Z/m

    CoeffGroup() = default;
    explicit CoeffGroup(long long m) : modulus(m) {
        if (m != 0 && m < 2) throw ValidationError("modulus must be 0 (integers) or >= 2");
    }
    static CoeffGroup integers() { return CoeffGroup(0); }
    static CoeffGroup mod(long long m) { return CoeffGroup(m); }

    bool is_modular() const { return modulus != 0; }
    bool operator==(const CoeffGroup& o) const { return modulus == o.modulus; }

    long long normalize(long long v) const {
        if (!is_modular()) return v;
        long long r = v % modulus;
        return r < 0 ? r + modulus : r;
    }
    long long add(long long a, long long b) const { return normalize(checked_add(a, b)); }
    long long sub(long long a, long long b) const { return normalize(checked_sub(a, b)); }
    long long neg(long long a) const { return normalize(-a); }
    // scalar multiple k*a (k an integer, a a group element)
    long long scale(long long k, long long a) const { return normalize(checked_mul(k, a)); }

    std::string to_string() const {
        return is_modular() ? "Z/" + std::to_string(modulus) : "Z";
    }
};

// Homology coefficient choice: Z (p == 0) or the prime field F_p.
struct HomCoeff {
    long long p = 0;
    static HomCoeff integers() { return {0}; }
    static HomCoeff field(long long p) { return {p}; }
    bool is_field() const { return p != 0; }
    std::string to_string() const { return p == 0 ? "Z" : "F_" + std::to_string(p); }
};

}  // namespace kpn

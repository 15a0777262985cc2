#pragma once

#include <cstdint>

#include "su21/liealg.hpp"

namespace su21::test {

/// Deterministic generator for property-style checks.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long small_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rational() {
        long num = small_int(-9, 9);
        long den = small_int(1, 7);
        return rat(num, den);
    }

    FieldElement field() {
        return FieldElement(rational(), rational(), rational(), rational());
    }

    FieldElement nonzero_field() {
        for (;;) {
            FieldElement a = field();
            if (!a.is_zero()) return a;
        }
    }

    FieldElement real_field() {
        Rational r = rational(), s = rational();
        return FieldElement(r) + s * FieldElement::sqrt2();
    }

    Mat3 matrix() {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = field();
        return m;
    }

    /// Random element of su(2,1) as a rational a-basis combination.
    Mat3 su21_element() {
        Mat3 m;
        for (int k = 1; k <= 8; ++k)
            m = m + FieldElement(rational()) * a_basis()[static_cast<size_t>(k - 1)];
        return m;
    }
};

inline Mat3 A(int k) { return a_basis()[static_cast<size_t>(k - 1)]; }
inline Mat3 Cv(Chev c) { return chevalley_basis()[c]; }

} // namespace su21::test

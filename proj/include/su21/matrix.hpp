#pragma once

#include <array>
#include <initializer_list>
#include <string>

#include "field.hpp"

namespace su21 {

/// 3x3 matrix over Q(z), row-major.  Carrier for group elements,
/// algebra elements and witness matrices alike; immutable value type.
class Mat3 {
public:
    Mat3() = default;

    Mat3(std::initializer_list<FieldElement> entries) {
        if (entries.size() != 9) throw error("Mat3 needs 9 entries");
        size_t k = 0;
        for (const auto& x : entries) e_[k++] = x;
    }

    static Mat3 zero() { return Mat3(); }

    static Mat3 identity() {
        return diag(FieldElement::one(), FieldElement::one(), FieldElement::one());
    }

    static Mat3 diag(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
        Mat3 m;
        m.at(0, 0) = a;
        m.at(1, 1) = b;
        m.at(2, 2) = c;
        return m;
    }

    /// Elementary matrix E_{rc} (1-based indices to match standard notation).
    static Mat3 unit(int r, int c) {
        Mat3 m;
        m.at(r - 1, c - 1) = FieldElement::one();
        return m;
    }

    /// The Hermitian form diag(1, 1, -1) defining su(2,1).
    static Mat3 form_n() {
        return diag(FieldElement::one(), FieldElement::one(), -FieldElement::one());
    }

    FieldElement& at(int r, int c) { return e_[static_cast<size_t>(3 * r + c)]; }
    const FieldElement& at(int r, int c) const { return e_[static_cast<size_t>(3 * r + c)]; }

    friend Mat3 operator+(const Mat3& a, const Mat3& b) {
        Mat3 m;
        for (size_t k = 0; k < 9; ++k) m.e_[k] = a.e_[k] + b.e_[k];
        return m;
    }

    friend Mat3 operator-(const Mat3& a, const Mat3& b) {
        Mat3 m;
        for (size_t k = 0; k < 9; ++k) m.e_[k] = a.e_[k] - b.e_[k];
        return m;
    }

    Mat3 operator-() const {
        Mat3 m;
        for (size_t k = 0; k < 9; ++k) m.e_[k] = -e_[k];
        return m;
    }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                FieldElement s;
                for (int k = 0; k < 3; ++k) s += a.at(r, k) * b.at(k, c);
                m.at(r, c) = s;
            }
        return m;
    }

    friend Mat3 operator*(const FieldElement& s, const Mat3& a) {
        Mat3 m;
        for (size_t k = 0; k < 9; ++k) m.e_[k] = s * a.e_[k];
        return m;
    }

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

    Mat3 transpose() const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = at(c, r);
        return m;
    }

    Mat3 conj_entries() const {
        Mat3 m;
        for (size_t k = 0; k < 9; ++k) m.e_[k] = e_[k].conj();
        return m;
    }

    /// Conjugate transpose.
    Mat3 dagger() const { return conj_entries().transpose(); }

    FieldElement trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

    bool is_traceless() const { return trace().is_zero(); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    FieldElement det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    /// Exact inverse via the adjugate.
    Mat3 inverse() const {
        FieldElement d = det();
        if (d.is_zero()) throw singular_matrix();
        FieldElement id = d.inverse();
        Mat3 adj;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
                const int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
                // Cofactor of (r, c), transposed into (c, r).
                adj.at(c, r) = at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
            }
        return id * adj;
    }

    /// Coefficients (p2, p1, p0) of det(tI - A) = t^3 + p2 t^2 + p1 t + p0.
    std::array<FieldElement, 3> charpoly() const {
        FieldElement tr = trace();
        FieldElement tr_sq = (*this * *this).trace();
        FieldElement p2 = -tr;
        FieldElement p1 = rat(1, 2) * (tr * tr - tr_sq);
        FieldElement p0 = -det();
        return {p2, p1, p0};
    }

    /// Evaluate the characteristic polynomial at t.
    FieldElement charpoly_at(const FieldElement& t) const {
        auto p = charpoly();
        return ((t + p[0]) * t + p[1]) * t + p[2];
    }

    std::string key() const {
        std::string s;
        for (const auto& x : e_) s += x.key();
        return s;
    }

    std::string str() const {
        std::string s = "[";
        for (int r = 0; r < 3; ++r) {
            s += "[";
            for (int c = 0; c < 3; ++c) {
                s += at(r, c).str();
                if (c < 2) s += ", ";
            }
            s += r < 2 ? "], " : "]";
        }
        return s + "]";
    }

private:
    std::array<FieldElement, 9> e_{};
};

} // namespace su21

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"

namespace su21 {

using Vec = std::vector<FieldElement>;

/// Reduced row-echelon form in place; deterministic first-nonzero pivot rule,
/// leading entries 1, zero rows dropped.  Returns the rank.  RREF of a row
/// space is unique, so equal spans yield identical canonical forms.
inline int rref(std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        FieldElement inv = rows[pivot_row][col].inverse();
        for (size_t c = col; c < ncols; ++c) rows[pivot_row][c] = inv * rows[pivot_row][c];
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (size_t c = col; c < ncols; ++c)
                rows[r][c] = rows[r][c] - f * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return static_cast<int>(pivot_row);
}

/// Whether v lies in the row space described by rref rows.
inline bool in_rowspace(const std::vector<Vec>& rref_rows, Vec v) {
    for (const Vec& row : rref_rows) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p == row.size()) continue;
        if (v[p].is_zero()) continue;
        FieldElement f = v[p];
        for (size_t c = p; c < v.size(); ++c) v[c] = v[c] - f * row[c];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Solve sum_k x_k basis[k] = target for coordinate vectors of equal length.
/// Returns nullopt when target is outside the span; free variables (if the
/// basis is dependent) are set to zero.
inline std::optional<Vec> solve_coords(const std::vector<Vec>& basis, const Vec& target) {
    if (basis.empty()) return std::nullopt;
    const size_t m = target.size();
    const size_t k = basis.size();
    // Rows of the augmented system A x = target, A columns = basis vectors.
    std::vector<Vec> aug(m, Vec(k + 1, FieldElement::zero()));
    for (size_t r = 0; r < m; ++r) {
        for (size_t j = 0; j < k; ++j) aug[r][j] = basis[j][r];
        aug[r][k] = target[r];
    }
    rref(aug);
    Vec x(k, FieldElement::zero());
    for (const Vec& row : aug) {
        size_t p = 0;
        while (p < row.size() && row[p].is_zero()) ++p;
        if (p == row.size()) continue;
        if (p == k) return std::nullopt; // inconsistent
        x[p] = row[k];
    }
    return x;
}

struct Signature {
    int p = 0; // positive
    int n = 0; // negative
    int z = 0; // zero

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.n == b.n && a.z == b.z;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(n) + "," +
               std::to_string(z) + ")";
    }
};

/// Exact signature of a Hermitian (or real symmetric) Gram matrix by
/// congruence reduction; diagonal entries are conjugation-fixed throughout,
/// so their signs are decided by real_sign.
inline Signature signature_of(std::vector<Vec> m) {
    Signature sig;
    size_t n = m.size();
    std::vector<size_t> act(n);
    for (size_t k = 0; k < n; ++k) act[k] = k;

    while (!act.empty()) {
        // Prefer a nonzero diagonal pivot.
        size_t pi = act.size();
        for (size_t a = 0; a < act.size(); ++a) {
            if (!m[act[a]][act[a]].is_zero()) {
                pi = a;
                break;
            }
        }
        if (pi == act.size()) {
            // All active diagonal entries vanish; look for an off-diagonal
            // entry and change basis so a diagonal pivot appears.
            size_t bi = act.size(), bj = act.size();
            for (size_t a = 0; a < act.size() && bi == act.size(); ++a)
                for (size_t b = a + 1; b < act.size(); ++b)
                    if (!m[act[a]][act[b]].is_zero()) {
                        bi = a;
                        bj = b;
                        break;
                    }
            if (bi == act.size()) {
                sig.z += static_cast<int>(act.size());
                break;
            }
            const size_t i = act[bi], j = act[bj];
            FieldElement v = m[i][j];
            // Replace e_i by e_i + c e_j with c = 1 (or i when Re vanishes):
            // the new diagonal entry is 2 Re(v) resp. -2 Im(v), nonzero.
            FieldElement c = (v + v.conj()).is_zero() ? FieldElement::i()
                                                      : FieldElement::one();
            for (size_t r = 0; r < n; ++r) m[r][i] = m[r][i] + c * m[r][j];
            FieldElement cb = c.conj();
            for (size_t cix = 0; cix < n; ++cix) m[i][cix] = m[i][cix] + cb * m[j][cix];
            continue;
        }

        const size_t i = act[pi];
        FieldElement d = m[i][i];
        sig.p += d.real_sign() == Sign::positive ? 1 : 0;
        sig.n += d.real_sign() == Sign::negative ? 1 : 0;
        FieldElement dinv = d.inverse();
        // Split off the pivot: m'_{rc} = m_{rc} - m_{ri} m_{ic} / m_{ii}.
        for (size_t a = 0; a < act.size(); ++a) {
            if (act[a] == i) continue;
            const size_t r = act[a];
            if (m[r][i].is_zero()) continue;
            FieldElement f = m[r][i] * dinv;
            for (size_t b = 0; b < act.size(); ++b) {
                const size_t c2 = act[b];
                m[r][c2] = m[r][c2] - f * m[i][c2];
            }
        }
        act.erase(act.begin() + static_cast<long>(pi));
        for (size_t a = 0; a < act.size(); ++a) {
            m[act[a]][i] = FieldElement::zero();
            m[i][act[a]] = FieldElement::zero();
        }
    }
    return sig;
}

} // namespace su21

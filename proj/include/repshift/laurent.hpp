#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "repshift/errors.hpp"

namespace repshift {

using Int = boost::multiprecision::cpp_int;

// ----------------------------------------------------------- coefficients --

/// ℤ[ζ] with ζ² = −1 − ζ (primitive cube root of unity), stored as x + yζ.
struct Zeta {
    Int x = 0, y = 0;

    Zeta() = default;
    Zeta(Int x_, Int y_ = 0) : x(std::move(x_)), y(std::move(y_)) {}
    Zeta(int v) : x(v) {}

    Zeta conj() const { return {x - y, -y}; } // ζ ↦ ζ²
    Zeta operator+(const Zeta& o) const { return {x + o.x, y + o.y}; }
    Zeta operator-(const Zeta& o) const { return {x - o.x, y - o.y}; }
    Zeta operator-() const { return {-x, -y}; }
    Zeta operator*(const Zeta& o) const {
        // (x + yζ)(u + vζ) = xu − yv + (xv + yu − yv)ζ
        return {x * o.x - y * o.y, x * o.y + y * o.x - y * o.y};
    }
    bool operator==(const Zeta&) const = default;
};

/// Residue in ℤ_p, p prime.
struct Zp {
    long long v = 0;
    long long p = 0;

    Zp() = default;
    Zp(long long value, long long modulus) : p(modulus) {
        if (modulus <= 1) throw DomainError("modulus must be at least 2");
        v = value % modulus;
        if (v < 0) v += modulus;
    }
    Zp operator+(const Zp& o) const {
        long long m = merged(o);
        return m ? Zp{v + o.v, m} : Zp{};
    }
    Zp operator-(const Zp& o) const {
        long long m = merged(o);
        return m ? Zp{v - o.v, m} : Zp{};
    }
    Zp operator-() const { return p ? Zp{-v, p} : Zp{}; }
    Zp operator*(const Zp& o) const {
        long long m = merged(o);
        return m ? Zp{v * o.v, m} : Zp{};
    }
    bool operator==(const Zp& o) const { return v == o.v; }

private:
    // a default-constructed Zp is the context-free zero (modulus 0)
    long long merged(const Zp& o) const {
        if (p && o.p && p != o.p) throw DomainError("mixed moduli");
        return p ? p : o.p;
    }
};

inline bool ring_is_zero(const Int& a) { return a == 0; }
inline bool ring_is_zero(const Zeta& a) { return a.x == 0 && a.y == 0; }
inline bool ring_is_zero(const Zp& a) { return a.v == 0; }

/// Exact division; throws InternalError when the quotient leaves the ring.
Int ring_div(const Int& a, const Int& b);
Zeta ring_div(const Zeta& a, const Zeta& b);
Zp ring_div(const Zp& a, const Zp& b);

std::string ring_str(const Int& a);
std::string ring_str(const Zeta& a);
std::string ring_str(const Zp& a);

// ------------------------------------------------------------ polynomials --

/// Laurent polynomial: coeffs[i] is the coefficient of t^(low + i). Kept
/// trimmed: empty means zero, otherwise first and last coefficients nonzero.
template <class R>
struct LaurentPoly {
    int low = 0;
    std::vector<R> coeffs;

    LaurentPoly() = default;
    LaurentPoly(R constant) {
        if (!ring_is_zero(constant)) coeffs.push_back(std::move(constant));
    }
    static LaurentPoly monomial(R c, int exp) {
        LaurentPoly p;
        if (!ring_is_zero(c)) {
            p.low = exp;
            p.coeffs.push_back(std::move(c));
        }
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return low + static_cast<int>(coeffs.size()) - 1; }
    R at(int exp) const {
        int i = exp - low;
        if (i < 0 || i >= static_cast<int>(coeffs.size())) return R{};
        return coeffs[i];
    }
    void trim() {
        size_t lead = coeffs.size();
        while (lead > 0 && ring_is_zero(coeffs[lead - 1])) --lead;
        coeffs.resize(lead);
        size_t drop = 0;
        while (drop < coeffs.size() && ring_is_zero(coeffs[drop])) ++drop;
        if (drop) {
            coeffs.erase(coeffs.begin(), coeffs.begin() + drop);
            low += static_cast<int>(drop);
        }
        if (coeffs.empty()) low = 0;
    }
    bool operator==(const LaurentPoly& o) const { return low == o.low && coeffs == o.coeffs; }
};

template <class R>
LaurentPoly<R> operator+(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LaurentPoly<R> out;
    out.low = std::min(a.low, b.low);
    int hi = std::max(a.degree(), b.degree());
    out.coeffs.resize(hi - out.low + 1);
    for (int e = out.low; e <= hi; ++e) out.coeffs[e - out.low] = a.at(e) + b.at(e);
    out.trim();
    return out;
}

template <class R>
LaurentPoly<R> operator-(const LaurentPoly<R>& a) {
    LaurentPoly<R> out = a;
    for (R& c : out.coeffs) c = -c;
    return out;
}

template <class R>
LaurentPoly<R> operator-(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    return a + (-b);
}

template <class R>
LaurentPoly<R> operator*(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly<R> out;
    out.low = a.low + b.low;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, R{});
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
    out.trim();
    return out;
}

/// Exact division in R[t, t^-1]; throws DomainError when b = 0 and
/// InternalError when the division is not exact.
template <class R>
LaurentPoly<R> poly_div_exact(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {};
    LaurentPoly<R> rem = a, out;
    out.low = a.low - b.low;
    if (a.coeffs.size() < b.coeffs.size())
        throw InternalError("inexact polynomial division");
    out.coeffs.assign(a.coeffs.size() - b.coeffs.size() + 1, R{});
    for (int i = static_cast<int>(out.coeffs.size()) - 1; i >= 0; --i) {
        R lead = rem.coeffs[i + b.coeffs.size() - 1];
        if (ring_is_zero(lead)) continue;
        R q = ring_div(lead, b.coeffs.back());
        out.coeffs[i] = q;
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            rem.coeffs[i + j] = rem.coeffs[i + j] - q * b.coeffs[j];
    }
    for (const R& c : rem.coeffs)
        if (!ring_is_zero(c)) throw InternalError("inexact polynomial division");
    out.trim();
    return out;
}

using IntPoly = LaurentPoly<Int>;
using ZetaPoly = LaurentPoly<Zeta>;
using ZpPoly = LaurentPoly<Zp>;

/// Multiplies by the canonical unit: lowest exponent shifted to 0, and the
/// leading coefficient made positive (ℤ) / 1 (ℤ_p). ≐ comparisons use this.
IntPoly normalized(IntPoly f);
ZpPoly normalized(ZpPoly f);

/// f ≐ g (equality up to multiplication by a unit ±tⁿ, resp. c·tⁿ).
bool assoc_equal(const IntPoly& a, const IntPoly& b);
bool assoc_equal(const ZpPoly& a, const ZpPoly& b);

/// True iff reversing the coefficient sequence reproduces f up to ±tⁿ.
bool is_symmetric(const IntPoly& f);

ZpPoly to_mod(const IntPoly& f, long long p);
ZetaPoly to_zeta(const IntPoly& f);
/// Inverse of to_zeta; throws InternalError if any ζ-component is nonzero.
IntPoly from_zeta(const ZetaPoly& f);

/// Syntax "t^2-3t+1" / "4s-1" / "s^-1+1"; single-letter variable. Returns
/// the polynomial and the variable seen (0 for constants).
std::pair<IntPoly, char> parse_poly(const std::string& text);
std::string poly_str(const IntPoly& f, char var);
std::string poly_str(const ZpPoly& f, char var);

// --------------------------------------------------------------- matrices --

template <class R>
using PolyMatrix = std::vector<std::vector<LaurentPoly<R>>>;

template <class R>
LaurentPoly<R> poly_matrix_det(PolyMatrix<R> m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return LaurentPoly<R>(R{1});
    // fraction-free (Bareiss) elimination
    LaurentPoly<R> prev(R{1});
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = poly_div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    LaurentPoly<R> det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template <class R>
PolyMatrix<R> mat_add(const PolyMatrix<R>& a, const PolyMatrix<R>& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        throw DomainError("matrix size mismatch");
    PolyMatrix<R> out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

template <class R>
PolyMatrix<R> mat_sub(const PolyMatrix<R>& a, const PolyMatrix<R>& b) {
    if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
        throw DomainError("matrix size mismatch");
    PolyMatrix<R> out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

template <class R>
PolyMatrix<R> mat_mul(const PolyMatrix<R>& a, const PolyMatrix<R>& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    PolyMatrix<R> out(n, std::vector<LaurentPoly<R>>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < inner; ++k)
            for (size_t j = 0; j < m; ++j)
                out[i][j] = out[i][j] + a[i][k] * b[k][j];
    return out;
}

PolyMatrix<Zp> mat_to_mod(const PolyMatrix<Int>& m, long long p);
PolyMatrix<Zeta> mat_to_zeta(const PolyMatrix<Int>& m);
PolyMatrix<Zeta> mat_scale(const PolyMatrix<Zeta>& m, const Zeta& c);

/// One row per line, entries separated by ';', single shared variable.
/// Returns the matrix and the variable (defaults to 's' for constant input).
std::pair<PolyMatrix<Int>, char> parse_poly_matrix(const std::string& text);

// ------------------------------------------------------------- operations --

/// det Δ(C_r), C_r the companion matrix of tʳ − s: the 0th characteristic
/// polynomial of the module pulled back along s = tʳ. Cross-checked against
/// the Sylvester resultant Res_t(Δ(t), tʳ − s) and unit-normalized.
IntPoly pullback_char_poly(const IntPoly& delta, int r);

/// Res_t(f, tʳ − s) via the Sylvester matrix (exposed for testing).
IntPoly pullback_resultant(const IntPoly& delta, int r);

struct TwoCoverReport {
    IntPoly det_sum;   // det(A+B)
    IntPoly det_diff;  // det(A−B)
    IntPoly g;         // det(A−B) / (s−1), exact
    ZpPoly g_mod3;
    bool surjective_s3_lift; // false when g mod 3 is zero or a unit
};
TwoCoverReport two_cover_factor(const PolyMatrix<Int>& a, const PolyMatrix<Int>& b);

struct ThreeCoverReport {
    IntPoly delta_tilde; // det(A+B+C)
    IntPoly ffbar;       // det(A+ζB+ζ²C)·det(A+ζ²B+ζC), integer by symmetry
    ZpPoly ffbar_mod2;
    bool s_minus_1_sq_factor; // (s−1)² divides FFbar mod 2
    bool surjective_a4_lift;  // false when FFbar mod 2 is a power of (s−1) times a unit
};
ThreeCoverReport three_cover_factor(const PolyMatrix<Int>& a, const PolyMatrix<Int>& b,
                                    const PolyMatrix<Int>& c);

/// Splits a 2m×2m matrix laid out as [[A,B],[B,A]] into (A, B).
std::pair<PolyMatrix<Int>, PolyMatrix<Int>> split_two_blocks(const PolyMatrix<Int>& m);
/// Splits a 3m×3m block circulant (first block row [A,B,C], remaining rows
/// its rotations in either order) into (A, B, C).
std::tuple<PolyMatrix<Int>, PolyMatrix<Int>, PolyMatrix<Int>>
split_three_blocks(const PolyMatrix<Int>& m);

} // namespace repshift

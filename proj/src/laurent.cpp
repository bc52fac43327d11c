#include "repshift/laurent.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace repshift {

Int ring_div(const Int& a, const Int& b) {
    if (b == 0) throw DomainError("division by zero");
    Int q = a / b;
    if (q * b != a) throw InternalError("inexact integer division");
    return q;
}

Zeta ring_div(const Zeta& a, const Zeta& b) {
    if (ring_is_zero(b)) throw DomainError("division by zero");
    Zeta num = a * b.conj();
    Int norm = (b * b.conj()).x; // b·b̄ is a rational integer
    return {ring_div(num.x, norm), ring_div(num.y, norm)};
}

namespace {

long long mod_pow(long long base, long long e, long long p) {
    long long acc = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

} // namespace

Zp ring_div(const Zp& a, const Zp& b) {
    if (b.v == 0) throw DomainError("division by zero");
    long long p = b.p ? b.p : a.p;
    return Zp{a.v, p} * Zp{mod_pow(b.v, p - 2, p), p};
}

std::string ring_str(const Int& a) { return a.str(); }
std::string ring_str(const Zeta& a) {
    return a.y == 0 ? a.x.str() : a.x.str() + "+" + a.y.str() + "z";
}
std::string ring_str(const Zp& a) { return std::to_string(a.v); }

IntPoly normalized(IntPoly f) {
    f.trim();
    if (f.is_zero()) return f;
    f.low = 0;
    if (f.coeffs.back() < 0)
        for (Int& c : f.coeffs) c = -c;
    return f;
}

ZpPoly normalized(ZpPoly f) {
    f.trim();
    if (f.is_zero()) return f;
    f.low = 0;
    Zp inv = ring_div(Zp{1, f.coeffs.back().p}, f.coeffs.back());
    for (Zp& c : f.coeffs) c = c * inv;
    return f;
}

bool assoc_equal(const IntPoly& a, const IntPoly& b) { return normalized(a) == normalized(b); }
bool assoc_equal(const ZpPoly& a, const ZpPoly& b) { return normalized(a) == normalized(b); }

bool is_symmetric(const IntPoly& f) {
    if (f.is_zero()) throw DomainError("symmetry of the zero polynomial");
    std::vector<Int> rev(f.coeffs.rbegin(), f.coeffs.rend());
    if (rev == f.coeffs) return true;
    for (Int& c : rev) c = -c;
    return rev == f.coeffs;
}

ZpPoly to_mod(const IntPoly& f, long long p) {
    ZpPoly out;
    out.low = f.low;
    for (const Int& c : f.coeffs)
        out.coeffs.push_back(Zp{static_cast<long long>(c % p), p});
    out.trim();
    return out;
}

ZetaPoly to_zeta(const IntPoly& f) {
    ZetaPoly out;
    out.low = f.low;
    for (const Int& c : f.coeffs) out.coeffs.push_back(Zeta{c});
    out.trim();
    return out;
}

IntPoly from_zeta(const ZetaPoly& f) {
    IntPoly out;
    out.low = f.low;
    for (const Zeta& c : f.coeffs) {
        if (c.y != 0) throw InternalError("polynomial has a nonzero zeta component");
        out.coeffs.push_back(c.x);
    }
    out.trim();
    return out;
}

// ------------------------------------------------------------ text forms --

std::pair<IntPoly, char> parse_poly(const std::string& text) {
    IntPoly out;
    char var = 0;
    size_t i = 0;
    int line = 1;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(msg, line, static_cast<int>(i) + 1);
    };
    skip();
    if (i >= text.size()) throw fail("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw fail("expected '+' or '-' between terms");
        }
        first = false;
        Int coeff = 1;
        bool saw_number = false;
        if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            coeff = Int(text.substr(start, i - start));
            saw_number = true;
        }
        int exp = 0;
        skip();
        if (i < text.size() &&
            ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= 'A' && text[i] <= 'Z'))) {
            char v = text[i++];
            if (var && var != v) throw fail("mixed variables in one polynomial");
            var = v;
            exp = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                int esign = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    esign = text[i] == '-' ? -1 : 1;
                    ++i;
                }
                size_t start = i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
                if (i == start) throw fail("expected an exponent");
                if (i - start > 4) throw fail("exponent too large");
                exp = esign * std::stoi(text.substr(start, i - start));
            }
        } else if (!saw_number) {
            throw fail("expected a coefficient or variable");
        }
        out = out + IntPoly::monomial(sign * coeff, exp);
    }
    if (out.is_zero()) return {out, var};
    return {out, var};
}

namespace {

template <class R>
std::string poly_str_impl(const LaurentPoly<R>& f, char var,
                          bool (*negative)(const R&), R (*abs_of)(const R&)) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int e = f.degree(); e >= f.low; --e) {
        R c = f.at(e);
        if (ring_is_zero(c)) continue;
        bool neg = negative(c);
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        R a = abs_of(c);
        std::string cs = ring_str(a);
        if (e == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs;
            s += var;
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

} // namespace

std::string poly_str(const IntPoly& f, char var) {
    return poly_str_impl<Int>(
        f, var, [](const Int& c) { return c < 0; }, [](const Int& c) { return Int(abs(c)); });
}

std::string poly_str(const ZpPoly& f, char var) {
    return poly_str_impl<Zp>(
        f, var, [](const Zp&) { return false; }, [](const Zp& c) { return c; });
}

// ---------------------------------------------------------------- matrices --

PolyMatrix<Zp> mat_to_mod(const PolyMatrix<Int>& m, long long p) {
    PolyMatrix<Zp> out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i]) out[i].push_back(to_mod(e, p));
    return out;
}

PolyMatrix<Zeta> mat_to_zeta(const PolyMatrix<Int>& m) {
    PolyMatrix<Zeta> out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i]) out[i].push_back(to_zeta(e));
    return out;
}

PolyMatrix<Zeta> mat_scale(const PolyMatrix<Zeta>& m, const Zeta& c) {
    PolyMatrix<Zeta> out = m;
    ZetaPoly scalar(c);
    for (auto& row : out)
        for (auto& e : row) e = e * scalar;
    return out;
}

std::pair<PolyMatrix<Int>, char> parse_poly_matrix(const std::string& text) {
    PolyMatrix<Int> m;
    char var = 0;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<IntPoly> row;
        size_t start = 0;
        while (start <= raw.size()) {
            size_t semi = raw.find(';', start);
            std::string cell = raw.substr(start, semi == std::string::npos ? semi : semi - start);
            while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
            try {
                auto [p, v] = parse_poly(cell);
                if (v) {
                    if (var && var != v)
                        throw ParseError("mixed variables in matrix", line_no, 1);
                    var = v;
                }
                row.push_back(std::move(p));
            } catch (const ParseError& e) {
                throw ParseError(std::string("matrix entry: ") + e.what(), line_no,
                                 static_cast<int>(start) + 1);
            }
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (!m.empty() && row.size() != m[0].size())
            throw ParseError("ragged matrix row", line_no, 1);
        m.push_back(std::move(row));
    }
    if (m.empty()) throw ParseError("empty matrix", 1, 1);
    return {m, var ? var : 's'};
}

// -------------------------------------------------------------- pullbacks --

IntPoly pullback_resultant(const IntPoly& delta, int r) {
    if (r < 1) throw DomainError("pullback exponent must be at least 1");
    IntPoly f = normalized(delta);
    if (f.is_zero()) return f;
    int d = f.degree();
    int n = d + r;
    // Sylvester matrix of f(t) (degree d) and tʳ − s (degree r in t), entries
    // in ℤ[s]; the resultant is its determinant.
    PolyMatrix<Int> syl(n, std::vector<IntPoly>(n));
    for (int row = 0; row < r; ++row)
        for (int j = 0; j <= d; ++j) syl[row][row + j] = IntPoly(f.coeffs[d - j]);
    for (int row = 0; row < d; ++row) {
        syl[r + row][row] = IntPoly(Int(1));                    // t^r
        syl[r + row][row + r] = IntPoly::monomial(Int(-1), 1);  // −s
    }
    return poly_matrix_det(syl);
}

IntPoly pullback_char_poly(const IntPoly& delta, int r) {
    if (r < 1) throw DomainError("pullback exponent must be at least 1");
    IntPoly f = normalized(delta);
    if (f.is_zero()) return f;
    int d = f.degree();

    // companion matrix of tʳ − s over ℤ[s]
    PolyMatrix<Int> companion(r, std::vector<IntPoly>(r));
    for (int i = 0; i + 1 < r; ++i) companion[i + 1][i] = IntPoly(Int(1));
    companion[0][r - 1] = IntPoly::monomial(Int(1), 1);

    PolyMatrix<Int> acc(r, std::vector<IntPoly>(r));
    for (int i = 0; i < r; ++i) acc[i][i] = IntPoly(f.coeffs[d]);
    for (int i = d - 1; i >= 0; --i) {
        acc = mat_mul(acc, companion);
        for (int j = 0; j < r; ++j) acc[j][j] = acc[j][j] + IntPoly(f.coeffs[i]);
    }
    IntPoly det = poly_matrix_det(acc);
    if (!assoc_equal(det, pullback_resultant(delta, r)))
        throw InternalError("companion and resultant pullbacks disagree");
    return normalized(det);
}

// ------------------------------------------------------- cover factorings --

namespace {

template <class R>
std::optional<LaurentPoly<R>> try_div(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    try {
        return poly_div_exact(a, b);
    } catch (const InternalError&) {
        return std::nullopt;
    }
}

IntPoly s_minus_1() {
    IntPoly p;
    p.low = 0;
    p.coeffs = {Int(-1), Int(1)};
    return p;
}

ZpPoly s_minus_1_mod(long long p) { return to_mod(s_minus_1(), p); }

} // namespace

TwoCoverReport two_cover_factor(const PolyMatrix<Int>& a, const PolyMatrix<Int>& b) {
    TwoCoverReport rep;
    rep.det_sum = poly_matrix_det(mat_add(a, b));
    rep.det_diff = poly_matrix_det(mat_sub(a, b));
    auto g = try_div(rep.det_diff, s_minus_1());
    if (!g) throw DomainError("(s-1) does not divide det(A-B)");
    rep.g = *g;
    rep.g_mod3 = to_mod(rep.g, 3);
    rep.surjective_s3_lift = rep.g_mod3.coeffs.size() > 1;
    return rep;
}

ThreeCoverReport three_cover_factor(const PolyMatrix<Int>& a, const PolyMatrix<Int>& b,
                                    const PolyMatrix<Int>& c) {
    ThreeCoverReport rep;
    rep.delta_tilde = poly_matrix_det(mat_add(mat_add(a, b), c));

    Zeta zeta{Int(0), Int(1)}, zeta2 = zeta.conj();
    auto za = mat_to_zeta(a), zb = mat_to_zeta(b), zc = mat_to_zeta(c);
    auto add3 = [](const PolyMatrix<Zeta>& x, const PolyMatrix<Zeta>& y,
                   const PolyMatrix<Zeta>& z) { return mat_add(mat_add(x, y), z); };
    ZetaPoly f = poly_matrix_det(add3(za, mat_scale(zb, zeta), mat_scale(zc, zeta2)));
    ZetaPoly fbar = poly_matrix_det(add3(za, mat_scale(zb, zeta2), mat_scale(zc, zeta)));
    rep.ffbar = from_zeta(f * fbar);

    rep.ffbar_mod2 = to_mod(rep.ffbar, 2);
    ZpPoly sm1 = s_minus_1_mod(2);
    auto once = try_div(rep.ffbar_mod2, sm1);
    auto twice = once ? try_div(*once, sm1) : std::nullopt;
    rep.s_minus_1_sq_factor = twice.has_value();
    ZpPoly residue = rep.ffbar_mod2;
    while (!residue.is_zero()) {
        auto q = try_div(residue, sm1);
        if (!q) break;
        residue = *q;
    }
    rep.surjective_a4_lift = residue.coeffs.size() > 1;
    return rep;
}

std::pair<PolyMatrix<Int>, PolyMatrix<Int>> split_two_blocks(const PolyMatrix<Int>& m) {
    size_t n = m.size();
    if (n == 0 || n % 2 != 0 || m[0].size() != n)
        throw DomainError("expected a square matrix of even size");
    size_t h = n / 2;
    auto block = [&](size_t r0, size_t c0) {
        PolyMatrix<Int> b(h, std::vector<IntPoly>(h));
        for (size_t i = 0; i < h; ++i)
            for (size_t j = 0; j < h; ++j) b[i][j] = m[r0 + i][c0 + j];
        return b;
    };
    auto a = block(0, 0), b = block(0, h);
    if (block(h, 0) != b || block(h, h) != a)
        throw DomainError("matrix is not in [[A,B],[B,A]] block form");
    return {a, b};
}

std::tuple<PolyMatrix<Int>, PolyMatrix<Int>, PolyMatrix<Int>>
split_three_blocks(const PolyMatrix<Int>& m) {
    size_t n = m.size();
    if (n == 0 || n % 3 != 0 || m[0].size() != n)
        throw DomainError("expected a square matrix of size divisible by 3");
    size_t h = n / 3;
    auto block = [&](size_t r0, size_t c0) {
        PolyMatrix<Int> b(h, std::vector<IntPoly>(h));
        for (size_t i = 0; i < h; ++i)
            for (size_t j = 0; j < h; ++j) b[i][j] = m[r0 * h + i][c0 * h + j];
        return b;
    };
    auto a = block(0, 0), b = block(0, 1), c = block(0, 2);
    auto row_is = [&](size_t r, const PolyMatrix<Int>& x, const PolyMatrix<Int>& y,
                      const PolyMatrix<Int>& z) {
        return block(r, 0) == x && block(r, 1) == y && block(r, 2) == z;
    };
    bool ok = (row_is(1, c, a, b) && row_is(2, b, c, a)) ||
              (row_is(1, b, c, a) && row_is(2, c, a, b));
    if (!ok) throw DomainError("matrix is not a block circulant over its first block row");
    return {a, b, c};
}

} // namespace repshift

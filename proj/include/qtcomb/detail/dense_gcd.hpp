#pragma once

// Multivariate gcd over Z[q,t,u] via the subresultant polynomial remainder
// sequence, on a recursive dense representation: a polynomial in q whose
// coefficients are polynomials in t whose coefficients are polynomials in u.
// Only gcd and exact division are needed by the rational-function layer; no
// general factorization.

#include <vector>

#include "qtcomb/qtpoly.hpp"

namespace qtcomb::detail {

// ----- generic ring ops: base ring Int, towers std::vector<C> -------------

inline Int r_gcd(const Int& a, const Int& b);
template <class C> std::vector<C> r_gcd(const std::vector<C>& a0, const std::vector<C>& b0);
inline Int r_divexact(const Int& a, const Int& b);
template <class C> std::vector<C> r_divexact(const std::vector<C>& a, const std::vector<C>& b);

inline bool r_is_zero(const Int& a) { return a == 0; }
template <class C> bool r_is_zero(const std::vector<C>& p) { return p.empty(); }

inline Int r_neg(const Int& a) { return -a; }
template <class C> std::vector<C> r_neg(const std::vector<C>& p) {
    std::vector<C> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = r_neg(p[i]);
    return r;
}

template <class C> void trim(std::vector<C>& p) {
    while (!p.empty() && r_is_zero(p.back())) p.pop_back();
}

inline Int r_add(const Int& a, const Int& b) { return a + b; }
template <class C> std::vector<C> r_add(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size()) r[i] = r_add(a[i], b[i]);
        else if (i < a.size()) r[i] = a[i];
        else r[i] = b[i];
    }
    trim(r);
    return r;
}

inline Int r_sub(const Int& a, const Int& b) { return a - b; }
template <class C> std::vector<C> r_sub(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size()) r[i] = r_sub(a[i], b[i]);
        else if (i < a.size()) r[i] = a[i];
        else r[i] = r_neg(b[i]);
    }
    trim(r);
    return r;
}

inline Int r_mul(const Int& a, const Int& b) { return a * b; }
template <class C> std::vector<C> r_mul(const std::vector<C>& a, const std::vector<C>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<C> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (r_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (r_is_zero(b[j])) continue;
            r[i + j] = r_add(r[i + j], r_mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

// exact division, asserted to succeed
inline Int r_divexact(const Int& a, const Int& b) { return a / b; }
template <class C> std::vector<C> r_divexact(const std::vector<C>& a, const std::vector<C>& b) {
    if (r_is_zero(b)) throw arithmetic_error("dense divexact by zero");
    std::vector<C> rem = a, quot;
    if (a.size() < b.size() && !a.empty()) throw arithmetic_error("dense divexact: degree mismatch");
    if (a.empty()) return {};
    quot.resize(a.size() - b.size() + 1);
    while (!rem.empty() && rem.size() >= b.size()) {
        C qc = r_divexact(rem.back(), b.back());
        std::size_t off = rem.size() - b.size();
        quot[off] = qc;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[off + j] = r_sub(rem[off + j], r_mul(qc, b[j]));
        trim(rem);
        if (!rem.empty() && rem.size() > off + b.size() - 1)
            throw arithmetic_error("dense divexact: degree failed to drop");
    }
    if (!rem.empty()) throw arithmetic_error("dense divexact: nonzero remainder");
    trim(quot);
    return quot;
}

inline Int r_gcd(const Int& a, const Int& b) {
    Int x = a < 0 ? Int(-a) : a, y = b < 0 ? Int(-b) : b;
    while (y != 0) {
        Int r = x % y;
        x = y;
        y = r;
    }
    return x;
}

template <class C> C r_content(const std::vector<C>& p) {
    C g{};
    for (const auto& c : p) {
        if (r_is_zero(c)) continue;
        g = r_gcd(g, c);
    }
    return g;
}

inline int r_sign(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
template <class C> int r_sign(const std::vector<C>& p) {
    return p.empty() ? 0 : r_sign(p.back());
}

template <class C> std::vector<C> scale_div(const std::vector<C>& p, const C& d) {
    std::vector<C> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = r_is_zero(p[i]) ? p[i] : r_divexact(p[i], d);
    return r;
}
template <class C> std::vector<C> scale_mul(const std::vector<C>& p, const C& d) {
    std::vector<C> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = r_mul(p[i], d);
    trim(r);
    return r;
}

inline Int r_one(const Int*) { return Int(1); }
template <class C> std::vector<C> r_one(const std::vector<C>*) {
    std::vector<C> r;
    r.push_back(r_one(static_cast<const C*>(nullptr)));
    return r;
}

template <class R> R r_pow(const R& base, int k) {
    R r = r_one(static_cast<const R*>(nullptr));
    R b = base;
    while (k > 0) {
        if (k & 1) r = r_mul(r, b);
        b = r_mul(b, b);
        k >>= 1;
    }
    return r;
}

// pseudo-remainder: prem(A,B) = lc(B)^{deg A - deg B + 1} * A mod B
template <class C>
std::vector<C> r_prem(std::vector<C> a, const std::vector<C>& b) {
    const C& lb = b.back();
    int steps = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (!a.empty() && a.size() >= b.size()) {
        C la = a.back();
        std::size_t off = a.size() - b.size();
        // a = lb*a - la*x^off*b
        std::vector<C> na(a.size());
        for (std::size_t i = 0; i + 1 < a.size(); ++i) na[i] = r_mul(a[i], lb);
        na[a.size() - 1] = C{};  // leading cancels
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            na[off + j] = r_sub(na[off + j], r_mul(la, b[j]));
        a = std::move(na);
        trim(a);
        --steps;
    }
    if (steps > 0) {
        C f = r_pow(b.back(), steps);
        a = scale_mul(a, f);
    }
    return a;
}

// primitive PRS gcd in R[x], R a UFD with gcd: dividing every pseudo
// remainder by its full content keeps intermediate sizes near the true
// subresultant sizes at these small degrees
template <class C>
std::vector<C> r_gcd(const std::vector<C>& a0, const std::vector<C>& b0) {
    if (r_is_zero(a0)) {
        auto r = b0;
        if (r_sign(r) < 0) r = r_neg(r);
        return r;
    }
    if (r_is_zero(b0)) {
        auto r = a0;
        if (r_sign(r) < 0) r = r_neg(r);
        return r;
    }
    C ca = r_content(a0), cb = r_content(b0);
    C d = r_gcd(ca, cb);
    std::vector<C> A = scale_div(a0, ca), B = scale_div(b0, cb);
    if (A.size() < B.size()) std::swap(A, B);

    while (true) {
        std::vector<C> R = r_prem(A, B);
        if (r_is_zero(R)) break;
        if (R.size() == 1) {
            std::vector<C> r;
            r.push_back(d);
            if (r_sign(r) < 0) r = r_neg(r);
            return r;
        }
        A = std::move(B);
        C cR = r_content(R);
        B = scale_div(R, cR);
    }
    std::vector<C> r = scale_mul(B, d);
    if (r_sign(r) < 0) r = r_neg(r);
    return r;
}

// ----- conversions QtPoly <-> dense tower ---------------------------------

using P1 = std::vector<Int>;  // in u
using P2 = std::vector<P1>;   // in t, coefficients in u
using P3 = std::vector<P2>;   // in q, coefficients in (t,u)

// requires nonnegative exponents
inline P3 to_dense(const QtPoly& p) {
    P3 r;
    for (const auto& [m, c] : p.terms()) {
        int eq = m.e[0], et = m.e[1], eu = m.e[2];
        if (eq < 0 || et < 0 || eu < 0)
            throw arithmetic_error("to_dense: negative exponent");
        if (r.size() <= static_cast<std::size_t>(eq)) r.resize(eq + 1);
        P2& rt = r[eq];
        if (rt.size() <= static_cast<std::size_t>(et)) rt.resize(et + 1);
        P1& ru = rt[et];
        if (ru.size() <= static_cast<std::size_t>(eu)) ru.resize(eu + 1, Int(0));
        ru[eu] = c;
    }
    // normalize zero-trims
    for (auto& rt : r) {
        for (auto& ru : rt) trim(ru);
        trim(rt);
    }
    trim(r);
    return r;
}

inline QtPoly from_dense(const P3& p) {
    QtPoly r;
    for (std::size_t eq = 0; eq < p.size(); ++eq)
        for (std::size_t et = 0; et < p[eq].size(); ++et)
            for (std::size_t eu = 0; eu < p[eq][et].size(); ++eu)
                if (p[eq][et][eu] != 0)
                    r.add_term(Mono{{static_cast<int>(eq), static_cast<int>(et), static_cast<int>(eu)}},
                               p[eq][et][eu]);
    return r;
}

}  // namespace qtcomb::detail

namespace qtcomb {

namespace detail {

inline QtPoly permute_vars(const QtPoly& p, const std::array<int, 3>& perm) {
    QtPoly r;
    for (const auto& [m, c] : p.terms()) {
        Mono mm;
        for (int i = 0; i < 3; ++i) mm.e[perm[i]] = m.e[i];
        r.add_term(mm, c);
    }
    return r;
}

inline Int int_content(const QtPoly& p) {
    Int g = 0;
    for (const auto& [m, c] : p.terms()) g = r_gcd(g, c);
    return g;
}

}  // namespace detail

// gcd of the polynomial parts, ignoring monomial (unit) content; inputs may
// be Laurent.  Result is a polynomial with positive lex-leading coefficient.
inline QtPoly poly_gcd(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero() && b.is_zero()) return QtPoly(0);
    auto prep = [](const QtPoly& p) {
        if (p.is_zero()) return p;
        Mono m = p.min_exponents();
        return p.shifted(Mono{{-m.e[0], -m.e[1], -m.e[2]}});
    };
    auto signfix = [](QtPoly p) {
        if (!p.is_zero() && p.leading().second < 0) p = -p;
        return p;
    };
    QtPoly pa = prep(a), pb = prep(b);
    if (pa.is_zero()) return signfix(pb);
    if (pb.is_zero()) return signfix(pa);
    if (pa == pb || pa == -pb) return signfix(pa);

    Int ca = detail::int_content(pa), cb = detail::int_content(pb);
    Int d = detail::r_gcd(ca, cb);
    QtPoly A = divide_exact(pa, QtPoly(ca)), B = divide_exact(pb, QtPoly(cb));
    if (A.num_terms() == 1 || B.num_terms() == 1) return QtPoly(d);
    if (A == B || A == -B) return signfix(A * d);

    // common case in rational-function cancellation: one primitive part
    // divides the other (Gauss: primitive divisibility over Z iff over Q)
    if (B.num_terms() <= A.num_terms() && try_divide_exact(A, B)) return signfix(B * d);
    if (A.num_terms() <= B.num_terms() && try_divide_exact(B, A)) return signfix(A * d);

    // pick the main (outermost) variable with the smallest degree spread
    std::array<int, 3> spread{};
    for (int i = 0; i < 3; ++i) {
        Var v = static_cast<Var>(i);
        spread[i] = std::max(A.degree(v), B.degree(v));
    }
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return spread[x] < spread[y]; });
    std::array<int, 3> perm{};  // perm[original] = slot; main variable goes to q's slot
    for (int slot = 0; slot < 3; ++slot) perm[order[slot]] = slot;

    detail::P3 g = detail::r_gcd(detail::to_dense(detail::permute_vars(A, perm)),
                                 detail::to_dense(detail::permute_vars(B, perm)));
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[perm[i]] = i;
    return signfix(detail::permute_vars(detail::from_dense(g), inv) * d);
}

}  // namespace qtcomb

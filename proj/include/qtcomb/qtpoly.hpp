#pragma once

// Exact Laurent polynomials with big-integer coefficients in the formal
// parameters q, t, u.  Everything downstream (symmetric functions, Macdonald
// tables, combinatorial generating functions) stores its coefficients here,
// so all identity checks are exact.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtcomb {

using Int = boost::multiprecision::cpp_int;

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct arithmetic_error : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Var : int { q = 0, t = 1, u = 2 };

// Exponent triple (eq, et, eu).  The fixed monomial order used project-wide
// for canonical forms and rendering is lexicographic on (eq, et, eu).
struct Mono {
    std::array<int, 3> e{0, 0, 0};

    friend bool operator==(const Mono&, const Mono&) = default;
    friend auto operator<=>(const Mono& a, const Mono& b) { return a.e <=> b.e; }

    Mono operator+(const Mono& o) const { return Mono{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}}; }
    Mono operator-(const Mono& o) const { return Mono{{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}}; }
};

class QtPoly {
public:
    using TermMap = std::map<Mono, Int>;

    QtPoly() = default;
    QtPoly(long c) { if (c != 0) terms_[Mono{}] = c; }
    QtPoly(Int c) { if (c != 0) terms_[Mono{}] = std::move(c); }

    static QtPoly monomial(int eq, int et, int eu, Int coeff = 1) {
        QtPoly p;
        if (coeff != 0) p.terms_[Mono{{eq, et, eu}}] = std::move(coeff);
        return p;
    }
    static QtPoly q(int k = 1) { return monomial(k, 0, 0); }
    static QtPoly t(int k = 1) { return monomial(0, k, 0); }
    static QtPoly u(int k = 1) { return monomial(0, 0, k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == Mono{} && terms_.begin()->second == 1; }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int constant_coeff() const { return coeff(Mono{}); }

    void add_term(const Mono& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QtPoly& operator+=(const QtPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    QtPoly& operator-=(const QtPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend QtPoly operator+(QtPoly a, const QtPoly& b) { a += b; return a; }
    friend QtPoly operator-(QtPoly a, const QtPoly& b) { a -= b; return a; }
    QtPoly operator-() const {
        QtPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend QtPoly operator*(const QtPoly& a, const QtPoly& b) {
        QtPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma + mb, ca * cb);
        return r;
    }
    QtPoly& operator*=(const QtPoly& o) { return *this = *this * o; }
    QtPoly& operator*=(const Int& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    QtPoly pow(unsigned k) const {
        QtPoly r(1), base = *this;
        while (k) {
            if (k & 1) r *= base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const QtPoly& a, const QtPoly& b) { return a.terms_ == b.terms_; }

    // Largest monomial in the fixed lex order.
    const std::pair<const Mono, Int>& leading() const {
        if (terms_.empty()) throw arithmetic_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int degree(Var v) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m.e[static_cast<int>(v)];
            if (first || e > d) d = e;
            first = false;
        }
        if (first) throw arithmetic_error("degree of zero polynomial");
        return d;
    }
    int min_degree(Var v) const {
        int d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m.e[static_cast<int>(v)];
            if (first || e < d) d = e;
            first = false;
        }
        if (first) throw arithmetic_error("min degree of zero polynomial");
        return d;
    }

    // Componentwise minimum of all exponent triples (the monomial content).
    Mono min_exponents() const {
        if (terms_.empty()) return Mono{};
        Mono m = terms_.begin()->first;
        for (const auto& [mm, c] : terms_)
            for (int i = 0; i < 3; ++i) m.e[i] = std::min(m.e[i], mm.e[i]);
        return m;
    }

    // Multiply by the monomial with exponent triple `shift`.
    QtPoly shifted(const Mono& shift) const {
        QtPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m + shift] = c;
        return r;
    }

    bool has_negative_exponents() const {
        Mono m = min_exponents();
        return m.e[0] < 0 || m.e[1] < 0 || m.e[2] < 0;
    }

    bool depends_on(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m.e[static_cast<int>(v)] != 0) return true;
        return false;
    }

    // Substitute v = 1.
    QtPoly subst_one(Var v) const {
        QtPoly r;
        for (const auto& [m0, c] : terms_) {
            Mono m = m0;
            m.e[static_cast<int>(v)] = 0;
            r.add_term(m, c);
        }
        return r;
    }

    // Substitute v = 0; requires all exponents of v to be nonnegative.
    QtPoly subst_zero(Var v) const {
        QtPoly r;
        for (const auto& [m, c] : terms_) {
            int e = m.e[static_cast<int>(v)];
            if (e < 0) throw arithmetic_error("substituting 0 into a negative power");
            if (e == 0) r.add_term(m, c);
        }
        return r;
    }

    // Substitute t = q^{-1} (stays in the Laurent ring).
    QtPoly subst_t_qinv() const {
        QtPoly r;
        for (const auto& [m0, c] : terms_) {
            Mono m = m0;
            m.e[0] -= m.e[1];
            m.e[1] = 0;
            r.add_term(m, c);
        }
        return r;
    }

    // Substitute v = c for an integer c; requires nonnegative exponents of v
    // unless |c| = 1.
    QtPoly subst_int(Var v, const Int& c) const {
        if (c == 1) return subst_one(v);
        if (c == 0) return subst_zero(v);
        QtPoly r;
        for (const auto& [m0, c0] : terms_) {
            Mono m = m0;
            int e = m.e[static_cast<int>(v)];
            m.e[static_cast<int>(v)] = 0;
            if (c == -1) {
                r.add_term(m, (e % 2 == 0) ? c0 : -c0);
                continue;
            }
            if (e < 0) throw arithmetic_error("integer substitution into a negative power");
            Int pw = 1;
            for (int i = 0; i < e; ++i) pw *= c;
            r.add_term(m, c0 * pw);
        }
        return r;
    }

    Int eval_all_one() const {
        Int s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    // Coefficient of v^k, as a polynomial in the remaining variables.
    QtPoly coeff_of(Var v, int k) const {
        QtPoly r;
        for (const auto& [m0, c] : terms_) {
            if (m0.e[static_cast<int>(v)] != k) continue;
            Mono m = m0;
            m.e[static_cast<int>(v)] = 0;
            r.add_term(m, c);
        }
        return r;
    }

    std::string to_string() const;
    static QtPoly parse(const std::string& s);

private:
    TermMap terms_;  // invariant: no zero coefficients
};

inline QtPoly operator*(QtPoly a, const Int& c) { a *= c; return a; }
inline QtPoly operator*(const Int& c, QtPoly a) { a *= c; return a; }

// --- canonical text rendering -------------------------------------------
//
// Terms are listed in increasing lex order on (eq, et, eu), e.g.
// "1 + u + 2*t + q*t^2".  Negative exponents render as q^-1.

inline std::string QtPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string factors;
        static const char* names[3] = {"q", "t", "u"};
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += names[i];
            if (m.e[i] != 1) factors += "^" + std::to_string(m.e[i]);
        }
        if (factors.empty()) {
            out += ac.str();
        } else {
            if (ac != 1) out += ac.str() + "*";
            out += factors;
        }
    }
    return out;
}

// Parser for the canonical rendering above (used by the cache files).
inline QtPoly QtPoly::parse(const std::string& s) {
    QtPoly out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i == s.size()) throw input_error("empty polynomial string");
    bool neg = false;
    if (s[i] == '-') { neg = true; ++i; }
    while (true) {
        skip_ws();
        Int coeff = 1;
        bool saw_digit = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coeff = Int(s.substr(i, j - i));
            i = j;
            saw_digit = true;
        }
        Mono m;
        while (true) {
            if (saw_digit || m != Mono{}) {
                std::size_t save = i;
                skip_ws();
                if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
                else { i = save; }
            }
            if (i >= s.size()) break;
            char c = s[i];
            int vi = c == 'q' ? 0 : c == 't' ? 1 : c == 'u' ? 2 : -1;
            if (vi < 0) break;
            ++i;
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < s.size() && s[i] == '-') { eneg = true; ++i; }
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw input_error("bad exponent in polynomial string");
                int val = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    val = val * 10 + (s[i++] - '0');
                e = eneg ? -val : val;
            }
            if (m.e[vi] != 0) throw input_error("repeated variable in monomial");
            m.e[vi] = e;
            saw_digit = false;
        }
        if (m == Mono{} && coeff == 1 && !saw_digit && !(s.size() == 1 && s[0] == '0')) {
            // bare "1" handled by saw_digit; a lone variable handled above;
            // reaching here with nothing consumed is a syntax error
        }
        out.add_term(m, neg ? Int(-coeff) : coeff);
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] == '+') { neg = false; ++i; }
        else if (s[i] == '-') { neg = true; ++i; }
        else throw input_error("unexpected character in polynomial string: " + s.substr(i));
    }
    if (out == QtPoly(0) && s.find('0') == std::string::npos)
        throw input_error("could not parse polynomial string: " + s);
    return out;
}

// --- exact division -------------------------------------------------------
//
// Long division in the lex monomial order.  Intended for divisions that are
// known to be exact (gcd cofactors, Pascal-style recurrences, fraction-free
// elimination); returns nullopt when a coefficient fails to divide or a
// remainder below the divisor's reach is left over.

inline std::optional<QtPoly> try_divide_exact(const QtPoly& a, const QtPoly& b) {
    if (b.is_zero()) throw arithmetic_error("division by zero polynomial");
    if (a.is_zero()) return QtPoly(0);
    // per-variable degrees are additive under multiplication, so every
    // monomial of an exact quotient lies in this box; leaving it proves the
    // division inexact (and bounds the number of steps in the Laurent ring)
    Mono lo = a.min_exponents() - b.min_exponents();
    Mono hi;
    for (int i = 0; i < 3; ++i) {
        Var v = static_cast<Var>(i);
        hi.e[i] = a.degree(v) - b.degree(v);
        if (hi.e[i] < lo.e[i]) return std::nullopt;
    }
    QtPoly rem = a, quot;
    const auto& [bm, bc] = b.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (rc % bc != 0) return std::nullopt;
        Mono qm = rm - bm;
        for (int i = 0; i < 3; ++i)
            if (qm.e[i] < lo.e[i] || qm.e[i] > hi.e[i]) return std::nullopt;
        Int qc = rc / bc;
        QtPoly term = QtPoly::monomial(qm.e[0], qm.e[1], qm.e[2], qc);
        quot += term;
        rem -= term * b;
        if (!rem.is_zero() && !(rem.leading().first < rm)) return std::nullopt;
    }
    return quot;
}

inline QtPoly divide_exact(const QtPoly& a, const QtPoly& b) {
    auto r = try_divide_exact(a, b);
    if (!r) throw arithmetic_error("inexact polynomial division");
    return *r;
}

// --- q-analogs (all polynomials in the honest polynomial subring) ---------

// (u;q)_k = (1-u)(1-uq)...(1-uq^{k-1})
inline QtPoly q_pochhammer(int k) {
    if (k < 0) throw input_error("q_pochhammer: k must be nonnegative");
    QtPoly r(1);
    for (int i = 0; i < k; ++i)
        r *= QtPoly(1) - QtPoly::monomial(i, 0, 1);
    return r;
}

// (z;q)_k with z = q^a, i.e. (q^a;q)_k
inline QtPoly q_pochhammer_qpow(int a, int k) {
    QtPoly r(1);
    for (int i = 0; i < k; ++i)
        r *= QtPoly(1) - QtPoly::q(a + i);
    return r;
}

// [k]_q = 1 + q + ... + q^{k-1}
inline QtPoly q_int(int k) {
    QtPoly r;
    for (int i = 0; i < k; ++i) r += QtPoly::q(i);
    return r;
}

inline QtPoly q_factorial(int k) {
    QtPoly r(1);
    for (int i = 1; i <= k; ++i) r *= q_int(i);
    return r;
}

// Gaussian binomial [n choose k]_q = (q^{n-k+1};q)_k / (q;q)_k,
// equal to 0 when k > n.
inline QtPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0) throw input_error("q_binomial: negative argument");
    if (k > n) return QtPoly(0);
    if (k == 0 || k == n) return QtPoly(1);
    return divide_exact(q_pochhammer_qpow(n - k + 1, k), q_pochhammer_qpow(1, k));
}

// [n choose k_1,...,k_r]_q as a product of Gaussian binomials over partial sums
inline QtPoly q_multinomial(int n, const std::vector<int>& ks) {
    long sum = 0;
    for (int k : ks) {
        if (k < 0) throw input_error("q_multinomial: negative part");
        sum += k;
    }
    if (sum != n) throw input_error("q_multinomial: parts must sum to n");
    QtPoly r(1);
    int rest = n;
    for (int k : ks) {
        r *= q_binomial(rest, k);
        rest -= k;
    }
    return r;
}

}  // namespace qtcomb

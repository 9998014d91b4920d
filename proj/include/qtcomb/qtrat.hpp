#pragma once

// Rational functions num/den over the Laurent ring Z[q^±,t^±,u^±], kept in a
// canonical form so equality is bit-stable:
//   * den is a nonzero honest polynomial not divisible by q, t or u,
//   * gcd of the polynomial parts of num and den is 1,
//   * gcd of the integer contents is 1 and den's lex-leading coefficient is
//     positive,
//   * zero is 0/1.
// The numerator may carry a Laurent monomial factor (e.g. q^{-1}*h_2 shows up
// in Newton-interpolation coefficients).

#include <string>

#include "qtcomb/detail/dense_gcd.hpp"
#include "qtcomb/qtpoly.hpp"

namespace qtcomb {

class QtRat {
public:
    QtRat() : num_(0), den_(1) {}
    QtRat(long c) : num_(c), den_(1) {}
    QtRat(Int c) : num_(std::move(c)), den_(1) {}
    QtRat(QtPoly n) : num_(std::move(n)), den_(1) {}
    QtRat(QtPoly n, QtPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const QtPoly& num() const { return num_; }
    const QtPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // The polynomial value; requires den == 1.
    const QtPoly& as_poly() const {
        if (!is_polynomial()) throw arithmetic_error("QtRat is not a polynomial: " + to_string());
        return num_;
    }

    friend QtRat operator+(const QtRat& a, const QtRat& b) {
        return QtRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QtRat operator-(const QtRat& a, const QtRat& b) {
        return QtRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QtRat operator*(const QtRat& a, const QtRat& b) {
        return QtRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QtRat operator/(const QtRat& a, const QtRat& b) {
        if (b.is_zero()) throw arithmetic_error("division by zero rational function");
        return QtRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QtRat operator-() const {
        QtRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    QtRat& operator+=(const QtRat& o) { return *this = *this + o; }
    QtRat& operator-=(const QtRat& o) { return *this = *this - o; }
    QtRat& operator*=(const QtRat& o) { return *this = *this * o; }
    QtRat& operator/=(const QtRat& o) { return *this = *this / o; }

    friend bool operator==(const QtRat& a, const QtRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Semantic equality by cross multiplication (must agree with ==; used in
    // property tests).
    bool cross_equals(const QtRat& o) const { return num_ * o.den_ == o.num_ * den_; }

    QtRat subst_one(Var v) const { return QtRat(num_.subst_one(v), den_.subst_one(v)); }
    QtRat subst_zero(Var v) const {
        QtPoly d = den_.subst_zero(v);
        if (d.is_zero()) throw arithmetic_error("substitution makes denominator zero");
        return QtRat(num_.subst_zero(v), d);
    }
    QtRat subst_t_qinv() const { return QtRat(num_.subst_t_qinv(), den_.subst_t_qinv()); }
    QtRat subst_int(Var v, const Int& c) const {
        QtPoly d = den_.subst_int(v, c);
        if (d.is_zero()) throw arithmetic_error("substitution makes denominator zero");
        return QtRat(num_.subst_int(v, c), d);
    }

    // Substitute every variable by an integer power of q: v -> q^{k_v}.
    // Used for plethystic p_k evaluation (q->q^k, t->t^k, u->u^k) variants.
    QtRat frobenius(int k) const {
        auto stretch = [k](const QtPoly& p) {
            QtPoly r;
            for (const auto& [m, c] : p.terms())
                r.add_term(Mono{{m.e[0] * k, m.e[1] * k, m.e[2] * k}}, c);
            return r;
        };
        return QtRat(stretch(num_), stretch(den_));
    }

    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

    // Coefficient of u^k; requires a u-free denominator.
    QtRat coeff_of_u(int k) const {
        if (den_.depends_on(Var::u)) throw arithmetic_error("coeff_of_u: denominator involves u");
        return QtRat(num_.coeff_of(Var::u, k), den_);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        std::string n = num_.to_string(), d = den_.to_string();
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
        };
        return wrap(n) + "/" + wrap(d);
    }

private:
    QtPoly num_, den_;

    void normalize() {
        if (den_.is_zero()) throw arithmetic_error("zero denominator");
        if (num_.is_zero()) {
            den_ = QtPoly(1);
            return;
        }
        // make den an honest polynomial with trailing exponents 0
        Mono dm = den_.min_exponents();
        Mono back{{-dm.e[0], -dm.e[1], -dm.e[2]}};
        den_ = den_.shifted(back);
        num_ = num_.shifted(back);
        // cancel the polynomial-part gcd
        QtPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            Mono nm = num_.min_exponents();
            QtPoly np = num_.shifted(Mono{{-nm.e[0], -nm.e[1], -nm.e[2]}});
            np = divide_exact(np, g);
            num_ = np.shifted(nm);
            den_ = divide_exact(den_, g);
        }
        if (den_.leading().second < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }
};

inline QtRat operator+(const QtRat& a, long b) { return a + QtRat(b); }
inline QtRat operator*(long a, const QtRat& b) { return QtRat(a) * b; }

// spec name: canonicalization is already maintained by every constructor, so
// this is the identity on well-formed values (and exercised as such in tests)
inline QtRat normalize(const QtRat& r) { return QtRat(r.num(), r.den()); }

}  // namespace qtcomb

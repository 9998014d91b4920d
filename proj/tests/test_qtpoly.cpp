#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qtcomb/qtpoly.hpp"
#include "qtcomb/detail/dense_gcd.hpp"

using namespace qtcomb;

namespace {

QtPoly random_poly(std::mt19937& rng, int max_terms = 5, int max_exp = 4,
                   bool laurent = false) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(laurent ? -max_exp : 0, max_exp);
    std::uniform_int_distribution<int> coeff(-9, 9);
    QtPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term(Mono{{expo(rng), expo(rng), expo(rng)}}, coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic laws hold on random polynomials") {
    std::mt19937 rng(12345);
    for (int rep = 0; rep < 200; ++rep) {
        QtPoly a = random_poly(rng, 4, 3, true);
        QtPoly b = random_poly(rng, 4, 3, true);
        QtPoly c = random_poly(rng, 4, 3, true);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).eval_all_one() == a.eval_all_one() * b.eval_all_one());
    }
}

TEST_CASE("evaluation at q=t=u=1 is the coefficient sum") {
    QtPoly p = QtPoly::q(2) * Int(3) + QtPoly::t() * QtPoly::u(-1) - QtPoly(7);
    CHECK(p.eval_all_one() == 3 + 1 - 7);
}

TEST_CASE("q-Pochhammer (u;q)_k") {
    CHECK(q_pochhammer(0) == QtPoly(1));
    CHECK(q_pochhammer(1) == QtPoly(1) - QtPoly::u());
    // (1-u)(1-uq) = 1 - u - u q + u^2 q, expanded by hand
    QtPoly expect = QtPoly(1) - QtPoly::u() - QtPoly::monomial(1, 0, 1) + QtPoly::monomial(1, 0, 2);
    CHECK(q_pochhammer(2) == expect);
}

TEST_CASE("Gaussian binomials") {
    CHECK(q_binomial(2, 1) == QtPoly(1) + QtPoly::q());
    // (q^3;q)_2/(q;q)_2 = 1 + q + 2q^2 + q^3 + q^4
    QtPoly expect = QtPoly(1) + QtPoly::q() + QtPoly::q(2) * Int(2) + QtPoly::q(3) + QtPoly::q(4);
    CHECK(q_binomial(4, 2) == expect);
    for (int n = 0; n <= 8; ++n) CHECK(q_binomial(n, 0) == QtPoly(1));
    CHECK(q_binomial(3, 5).is_zero());

    SECTION("symmetry and Pascal recurrence") {
        for (int n = 0; n <= 10; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(q_binomial(n, k) == q_binomial(n, n - k));
                if (n >= 1 && k >= 1)
                    CHECK(q_binomial(n, k) ==
                          q_binomial(n - 1, k - 1) + QtPoly::q(k) * q_binomial(n - 1, k));
            }
        }
    }

    SECTION("nonnegative coefficients, degree k(n-k)") {
        for (int n = 0; n <= 9; ++n)
            for (int k = 0; k <= n; ++k) {
                QtPoly b = q_binomial(n, k);
                for (const auto& [m, c] : b.terms()) CHECK(c > 0);
                if (!(k == 0 || k == n)) CHECK(b.degree(Var::q) == k * (n - k));
            }
    }
}

TEST_CASE("q-multinomials") {
    CHECK(q_multinomial(2, {1, 1}) == QtPoly(1) + QtPoly::q());
    CHECK(q_multinomial(3, {1, 1, 1}) == (QtPoly(1) + QtPoly::q()) * (QtPoly(1) + QtPoly::q() + QtPoly::q(2)));
    CHECK(q_multinomial(5, {5}) == QtPoly(1));
    CHECK_THROWS_AS(q_multinomial(4, {1, 1}), input_error);

    SECTION("invariant under permutation of the parts") {
        std::vector<int> ks{3, 1, 2};
        QtPoly ref = q_multinomial(6, ks);
        std::sort(ks.begin(), ks.end());
        do {
            CHECK(q_multinomial(6, ks) == ref);
        } while (std::next_permutation(ks.begin(), ks.end()));
    }
}

TEST_CASE("exact division recovers factors") {
    std::mt19937 rng(777);
    for (int rep = 0; rep < 200; ++rep) {
        QtPoly a = random_poly(rng, 4, 3, true);
        QtPoly b = random_poly(rng, 4, 3, true);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
    }
    CHECK(!try_divide_exact(QtPoly(1) + QtPoly::q(), QtPoly(1) + QtPoly::t()).has_value());
}

TEST_CASE("poly_gcd divides both inputs and absorbs common factors") {
    std::mt19937 rng(424242);
    for (int rep = 0; rep < 120; ++rep) {
        QtPoly f = random_poly(rng, 3, 2);
        QtPoly g = random_poly(rng, 3, 2);
        QtPoly h = random_poly(rng, 3, 2);
        QtPoly d = poly_gcd(f * h, g * h);
        if ((f * h).is_zero() && (g * h).is_zero()) {
            CHECK(d.is_zero());
            continue;
        }
        if (!h.is_zero()) {
            // d is divisible by the primitive polynomial part of h
            Mono hm = h.min_exponents();
            QtPoly hp = h.shifted(Mono{{-hm.e[0], -hm.e[1], -hm.e[2]}});
            CHECK(try_divide_exact(d * hp.leading().second, hp).has_value());
        }
        auto check_divides = [&](const QtPoly& x) {
            if (x.is_zero()) return;
            Mono xm = x.min_exponents();
            QtPoly xp = x.shifted(Mono{{-xm.e[0], -xm.e[1], -xm.e[2]}});
            CHECK(try_divide_exact(xp, d).has_value());
        };
        check_divides(f * h);
        check_divides(g * h);
    }
}

TEST_CASE("substitutions") {
    QtPoly p = QtPoly::monomial(2, 1, 0) + QtPoly::monomial(0, 3, 0) - QtPoly(5);
    CHECK(p.subst_one(Var::q) == QtPoly::t() + QtPoly::t(3) - QtPoly(5));
    CHECK(p.subst_zero(Var::t) == QtPoly(-5));
    CHECK((QtPoly::t(2) + QtPoly::q()).subst_t_qinv() == QtPoly::q(-2) + QtPoly::q());
    CHECK(p.subst_int(Var::t, 2) == QtPoly::q(2) * Int(2) + QtPoly(8 - 5));
}

TEST_CASE("canonical rendering and parsing") {
    CHECK(QtPoly(0).to_string() == "0");
    CHECK(QtPoly(1).to_string() == "1");
    CHECK((QtPoly(1) + QtPoly::q()).to_string() == "1 + q");
    QtPoly p = QtPoly::monomial(3, 1, 0, -2) + QtPoly::q() * QtPoly::t() + QtPoly(4) - QtPoly::u(2);
    CHECK(p.to_string() == "4 - u^2 + q*t - 2*q^3*t");
    CHECK(QtPoly::q(-1).to_string() == "q^-1");

    std::mt19937 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        QtPoly a = random_poly(rng, 5, 4, true);
        CHECK(QtPoly::parse(a.to_string()) == a);
    }
}

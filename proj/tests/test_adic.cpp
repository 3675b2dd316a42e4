#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "wig/adic.hpp"
#include "wig/phase_space.hpp"

using namespace wig;

TEST_CASE("digit arithmetic") {
    NAdicNumber one = nadic_from_integer(3, 0, 4, 1);
    NAdicNumber two = nadic_from_integer(3, 0, 4, 2);
    NAdicNumber sum = nadic_add(one, two);
    CHECK(sum.digits == std::vector<std::int64_t>{0, 1, 0, 0});

    NAdicNumber minus_one = nadic_neg(one);
    CHECK(minus_one.digits == std::vector<std::int64_t>{2, 2, 2, 2});

    std::mt19937_64 rng(31);
    for (std::int64_t n : {2, 3, 4, 5, 6, 9, 10}) {
        std::uniform_int_distribution<std::int64_t> digit(0, n - 1);
        for (int i = 0; i < 100; ++i) {
            std::vector<std::int64_t> digits(5);
            for (auto& d : digits) d = digit(rng);
            NAdicNumber x = make_nadic(n, -1, digits);
            NAdicNumber zero_sum = nadic_add(x, nadic_neg(x));
            for (auto d : zero_sum.digits) CHECK(d == 0);
        }
    }

    CHECK_THROWS_AS(nadic_add(nadic_from_integer(2, 0, 3, 1),
                              nadic_from_integer(3, 0, 3, 1)),
                    BaseMismatch);
    CHECK_THROWS_AS(make_nadic(1, 0, {0}), std::invalid_argument);
}

TEST_CASE("halving digit recursion") {
    NAdicNumber h3 = nadic_halve(nadic_from_integer(3, 0, 4, 1));
    CHECK(h3.start == 0);
    CHECK(h3.digits == std::vector<std::int64_t>{2, 1, 1, 1});

    NAdicNumber h2 = nadic_halve(nadic_from_integer(2, 0, 1, 1));
    CHECK(h2.start == -1);
    CHECK(h2.digits == std::vector<std::int64_t>{1});

    std::mt19937_64 rng(32);
    for (std::int64_t n : {2, 3, 4, 5, 6, 9, 10}) {
        std::uniform_int_distribution<std::int64_t> digit(0, n - 1);
        for (int i = 0; i < 500; ++i) {
            std::vector<std::int64_t> digits(6);
            for (auto& d : digits) d = digit(rng);
            NAdicNumber y = make_nadic(n, -2, digits);
            std::int64_t M = y.precision_end();
            CHECK(nadic_congruent(nadic_double(nadic_halve(y)), y, M - 1));
            CHECK(nadic_congruent(nadic_halve(nadic_double(y)), y, M - 1));
        }
    }
}

TEST_CASE("doubling constants") {
    CHECK(doubling_constant(2) == make_rational(1, 2));
    CHECK(doubling_constant(3) == make_rational(1, 1));
    CHECK(doubling_constant(10) == make_rational(1, 2));
    CHECK(doubling_constant(9) == make_rational(1, 1));
    CHECK_THROWS_AS(doubling_constant(1), std::invalid_argument);
}

TEST_CASE("adic Wigner of indicators") {
    // Odd base: the indicator of Delta_3 has the indicator table
    // [x in Delta_3] x [character trivial on Delta_3], mass 1, min 0.
    SbWignerTable w3 = sb_wigner(sb_indicator(3, 0, 1));
    CHECK(w3.q == 3);
    CHECK(w3.rows == 3);
    for (std::int64_t r = 0; r < 3; ++r) {
        for (std::int64_t j = 0; j < 3; ++j) {
            Complex want = (j == 0) ? Complex(1.0) : Complex(0.0);
            CHECK(std::abs(w3.at(r, j) - want) < 1e-12);
        }
    }
    CHECK(sb_total_mass(w3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sb_min(w3).value == doctest::Approx(0.0));

    // Even base: the indicator of Delta_2 must go negative; the witness sits
    // at an x with digit -1 equal to 1 and a character trivial on U_1 only.
    SbWignerTable w2 = sb_wigner(sb_indicator(2, 0, 1));
    CHECK(w2.q == 8);
    CHECK(w2.rows == 4);
    CHECK(w2.at(1, 2).real() == doctest::Approx(-0.5).epsilon(1e-12));
    NAdicNumber row1 = sb_class_representative(2, 0, 1, 1);
    CHECK(row1.digit_at(-1) == 1);
    SbMinEntry me = sb_min(w2);
    CHECK(me.value == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(sb_total_mass(w2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampled negativity for even bases") {
    std::mt19937_64 rng(33);
    for (auto [m, M] : std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, 2}, {-2, 3}}) {
        for (int i = 0; i < 25; ++i) {
            SchwartzBruhatFn f = random_sb(2, m, M, rng);
            CHECK(sb_min(sb_wigner(f), 1e-7).value < -1e-6);
        }
    }
}

TEST_CASE("odd-base quotient oracle and mass identity") {
    std::mt19937_64 rng(34);
    for (std::int64_t n : {3, 5}) {
        const std::int64_t m = -1, M = 1;
        const std::int64_t L = n * n;
        Group q = make_group({L});
        NAdicNumber h = sb_class_representative(n, m, M, 1);
        std::int64_t s = 0;
        for (std::int64_t pos = M - 1; pos >= m; --pos) s = s * n + h.digit_at(pos);
        std::int64_t s_inv = 0;
        for (std::int64_t c = 0; c < L; ++c) {
            if (c * s % L == 1) s_inv = c;
        }
        for (int i = 0; i < 10; ++i) {
            SchwartzBruhatFn f = random_sb(n, m, M, rng);
            SbWignerTable w = sb_wigner(f);
            PhaseTable fin = wigner(make_state(q, f.coeffs));
            double scale = std::pow(static_cast<double>(n), -static_cast<double>(M));
            for (std::int64_t kx = 0; kx < w.rows; ++kx) {
                for (std::int64_t j = 0; j < w.q; ++j) {
                    CHECK(std::abs(w.at(kx, j) -
                                   scale * fin.at(kx * s % L, j * s_inv % L)) < 1e-9);
                }
            }
            double nrm = sb_norm_l2(f);
            CHECK(sb_total_mass(w) == doctest::Approx(nrm * nrm).epsilon(1e-9));
        }
    }
    // The mass identity also holds verbatim for even bases.
    for (std::int64_t n : {2, 4}) {
        for (int i = 0; i < 10; ++i) {
            SchwartzBruhatFn f = random_sb(n, -1, 1, rng);
            double nrm = sb_norm_l2(f);
            CHECK(sb_total_mass(sb_wigner(f)) == doctest::Approx(nrm * nrm).epsilon(1e-9));
        }
    }
}

TEST_CASE("solenoid arithmetic") {
    auto zero2 = [] {
        return make_solenoid_point(make_rational(0, 1), nadic_from_integer(2, 0, 6, 0));
    };
    SolenoidPoint z = solenoid_add(zero2(), zero2());
    CHECK(z.a == make_rational(0, 1));
    for (auto d : z.x.digits) CHECK(d == 0);

    SolenoidPoint half_one = make_solenoid_point(make_rational(1, 2),
                                                 nadic_from_integer(2, 0, 6, 1));
    SolenoidPoint doubled = solenoid_double(half_one);
    CHECK(doubled.a == make_rational(0, 1));
    CHECK(nadic_congruent(doubled.x, nadic_from_integer(2, 0, 6, 1), 5));

    SolenoidPoint p01 = make_solenoid_point(make_rational(0, 1),
                                            nadic_from_integer(2, 0, 6, 1));
    SolenoidPoint hp = solenoid_halve(p01);
    CHECK(hp.a == make_rational(1, 2));
    CHECK(nadic_congruent(hp.x, nadic_from_integer(2, 0, 5, 1), 5));

    SolenoidPoint h0 = solenoid_halve(zero2());
    CHECK(h0.a == make_rational(0, 1));
    for (auto d : h0.x.digits) CHECK(d == 0);

    CHECK_THROWS_AS(
        solenoid_halve(make_solenoid_point(make_rational(0, 1),
                                           nadic_from_integer(3, 0, 6, 1))),
        NotTwoRegular);
}

TEST_CASE("solenoid roundtrips and kernel witnesses") {
    std::mt19937_64 rng(35);
    for (std::int64_t n : {2, 4}) {
        std::uniform_int_distribution<std::int64_t> digit(0, n - 1);
        std::uniform_int_distribution<std::int64_t> numer(0, 63);
        for (int i = 0; i < 200; ++i) {
            std::vector<std::int64_t> digits(6);
            for (auto& d : digits) d = digit(rng);
            SolenoidPoint p = make_solenoid_point(make_rational(numer(rng), 64),
                                                  make_nadic(n, 0, digits));
            SolenoidPoint back = solenoid_double(solenoid_halve(p));
            CHECK(back.a == p.a);
            CHECK(nadic_congruent(back.x, p.x, p.x.precision_end() - 1));
        }
    }

    SolenoidPoint k3 = solenoid_doubling_kernel(3, 6);
    CHECK(k3.a == make_rational(1, 2));
    CHECK(k3.x.digits == std::vector<std::int64_t>{2, 1, 1, 1, 1, 1});
    for (std::int64_t n : {3, 5}) {
        SolenoidPoint k = solenoid_doubling_kernel(n, 8);
        SolenoidPoint d = solenoid_double(k);
        CHECK(d.a == make_rational(0, 1));
        CHECK(nadic_congruent(d.x, nadic_from_integer(n, 0, 8, 0),
                              k.x.precision_end() - 1));
    }
    CHECK_THROWS_AS(solenoid_doubling_kernel(2), std::invalid_argument);
}

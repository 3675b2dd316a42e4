#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "wig/phase_space.hpp"
#include "wig/second_degree.hpp"

using namespace wig;

namespace {

const double kPi = std::numbers::pi;

StateVector chirp3() {
    // x -> 3^{-1/2} exp(4 pi i x^2 / 3): full-support state whose Wigner
    // table is the diagonal indicator [a = x].
    Group z3 = make_group({3});
    std::vector<Complex> v(3);
    for (std::int64_t x = 0; x < 3; ++x) {
        v[static_cast<std::size_t>(x)] =
            std::polar(1.0 / std::sqrt(3.0), 4.0 * kPi * static_cast<double>(x * x) / 3.0);
    }
    return make_state(z3, v);
}

double max_table_diff(const PhaseTable& a, const PhaseTable& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    }
    return d;
}

std::vector<Group> small_groups() {
    return {make_group({3}), make_group({5}), make_group({9}), make_group({3, 3}),
            make_group({3, 5})};
}

}  // namespace

TEST_CASE("fourier basics and Plancherel") {
    Group z3 = make_group({3});
    StateVector d0 = delta_state(z3, {0});
    StateVector d0_hat = fourier(d0);
    for (const auto& v : d0_hat.values) CHECK(std::abs(v - Complex(1.0)) < 1e-12);

    StateVector ones = constant_state(z3, Complex(1.0));
    StateVector ones_hat = fourier(ones);
    CHECK(std::abs(ones_hat.values[0] - Complex(3.0)) < 1e-12);
    CHECK(std::abs(ones_hat.values[1]) < 1e-12);
    CHECK(std::abs(ones_hat.values[2]) < 1e-12);

    std::mt19937_64 rng(11);
    for (const Group& g : small_groups()) {
        for (int i = 0; i < 100; ++i) {
            StateVector f = random_state(g, rng);
            StateVector fh = fourier(f);
            double dual = 0.0;
            for (const auto& v : fh.values) dual += std::norm(v);
            dual /= static_cast<double>(g.cardinality);
            CHECK(std::abs(dual - 1.0) < 1e-9);
            // Round trip through the inverse transform.
            StateVector back = inverse_fourier(fh);
            for (std::size_t k = 0; k < f.values.size(); ++k) {
                CHECK(std::abs(back.values[k] - f.values[k]) < 1e-9);
            }
        }
    }
}

TEST_CASE("stft of deltas, isometry, polarization") {
    Group z3 = make_group({3});
    StateVector d0 = delta_state(z3, {0});
    PhaseTable v = stft(d0, d0);
    for (std::int64_t x = 0; x < 3; ++x) {
        for (std::int64_t a = 0; a < 3; ++a) {
            Complex want = (x == 0) ? Complex(1.0) : Complex(0.0);
            CHECK(std::abs(v.at(x, a) - want) < 1e-12);
        }
    }

    std::mt19937_64 rng(12);
    for (const Group& g : small_groups()) {
        for (int i = 0; i < 30; ++i) {
            StateVector f = random_state(g, rng);
            StateVector w = random_state(g, rng);
            PhaseTable t = stft(f, w);
            double iso = 0.0;
            for (const auto& z : t.values) iso += std::norm(z);
            iso /= static_cast<double>(g.cardinality);
            CHECK(std::abs(iso - 1.0) < 1e-9);

            StateVector f2 = random_state(g, rng);
            StateVector w2 = random_state(g, rng);
            Complex lhs = table_inner(t, stft(f2, w2));
            Complex rhs = inner(f, f2) * inner(w2, w);
            CHECK(std::abs(lhs - rhs) < 1e-9);
        }
    }
    CHECK_THROWS_AS(stft(delta_state(z3, {0}), delta_state(make_group({5}), {0})),
                    GroupMismatch);
}

TEST_CASE("ambiguity function") {
    Group z3 = make_group({3});
    StateVector d0 = delta_state(z3, {0});
    PhaseTable amb = ambiguity(d0);
    for (std::int64_t x = 0; x < 3; ++x) {
        for (std::int64_t a = 0; a < 3; ++a) {
            Complex want = (x == 0) ? Complex(1.0) : Complex(0.0);
            CHECK(std::abs(amb.at(x, a) - want) < 1e-12);
        }
    }

    std::mt19937_64 rng(13);
    for (const Group& g : small_groups()) {
        StateVector f = random_state(g, rng);
        PhaseTable t = ambiguity(f);
        CHECK(std::abs(t.at(0, 0) - Complex(1.0)) < 1e-9);  // ||f||^2 = 1
        for (const auto& z : t.values) CHECK(std::abs(z) <= 1.0 + 1e-9);
    }
    StateVector even(StateVector{make_group({4}), {1, 0, 0, 0}});
    CHECK_THROWS_AS(ambiguity(even), NotTwoRegular);
}

TEST_CASE("wigner oracle values on Z3") {
    Group z3 = make_group({3});

    PhaseTable wd = wigner(delta_state(z3, {0}));
    for (std::int64_t x = 0; x < 3; ++x) {
        for (std::int64_t a = 0; a < 3; ++a) {
            Complex want = (x == 0) ? Complex(1.0) : Complex(0.0);
            CHECK(std::abs(wd.at(x, a) - want) < 1e-12);
        }
    }

    PhaseTable wc = wigner(chirp3());
    for (std::int64_t x = 0; x < 3; ++x) {
        for (std::int64_t a = 0; a < 3; ++a) {
            Complex want = (a == x) ? Complex(1.0) : Complex(0.0);
            CHECK(std::abs(wc.at(x, a) - want) < 1e-10);
        }
    }

    StateVector two = make_state(z3, {Complex(1.0), Complex(1.0), Complex(0.0)});
    PhaseTable wt = wigner(two);
    CHECK(std::abs(wt.at(2, 1) - Complex(-1.0)) < 1e-10);
    MinEntry me = min_entry(wt);
    CHECK(me.value == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(me.where == PhasePoint{2, 1});

    CHECK_THROWS_AS(wigner(StateVector{make_group({4}), {1, 0, 0, 0}}), NotTwoRegular);
}

TEST_CASE("wigner structural identities on random states") {
    std::mt19937_64 rng(14);
    for (const Group& g : small_groups()) {
        const std::int64_t n = g.cardinality;
        std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
        for (int i = 0; i < 25; ++i) {
            StateVector f = random_state(g, rng);
            PhaseTable wf = wigner(f);

            double max_im = 0.0;
            for (const auto& z : wf.values) max_im = std::max(max_im, std::abs(z.imag()));
            CHECK(max_im < 1e-9);

            CHECK(std::abs(table_total_mass(wf) - Complex(1.0)) < 1e-9);
            CHECK(max_table_diff(wf, wigner_via_stft(f)) < 1e-9);
            CHECK(max_table_diff(wf, wigner_via_ambiguity(f)) < 1e-8);

            StateVector h = random_state(g, rng);
            CHECK(std::abs(table_inner(wf, wigner(h)) - Complex(std::norm(inner(f, h)))) <
                  1e-8);

            Element y = element_at(g, pick(rng));
            Element a = element_at(g, pick(rng));
            PhaseTable ws = wigner(modulate(translate(f, y), a));
            for (std::int64_t x = 0; x < n; ++x) {
                for (std::int64_t b = 0; b < n; ++b) {
                    std::int64_t xs = index_of(g, sub(g, element_at(g, x), y));
                    std::int64_t bs = index_of(g, sub(g, element_at(g, b), a));
                    CHECK(std::abs(ws.at(x, b) - wf.at(xs, bs)) < 1e-9);
                }
            }

            PhaseTable wh = wigner(fourier(f));
            for (std::int64_t x = 0; x < n; ++x) {
                std::int64_t mx = index_of(g, neg(g, element_at(g, x)));
                for (std::int64_t b = 0; b < n; ++b) {
                    CHECK(std::abs(wf.at(x, b) - wh.at(b, mx) / static_cast<double>(n)) <
                          1e-8);
                }
            }
        }
    }
}

TEST_CASE("translate, modulate, tensor") {
    Group z3 = make_group({3});
    CHECK(std::abs(translate(delta_state(z3, {0}), {1}).values[1] - Complex(1.0)) < 1e-15);

    StateVector ones = constant_state(z3, Complex(1.0));
    StateVector mod_hat = fourier(modulate(ones, {2}));
    CHECK(std::abs(mod_hat.values[2] - Complex(3.0)) < 1e-12);
    CHECK(std::abs(mod_hat.values[0]) < 1e-12);

    std::mt19937_64 rng(15);
    StateVector f = random_state(z3, rng);
    StateVector g5 = random_state(make_group({5}), rng);
    StateVector fg = tensor(f, g5);
    CHECK(fg.group.orders == std::vector<std::int64_t>{3, 5});
    PhaseTable vff = stft(f, f);
    PhaseTable vgg = stft(g5, g5);
    PhaseTable vt = stft(fg, fg);
    for (std::int64_t x1 = 0; x1 < 3; ++x1) {
        for (std::int64_t x2 = 0; x2 < 5; ++x2) {
            for (std::int64_t a1 = 0; a1 < 3; ++a1) {
                for (std::int64_t a2 = 0; a2 < 5; ++a2) {
                    Complex want = vff.at(x1, a1) * vgg.at(x2, a2);
                    CHECK(std::abs(vt.at(x1 * 5 + x2, a1 * 5 + a2) - want) < 1e-9);
                }
            }
        }
    }

    // The STFT support measure is invariant under appending a delta factor.
    StateVector fd = tensor(f, delta_state(make_group({5}), {0}));
    CHECK(support_measure(stft(fd, fd), 1e-9) ==
          doctest::Approx(support_measure(vff, 1e-9)).epsilon(1e-12));
}

TEST_CASE("smoothing with phase-space subgroups") {
    Group z3 = make_group({3});
    StateVector two = make_state(z3, {Complex(1.0), Complex(1.0), Complex(0.0)});
    PhaseTable w = wigner(two);

    std::vector<PhasePoint> axis;  // {0} x dual(A)
    for (std::int64_t a = 0; a < 3; ++a) axis.push_back(PhasePoint{0, a});
    PhaseTable sm = smooth_with_subgroup(w, axis);
    CHECK(std::abs(sm.at(2, 0) - Complex(0.0)) < 1e-10);
    CHECK(std::abs(sm.at(0, 0) - Complex(1.0)) < 1e-10);
    CHECK(min_entry(sm).value > -1e-10);

    std::vector<PhasePoint> full;
    for (std::int64_t x = 0; x < 3; ++x) {
        for (std::int64_t a = 0; a < 3; ++a) full.push_back(PhasePoint{x, a});
    }
    PhaseTable smf = smooth_with_subgroup(w, full);
    Complex c0 = smf.values[0];
    for (const auto& z : smf.values) CHECK(std::abs(z - c0) < 1e-10);
    CHECK(c0.real() > -1e-10);

    std::vector<PhasePoint> not_subgroup = {PhasePoint{0, 0}, PhasePoint{1, 0}};
    CHECK_THROWS_AS(smooth_with_subgroup(w, not_subgroup), NotASubgroup);
}

TEST_CASE("min_entry rejects non-real tables") {
    Group z3 = make_group({3});
    PhaseTable t{z3, std::vector<Complex>(9, Complex(0.0, 0.5))};
    CHECK_THROWS_AS(min_entry(t), NonRealTable);
    MinEntry ok = min_entry(wigner(delta_state(z3, {0})));
    CHECK(ok.value == doctest::Approx(0.0));
    CHECK(ok.where == PhasePoint{1, 0});
}

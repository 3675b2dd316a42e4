#include "wig/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "wig/adic.hpp"
#include "wig/phase_space.hpp"
#include "wig/second_degree.hpp"

namespace wig {

namespace {

std::string group_label(const Group& g) {
    std::ostringstream out;
    out << "Z" << g.orders[0];
    for (std::size_t i = 1; i < g.orders.size(); ++i) out << "xZ" << g.orders[i];
    return out.str();
}

void add_record(std::vector<ReportRecord>& records, std::string name, std::string tag,
                bool pass, double measured, double tolerance, std::string detail = "") {
    records.push_back(ReportRecord{std::move(name), std::move(tag), pass, measured,
                                   tolerance, std::move(detail)});
}

double table_max_diff(const PhaseTable& a, const PhaseTable& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    }
    return d;
}

std::mt19937_64 seeded(const SuiteConfig& cfg, std::uint64_t stream) {
    return std::mt19937_64(cfg.seed * 0x9e3779b97f4a7c15ULL + stream);
}

// --- Criterion 1: every S-state has a nonnegative Wigner table equal to the
// indicator of a coset of a maximal compact open isotropic subgroup. ---
CriterionResult criterion_hudson_forward(const SuiteConfig& cfg) {
    CriterionResult res{1, "hudson forward: S-states have indicator Wigner tables", true, 0, {}};
    bool fault_pending = cfg.inject_fault;
    for (const Group& g : default_test_groups()) {
        double worst_min = 0.0;
        double worst_indicator = 0.0;
        bool ok = true;
        auto states = enumerate_sstates(g);
        for (const auto& s : states) {
            StateVector probe = s;
            if (fault_pending) {
                // Self-test hook: a corrupted state must break the indicator
                // property and fail this criterion.
                probe.values[1] += Complex(0.35, -0.2);
                fault_pending = false;
            }
            HudsonReport rep = hudson_classify(probe, 1e-9);
            worst_min = std::min(worst_min, rep.min_value);
            if (!rep.positive || !rep.sstate) {
                ok = false;
                continue;
            }
            worst_indicator = std::max(worst_indicator, rep.indicator_error);
            if (rep.indicator_error >= 1e-9) ok = false;
        }
        add_record(res.records, "hudson-forward/" + group_label(g),
                   "wigner-positivity-indicator", ok,
                   std::max(-worst_min, worst_indicator), 1e-9,
                   std::to_string(states.size()) + " S-states");
        res.pass = res.pass && ok;
    }
    return res;
}

// --- Criterion 2: sampled converse — random states are either detected
// S-states (never, in practice) or have a strictly negative Wigner value. ---
CriterionResult criterion_hudson_converse(const SuiteConfig& cfg) {
    CriterionResult res{2, "hudson converse: random states have negative Wigner values",
                        true, 0, {}};
    for (const Group& g : default_test_groups()) {
        auto rng = seeded(cfg, 2000 + g.cardinality);
        std::int64_t violations = 0;
        double worst = -1.0;  // largest observed minimum among non-S-states
        for (int i = 0; i < 1000; ++i) {
            StateVector f = random_state(g, rng);
            MinEntry me = min_entry(wigner(f), 1e-7);
            if (me.value < -1e-4) continue;
            if (!detect_sstate(f, 1e-9)) ++violations;
            worst = std::max(worst, me.value);
        }
        bool ok = violations == 0;
        add_record(res.records, "hudson-converse/" + group_label(g),
                   "negative-wigner-sampling", ok, static_cast<double>(violations), 0.0,
                   "1000 samples");
        res.pass = res.pass && ok;
    }
    return res;
}

// --- Criterion 3: the Wehrl bound is tight exactly on the states the
// classifier reports as positive. ---
CriterionResult criterion_wehrl(const SuiteConfig& cfg) {
    CriterionResult res{3, "Wehrl equality holds exactly for classifier-positive states",
                        true, 0, {}};
    for (const Group& g : default_test_groups()) {
        auto rng = seeded(cfg, 3000 + g.cardinality);
        std::vector<StateVector> pool = enumerate_sstates(g);
        for (int i = 0; i < 200; ++i) pool.push_back(random_state(g, rng));
        std::int64_t mismatches = 0;
        for (const auto& f : pool) {
            StateVector fn = normalized(f);
            double lhs = wehrl_l1(fn, reflect(fn));
            bool tight = std::abs(lhs - 1.0) < 1e-8;
            bool positive = hudson_classify(fn, 1e-9).positive;
            if (tight != positive) ++mismatches;
        }
        bool ok = mismatches == 0;
        add_record(res.records, "wehrl-consistency/" + group_label(g), "wehrl-equality",
                   ok, static_cast<double>(mismatches), 0.0,
                   std::to_string(pool.size()) + " states");
        res.pass = res.pass && ok;
    }
    return res;
}

// --- Criterion 4: structural identity battery on random states. ---
CriterionResult criterion_identities(const SuiteConfig& cfg) {
    CriterionResult res{4, "structural identities (Plancherel, Moyal, covariance, routes)",
                        true, 0, {}};
    for (const Group& g : default_test_groups()) {
        auto rng = seeded(cfg, 4000 + g.cardinality);
        const std::int64_t n = g.cardinality;
        double e_plancherel = 0, e_isometry = 0, e_polar = 0, e_moyal = 0;
        double e_covariance = 0, e_fourier = 0, e_amb_route = 0, e_stft_route = 0;
        double e_mass = 0;
        std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
        for (int i = 0; i < 100; ++i) {
            StateVector f = random_state(g, rng);
            StateVector h = random_state(g, rng);

            StateVector fh = fourier(f);
            double dual_norm_sq = 0.0;
            for (const auto& v : fh.values) dual_norm_sq += std::norm(v);
            dual_norm_sq /= static_cast<double>(n);
            e_plancherel = std::max(e_plancherel, std::abs(dual_norm_sq - 1.0));

            PhaseTable v_hf = stft(f, h);
            double iso = 0.0;
            for (const auto& z : v_hf.values) iso += std::norm(z);
            iso /= static_cast<double>(n);
            e_isometry = std::max(e_isometry, std::abs(iso - 1.0));

            StateVector f2 = random_state(g, rng);
            StateVector h2 = random_state(g, rng);
            Complex polar_lhs = table_inner(v_hf, stft(f2, h2));
            Complex polar_rhs = inner(h2, h) * inner(f, f2);
            e_polar = std::max(e_polar, std::abs(polar_lhs - polar_rhs));

            PhaseTable wf = wigner(f);
            PhaseTable wh = wigner(h);
            Complex moyal_lhs = table_inner(wf, wh);
            e_moyal = std::max(e_moyal,
                               std::abs(moyal_lhs - Complex(std::norm(inner(f, h)))));

            Element y = element_at(g, pick(rng));
            Element a = element_at(g, pick(rng));
            PhaseTable shifted = wigner(modulate(translate(f, y), a));
            double cov = 0.0;
            for (std::int64_t x = 0; x < n; ++x) {
                for (std::int64_t b = 0; b < n; ++b) {
                    Element xs = sub(g, element_at(g, x), y);
                    Element bs = sub(g, element_at(g, b), a);
                    cov = std::max(cov, std::abs(shifted.at(x, b) -
                                                 wf.at(index_of(g, xs), index_of(g, bs))));
                }
            }
            e_covariance = std::max(e_covariance, cov);

            PhaseTable wfh = wigner(fh);
            double fsym = 0.0;
            for (std::int64_t x = 0; x < n; ++x) {
                std::int64_t mx = index_of(g, neg(g, element_at(g, x)));
                for (std::int64_t b = 0; b < n; ++b) {
                    fsym = std::max(fsym,
                                    std::abs(wf.at(x, b) -
                                             wfh.at(b, mx) / static_cast<double>(n)));
                }
            }
            e_fourier = std::max(e_fourier, fsym);

            e_amb_route = std::max(e_amb_route, table_max_diff(wf, wigner_via_ambiguity(f)));
            e_stft_route = std::max(e_stft_route, table_max_diff(wf, wigner_via_stft(f)));
            e_mass = std::max(e_mass, std::abs(table_total_mass(wf) - Complex(1.0)));
        }
        struct Check {
            const char* tag;
            double measured;
            double tol;
        } checks[] = {
            {"plancherel", e_plancherel, 1e-9},
            {"stft-isometry", e_isometry, 1e-9},
            {"stft-polarization", e_polar, 1e-8},
            {"moyal", e_moyal, 1e-8},
            {"wigner-covariance", e_covariance, 1e-9},
            {"wigner-fourier-symmetry", e_fourier, 1e-8},
            {"wigner-ambiguity-route", e_amb_route, 1e-8},
            {"wigner-stft-route", e_stft_route, 1e-9},
            {"wigner-total-mass", e_mass, 1e-9},
        };
        for (const auto& c : checks) {
            bool ok = c.measured < c.tol;
            add_record(res.records, std::string(c.tag) + "/" + group_label(g), c.tag, ok,
                       c.measured, c.tol, "100 samples");
            res.pass = res.pass && ok;
        }
    }
    return res;
}

// --- Criterion 5: smoothing with any maximal compact open isotropic
// subgroup (or a larger compact subgroup) restores nonnegativity. ---
CriterionResult criterion_smoothing(const SuiteConfig& cfg) {
    CriterionResult res{5, "Wigner smoothed by isotropic subgroups is nonnegative", true, 0, {}};
    for (const Group& g : default_test_groups()) {
        auto rng = seeded(cfg, 5000 + g.cardinality);
        const std::int64_t n = g.cardinality;
        std::vector<std::vector<PhasePoint>> smoothers;
        for (const auto& spec : enumerate_max_isotropic(g)) {
            smoothers.push_back(spec.elements);
        }
        // Larger compact subgroups H x dual(A) containing an isotropic one
        // (H = A gives the full phase space).
        for (const auto& h : enumerate_subgroups(g)) {
            std::vector<PhasePoint> pts;
            for (auto xi : h.element_indices) {
                for (std::int64_t a = 0; a < n; ++a) pts.push_back(PhasePoint{xi, a});
            }
            smoothers.push_back(std::move(pts));
        }
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            PhaseTable w = wigner(random_state(g, rng));
            for (const auto& pts : smoothers) {
                MinEntry me = min_entry(smooth_with_subgroup(w, pts), 1e-7);
                worst = std::min(worst, me.value);
            }
        }
        bool ok = worst >= -1e-9;
        add_record(res.records, "smoothed-positivity/" + group_label(g),
                   "smoothed-wigner-nonnegative", ok, worst, 1e-9,
                   std::to_string(smoothers.size()) + " subgroups, 100 samples");
        res.pass = res.pass && ok;
    }
    return res;
}

// --- Criterion 6: exact counting oracles. ---
CriterionResult criterion_counts(const SuiteConfig&) {
    CriterionResult res{6, "counting oracles (S-states, isotropic subgroups, subgroups)",
                        true, 0, {}};
    auto expect = [&](std::string name, std::string tag, std::int64_t got,
                      std::int64_t want) {
        bool ok = got == want;
        add_record(res.records, std::move(name), std::move(tag), ok,
                   static_cast<double>(got), 0.0, "expected " + std::to_string(want));
        res.pass = res.pass && ok;
    };
    for (std::int64_t p : {3, 5, 7}) {
        Group g = make_group({p});
        expect("sstate-count/Z" + std::to_string(p), "sstate-count",
               static_cast<std::int64_t>(enumerate_sstates(g).size()), p * (p + 1));
        expect("isotropic-count/Z" + std::to_string(p), "isotropic-count",
               static_cast<std::int64_t>(enumerate_max_isotropic(g).size()), p + 1);
    }
    expect("subgroup-count/Z9", "subgroup-count",
           static_cast<std::int64_t>(enumerate_subgroups(make_group({9})).size()), 3);
    expect("subgroup-count/Z3xZ3", "subgroup-count",
           static_cast<std::int64_t>(enumerate_subgroups(make_group({3, 3})).size()), 6);
    return res;
}

// --- Criterion 7: product-group classification on Z3 x Z3. ---
CriterionResult criterion_products(const SuiteConfig&) {
    CriterionResult res{7, "product classification on Z3xZ3 (tensor forms, Fourier closure)",
                        true, 0, {}};
    Group g3 = make_group({3});
    Group g33 = make_group({3, 3});
    auto sstates33 = enumerate_sstates(g33);
    std::set<std::vector<std::int64_t>> canon;
    for (const auto& s : sstates33) canon.insert(canonical_key(s));

    // Every enumerated S-state is classifier-positive and detected; no
    // positive state outside the set arises from the classifier on S-states.
    std::int64_t forward_fail = 0;
    for (const auto& s : sstates33) {
        HudsonReport rep = hudson_classify(s, 1e-9);
        if (!rep.positive || !rep.sstate) ++forward_fail;
    }
    bool ok = forward_fail == 0;
    add_record(res.records, "positive-set/Z3xZ3", "positive-iff-sstate", ok,
               static_cast<double>(forward_fail), 0.0,
               std::to_string(sstates33.size()) + " states");
    res.pass = res.pass && ok;

    // Tensor forms: ftilde x delta and ftilde x constant are S-states of the
    // product and land inside the enumerated canonical set.
    std::int64_t tensor_fail = 0;
    auto sstates3 = enumerate_sstates(g3);
    for (const auto& ft : sstates3) {
        for (std::int64_t y = 0; y < 3; ++y) {
            StateVector prod = tensor(ft, delta_state(g3, element_at(g3, y)));
            if (!canon.count(canonical_key(canonicalize_sstate(prod)))) ++tensor_fail;
            if (y == 0 && !verify_direct_sum_form(prod, 1, 1e-9)) ++tensor_fail;
        }
        StateVector flat = tensor(ft, constant_state(g3, Complex(1.0)));
        if (!canon.count(canonical_key(canonicalize_sstate(flat)))) ++tensor_fail;
    }
    ok = tensor_fail == 0;
    add_record(res.records, "tensor-forms/Z3xZ3", "tensor-delta-form", ok,
               static_cast<double>(tensor_fail), 0.0);
    res.pass = res.pass && ok;

    // Fourier closure: the transform permutes the canonical S-state set.
    std::set<std::vector<std::int64_t>> image;
    for (const auto& s : sstates33) {
        image.insert(canonical_key(canonicalize_sstate(fourier(s))));
    }
    ok = image == canon;
    add_record(res.records, "fourier-closure/Z3xZ3", "fourier-duality-closure", ok,
               static_cast<double>(image.size()), 0.0,
               "image size vs " + std::to_string(canon.size()));
    res.pass = res.pass && ok;
    return res;
}

// --- Criterion 8: n-adic halving engine and doubling constants. ---
CriterionResult criterion_nadic(const SuiteConfig& cfg) {
    CriterionResult res{8, "n-adic halving roundtrips and doubling constants", true, 0, {}};
    for (std::int64_t n : {2, 3, 4, 5, 6, 9, 10}) {
        auto rng = seeded(cfg, 8000 + n);
        std::uniform_int_distribution<std::int64_t> digit(0, n - 1);
        std::int64_t failures = 0;
        for (int i = 0; i < 500; ++i) {
            std::vector<std::int64_t> digits(6);
            for (auto& d : digits) d = digit(rng);
            NAdicNumber y = make_nadic(n, -2, digits);
            std::int64_t M = y.precision_end();
            if (!nadic_congruent(nadic_double(nadic_halve(y)), y, M - 1)) ++failures;
            if (!nadic_congruent(nadic_halve(nadic_double(y)), y, M - 1)) ++failures;
            if (!nadic_congruent(nadic_add(y, nadic_neg(y)),
                                 nadic_from_integer(n, -2, 6, 0), M)) {
                ++failures;
            }
        }
        bool ok = failures == 0;
        add_record(res.records, "halving-roundtrip/base" + std::to_string(n),
                   "halving-roundtrip", ok, static_cast<double>(failures), 0.0,
                   "500 seeds");
        res.pass = res.pass && ok;

        Rational l2 = doubling_constant(n);
        Rational want = (n % 2 == 0) ? make_rational(1, 2) : make_rational(1, 1);
        ok = l2 == want;
        add_record(res.records, "doubling-constant/base" + std::to_string(n),
                   "doubling-constant", ok,
                   static_cast<double>(l2.num) / static_cast<double>(l2.den), 0.0,
                   "stable across two levels");
        res.pass = res.pass && ok;
    }
    return res;
}

// --- Criterion 9: the 2-adic Wigner negativity and the odd-base quotient
// oracle. ---
CriterionResult criterion_adic_wigner(const SuiteConfig& cfg) {
    CriterionResult res{9, "2-adic Wigner negativity; odd-base quotient oracle", true, 0, {}};

    SbMinEntry ind = sb_min(sb_wigner(sb_indicator(2, 0, 1)));
    bool ok = std::abs(ind.value + 0.5) < 1e-9;
    add_record(res.records, "indicator-min/base2", "adic-wigner-min", ok, ind.value, 1e-9,
               "expected -1/2");
    res.pass = res.pass && ok;

    for (auto [m, M] : std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, 2}, {-2, 3}}) {
        auto rng = seeded(cfg, 9000 + static_cast<std::uint64_t>(M));
        double worst = -1.0;
        std::int64_t failures = 0;
        for (int i = 0; i < 100; ++i) {
            SchwartzBruhatFn f = random_sb(2, m, M, rng);
            SbMinEntry me = sb_min(sb_wigner(f), 1e-7);
            worst = std::max(worst, me.value);
            if (me.value >= -1e-6) ++failures;
        }
        ok = failures == 0;
        add_record(res.records,
                   "negativity-sampling/base2-window" + std::to_string(m) + ".." +
                       std::to_string(M),
                   "adic-negativity-sampling", ok, worst, 1e-6, "100 samples");
        res.pass = res.pass && ok;
    }

    for (std::int64_t n : {3, 9}) {
        auto rng = seeded(cfg, 9100 + n);
        const std::int64_t m = -1, M = 1;
        const std::int64_t L = static_cast<std::int64_t>(std::llround(
            std::pow(static_cast<double>(n), static_cast<double>(M - m))));
        Group q = make_group({L});
        NAdicNumber h = sb_class_representative(n, m, M, 1);
        std::int64_t s = 0;
        for (std::int64_t pos = M - 1; pos >= m; --pos) s = s * n + h.digit_at(pos);
        std::int64_t s_inv = 0;
        for (std::int64_t c = 0; c < L; ++c) {
            if (c * s % L == 1) s_inv = c;
        }
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            SchwartzBruhatFn f = random_sb(n, m, M, rng);
            SbWignerTable w = sb_wigner(f);
            PhaseTable fin = wigner(make_state(q, f.coeffs));
            const double scale = std::pow(static_cast<double>(n), -static_cast<double>(M));
            for (std::int64_t kx = 0; kx < w.rows; ++kx) {
                for (std::int64_t j = 0; j < w.q; ++j) {
                    Complex oracle = scale * fin.at(kx * s % L, j * s_inv % L);
                    worst = std::max(worst, std::abs(w.at(kx, j) - oracle));
                }
            }
            worst = std::max(worst, std::abs(sb_total_mass(w) -
                                             sb_norm_l2(f) * sb_norm_l2(f)));
        }
        ok = worst < 1e-9;
        add_record(res.records, "quotient-oracle/base" + std::to_string(n),
                   "quotient-oracle", ok, worst, 1e-9, "50 samples");
        res.pass = res.pass && ok;
    }
    return res;
}

// --- Criterion 10: solenoid halving roundtrip and doubling kernel. ---
CriterionResult criterion_solenoid(const SuiteConfig& cfg) {
    CriterionResult res{10, "solenoid halving roundtrip and doubling kernel witness",
                        true, 0, {}};
    for (std::int64_t n : {2, 4}) {
        auto rng = seeded(cfg, 10000 + n);
        std::uniform_int_distribution<std::int64_t> digit(0, n - 1);
        std::uniform_int_distribution<std::int64_t> numer(0, 63);
        std::int64_t failures = 0;
        for (int i = 0; i < 200; ++i) {
            std::vector<std::int64_t> digits(6);
            for (auto& d : digits) d = digit(rng);
            SolenoidPoint p = make_solenoid_point(make_rational(numer(rng), 64),
                                                  make_nadic(n, 0, digits));
            SolenoidPoint q = solenoid_double(solenoid_halve(p));
            if (!(q.a == p.a) ||
                !nadic_congruent(q.x, p.x, p.x.precision_end() - 1)) {
                ++failures;
            }
        }
        bool ok = failures == 0;
        add_record(res.records, "solenoid-roundtrip/base" + std::to_string(n),
                   "solenoid-roundtrip", ok, static_cast<double>(failures), 0.0,
                   "200 seeds");
        res.pass = res.pass && ok;
    }
    for (std::int64_t n : {3, 5}) {
        SolenoidPoint k = solenoid_doubling_kernel(n, 8);
        SolenoidPoint d = solenoid_double(k);
        NAdicNumber zero = nadic_from_integer(n, 0, 8, 0);
        bool ok = d.a == make_rational(0, 1) &&
                  nadic_congruent(d.x, zero, k.x.precision_end() - 1);
        add_record(res.records, "solenoid-kernel/base" + std::to_string(n),
                   "solenoid-doubling-kernel", ok, 0.0, 0.0, "2z = 0 witness");
        res.pass = res.pass && ok;
    }
    return res;
}

}  // namespace

std::vector<Group> default_test_groups() {
    return {make_group({3}),    make_group({5}),    make_group({7}), make_group({9}),
            make_group({3, 3}), make_group({3, 5}), make_group({27})};
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteConfig& cfg) {
    using Runner = CriterionResult (*)(const SuiteConfig&);
    Runner runners[] = {
        criterion_hudson_forward, criterion_hudson_converse, criterion_wehrl,
        criterion_identities,     criterion_smoothing,       criterion_counts,
        criterion_products,       criterion_nadic,           criterion_adic_wigner,
        criterion_solenoid,
    };
    std::vector<CriterionResult> out;
    int index = 0;
    for (Runner run : runners) {
        ++index;
        if (cfg.only_criterion != 0 && cfg.only_criterion != index) continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = run(cfg);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace wig

#include "wig/second_degree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace wig {

namespace {

std::int64_t order_of(const Group& g, const Element& x) {
    std::int64_t k = 1;
    Element y = x;
    while (index_of(g, y) != 0) {
        y = add(g, y, x);
        ++k;
    }
    return k;
}

void decompose_rec(const Group& g, const std::vector<std::int64_t>& elems,
                   std::vector<Element>& basis_out, std::vector<std::int64_t>& factors_out) {
    if (elems.size() <= 1) return;
    std::int64_t best_idx = -1;
    std::int64_t best_ord = 0;
    for (auto idx : elems) {
        std::int64_t ord = order_of(g, element_at(g, idx));
        if (ord > best_ord) {
            best_ord = ord;
            best_idx = idx;
        }
    }
    Element b = element_at(g, best_idx);
    if (best_ord == static_cast<std::int64_t>(elems.size())) {
        basis_out.push_back(b);
        factors_out.push_back(best_ord);
        return;
    }
    // <b> is a direct summand since b has maximal order; find a complement
    // among the subgroups of H.
    Subgroup cyc = subgroup_from_generators(g, {b});
    std::int64_t want = static_cast<std::int64_t>(elems.size()) / best_ord;
    for (const auto& k : enumerate_subgroups_within(g, elems)) {
        if (k.order() != want) continue;
        bool trivial_meet = true;
        for (auto idx : cyc.element_indices) {
            if (idx != 0 && k.contains_index(idx)) {
                trivial_meet = false;
                break;
            }
        }
        if (trivial_meet) {
            decompose_rec(g, k.element_indices, basis_out, factors_out);
            basis_out.push_back(b);
            factors_out.push_back(best_ord);
            return;
        }
    }
    throw std::logic_error("cyclic_decompose: no complement found");
}

}  // namespace

const std::vector<std::int64_t>& CyclicBasis::coords_of(std::int64_t element_index) const {
    auto it = coords.find(element_index);
    if (it == coords.end()) {
        throw std::invalid_argument("coords_of: element not in subgroup");
    }
    return it->second;
}

CyclicBasis cyclic_decompose(const Subgroup& h) {
    const Group& g = h.parent;
    CyclicBasis cb;
    cb.subgroup = h;
    decompose_rec(g, h.element_indices, cb.basis, cb.invariant_factors);
    // Recursion emits ascending invariant factors e_1 | ... | e_r already.
    std::size_t r = cb.basis.size();
    if (r == 0) {
        cb.coords[0] = {};
        return cb;
    }
    std::vector<std::int64_t> c(r, 0);
    while (true) {
        Element x = zero(g);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::int64_t rep = 0; rep < c[i]; ++rep) x = add(g, x, cb.basis[i]);
        }
        cb.coords[index_of(g, x)] = c;
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (++c[i] < cb.invariant_factors[i]) break;
            c[i] = 0;
        }
        if (i == r) break;
    }
    if (cb.coords.size() != static_cast<std::size_t>(h.order())) {
        throw std::logic_error("cyclic_decompose: coordinate map is not a bijection");
    }
    return cb;
}

std::pair<std::int64_t, std::int64_t> SymmetricHom::eval_phase(const Element& x,
                                                               const Element& y) const {
    const Group& g = basis.subgroup.parent;
    const auto& cx = basis.coords_of(index_of(g, x));
    const auto& cy = basis.coords_of(index_of(g, y));
    std::size_t r = basis.basis.size();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            den = std::lcm(den, std::gcd(basis.invariant_factors[i], basis.invariant_factors[j]));
        }
    }
    std::int64_t num = 0;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            std::int64_t gij = std::gcd(basis.invariant_factors[i], basis.invariant_factors[j]);
            std::int64_t term = (matrix[i][j] % gij) * (cx[i] % gij) % gij * (cy[j] % gij) % gij;
            num = (num + term * (den / gij)) % den;
        }
    }
    return {num, den};
}

Complex SymmetricHom::eval(const Element& x, const Element& y) const {
    auto [num, den] = eval_phase(x, y);
    if (num == 0) return Complex(1.0, 0.0);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                               static_cast<double>(den));
}

std::vector<SymmetricHom> enumerate_sym_homs(const Subgroup& h, std::int64_t cap) {
    if (h.order() > cap) throw CapExceeded("enumerate_sym_homs: subgroup order exceeds cap");
    CyclicBasis cb = cyclic_decompose(h);
    std::size_t r = cb.basis.size();
    std::vector<std::vector<std::int64_t>> bounds(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            bounds[i][j] = std::gcd(cb.invariant_factors[i], cb.invariant_factors[j]);
        }
    }
    std::vector<SymmetricHom> out;
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(r, 0));
    while (true) {
        out.push_back(SymmetricHom{cb, m});
        // Odometer over the upper triangle, row-major.
        bool done = true;
        for (std::size_t i = 0; i < r && done; ++i) {
            for (std::size_t j = i; j < r; ++j) {
                if (++m[i][j] < bounds[i][j]) {
                    m[j][i] = m[i][j];
                    done = false;
                    break;
                }
                m[i][j] = 0;
                m[j][i] = 0;
            }
        }
        if (done) break;
    }
    return out;
}

std::vector<Complex> second_degree_char(const Subgroup& h, const SymmetricHom& beta) {
    const Group& g = h.parent;
    if (!is_two_regular(g)) throw NotTwoRegular("second_degree_char: group order is even");
    std::vector<Complex> out(static_cast<std::size_t>(g.cardinality), Complex(0.0));
    for (auto idx : h.element_indices) {
        Element x = element_at(g, idx);
        out[static_cast<std::size_t>(idx)] = beta.eval(halve(g, x), x);
    }
    return out;
}

StateVector make_sstate(const SStateSpec& spec) {
    const Group& g = spec.H.parent;
    if (!is_two_regular(g)) throw NotTwoRegular("make_sstate: group order is even");
    if (spec.scale == Complex(0.0)) throw std::invalid_argument("make_sstate: zero scale");
    std::vector<Complex> h = second_degree_char(spec.H, spec.beta);
    std::vector<Complex> out(static_cast<std::size_t>(g.cardinality), Complex(0.0));
    for (auto ti : spec.H.element_indices) {
        Element t = element_at(g, ti);
        Element x = add(g, t, spec.shift);
        out[static_cast<std::size_t>(index_of(g, x))] =
            spec.scale * h[static_cast<std::size_t>(ti)] * char_eval(g, spec.chi, t);
    }
    return StateVector{g, std::move(out)};
}

StateVector canonicalize_sstate(const StateVector& f) {
    double maxabs = 0.0;
    for (const auto& v : f.values) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs == 0.0) throw ZeroVector("canonicalize_sstate: zero vector");
    std::size_t first = 0;
    std::int64_t support = 0;
    bool found = false;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (std::abs(f.values[i]) > 0.5 * maxabs) {
            if (!found) {
                first = i;
                found = true;
            }
            ++support;
        }
    }
    double target = 1.0 / std::sqrt(static_cast<double>(support));
    return scaled(f, target / f.values[first]);
}

std::vector<std::int64_t> canonical_key(const StateVector& canonical) {
    std::vector<std::int64_t> key;
    key.reserve(2 * canonical.values.size());
    for (const auto& v : canonical.values) {
        key.push_back(std::llround(v.real() * 1e6));
        key.push_back(std::llround(v.imag() * 1e6));
    }
    return key;
}

std::vector<StateVector> enumerate_sstates(const Group& g, std::int64_t cap) {
    if (!is_two_regular(g)) throw NotTwoRegular("enumerate_sstates: group order is even");
    auto subs = enumerate_subgroups(g, cap);
    std::set<std::vector<std::int64_t>> seen;
    std::vector<StateVector> out;
    for (const auto& h : subs) {
        auto homs = enumerate_sym_homs(h, cap);
        auto hperp = annihilator(h);
        // Transversal of dual(A)/H^perp: keep a iff a is minimal in a + H^perp.
        std::vector<std::int64_t> chi_reps;
        for (std::int64_t a = 0; a < g.cardinality; ++a) {
            Element ae = element_at(g, a);
            bool minimal = true;
            for (auto p : hperp.element_indices) {
                if (index_of(g, add(g, ae, element_at(g, p))) < a) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) chi_reps.push_back(a);
        }
        for (const auto& beta : homs) {
            std::vector<Complex> sd = second_degree_char(h, beta);
            for (auto chi : chi_reps) {
                Element chie = element_at(g, chi);
                for (std::int64_t y = 0; y < g.cardinality; ++y) {
                    Element ye = element_at(g, y);
                    std::vector<Complex> vals(static_cast<std::size_t>(g.cardinality),
                                              Complex(0.0));
                    for (auto ti : h.element_indices) {
                        Element t = element_at(g, ti);
                        vals[static_cast<std::size_t>(index_of(g, add(g, t, ye)))] =
                            sd[static_cast<std::size_t>(ti)] * char_eval(g, chie, t);
                    }
                    StateVector canon = canonicalize_sstate(StateVector{g, std::move(vals)});
                    if (seen.insert(canonical_key(canon)).second) {
                        out.push_back(std::move(canon));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<PhasePoint> materialize_isotropic(const Subgroup& h, const SymmetricHom& beta) {
    const Group& g = h.parent;
    std::vector<PhasePoint> pts;
    for (auto xi : h.element_indices) {
        Element x = element_at(g, xi);
        for (std::int64_t a = 0; a < g.cardinality; ++a) {
            Element ae = element_at(g, a);
            bool match = true;
            for (const auto& b : beta.basis.basis) {
                auto [num, den] = beta.eval_phase(x, b);
                std::int64_t t = char_phase_numerator(g, ae, b);
                // t/phase_lcm == num/den (mod 1), both already reduced mod 1
                if (t * den != num * g.phase_lcm) {
                    match = false;
                    break;
                }
            }
            if (match) pts.push_back(PhasePoint{xi, a});
        }
    }
    if (static_cast<std::int64_t>(pts.size()) != g.cardinality) {
        throw std::logic_error("materialize_isotropic: unexpected subgroup size");
    }
    return pts;
}

std::vector<IsotropicGroupSpec> enumerate_max_isotropic(const Group& g, std::int64_t cap) {
    if (!is_two_regular(g)) throw NotTwoRegular("enumerate_max_isotropic: group order is even");
    std::vector<IsotropicGroupSpec> out;
    for (const auto& h : enumerate_subgroups(g, cap)) {
        for (const auto& beta : enumerate_sym_homs(h, cap)) {
            IsotropicGroupSpec spec{h, beta, materialize_isotropic(h, beta)};
            // Isotropy of the materialized set, checked with exact phases.
            for (const auto& z : spec.elements) {
                for (const auto& w : spec.elements) {
                    std::int64_t t1 = char_phase_numerator(g, element_at(g, z.dual_index),
                                                           element_at(g, w.x_index));
                    std::int64_t t2 = char_phase_numerator(g, element_at(g, w.dual_index),
                                                           element_at(g, z.x_index));
                    if (t1 != t2) {
                        throw std::logic_error("enumerate_max_isotropic: isotropy violated");
                    }
                }
            }
            out.push_back(std::move(spec));
        }
    }
    return out;
}

std::optional<SStateSpec> detect_sstate(const StateVector& f, double tol) {
    const Group& g = f.group;
    if (!is_two_regular(g)) throw NotTwoRegular("detect_sstate: group order is even");
    double nrm = norm_l2(f);
    if (nrm == 0.0) throw ZeroVector("detect_sstate: zero vector");
    StateVector fn = scaled(f, 1.0 / nrm);

    double maxabs = 0.0;
    for (const auto& v : fn.values) maxabs = std::max(maxabs, std::abs(v));
    std::vector<std::int64_t> support;
    for (std::int64_t i = 0; i < g.cardinality; ++i) {
        if (std::abs(fn.values[static_cast<std::size_t>(i)]) > 0.5 * maxabs) {
            support.push_back(i);
        } else if (std::abs(fn.values[static_cast<std::size_t>(i)]) > tol) {
            return std::nullopt;  // neither on the plateau nor zero
        }
    }
    double target = 1.0 / std::sqrt(static_cast<double>(support.size()));
    for (auto i : support) {
        if (std::abs(std::abs(fn.values[static_cast<std::size_t>(i)]) - target) > 10.0 * tol) {
            return std::nullopt;  // modulus not constant on the support
        }
    }

    Element shift = element_at(g, support.front());
    std::vector<std::int64_t> coset;
    for (auto i : support) coset.push_back(index_of(g, sub(g, element_at(g, i), shift)));
    std::sort(coset.begin(), coset.end());
    Subgroup h;
    try {
        h = subgroup_from_indices(g, coset);
    } catch (const NotASubgroup&) {
        return std::nullopt;  // support is not a coset of a subgroup
    }

    auto gval = [&](std::int64_t ti) {
        Element x = add(g, element_at(g, ti), shift);
        return fn.values[static_cast<std::size_t>(index_of(g, x))] /
               fn.values[static_cast<std::size_t>(index_of(g, shift))];
    };

    CyclicBasis cb = cyclic_decompose(h);
    std::size_t r = cb.basis.size();
    SymmetricHom beta{cb, std::vector<std::vector<std::int64_t>>(
                              r, std::vector<std::int64_t>(r, 0))};
    const double phase_tol = 1e-6;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            std::int64_t gij =
                std::gcd(cb.invariant_factors[i], cb.invariant_factors[j]);
            std::int64_t bi = index_of(g, cb.basis[i]);
            std::int64_t bj = index_of(g, cb.basis[j]);
            Complex q = gval(index_of(g, add(g, cb.basis[i], cb.basis[j]))) /
                        (gval(bi) * gval(bj));
            double frac = std::arg(q) / (2.0 * std::numbers::pi);
            std::int64_t m = std::llround(frac * static_cast<double>(gij));
            m = ((m % gij) + gij) % gij;
            Complex expect = (m == 0) ? Complex(1.0)
                                      : std::polar(1.0, 2.0 * std::numbers::pi *
                                                            static_cast<double>(m) /
                                                            static_cast<double>(gij));
            if (std::abs(q - expect) > phase_tol) return std::nullopt;
            beta.matrix[i][j] = m;
            beta.matrix[j][i] = m;
        }
    }

    std::vector<Complex> sd = second_degree_char(h, beta);
    std::optional<Element> chi;
    for (std::int64_t a = 0; a < g.cardinality && !chi; ++a) {
        Element ae = element_at(g, a);
        bool ok = true;
        for (const auto& b : cb.basis) {
            std::int64_t bi = index_of(g, b);
            Complex xi = gval(bi) / sd[static_cast<std::size_t>(bi)];
            if (std::abs(char_eval(g, ae, b) - xi) > phase_tol) {
                ok = false;
                break;
            }
        }
        if (ok) chi = ae;
    }
    if (!chi) return std::nullopt;

    SStateSpec spec{h, beta, *chi, shift,
                    f.values[static_cast<std::size_t>(index_of(g, shift))]};
    StateVector rebuilt = make_sstate(spec);
    double err = 0.0;
    for (std::size_t i = 0; i < rebuilt.values.size(); ++i) {
        err += std::norm(rebuilt.values[i] - f.values[i]);
    }
    if (std::sqrt(err) > std::max(tol, 1e-12) * nrm) return std::nullopt;
    return spec;
}

HudsonReport hudson_classify(const StateVector& f, double tol) {
    StateVector fn = normalized(f);
    PhaseTable w = wigner(fn);
    MinEntry me = min_entry(w, std::max(tol, 1e-9));
    HudsonReport rep;
    rep.min_value = me.value;
    rep.min_location = me.where;
    rep.positive = me.value >= -tol;
    if (!rep.positive) return rep;

    rep.sstate = detect_sstate(fn, std::max(tol, 1e-9));
    if (rep.sstate) {
        auto gpts = materialize_isotropic(rep.sstate->H, rep.sstate->beta);
        const Group& g = fn.group;
        // Indicator check: the table must be the indicator of s0 + G.
        PhasePoint s0{-1, -1};
        for (std::int64_t x = 0; x < g.cardinality && s0.x_index < 0; ++x) {
            for (std::int64_t a = 0; a < g.cardinality; ++a) {
                if (w.at(x, a).real() > 0.5) {
                    s0 = PhasePoint{x, a};
                    break;
                }
            }
        }
        std::vector<char> expect(static_cast<std::size_t>(g.cardinality * g.cardinality), 0);
        if (s0.x_index >= 0) {
            for (const auto& p : gpts) {
                Element xs = add(g, element_at(g, s0.x_index), element_at(g, p.x_index));
                Element as = add(g, element_at(g, s0.dual_index), element_at(g, p.dual_index));
                expect[static_cast<std::size_t>(index_of(g, xs) * g.cardinality +
                                                index_of(g, as))] = 1;
            }
        }
        double err = 0.0;
        for (std::int64_t x = 0; x < g.cardinality; ++x) {
            for (std::int64_t a = 0; a < g.cardinality; ++a) {
                double want = expect[static_cast<std::size_t>(x * g.cardinality + a)] ? 1.0 : 0.0;
                err = std::max(err, std::abs(w.at(x, a) - Complex(want)));
            }
        }
        rep.indicator_error = err;
    }
    return rep;
}

double wehrl_l1(const StateVector& f, const StateVector& g) {
    return table_abs_mass(stft(f, g));
}

double support_measure(const PhaseTable& v, double tol) {
    std::int64_t count = 0;
    for (const auto& z : v.values) {
        if (std::abs(z) > tol) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(v.group.cardinality);
}

bool verify_direct_sum_form(const StateVector& f, std::size_t split_rank, double tol) {
    const Group& g = f.group;
    if (split_rank == 0 || split_rank >= g.orders.size()) {
        throw GroupMismatch("verify_direct_sum_form: invalid split");
    }
    std::vector<std::int64_t> o1(g.orders.begin(), g.orders.begin() + split_rank);
    std::vector<std::int64_t> o2(g.orders.begin() + split_rank, g.orders.end());
    Group a1 = make_group(o1);
    Group a2 = make_group(o2);
    std::vector<Complex> tilde(static_cast<std::size_t>(a1.cardinality));
    for (std::int64_t i = 0; i < a1.cardinality; ++i) {
        tilde[static_cast<std::size_t>(i)] = f.values[static_cast<std::size_t>(i * a2.cardinality)];
    }
    StateVector ft{a1, std::move(tilde)};
    double nrm = norm_l2(f);
    if (nrm == 0.0) throw ZeroVector("verify_direct_sum_form: zero vector");
    double err = 0.0;
    for (std::int64_t i = 0; i < a1.cardinality; ++i) {
        for (std::int64_t j = 0; j < a2.cardinality; ++j) {
            Complex want = (j == 0) ? ft.values[static_cast<std::size_t>(i)] : Complex(0.0);
            err += std::norm(f.values[static_cast<std::size_t>(i * a2.cardinality + j)] - want);
        }
    }
    if (std::sqrt(err) > tol * nrm) return false;
    if (norm_l2(ft) == 0.0) return false;
    return detect_sstate(ft, tol).has_value();
}

}  // namespace wig

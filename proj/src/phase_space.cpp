#include "wig/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wig {

namespace {

// Per-call lookup tables; transforms are O(|A|^2) or worse, so the O(|A|^2)
// build cost is immaterial and keeps the inner loops free of trig calls.
struct Ctx {
    std::int64_t n;
    std::vector<std::int32_t> add_table;  // n*n
    std::vector<std::int32_t> neg_table;  // n
    std::vector<std::int32_t> half_table; // n, only when 2-regular
    std::vector<Complex> chr;             // n*n, chr[a*n + x] = xi_a(x)

    std::int64_t plus(std::int64_t i, std::int64_t j) const { return add_table[i * n + j]; }
    std::int64_t minus(std::int64_t i, std::int64_t j) const {
        return add_table[i * n + neg_table[j]];
    }
    const Complex& character(std::int64_t a, std::int64_t x) const { return chr[a * n + x]; }
};

Ctx build_ctx(const Group& g, bool need_half = false) {
    Ctx c;
    c.n = g.cardinality;
    c.add_table.resize(static_cast<std::size_t>(c.n * c.n));
    c.neg_table.resize(static_cast<std::size_t>(c.n));
    c.chr.resize(static_cast<std::size_t>(c.n * c.n));
    std::vector<Element> elems(static_cast<std::size_t>(c.n));
    for (std::int64_t i = 0; i < c.n; ++i) elems[i] = element_at(g, i);
    for (std::int64_t i = 0; i < c.n; ++i) {
        c.neg_table[i] = static_cast<std::int32_t>(index_of(g, neg(g, elems[i])));
        for (std::int64_t j = 0; j < c.n; ++j) {
            c.add_table[i * c.n + j] =
                static_cast<std::int32_t>(index_of(g, add(g, elems[i], elems[j])));
            c.chr[i * c.n + j] = char_eval(g, elems[i], elems[j]);
        }
    }
    if (need_half) {
        c.half_table.resize(static_cast<std::size_t>(c.n));
        for (std::int64_t i = 0; i < c.n; ++i) {
            c.half_table[i] = static_cast<std::int32_t>(index_of(g, halve(g, elems[i])));
        }
    }
    return c;
}

void check_same_group(const StateVector& f, const StateVector& g, const char* op) {
    if (!(f.group == g.group)) {
        throw GroupMismatch(std::string(op) + ": states live on different groups");
    }
}

}  // namespace

StateVector make_state(const Group& g, std::vector<Complex> values) {
    if (static_cast<std::int64_t>(values.size()) != g.cardinality) {
        throw GroupMismatch("make_state: value count does not match group cardinality");
    }
    return StateVector{g, std::move(values)};
}

StateVector delta_state(const Group& g, const Element& at) {
    std::vector<Complex> v(static_cast<std::size_t>(g.cardinality), Complex(0.0));
    v[static_cast<std::size_t>(index_of(g, at))] = 1.0;
    return StateVector{g, std::move(v)};
}

StateVector constant_state(const Group& g, Complex value) {
    return StateVector{g, std::vector<Complex>(static_cast<std::size_t>(g.cardinality), value)};
}

double norm_l2(const StateVector& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(s);
}

Complex inner(const StateVector& f, const StateVector& g) {
    check_same_group(f, g, "inner");
    Complex s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) s += std::conj(f.values[i]) * g.values[i];
    return s;
}

StateVector scaled(const StateVector& f, Complex c) {
    StateVector out = f;
    for (auto& v : out.values) v *= c;
    return out;
}

StateVector normalized(const StateVector& f) {
    double n = norm_l2(f);
    if (n == 0.0) throw ZeroVector("normalized: zero vector");
    return scaled(f, 1.0 / n);
}

StateVector fourier(const StateVector& f) {
    const Group& g = f.group;
    Ctx c = build_ctx(g);
    std::vector<Complex> out(static_cast<std::size_t>(c.n), Complex(0.0));
    for (std::int64_t a = 0; a < c.n; ++a) {
        Complex s = 0.0;
        for (std::int64_t x = 0; x < c.n; ++x) {
            s += f.values[x] * std::conj(c.character(a, x));
        }
        out[a] = s;
    }
    return StateVector{g, std::move(out)};
}

StateVector inverse_fourier(const StateVector& fhat) {
    const Group& g = fhat.group;
    Ctx c = build_ctx(g);
    double w = 1.0 / static_cast<double>(c.n);
    std::vector<Complex> out(static_cast<std::size_t>(c.n), Complex(0.0));
    for (std::int64_t x = 0; x < c.n; ++x) {
        Complex s = 0.0;
        for (std::int64_t a = 0; a < c.n; ++a) {
            s += fhat.values[a] * c.character(a, x);
        }
        out[x] = w * s;
    }
    return StateVector{g, std::move(out)};
}

PhaseTable stft(const StateVector& f, const StateVector& g) {
    check_same_group(f, g, "stft");
    const Group& grp = f.group;
    Ctx c = build_ctx(grp);
    PhaseTable t{grp, std::vector<Complex>(static_cast<std::size_t>(c.n * c.n))};
    for (std::int64_t x = 0; x < c.n; ++x) {
        for (std::int64_t a = 0; a < c.n; ++a) {
            Complex s = 0.0;
            for (std::int64_t y = 0; y < c.n; ++y) {
                s += std::conj(c.character(a, y)) * std::conj(g.values[c.minus(y, x)]) *
                     f.values[y];
            }
            t.at(x, a) = s;
        }
    }
    return t;
}

PhaseTable ambiguity(const StateVector& f) {
    const Group& g = f.group;
    if (!is_two_regular(g)) throw NotTwoRegular("ambiguity: group order is even");
    Ctx c = build_ctx(g, true);
    PhaseTable v = stft(f, f);
    for (std::int64_t x = 0; x < c.n; ++x) {
        std::int64_t hx = c.half_table[x];
        for (std::int64_t a = 0; a < c.n; ++a) {
            v.at(x, a) *= c.character(a, hx);
        }
    }
    return v;
}

PhaseTable wigner(const StateVector& f) {
    const Group& g = f.group;
    if (!is_two_regular(g)) throw NotTwoRegular("wigner: group order is even");
    Ctx c = build_ctx(g, true);
    PhaseTable t{g, std::vector<Complex>(static_cast<std::size_t>(c.n * c.n))};
    for (std::int64_t x = 0; x < c.n; ++x) {
        for (std::int64_t a = 0; a < c.n; ++a) {
            Complex s = 0.0;
            for (std::int64_t y = 0; y < c.n; ++y) {
                std::int64_t hy = c.half_table[y];
                s += f.values[c.plus(x, hy)] * std::conj(f.values[c.minus(x, hy)]) *
                     std::conj(c.character(a, y));
            }
            t.at(x, a) = s;
        }
    }
    return t;
}

PhaseTable wigner_via_stft(const StateVector& f) {
    const Group& g = f.group;
    if (!is_two_regular(g)) throw NotTwoRegular("wigner_via_stft: group order is even");
    Ctx c = build_ctx(g);
    PhaseTable v = stft(f, reflect(f));
    PhaseTable t{g, std::vector<Complex>(static_cast<std::size_t>(c.n * c.n))};
    for (std::int64_t x = 0; x < c.n; ++x) {
        std::int64_t x2 = c.plus(x, x);
        for (std::int64_t a = 0; a < c.n; ++a) {
            std::int64_t a2 = c.plus(a, a);
            // lambda_2 = 1 for finite odd-order groups
            t.at(x, a) = c.character(a, x2) * v.at(x2, a2);
        }
    }
    return t;
}

PhaseTable wigner_via_ambiguity(const StateVector& f) {
    // W f = F U A f, with F the Fourier transform on dual(A) x A (dual cell
    // mass 1/|A|) and U F(xi, x) = F(x, -xi).
    const Group& g = f.group;
    if (!is_two_regular(g)) throw NotTwoRegular("wigner_via_ambiguity: group order is even");
    Ctx c = build_ctx(g);
    PhaseTable amb = ambiguity(f);
    double w = 1.0 / static_cast<double>(c.n);
    PhaseTable t{g, std::vector<Complex>(static_cast<std::size_t>(c.n * c.n))};
    for (std::int64_t x = 0; x < c.n; ++x) {
        for (std::int64_t a = 0; a < c.n; ++a) {
            Complex s = 0.0;
            for (std::int64_t y = 0; y < c.n; ++y) {
                Complex row = 0.0;
                for (std::int64_t b = 0; b < c.n; ++b) {
                    row += amb.at(y, c.neg_table[b]) * std::conj(c.character(b, x));
                }
                s += row * std::conj(c.character(a, y));
            }
            t.at(x, a) = w * s;
        }
    }
    return t;
}

StateVector reflect(const StateVector& f) {
    const Group& g = f.group;
    std::vector<Complex> out(f.values.size());
    for (std::int64_t i = 0; i < g.cardinality; ++i) {
        out[static_cast<std::size_t>(index_of(g, neg(g, element_at(g, i))))] = f.values[i];
    }
    return StateVector{g, std::move(out)};
}

StateVector translate(const StateVector& f, const Element& y) {
    const Group& g = f.group;
    std::vector<Complex> out(f.values.size());
    for (std::int64_t i = 0; i < g.cardinality; ++i) {
        out[static_cast<std::size_t>(index_of(g, add(g, element_at(g, i), y)))] = f.values[i];
    }
    return StateVector{g, std::move(out)};
}

StateVector modulate(const StateVector& f, const Element& a) {
    const Group& g = f.group;
    std::vector<Complex> out(f.values.size());
    for (std::int64_t i = 0; i < g.cardinality; ++i) {
        out[i] = char_eval(g, a, element_at(g, i)) * f.values[i];
    }
    return StateVector{g, std::move(out)};
}

StateVector tensor(const StateVector& f, const StateVector& g) {
    std::vector<std::int64_t> orders = f.group.orders;
    orders.insert(orders.end(), g.group.orders.begin(), g.group.orders.end());
    Group prod = make_group(orders);
    std::vector<Complex> out(static_cast<std::size_t>(prod.cardinality));
    for (std::int64_t i = 0; i < f.group.cardinality; ++i) {
        for (std::int64_t j = 0; j < g.group.cardinality; ++j) {
            out[static_cast<std::size_t>(i * g.group.cardinality + j)] =
                f.values[i] * g.values[j];
        }
    }
    return StateVector{prod, std::move(out)};
}

PhaseTable smooth_with_subgroup(const PhaseTable& table, const std::vector<PhasePoint>& G) {
    const Group& g = table.group;
    Ctx c = build_ctx(g);
    std::set<PhasePoint> members(G.begin(), G.end());
    if (!members.count(PhasePoint{0, 0})) {
        throw NotASubgroup("smooth_with_subgroup: missing identity");
    }
    for (const auto& z : G) {
        for (const auto& w : G) {
            PhasePoint s{c.plus(z.x_index, w.x_index), c.plus(z.dual_index, w.dual_index)};
            if (!members.count(s)) {
                throw NotASubgroup("smooth_with_subgroup: not closed under addition");
            }
        }
    }
    double mass = 1.0 / static_cast<double>(c.n);
    PhaseTable out{g, std::vector<Complex>(table.values.size(), Complex(0.0))};
    for (std::int64_t x = 0; x < c.n; ++x) {
        for (std::int64_t a = 0; a < c.n; ++a) {
            Complex s = 0.0;
            // chi_G(z - w) != 0 iff w in z - G
            for (const auto& p : G) {
                s += table.at(c.minus(x, p.x_index), c.minus(a, p.dual_index));
            }
            out.at(x, a) = mass * s;
        }
    }
    return out;
}

MinEntry min_entry(const PhaseTable& table, double tol) {
    const std::int64_t n = table.group.cardinality;
    double max_im = 0.0;
    for (const auto& v : table.values) max_im = std::max(max_im, std::abs(v.imag()));
    if (max_im > tol) {
        throw NonRealTable("min_entry: table has imaginary part above tolerance");
    }
    MinEntry best;
    best.value = table.values[0].real();
    best.where = PhasePoint{0, 0};
    for (std::int64_t x = 0; x < n; ++x) {
        for (std::int64_t a = 0; a < n; ++a) {
            double v = table.at(x, a).real();
            if (v < best.value) {
                best.value = v;
                best.where = PhasePoint{x, a};
            }
        }
    }
    return best;
}

Complex table_inner(const PhaseTable& F, const PhaseTable& G) {
    if (!(F.group == G.group)) throw GroupMismatch("table_inner: group mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < F.values.size(); ++i) s += std::conj(F.values[i]) * G.values[i];
    return s / static_cast<double>(F.group.cardinality);
}

Complex table_total_mass(const PhaseTable& table) {
    Complex s = 0.0;
    for (const auto& v : table.values) s += v;
    return s / static_cast<double>(table.group.cardinality);
}

double table_abs_mass(const PhaseTable& table) {
    double s = 0.0;
    for (const auto& v : table.values) s += std::abs(v);
    return s / static_cast<double>(table.group.cardinality);
}

StateVector random_state(const Group& g, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> v(static_cast<std::size_t>(g.cardinality));
    for (auto& z : v) {
        double re = gauss(rng);
        double im = gauss(rng);
        z = Complex(re, im);
    }
    return normalized(StateVector{g, std::move(v)});
}

}  // namespace wig

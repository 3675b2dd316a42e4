#include "wig/group.hpp"

#include <algorithm>
#include <numeric>
#include <numbers>
#include <set>
#include <string>

namespace wig {

Group make_group(const std::vector<std::int64_t>& orders) {
    if (orders.empty()) {
        throw std::invalid_argument("make_group: empty order list");
    }
    Group g;
    g.orders = orders;
    g.cardinality = 1;
    g.phase_lcm = 1;
    for (auto d : orders) {
        if (d < 1) {
            throw std::invalid_argument("make_group: orders must be >= 1");
        }
        g.cardinality *= d;
        g.phase_lcm = std::lcm(g.phase_lcm, d);
    }
    g.strides.assign(orders.size(), 1);
    for (std::size_t j = orders.size(); j-- > 1;) {
        g.strides[j - 1] = g.strides[j] * orders[j];
    }
    return g;
}

namespace {

void check_element(const Group& g, const Element& x, const char* op) {
    if (x.size() != g.orders.size()) {
        throw GroupMismatch(std::string(op) + ": element rank mismatch");
    }
}

}  // namespace

Element zero(const Group& g) { return Element(g.orders.size(), 0); }

Element add(const Group& g, const Element& x, const Element& y) {
    check_element(g, x, "add");
    check_element(g, y, "add");
    Element out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = (x[j] + y[j]) % g.orders[j];
    }
    return out;
}

Element sub(const Group& g, const Element& x, const Element& y) {
    return add(g, x, neg(g, y));
}

Element neg(const Group& g, const Element& x) {
    check_element(g, x, "neg");
    Element out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = (g.orders[j] - x[j]) % g.orders[j];
    }
    return out;
}

Element dbl(const Group& g, const Element& x) { return add(g, x, x); }

bool is_two_regular(const Group& g) { return g.cardinality % 2 == 1; }

Element halve(const Group& g, const Element& x) {
    if (!is_two_regular(g)) {
        throw NotTwoRegular("halve: group order is even");
    }
    check_element(g, x, "halve");
    Element out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = ((g.orders[j] + 1) / 2 * x[j]) % g.orders[j];
    }
    return out;
}

std::int64_t char_phase_numerator(const Group& g, const Element& a, const Element& x) {
    check_element(g, a, "char_eval");
    check_element(g, x, "char_eval");
    std::int64_t t = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        std::int64_t d = g.orders[j];
        t = (t + (a[j] * x[j]) % d * (g.phase_lcm / d)) % g.phase_lcm;
    }
    return t;
}

Complex char_eval(const Group& g, const Element& a, const Element& x) {
    std::int64_t t = char_phase_numerator(g, a, x);
    if (t == 0) return Complex(1.0, 0.0);
    double phase = 2.0 * std::numbers::pi * static_cast<double>(t) /
                   static_cast<double>(g.phase_lcm);
    return std::polar(1.0, phase);
}

std::int64_t index_of(const Group& g, const Element& x) {
    check_element(g, x, "index_of");
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        idx += x[j] * g.strides[j];
    }
    return idx;
}

Element element_at(const Group& g, std::int64_t index) {
    Element x(g.orders.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = (index / g.strides[j]) % g.orders[j];
    }
    return x;
}

bool Subgroup::contains_index(std::int64_t idx) const {
    return std::binary_search(element_indices.begin(), element_indices.end(), idx);
}

namespace {

// Closure of a set of element indices under addition (finite group, so this
// also closes under negation and contains 0).
std::vector<std::int64_t> closure(const Group& g, std::vector<std::int64_t> seed) {
    std::vector<char> in(static_cast<std::size_t>(g.cardinality), 0);
    std::vector<std::int64_t> members;
    auto push = [&](std::int64_t idx) {
        if (!in[static_cast<std::size_t>(idx)]) {
            in[static_cast<std::size_t>(idx)] = 1;
            members.push_back(idx);
        }
    };
    push(0);
    for (auto s : seed) push(s);
    for (std::size_t i = 0; i < members.size(); ++i) {
        Element xi = element_at(g, members[i]);
        for (std::size_t j = 0; j <= i; ++j) {
            push(index_of(g, add(g, xi, element_at(g, members[j]))));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

Subgroup subgroup_from_generators(const Group& g, const std::vector<Element>& generators) {
    std::vector<std::int64_t> seed;
    for (const auto& e : generators) seed.push_back(index_of(g, e));
    Subgroup h;
    h.parent = g;
    h.element_indices = closure(g, seed);
    h.generators = generators;
    return h;
}

Subgroup subgroup_from_indices(const Group& g, std::vector<std::int64_t> sorted_indices) {
    std::sort(sorted_indices.begin(), sorted_indices.end());
    Subgroup out;
    out.parent = g;
    out.element_indices = std::move(sorted_indices);
    if (out.element_indices.empty() || out.element_indices.front() != 0) {
        throw NotASubgroup("subgroup_from_indices: missing identity");
    }
    for (auto i : out.element_indices) {
        for (auto j : out.element_indices) {
            auto s = index_of(g, add(g, element_at(g, i), element_at(g, j)));
            if (!out.contains_index(s)) {
                throw NotASubgroup("subgroup_from_indices: not closed under addition");
            }
        }
    }
    std::vector<std::int64_t> covered = {0};
    for (auto idx : out.element_indices) {
        if (std::binary_search(covered.begin(), covered.end(), idx)) continue;
        out.generators.push_back(element_at(g, idx));
        std::vector<std::int64_t> seed;
        for (const auto& e : out.generators) seed.push_back(index_of(g, e));
        covered = closure(g, seed);
    }
    return out;
}

std::vector<Subgroup> enumerate_subgroups_within(const Group& g,
                                                 const std::vector<std::int64_t>& universe) {
    // Breadth-first closure: grow every known subgroup by one generator from
    // the universe, deduplicating by element set.
    std::set<std::vector<std::int64_t>> seen;
    std::vector<Subgroup> out;

    Subgroup trivial;
    trivial.parent = g;
    trivial.element_indices = {0};
    out.push_back(trivial);
    seen.insert(trivial.element_indices);

    for (std::size_t i = 0; i < out.size(); ++i) {
        // Copy: out may reallocate while we append.
        const Subgroup cur = out[i];
        for (auto idx : universe) {
            if (cur.contains_index(idx)) continue;
            std::vector<std::int64_t> seed = cur.element_indices;
            seed.push_back(idx);
            auto elems = closure(g, seed);
            if (seen.insert(elems).second) {
                Subgroup h;
                h.parent = g;
                h.element_indices = std::move(elems);
                h.generators = cur.generators;
                h.generators.push_back(element_at(g, idx));
                out.push_back(std::move(h));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.element_indices.size() != b.element_indices.size()) {
            return a.element_indices.size() < b.element_indices.size();
        }
        return a.element_indices < b.element_indices;
    });
    return out;
}

std::vector<Subgroup> enumerate_subgroups(const Group& g, std::int64_t cap) {
    if (g.cardinality > cap) {
        throw CapExceeded("enumerate_subgroups: cardinality exceeds cap");
    }
    std::vector<std::int64_t> universe(static_cast<std::size_t>(g.cardinality));
    std::iota(universe.begin(), universe.end(), 0);
    return enumerate_subgroups_within(g, universe);
}

Subgroup annihilator(const Subgroup& h) {
    const Group& g = h.parent;
    std::vector<std::int64_t> members;
    for (std::int64_t ai = 0; ai < g.cardinality; ++ai) {
        Element a = element_at(g, ai);
        bool trivial_on_h = true;
        for (const auto& gen : h.generators) {
            if (char_phase_numerator(g, a, gen) != 0) {
                trivial_on_h = false;
                break;
            }
        }
        if (trivial_on_h) members.push_back(ai);
    }
    return subgroup_from_indices(g, std::move(members));
}

}  // namespace wig

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wig/errors.hpp"

namespace wig {

using Complex = std::complex<double>;

/// Element of a finite abelian group Z_{d1} x ... x Z_{dk}, componentwise
/// reduced residues. Dual characters are represented by the same type via the
/// standard pairing (see char_eval).
using Element = std::vector<std::int64_t>;

/**
 * Finite abelian group given by its cyclic factor orders.
 *
 * Haar convention: counting measure on A (mass 1 per point), mass 1/|A| per
 * point on the dual, so Plancherel holds with constant 1 and |H||H^perp| = 1
 * exactly for every subgroup H.
 */
struct Group {
    std::vector<std::int64_t> orders;
    std::int64_t cardinality = 1;
    std::int64_t phase_lcm = 1;           // lcm of the orders, for exact character phases
    std::vector<std::int64_t> strides;    // lexicographic (row-major) indexing

    std::size_t rank() const { return orders.size(); }
    double point_weight_primal() const { return 1.0; }
    double point_weight_dual() const { return 1.0 / static_cast<double>(cardinality); }

    bool operator==(const Group& other) const { return orders == other.orders; }
};

Group make_group(const std::vector<std::int64_t>& orders);

Element zero(const Group& g);
Element add(const Group& g, const Element& x, const Element& y);
Element sub(const Group& g, const Element& x, const Element& y);
Element neg(const Group& g, const Element& x);
Element dbl(const Group& g, const Element& x);

/// True iff the doubling map x -> 2x is an automorphism, i.e. |A| is odd.
bool is_two_regular(const Group& g);

/// Inverse of doubling, componentwise y_j = ((d_j+1)/2) x_j mod d_j.
/// Throws NotTwoRegular for even-order groups.
Element halve(const Group& g, const Element& x);

/// Standard self-dual pairing xi_a(x) = exp(2 pi i sum_j a_j x_j / d_j).
/// The phase is accumulated as an exact rational before one trig evaluation.
Complex char_eval(const Group& g, const Element& a, const Element& x);

/// Exact rational phase numerator: xi_a(x) = exp(2 pi i t / phase_lcm).
std::int64_t char_phase_numerator(const Group& g, const Element& a, const Element& x);

std::int64_t index_of(const Group& g, const Element& x);
Element element_at(const Group& g, std::int64_t index);

struct Subgroup {
    Group parent;
    std::vector<std::int64_t> element_indices;  // sorted
    std::vector<Element> generators;

    std::int64_t order() const { return static_cast<std::int64_t>(element_indices.size()); }
    bool contains_index(std::int64_t idx) const;
};

Subgroup subgroup_from_generators(const Group& g, const std::vector<Element>& generators);

/// Wrap an already-closed, sorted element-index set as a Subgroup, extracting
/// generators greedily in index order. Throws NotASubgroup if the set is not
/// closed.
Subgroup subgroup_from_indices(const Group& g, std::vector<std::int64_t> sorted_indices);

/// All subgroups, sorted by size then lexicographic element-index list.
/// Throws CapExceeded when |A| exceeds the cap.
std::vector<Subgroup> enumerate_subgroups(const Group& g, std::int64_t cap = 512);

/// Subgroups of the group spanned by `universe` (which must itself be closed),
/// reusing the parent's arithmetic. Deterministic order as above.
std::vector<Subgroup> enumerate_subgroups_within(const Group& g,
                                                 const std::vector<std::int64_t>& universe);

/// H^perp = {a : xi_a(x) = 1 for all x in H}, in the dual copy of the parent.
Subgroup annihilator(const Subgroup& h);

}  // namespace wig

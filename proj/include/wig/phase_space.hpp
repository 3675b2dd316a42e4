#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wig/group.hpp"

namespace wig {

/// Complex-valued function on a finite group, indexed by the fixed element
/// enumeration (lexicographic residues).
struct StateVector {
    Group group;
    std::vector<Complex> values;
};

/// Point (x, xi_a) of A x dual(A), stored as element indices under the
/// standard pairing.
struct PhasePoint {
    std::int64_t x_index = 0;
    std::int64_t dual_index = 0;

    bool operator==(const PhasePoint&) const = default;
    auto operator<=>(const PhasePoint&) const = default;
};

/// Function on A x dual(A): row = x index, column = dual index.
/// Phase-space Haar mass per cell is 1 * (1/|A|).
struct PhaseTable {
    Group group;
    std::vector<Complex> values;  // row-major |A| x |A|

    Complex& at(std::int64_t x, std::int64_t a) {
        return values[static_cast<std::size_t>(x * group.cardinality + a)];
    }
    const Complex& at(std::int64_t x, std::int64_t a) const {
        return values[static_cast<std::size_t>(x * group.cardinality + a)];
    }
};

StateVector make_state(const Group& g, std::vector<Complex> values);
StateVector delta_state(const Group& g, const Element& at);
StateVector constant_state(const Group& g, Complex value);

double norm_l2(const StateVector& f);
/// Inner product, linear in the second argument.
Complex inner(const StateVector& f, const StateVector& g);
StateVector scaled(const StateVector& f, Complex c);
StateVector normalized(const StateVector& f);

/// fhat(a) = sum_x f(x) conj(xi_a(x)).
StateVector fourier(const StateVector& f);
/// f(x) = (1/|A|) sum_a fhat(a) xi_a(x).
StateVector inverse_fourier(const StateVector& fhat);

/// V_g f(x, a) = sum_y conj(xi_a(y)) conj(g(y-x)) f(y).
PhaseTable stft(const StateVector& f, const StateVector& g);

/// A f(x, a) = xi_a(2^{-1} x) V_f f(x, a). Requires 2-regularity.
PhaseTable ambiguity(const StateVector& f);

/// W f(x, a) = sum_y f(x + 2^{-1}y) conj(f(x - 2^{-1}y)) conj(xi_a(y)).
PhaseTable wigner(const StateVector& f);

/// Same table via W f(x, xi) = xi(2x) V_{f_reflected} f(2x, 2xi); cross-check
/// route for the direct summation.
PhaseTable wigner_via_stft(const StateVector& f);

/// Same table via the phase-space Fourier transform of the rotated ambiguity
/// function (second cross-check route).
PhaseTable wigner_via_ambiguity(const StateVector& f);

StateVector reflect(const StateVector& f);
StateVector translate(const StateVector& f, const Element& y);
StateVector modulate(const StateVector& f, const Element& a);
/// (f tensor g)(x1, x2) = f(x1) g(x2) on the product group.
StateVector tensor(const StateVector& f, const StateVector& g);

/// (W * chi_G)(z) = sum_w (1/|A|) W(w) chi_G(z - w). G must be a subgroup of
/// A x dual(A); throws NotASubgroup otherwise.
PhaseTable smooth_with_subgroup(const PhaseTable& table, const std::vector<PhasePoint>& G);

struct MinEntry {
    double value = 0.0;
    PhasePoint where;
};

/// Minimum real part and its first location in row-major scan order.
/// Throws NonRealTable if max |Im| exceeds the tolerance.
MinEntry min_entry(const PhaseTable& table, double tol = 1e-9);

/// <F, G> with cell mass 1/|A|, linear in the second argument.
Complex table_inner(const PhaseTable& F, const PhaseTable& G);
/// sum over cells of (1/|A|) W(x, a).
Complex table_total_mass(const PhaseTable& table);
/// sum over cells of (1/|A|) |W(x, a)|.
double table_abs_mass(const PhaseTable& table);

/// i.i.d. standard complex Gaussian coordinates, then normalized.
StateVector random_state(const Group& g, std::mt19937_64& rng);

}  // namespace wig

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wig/errors.hpp"
#include "wig/group.hpp"  // Complex

namespace wig {

/**
 * Finite-precision n-adic number: value = sum_k digits[k - start] * n^k,
 * known modulo n^{precision_end()}. Digits are reduced residues in [0, n).
 */
struct NAdicNumber {
    std::int64_t base = 2;
    std::int64_t start = 0;
    std::vector<std::int64_t> digits;

    std::int64_t precision_end() const {
        return start + static_cast<std::int64_t>(digits.size());
    }
    std::int64_t digit_at(std::int64_t k) const {
        if (k < start || k >= precision_end()) return 0;
        return digits[static_cast<std::size_t>(k - start)];
    }
};

NAdicNumber make_nadic(std::int64_t base, std::int64_t start,
                       std::vector<std::int64_t> digits);

/// The n-adic integer k placed at level `start` (digits of k base n, window
/// [start, start + width)).
NAdicNumber nadic_from_integer(std::int64_t base, std::int64_t start, std::int64_t width,
                               std::int64_t k);

/// Result window is the intersection [min(starts), min(ends)); digits below a
/// summand's own window are zero by definition, not unknown.
NAdicNumber nadic_add(const NAdicNumber& x, const NAdicNumber& y);
NAdicNumber nadic_neg(const NAdicNumber& x);
NAdicNumber nadic_double(const NAdicNumber& x);

/// Solves 2x = y digit by digit. Odd base: exact on y's window. Even base:
/// the result lives on [start-1, end-1) — one digit of precision is consumed
/// and the expansion may begin one level lower (digit 0 or n/2 at start-1).
NAdicNumber nadic_halve(const NAdicNumber& y);

/// True iff x == y on all digit positions below `upto` (positions outside a
/// window count as unknown and are skipped only above the common precision).
bool nadic_congruent(const NAdicNumber& x, const NAdicNumber& y, std::int64_t upto);

/// Reduced fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational& other) const {
        return num == other.num && den == other.den;
    }
};

Rational make_rational(std::int64_t num, std::int64_t den);
Rational rational_add(const Rational& a, const Rational& b);

/// Haar scaling of doubling, |2 Delta_n| / |Delta_n|: the density of the
/// image of x -> 2x on Z_{n^M}, checked stable between levels M and M+1.
/// Equals 1 for odd n, 1/2 for even n.
Rational doubling_constant(std::int64_t n, std::int64_t level = 3);

/**
 * Locally constant compactly supported function on Omega_n: support inside
 * U_m, constant on cosets of U_M. coeffs[i] is the value on the coset whose
 * digits y_m..y_{M-1} are the base-n expansion of i (least significant digit
 * at level m). Haar convention |Delta_n| = 1, so each cell has mass n^{-M}.
 */
struct SchwartzBruhatFn {
    std::int64_t base = 2;
    std::int64_t m = 0;
    std::int64_t M = 1;
    std::vector<Complex> coeffs;
};

SchwartzBruhatFn make_sb(std::int64_t base, std::int64_t m, std::int64_t M,
                         std::vector<Complex> coeffs);

/// Indicator of U_m as a SchwartzBruhat function with the given levels.
SchwartzBruhatFn sb_indicator(std::int64_t base, std::int64_t m, std::int64_t M);

SchwartzBruhatFn random_sb(std::int64_t base, std::int64_t m, std::int64_t M,
                           std::mt19937_64& rng);

double sb_norm_l2(const SchwartzBruhatFn& f);

/**
 * Exact Wigner table of a SchwartzBruhat function. W f is constant on the
 * product cells (x-coset of U_M in 2^{-1}U_m) x (character of the class
 * group P = 2^{-1}U_m / 2U_M), and vanishes off that x-support, so the table
 * determines W f everywhere. P is cyclic of order q, generated by the class
 * of h = 2^{-1} n^m; row r holds x = r*h, column j holds the character
 * class_k -> exp(2 pi i j k / q).
 */
struct SbWignerTable {
    std::int64_t base = 2;
    std::int64_t m = 0;
    std::int64_t M = 1;
    std::int64_t q = 1;      // order of the class group P
    std::int64_t rows = 1;   // x-cosets of U_M in 2^{-1}U_m
    double lambda2 = 1.0;    // doubling constant of the base
    std::vector<Complex> values;  // rows x q, row-major

    Complex at(std::int64_t r, std::int64_t j) const {
        return values[static_cast<std::size_t>(r * q + j)];
    }
};

SbWignerTable sb_wigner(const SchwartzBruhatFn& f);

/// Digits of the class representative k*h on [m-1, M) (even base) or [m, M)
/// (odd base); labels row k of the table.
NAdicNumber sb_class_representative(std::int64_t base, std::int64_t m, std::int64_t M,
                                    std::int64_t k);

struct SbMinEntry {
    double value = 0.0;
    std::int64_t row = 0;
    std::int64_t col = 0;
};

/// Minimum table entry; by local constancy and the support bound this is the
/// global minimum of W f over the x-support. Throws NonRealTable when any
/// imaginary part exceeds tol.
SbMinEntry sb_min(const SbWignerTable& w, double tol = 1e-9);

/// Sum of cell mass times value; equals ||f||^2 exactly (the even-base grid
/// double-covers the dual, absorbed into the lambda2 cell weight).
double sb_total_mass(const SbWignerTable& w);

/**
 * Point of the solenoid (R x Delta_n) / <(1, u)>, realized on [0,1) x
 * Delta_n with u the n-adic integer 1. The real coordinate is an exact
 * rational so the wrap-around floor is never subject to rounding.
 */
struct SolenoidPoint {
    Rational a;
    NAdicNumber x;  // start >= 0
};

SolenoidPoint make_solenoid_point(Rational a, NAdicNumber x);

SolenoidPoint solenoid_add(const SolenoidPoint& p, const SolenoidPoint& q);
SolenoidPoint solenoid_double(const SolenoidPoint& p);

/// Halving on the solenoid; only even bases are 2-regular here, so odd bases
/// throw NotTwoRegular.
SolenoidPoint solenoid_halve(const SolenoidPoint& q);

/// The nonzero solution of 2z = 0, namely (1/2, 2^{-1}u); exists only for
/// odd bases (doubling is injective for even bases).
SolenoidPoint solenoid_doubling_kernel(std::int64_t base, std::int64_t precision = 8);

}  // namespace wig

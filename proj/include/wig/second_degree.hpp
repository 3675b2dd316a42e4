#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wig/group.hpp"
#include "wig/phase_space.hpp"

namespace wig {

/**
 * Invariant-factor basis of a subgroup H: basis elements of orders e_1 | e_2
 * | ... | e_r generating H, with unique coordinates c_i in [0, e_i) for every
 * element. Coordinatizes Sym(H) as symmetric integer matrices.
 */
struct CyclicBasis {
    Subgroup subgroup;
    std::vector<Element> basis;
    std::vector<std::int64_t> invariant_factors;
    std::unordered_map<std::int64_t, std::vector<std::int64_t>> coords;  // by parent index

    const std::vector<std::int64_t>& coords_of(std::int64_t element_index) const;
};

CyclicBasis cyclic_decompose(const Subgroup& h);

/**
 * Symmetric homomorphism beta: H -> dual(H), coordinatized as
 * beta(x)(y) = exp(2 pi i sum_{ij} m_ij c_i(x) c_j(y) / gcd(e_i, e_j)),
 * with m symmetric and m_ij in [0, gcd(e_i, e_j)).
 */
struct SymmetricHom {
    CyclicBasis basis;
    std::vector<std::vector<std::int64_t>> matrix;

    /// Exact phase of beta(x)(y) as (numerator, denominator): the value is
    /// exp(2 pi i num / den).
    std::pair<std::int64_t, std::int64_t> eval_phase(const Element& x, const Element& y) const;
    Complex eval(const Element& x, const Element& y) const;
};

std::vector<SymmetricHom> enumerate_sym_homs(const Subgroup& h, std::int64_t cap = 512);

/// The character of second degree h(x) = beta(2^{-1}x)(x) on H, returned as a
/// full-length vector on the parent (0 off H). Requires a 2-regular parent.
std::vector<Complex> second_degree_char(const Subgroup& h, const SymmetricHom& beta);

/// Symbolic S-state: scale * h_beta(x - shift) * xi_chi(x - shift) on
/// shift + H, zero elsewhere. chi is a dual index of the parent restricted
/// to H.
struct SStateSpec {
    Subgroup H;
    SymmetricHom beta;
    Element chi;
    Element shift;
    Complex scale{1.0, 0.0};
};

StateVector make_sstate(const SStateSpec& spec);

/// Canonical representative up to a global scalar: the first supported value
/// is made real positive with modulus (#support)^{-1/2}.
StateVector canonicalize_sstate(const StateVector& f);

/// Quantized value key for set comparisons of canonicalized states.
std::vector<std::int64_t> canonical_key(const StateVector& canonical);

/// All S-states of the group, deduplicated up to a global complex scalar.
std::vector<StateVector> enumerate_sstates(const Group& g, std::int64_t cap = 512);

/// Maximal compact open isotropic subgroup G = {(x, a) : x in H, xi_a|_H =
/// beta(x)} of A x dual(A); #G = |A| so its Haar mass is 1.
struct IsotropicGroupSpec {
    Subgroup H;
    SymmetricHom beta;
    std::vector<PhasePoint> elements;
};

std::vector<PhasePoint> materialize_isotropic(const Subgroup& h, const SymmetricHom& beta);
std::vector<IsotropicGroupSpec> enumerate_max_isotropic(const Group& g, std::int64_t cap = 512);

/// Algebraic S-state detector: coset support, constant modulus, second-degree
/// phase quotient, character recovery, then a round-trip check against
/// make_sstate. Returns nothing when any step fails.
std::optional<SStateSpec> detect_sstate(const StateVector& f, double tol = 1e-9);

struct HudsonReport {
    bool positive = false;
    double min_value = 0.0;
    PhasePoint min_location;
    std::optional<SStateSpec> sstate;
    /// Max deviation of the normalized Wigner table from the indicator of the
    /// predicted isotropic coset (only meaningful when positive).
    double indicator_error = 0.0;
};

/// Positivity classifier: min of the Wigner table of f/||f||, plus the
/// S-state certificate when the table is nonnegative.
HudsonReport hudson_classify(const StateVector& f, double tol = 1e-9);

/// ||V_g f||_{L^1} with cell mass 1/|A|; always >= ||f|| ||g||.
double wehrl_l1(const StateVector& f, const StateVector& g);

/// Haar mass of {|V| > tol}: cell count times 1/|A|.
double support_measure(const PhaseTable& v, double tol = 1e-9);

/// True iff f on A1 x A2 factors (within tol) as ftilde tensor delta with
/// ftilde an S-state of the first factor. split_rank = number of cyclic
/// factors forming A1.
bool verify_direct_sum_form(const StateVector& f, std::size_t split_rank, double tol = 1e-9);

}  // namespace wig

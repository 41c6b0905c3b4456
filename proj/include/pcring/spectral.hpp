#pragma once

/**
 * @file spectral.hpp
 * @brief Complexified structure of the projective class ring.
 *
 * Under the Fourier isomorphism the ring becomes pairs (f, g) of functions
 * on the character labels with (f1, g1)(f2, g2) = (f1 f2, f1 g2 + g1 f2 + g1 lambda g2),
 * where lambda = fourier(c). On the support F of lambda each label carries a
 * split block C x C; off F it carries the dual numbers C[eps]. Hence
 * C (x) K0p = C^{2r} x C[eps]^{s-r} with r = |F|.
 *
 * Labels: a character is named by the group element b with
 * chi_b(K^a) = q^{ab}. Since the pairing is symmetric, B_c (elements x with
 * beta(K^x, c) != 0) and the support F are the same set of labels.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "pcring/pcr_core.hpp"

namespace pcring {

struct Spectrum {
    std::vector<CycloNum> fourier_c;
    std::vector<std::size_t> support; // F, canonical order
    std::size_t r = 0;
    std::size_t s = 0;
};

struct Decomposition {
    std::size_t r = 0;
    std::size_t s = 0;

    std::size_t split_factors() const noexcept { return 2 * r; }
    std::size_t dual_number_factors() const noexcept { return s - r; }
    std::size_t dimension() const noexcept { return 2 * r + 2 * (s - r); }
    /// "C^{2r} x C[eps]^{s-r}" with the numbers substituted.
    std::string to_string() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// An element of the complexified ring in Fourier coordinates.
struct FourierPair {
    std::vector<CycloNum> s;
    std::vector<CycloNum> t;
};

struct NormalizedStructure {
    CycloGroupRingElem c_prime;        // inverse Fourier transform of the indicator of F
    std::vector<CycloNum> unit_fourier; // lambda on F, 1 off F
    CycloGroupRingElem unit;            // the same unit in group-ring coordinates
};

struct SpectralReport {
    Spectrum spectrum;
    Decomposition decomposition;
    std::vector<FourierPair> idempotents_fourier;
    std::vector<CycloPair> idempotents;
    std::vector<CycloPair> nilpotents;
    NormalizedStructure normalized;
};

Spectrum spectrum(const PcRing& ring);
Decomposition decomposition(const PcRing& ring);

/// B_c evaluated directly through the bilinear form beta(K^x, c).
std::vector<std::size_t> bc_set(const PcRing& ring);

/// Idempotents in Fourier coordinates: (delta_y, 0) for y off F, then
/// (delta_x, -delta_x / lambda_x) and (0, delta_x / lambda_x) for x in F.
std::vector<FourierPair> idempotent_system_fourier(const PcRing& ring, const Spectrum& spec);

/// The same family pulled back to group-ring coordinates; s + r elements.
std::vector<CycloPair> idempotent_system(const PcRing& ring);
std::vector<CycloPair> idempotent_system(const PcRing& ring, const Spectrum& spec);

/// (0, inverse_fourier(delta_y)) for y off F; s - r elements spanning the nilradical.
std::vector<CycloPair> nilradical_basis(const PcRing& ring);
std::vector<CycloPair> nilradical_basis(const PcRing& ring, const Spectrum& spec);

NormalizedStructure normalize_structure(const PcRing& ring);
NormalizedStructure normalize_structure(const PcRing& ring, const Spectrum& spec);

CycloPair from_fourier(const GroupPtr& group, const FourierPair& p);

SpectralReport analyze(const PcRing& ring);

/// Flattens a pair to its 2s coordinates: s-part then t-part, canonical element order.
std::vector<CycloNum> coordinates(const CycloPair& x);

} // namespace pcring

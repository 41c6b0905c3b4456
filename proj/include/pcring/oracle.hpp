#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force structure-constant model of the projective class ring.
 *
 * Basis: [S] for every group element S (indices 0..s-1), then [P_S]
 * (indices s..2s-1). Products are filled in from the module-level rules
 *   [S][T] = [ST],  [S][P_T] = [P_ST],  [P_T][S] = [P_TS],
 *   [P_S][P_T] = sum_U c_U [P_SUT],
 * without going through the pair multiplication. The radical is computed
 * over Q as the kernel of the trace form (x, y) -> tr(L_{xy}).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "pcring/linalg.hpp"
#include "pcring/pcr_core.hpp"

namespace pcring {

class StructureTable {
public:
    StructureTable(std::size_t dim, std::vector<std::string> labels);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Coefficient of e_k in e_i * e_j.
    std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const { return constants_[(i * dim_ + j) * dim_ + k]; }
    std::int64_t& at(std::size_t i, std::size_t j, std::size_t k) { return constants_[(i * dim_ + j) * dim_ + k]; }

    /// Index of the unit element ([identity simple]).
    static constexpr std::size_t unit() noexcept { return 0; }

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::int64_t> constants_;
};

/// Throws Error(invalid_argument) if a coefficient of c does not fit the table's integer type.
StructureTable build_table(const PcRing& ring);

/// Compares all (2s)^2 basis products against pair_mul.
bool table_matches_pair_ring(const StructureTable& table, const PcRing& ring);

bool is_associative(const StructureTable& table);
bool is_commutative(const StructureTable& table);

struct RadicalResult {
    std::size_t dimension = 0;
    Matrix<Rational> basis; // each row has table.dim() coordinates
};

/// Throws Error(not_associative) if the table fails the associativity scan.
RadicalResult radical_dimension(const StructureTable& table);

} // namespace pcring

#pragma once

// Named instances: the half-quantum group u_q^+(sl2), function algebras k^G,
// and user-supplied (group, c) pairs.

#include <optional>
#include <string>
#include <vector>

#include "pcring/pcr_core.hpp"
#include "pcring/spectral.hpp"

namespace pcring {

struct ExpectedStructure {
    std::size_t r = 0;
    Decomposition decomposition;
};

struct InstanceDescriptor {
    std::string name;
    GroupPtr group;
    std::optional<IntGroupRingElem> c; // absent iff semisimple
    bool semisimple = false;
    std::optional<ExpectedStructure> expected;

    /// Throws Error(invalid_argument) for a semisimple descriptor.
    PcRing ring() const;
};

/// Cyclic structure group of order n with c the trace element; expects r = 1.
InstanceDescriptor uq_sl2(int n);

/// k^G: semisimple, K0p is the group ring ZG and no pair ring is built.
InstanceDescriptor dual_group_algebra(const std::vector<unsigned>& orders);

/// Validates c through PcRing construction and propagates its errors.
InstanceDescriptor custom(const std::vector<unsigned>& orders, const IntGroupRingElem& c,
                          std::string name = "custom");
InstanceDescriptor custom(const GroupPtr& group, const IntGroupRingElem& c, std::string name = "custom");

} // namespace pcring

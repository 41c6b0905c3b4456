#pragma once

/**
 * @file pcr_core.hpp
 * @brief The projective class ring ZS (+) ZP realized on pairs.
 *
 * An element (s, t) stands for s in the group ring of simple classes plus
 * t in the group ring of indecomposable projective classes, where the
 * coefficient of S in t is the multiplicity of [P_S]. Multiplication is
 *
 *   (s1, t1)(s2, t2) = (s1 s2, s1 t2 + t1 s2 + t1 c t2)
 *
 * with c the composition-factor multiset of P_1.
 */

#include <cstddef>

#include "pcring/group_algebra.hpp"

namespace pcring {

template <class R>
struct PairElem {
    GroupRingElem<R> s;
    GroupRingElem<R> t;

    static PairElem zero(const GroupPtr& group) { return {GroupRingElem<R>(group), GroupRingElem<R>(group)}; }

    PairElem& operator+=(const PairElem& o)
    {
        s += o.s;
        t += o.t;
        return *this;
    }
    PairElem& operator-=(const PairElem& o)
    {
        s -= o.s;
        t -= o.t;
        return *this;
    }
    friend PairElem operator+(PairElem a, const PairElem& b) { return a += b; }
    friend PairElem operator-(PairElem a, const PairElem& b) { return a -= b; }

    template <class K>
    PairElem scaled(const K& k) const
    {
        return {s.scaled(k), t.scaled(k)};
    }

    bool is_zero() const { return s.is_zero() && t.is_zero(); }
    friend bool operator==(const PairElem& a, const PairElem& b) { return a.s == b.s && a.t == b.t; }
};

using IntPair = PairElem<Integer>;
using CycloPair = PairElem<CycloNum>;

CycloPair to_cyclotomic(const IntPair& x);

/// Checks the composition-multiset invariants of c; throws the matching Error kind.
void validate_canonical_element(const IntGroupRingElem& c);

class PcRing {
public:
    /// Throws invalid_multiplicity, missing_trivial_factor or semisimple_input (checked in that order).
    PcRing(GroupPtr group, IntGroupRingElem c);

    const GroupPtr& group() const noexcept { return group_; }
    const IntGroupRingElem& c() const noexcept { return c_; }
    const CycloGroupRingElem& c_cyclotomic() const noexcept { return c_cyclo_; }
    std::size_t order() const noexcept { return group_->size(); }

    template <class R>
    const GroupRingElem<R>& c_as() const
    {
        if constexpr (std::is_same_v<R, CycloNum>) {
            return c_cyclo_;
        } else {
            return c_;
        }
    }

    template <class R>
    PairElem<R> unit() const
    {
        return {GroupRingElem<R>::delta(group_, AbelianGroup::identity()), GroupRingElem<R>(group_)};
    }

private:
    GroupPtr group_;
    IntGroupRingElem c_;
    CycloGroupRingElem c_cyclo_;
};

template <class R>
PairElem<R> pair_mul(const PcRing& ring, const PairElem<R>& x, const PairElem<R>& y)
{
    require_same_group(ring.group(), x.s.group());
    require_same_group(ring.group(), y.s.group());
    PairElem<R> out{x.s * y.s, x.s * y.t};
    out.t += x.t * y.s;
    if (!x.t.is_zero() && !y.t.is_zero()) {
        out.t += (x.t * y.t) * ring.c_as<R>();
    }
    return out;
}

/// [S] = (delta_S, 0).
IntPair simple_class(const PcRing& ring, std::size_t element);
IntPair simple_class(const PcRing& ring, const GroupElement& element);
/// [P_S] = (0, delta_S).
IntPair projective_class(const PcRing& ring, std::size_t element);
IntPair projective_class(const PcRing& ring, const GroupElement& element);

/// Dimension vector: (s, t) -> s + t c.
template <class R>
GroupRingElem<R> bar(const PcRing& ring, const PairElem<R>& x)
{
    return x.s + x.t * ring.c_as<R>();
}

} // namespace pcring

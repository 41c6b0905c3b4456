#include "pcring/pcr_core.hpp"

namespace pcring {

CycloPair to_cyclotomic(const IntPair& x)
{
    return {to_cyclotomic(x.s), to_cyclotomic(x.t)};
}

void validate_canonical_element(const IntGroupRingElem& c)
{
    for (const auto& [idx, coeff] : c.terms()) {
        if (sgn(coeff) < 0) {
            throw Error(ErrorKind::invalid_multiplicity,
                        "invalid multiplicity: composition multiplicities must be nonnegative");
        }
    }
    if (sgn(c.coeff(AbelianGroup::identity())) == 0) {
        throw Error(ErrorKind::missing_trivial_factor,
                    "missing trivial factor: the identity must occur in c");
    }
    if (augmentation(c) < 2) {
        throw Error(ErrorKind::semisimple_input,
                    "semisimple input: augmentation(c) = 1 means P_1 is simple");
    }
}

PcRing::PcRing(GroupPtr group, IntGroupRingElem c)
    : group_(std::move(group)), c_(std::move(c)), c_cyclo_(group_)
{
    require_same_group(group_, c_.group());
    validate_canonical_element(c_);
    c_cyclo_ = to_cyclotomic(c_);
}

IntPair simple_class(const PcRing& ring, std::size_t element)
{
    return {IntGroupRingElem::delta(ring.group(), element), IntGroupRingElem(ring.group())};
}

IntPair simple_class(const PcRing& ring, const GroupElement& element)
{
    return simple_class(ring, ring.group()->index_of(element));
}

IntPair projective_class(const PcRing& ring, std::size_t element)
{
    return {IntGroupRingElem(ring.group()), IntGroupRingElem::delta(ring.group(), element)};
}

IntPair projective_class(const PcRing& ring, const GroupElement& element)
{
    return projective_class(ring, ring.group()->index_of(element));
}

} // namespace pcring

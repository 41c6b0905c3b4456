#include "pcring/examples.hpp"

namespace pcring {

PcRing InstanceDescriptor::ring() const
{
    if (semisimple || !c) {
        throw Error(ErrorKind::invalid_argument, "semisimple instances have no pair ring");
    }
    return PcRing(group, *c);
}

InstanceDescriptor uq_sl2(int n)
{
    if (n < 2) {
        throw Error(ErrorKind::invalid_argument, "uq_sl2 requires n >= 2");
    }
    InstanceDescriptor out;
    out.name = "uq-sl2(n=" + std::to_string(n) + ")";
    out.group = make_group({static_cast<unsigned>(n)});
    out.c = trace_element(out.group);
    const auto s = static_cast<std::size_t>(n);
    out.expected = ExpectedStructure{1, Decomposition{1, s}};
    return out;
}

InstanceDescriptor dual_group_algebra(const std::vector<unsigned>& orders)
{
    InstanceDescriptor out;
    out.group = make_group(orders);
    out.name = "dual-group(" + out.group->name() + ")";
    out.semisimple = true;
    return out;
}

InstanceDescriptor custom(const GroupPtr& group, const IntGroupRingElem& c, std::string name)
{
    require_same_group(group, c.group());
    PcRing validated(group, c);
    InstanceDescriptor out;
    out.name = std::move(name);
    out.group = group;
    out.c = validated.c();
    return out;
}

InstanceDescriptor custom(const std::vector<unsigned>& orders, const IntGroupRingElem& c, std::string name)
{
    require_same_group(make_group(orders), c.group());
    return custom(c.group(), c, std::move(name));
}

} // namespace pcring

#include <doctest.h>

#include "pcring/pcr_core.hpp"
#include "support.hpp"

using namespace pcring;
using namespace pcring::testing;

namespace {

IntGroupRingElem ints(const GroupPtr& g, std::vector<long> coeffs)
{
    std::vector<Integer> dense(coeffs.begin(), coeffs.end());
    return IntGroupRingElem::from_dense(g, dense);
}

ErrorKind construction_error(const GroupPtr& g, const IntGroupRingElem& c)
{
    try {
        PcRing ring(g, c);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("construction succeeded");
    return ErrorKind::invalid_argument;
}

} // namespace

TEST_CASE("ring construction")
{
    const auto z2 = make_group({2});
    const auto z3 = make_group({3});
    CHECK_NOTHROW(PcRing(z3, trace_element(z3)));
    CHECK_NOTHROW(PcRing(z2, ints(z2, {1, 1})));
    CHECK(PcRing(z2, ints(z2, {1, 1})).order() == 2);

    CHECK(construction_error(z2, ints(z2, {0, 1})) == ErrorKind::missing_trivial_factor);
    CHECK(construction_error(z2, ints(z2, {1, 0})) == ErrorKind::semisimple_input);
    CHECK(construction_error(z2, ints(z2, {2, -1})) == ErrorKind::invalid_multiplicity);
    // Checked in order: negative entries first, then the identity, then augmentation.
    CHECK(construction_error(z2, ints(z2, {0, -1})) == ErrorKind::invalid_multiplicity);
    CHECK(construction_error(z2, ints(z2, {0, 0})) == ErrorKind::missing_trivial_factor);
    CHECK(construction_error(z2, ints(z3, {1, 1, 1})) == ErrorKind::group_mismatch);

    try {
        PcRing(z2, ints(z2, {0, 2}));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("missing trivial factor") != std::string::npos);
    }
    try {
        PcRing(z2, ints(z2, {1, 0}));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("semisimple input") != std::string::npos);
    }
}

TEST_CASE("pair multiplication examples")
{
    const auto z2 = make_group({2});
    const PcRing ring(z2, ints(z2, {1, 1}));
    Rng rng(5);
    const auto x = random_pair(rng, z2);
    CHECK(pair_mul(ring, ring.unit<Integer>(), x) == x);
    CHECK(pair_mul(ring, x, ring.unit<Integer>()) == x);

    const auto p1 = projective_class(ring, 0);
    CHECK(pair_mul(ring, p1, p1) == IntPair{IntGroupRingElem(z2), ints(z2, {1, 1})});
    CHECK(pair_mul(ring, simple_class(ring, 1), p1) == projective_class(ring, 1));
    CHECK(pair_mul(ring, simple_class(ring, 1), simple_class(ring, 1)) == simple_class(ring, 0));

    const auto z3 = make_group({3});
    CHECK_THROWS_AS(pair_mul(ring, x, IntPair::zero(z3)), Error);
}

TEST_CASE("distinguished basis")
{
    const auto z3 = make_group({3});
    const PcRing ring(z3, trace_element(z3));
    CHECK(simple_class(ring, 0) == ring.unit<Integer>());
    CHECK(simple_class(ring, GroupElement({2})) == simple_class(ring, 2));
    CHECK(projective_class(ring, GroupElement({1})) == IntPair{IntGroupRingElem(z3), IntGroupRingElem::delta(z3, 1)});
    CHECK(projective_class(ring, 0).t == IntGroupRingElem::delta(z3, 0));
    CHECK_THROWS_AS(simple_class(ring, GroupElement({3})), Error);
}

TEST_CASE("dimension vector")
{
    const auto z2z2 = make_group({2, 2});
    const auto c = ints(z2z2, {1, 2, 0, 1});
    const PcRing ring(z2z2, c);
    for (std::size_t a = 0; a < z2z2->size(); ++a) {
        CHECK(bar(ring, simple_class(ring, a)) == IntGroupRingElem::delta(z2z2, a));
        CHECK(bar(ring, projective_class(ring, a)) == IntGroupRingElem::delta(z2z2, a) * c);
    }
    CHECK(bar(ring, projective_class(ring, 0)) == c);
}

TEST_CASE("algebra laws on random elements")
{
    Rng rng(6);
    for (const auto& inst : make_corpus(12, 99, 12)) {
        const PcRing ring(inst.group, inst.c);
        CAPTURE(inst.group->name());
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_pair(rng, inst.group);
            const auto y = random_pair(rng, inst.group);
            const auto z = random_pair(rng, inst.group);
            CHECK(pair_mul(ring, pair_mul(ring, x, y), z) == pair_mul(ring, x, pair_mul(ring, y, z)));
            CHECK(pair_mul(ring, x, y) == pair_mul(ring, y, x));
            CHECK(pair_mul(ring, x, y + z) == pair_mul(ring, x, y) + pair_mul(ring, x, z));
            CHECK(bar(ring, pair_mul(ring, x, y)) == bar(ring, x) * bar(ring, y));
            CHECK(bar(ring, x + y) == bar(ring, x) + bar(ring, y));

            // The projective part is a two-sided ideal.
            const IntPair p{IntGroupRingElem(inst.group), y.t};
            CHECK(pair_mul(ring, x, p).s.is_zero());
            CHECK(pair_mul(ring, p, x).s.is_zero());
        }
    }
}

TEST_CASE("basis products have nonnegative coefficients")
{
    for (const auto& inst : make_corpus(8, 7, 10)) {
        const PcRing ring(inst.group, inst.c);
        std::vector<IntPair> basis;
        for (std::size_t a = 0; a < ring.order(); ++a) {
            basis.push_back(simple_class(ring, a));
            basis.push_back(projective_class(ring, a));
        }
        for (const auto& x : basis) {
            for (const auto& y : basis) {
                const auto p = pair_mul(ring, x, y);
                for (const auto* part : {&p.s, &p.t}) {
                    for (const auto& [idx, coeff] : part->terms()) {
                        CHECK(coeff > 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("complexified multiplication agrees with the integral one")
{
    Rng rng(8);
    const auto g = make_group({2, 3});
    const PcRing ring(g, ints(g, {1, 0, 2, 1, 0, 1}));
    const auto x = random_pair(rng, g);
    const auto y = random_pair(rng, g);
    CHECK(to_cyclotomic(pair_mul(ring, x, y)) == pair_mul(ring, to_cyclotomic(x), to_cyclotomic(y)));
}

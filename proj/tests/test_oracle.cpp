#include <doctest.h>

#include "pcring/linalg.hpp"
#include "pcring/oracle.hpp"
#include "pcring/spectral.hpp"
#include "support.hpp"

using namespace pcring;
using namespace pcring::testing;

namespace {

IntGroupRingElem ints(const GroupPtr& g, std::vector<long> coeffs)
{
    std::vector<Integer> dense(coeffs.begin(), coeffs.end());
    return IntGroupRingElem::from_dense(g, dense);
}

std::vector<std::int64_t> product_row(const StructureTable& t, std::size_t i, std::size_t j)
{
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < t.dim(); ++k) {
        out.push_back(t.at(i, j, k));
    }
    return out;
}

} // namespace

TEST_CASE("table labels and unit")
{
    const auto g = make_group({2, 3});
    const auto table = build_table(PcRing(g, trace_element(g)));
    CHECK(table.dim() == 12);
    CHECK(table.labels()[0] == "S(0,0)");
    CHECK(table.labels()[5] == "S(1,2)");
    CHECK(table.labels()[6] == "P(0,0)");
    for (std::size_t x = 0; x < table.dim(); ++x) {
        std::vector<std::int64_t> expected(table.dim(), 0);
        expected[x] = 1;
        CHECK(product_row(table, StructureTable::unit(), x) == expected);
        CHECK(product_row(table, x, StructureTable::unit()) == expected);
    }
    CHECK_THROWS_AS(StructureTable(2, {"a"}), Error);
}

TEST_CASE("products of projective classes")
{
    const auto z2 = make_group({2});
    const auto t2 = build_table(PcRing(z2, ints(z2, {1, 1})));
    // [P_1][P_1] = [P_1] + [P_g]
    CHECK(product_row(t2, 2, 2) == std::vector<std::int64_t>{0, 0, 1, 1});

    const auto z3 = make_group({3});
    const auto t3 = build_table(PcRing(z3, trace_element(z3)));
    // [P_K][P_K^2] = [P_1] + [P_K] + [P_K^2]
    CHECK(product_row(t3, 4, 5) == std::vector<std::int64_t>{0, 0, 0, 1, 1, 1});
    // [K][P_K] = [P_K^2]
    CHECK(product_row(t3, 1, 4) == std::vector<std::int64_t>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("table agrees with the pair ring")
{
    const auto z3 = make_group({3});
    const PcRing ring(z3, trace_element(z3));
    auto table = build_table(ring);
    CHECK(table_matches_pair_ring(table, ring));
    CHECK(is_associative(table));
    CHECK(is_commutative(table));

    table.at(4, 5, 3) += 1;
    CHECK_FALSE(table_matches_pair_ring(table, ring));

    const auto z2 = make_group({2});
    CHECK_FALSE(table_matches_pair_ring(build_table(PcRing(z2, ints(z2, {1, 1}))), ring));
}

TEST_CASE("perturbations are detected")
{
    const auto z2 = make_group({2});
    auto table = build_table(PcRing(z2, ints(z2, {1, 1})));
    table.at(1, 2, 3) = 0;
    table.at(1, 2, 2) = 1;
    CHECK_FALSE(is_commutative(table));
    CHECK_FALSE(is_associative(table));
}

TEST_CASE("non-associative tables are rejected by the radical computation")
{
    StructureTable table(2, {"a", "b"});
    table.at(0, 0, 1) = 1;
    table.at(1, 1, 0) = 1;
    CHECK_FALSE(is_associative(table));
    try {
        radical_dimension(table);
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_associative);
        CHECK(std::string(e.what()) == "table not associative");
    }
}

TEST_CASE("radical dimension examples")
{
    const auto z2 = make_group({2});
    CHECK(radical_dimension(build_table(PcRing(z2, ints(z2, {1, 1})))).dimension == 1);
    CHECK(radical_dimension(build_table(PcRing(z2, ints(z2, {2, 0})))).dimension == 0);
    for (unsigned n = 2; n <= 8; ++n) {
        const auto g = make_group({n});
        CHECK(radical_dimension(build_table(PcRing(g, trace_element(g)))).dimension == n - 1);
    }
}

TEST_CASE("radical agrees with the spectral nilradical")
{
    for (const auto& inst : make_corpus(15, 21, 12)) {
        const PcRing ring(inst.group, inst.c);
        CAPTURE(inst.group->name());
        const auto table = build_table(ring);
        CHECK(table_matches_pair_ring(table, ring));
        CHECK(is_associative(table));
        CHECK(is_commutative(table));
        const auto radical = radical_dimension(table);
        const auto nil = nilradical_basis(ring);
        CHECK(radical.dimension == nil.size());

        const unsigned n = inst.group->conductor();
        Matrix<CycloNum> oracle_rows;
        for (const auto& row : radical.basis) {
            std::vector<CycloNum> embedded;
            for (const auto& q : row) {
                embedded.push_back(CycloNum::scalar(n, q));
            }
            oracle_rows.push_back(std::move(embedded));
        }
        Matrix<CycloNum> spectral_rows;
        for (const auto& v : nil) {
            spectral_rows.push_back(coordinates(v));
        }
        CHECK(same_span(oracle_rows, spectral_rows));
    }
}

TEST_CASE("oversized multiplicities are rejected")
{
    const auto z2 = make_group({2});
    IntGroupRingElem c = IntGroupRingElem::from_dense(z2, {Integer("100000000000000000000000"), Integer(1)});
    CHECK_THROWS_AS(build_table(PcRing(z2, c)), Error);
}

#include <algorithm>
#include <chrono>
#include <random>

#include "doctest.h"
#include "orw/error.hpp"
#include "orw/ramsey.hpp"

using namespace orw;

namespace {

// Exhaustive reference checks over all vertex triples / subsets.
bool oracle_triangle_free(const WitnessGraph& g) {
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) return false;
    return true;
}

std::size_t oracle_alpha(const WitnessGraph& g) {
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = a + 1; b < n && ok; ++b)
                if ((s >> a & 1) && (s >> b & 1) && g.has_edge(a, b)) ok = false;
        if (ok) best = std::max<std::size_t>(best, __builtin_popcountll(s));
    }
    return best;
}

std::vector<std::size_t> degrees(const WitnessGraph& g) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("witness verification") {
    CHECK(verify_witness(WitnessGraph::circulant(5, {1}), 3).valid);
    const auto k3 = verify_witness(WitnessGraph::complete(3), 3);
    CHECK_FALSE(k3.valid);
    REQUIRE(k3.triangle);
    CHECK(*k3.triangle == std::array<std::size_t, 3>{0, 1, 2});
    const auto p5 = verify_witness(WitnessGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 3);
    CHECK_FALSE(p5.valid);
    REQUIRE(p5.independent_set);
    CHECK(p5.independent_set->size() == 3);

    const auto start = std::chrono::steady_clock::now();
    CHECK(verify_witness(WitnessGraph::circulant(13, {1, 5}), 5).valid);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
    CHECK(verify_witness(WitnessGraph::circulant(8, {1, 4}), 4).valid);
    CHECK(verify_witness(WitnessGraph::complete(2), 2).valid);
}

TEST_CASE("graph queries agree with exhaustive references") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.35);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + trial % 9;
        WitnessGraph g(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (coin(rng)) g.add_edge(a, b);
        CHECK(g.find_triangle().has_value() == !oracle_triangle_free(g));
        const std::size_t alpha = oracle_alpha(g);
        CHECK(g.independence_number() == alpha);
        CHECK(g.find_independent_set(alpha).has_value());
        CHECK_FALSE(g.find_independent_set(alpha + 1).has_value());
        for (std::size_t size = 2; size <= 4; ++size) {
            CHECK(verify_witness(g, size).valid == (oracle_triangle_free(g) && alpha < size));
        }
    }
}

TEST_CASE("exact small Ramsey numbers") {
    const RamseyRecord r2 = brute_force_ramsey(2);
    CHECK(r2.value == 3);
    CHECK(r2.witness.order() == 2);
    CHECK(r2.witness.edge_count() == 1);

    const RamseyRecord r3 = brute_force_ramsey(3);
    CHECK(r3.value == 6);
    CHECK(r3.source == RamseySource::computed);
    CHECK(verify_witness(r3.witness, 3).valid);
    CHECK(degrees(r3.witness) == std::vector<std::size_t>(5, 2));  // the 5-cycle

    const RamseyRecord r4 = brute_force_ramsey(4);
    CHECK(r4.value == 9);
    CHECK(r4.witness.order() == 8);
    CHECK(verify_witness(r4.witness, 4).valid);

    CHECK_THROWS_AS(brute_force_ramsey(5), DomainError);
    CHECK_THROWS_AS(brute_force_ramsey(1), DomainError);
}

TEST_CASE("no graph of order R(n,3) is a witness (n = 3, exhaustive)") {
    // All 2^15 graphs on 6 vertices.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
        WitnessGraph g(6);
        std::size_t bitpos = 0;
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = a + 1; b < 6; ++b, ++bitpos)
                if (mask >> bitpos & 1) g.add_edge(a, b);
        REQUIRE_FALSE(verify_witness(g, 3).valid);
    }
}

TEST_CASE("builtin records and relabeling") {
    for (Natural n = 2; n <= 5; ++n) {
        const RamseyRecord rec = builtin_record(n);
        CHECK(rec.witness.order() + 1 == rec.value);
        const RamseyRecord moved = relabel_red_prefix(rec);
        CHECK(verify_witness(moved.witness, n).valid);
        CHECK(moved.witness.edge_count() == rec.witness.edge_count());
        CHECK(degrees(moved.witness) == degrees(rec.witness));
        for (std::size_t a = 0; a + 1 < n; ++a)
            for (std::size_t b = a + 1; b + 1 < n; ++b) CHECK_FALSE(moved.witness.has_edge(a, b));
    }
    CHECK_THROWS_AS(builtin_record(6), DomainError);

    // C5 relabeled: two non-adjacent vertices first.
    const RamseyRecord c5 = relabel_red_prefix(builtin_record(3));
    CHECK_FALSE(c5.witness.has_edge(0, 1));

    // A witness that already starts with an independent prefix is unchanged.
    RamseyRecord already = builtin_record(3);
    already.witness = WitnessGraph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(relabel_red_prefix(already).witness == already.witness);
}

TEST_CASE("witness JSON round trip") {
    const WitnessGraph g = WitnessGraph::circulant(13, {1, 5});
    const auto [n, back] = witness_from_json(witness_to_json(5, g));
    CHECK(n == 5);
    CHECK(back == g);
    CHECK_THROWS_AS(witness_from_json("{\"order\": 3, \"edges\": [[0, 0]]}"), DomainError);
    CHECK_THROWS_AS(witness_from_json("{\"order\": 3}"), DomainError);
    CHECK_THROWS_AS(witness_from_json("{\"order\": 3, \"edges\": [[0, 5]]}"), DomainError);
    CHECK_THROWS_AS(witness_from_json("not json"), DomainError);
    CHECK_THROWS_AS(WitnessGraph(65), DomainError);
}

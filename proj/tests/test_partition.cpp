// SPDX-License-Identifier: Apache-2.0

#include <functional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "satstat/partition.hpp"

using satstat::KappaIndex;
using satstat::Partition;

namespace {

// all kappa tuples of rank n with |kappa| <= max_degree
std::vector<KappaIndex> all_kappas(int n, std::uint32_t max_degree) {
    std::vector<KappaIndex> out;
    std::vector<std::uint32_t> cur(n - 1, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos,
                                                              std::uint32_t left) {
        if (pos == cur.size()) {
            out.emplace_back(n, cur);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, max_degree);
    return out;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("canonicalization and validation") {
    CHECK(Partition({3, 2, 0, 0}).rows() == 2);
    CHECK(Partition({}).empty());
    CHECK(Partition({5}).weight() == 5);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(Partition({2, 1}).to_string() == "(2,1)");
    CHECK(Partition({}).to_string() == "()");
}

TEST_CASE("kappa to partition: worked examples") {
    CHECK(partition_from_kappa(KappaIndex(3, {0, 0})) == Partition({}));
    CHECK(partition_from_kappa(KappaIndex(3, {1, 0})) == Partition({1, 1}));
    CHECK(partition_from_kappa(KappaIndex(3, {2, 1})) == Partition({3, 2}));
}

TEST_CASE("partition to kappa: worked examples") {
    CHECK(partition_to_kappa(Partition({1, 1}), 3) == KappaIndex(3, {1, 0}));
    CHECK(partition_to_kappa(Partition({2, 1, 0}), 3) == KappaIndex(3, {1, 1}));
    CHECK(partition_to_kappa(Partition({1, 1, 1}), 3) == KappaIndex(3, {0, 0}));
    CHECK_THROWS_AS(partition_to_kappa(Partition({1, 1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("dual is an involution; worked examples") {
    CHECK(KappaIndex(3, {1, 0}).dual() == KappaIndex(3, {0, 1}));
    CHECK(KappaIndex(3, {1, 1}).dual() == KappaIndex(3, {1, 1}));
    CHECK(KappaIndex(4, {3, 0, 2}).dual() == KappaIndex(4, {2, 0, 3}));
    for (int n = 2; n <= 5; ++n)
        for (const auto& k : all_kappas(n, 4)) CHECK(k.dual().dual() == k);
}

TEST_CASE("norm identities, exhaustively for |kappa| <= 6, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& k : all_kappas(n, 6)) {
            const Partition lambda = partition_from_kappa(k);
            CHECK(k.weighted_norm() == lambda.weight());
            CHECK(k.weighted_norm() + k.dual().weighted_norm() == n * k.degree());
            // round trip through the partition
            CHECK(partition_to_kappa(lambda, n) == k);
        }
    }
}

TEST_CASE("round trip strips height-n columns") {
    // (4,3,1) at n=3 strips one full column -> (3,2)
    const Partition lambda({4, 3, 1});
    const KappaIndex k = partition_to_kappa(lambda, 3);
    CHECK(partition_from_kappa(k) == Partition({3, 2}));
}

TEST_CASE("scaled kappa") {
    CHECK(KappaIndex(3, {2, 1}).scaled(3) == KappaIndex(3, {6, 3}));
    CHECK(KappaIndex(3, {2, 1}).scaled(0).is_zero());
}

TEST_CASE("dash strings") {
    CHECK(KappaIndex(3, {2, 0}).dash_string() == "2-0");
    CHECK(KappaIndex(2, {7}).dash_string() == "7");
}

}  // TEST_SUITE

// Copyright 2026 The latgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "latgame/latgame.hpp"
#include "oracle.hpp"

using namespace latgame;

namespace {

LatticeGame atoms_one_top_two()
{
    const auto lat = Lattice::make(LatticeKind::partition, 3);
    LatticeGame f(lat);
    for (Index a : lat->atoms()) {
        f[a] = 1;
    }
    f[lat->top()] = 2;
    return f;
}

}  // namespace

TEST(Games, AdditiveGlobalBuildsRankAndSize)
{
    for (int n = 2; n <= 5; ++n) {
        const auto c = Lattice::make(LatticeKind::subset, n);
        const auto p = Lattice::make(LatticeKind::partition, n);
        const auto rank_v = make_game(c, [&](Index s) { return c->size(s) - 1; });
        const auto size_v = make_game(c, [&](Index s) { return binomial(c->size(s), 2); });
        EXPECT_EQ(additive_global(rank_v, p), rank_game(p));
        EXPECT_EQ(additive_global(size_v, p), size_game(p));
    }
}

TEST(Games, AdditivePff)
{
    const auto c = Lattice::make(LatticeKind::subset, 3);
    const auto v = make_game(c, [&](Index s) { return static_cast<long>(c->subset(s)) * 3 - 1; });
    const auto h = additive_pff(v);
    const auto& e = h.lattice();
    for (Index x = 0; x < e.cardinality(); ++x) {
        const auto es = e.embedded(x);
        Rational want = static_cast<long>(es.subset()) * 3 - 1;
        for (Mask b : es.partition().blocks()) {
            want += static_cast<long>(b) * 3 - 1;
        }
        EXPECT_EQ(h[x], want) << e.key(x);
    }
    EXPECT_THROW(additive_pff(h), std::domain_error);
}

TEST(Games, SymmetricRoundTrip)
{
    for (auto kind : {LatticeKind::subset, LatticeKind::partition, LatticeKind::embedded}) {
        const auto lat = Lattice::make(kind, 4);
        const auto r = rank_game(lat);
        const auto g = is_symmetric(r);
        ASSERT_TRUE(g) << to_string(kind);
        EXPECT_EQ(symmetric_expand(*g, lat), r);
        for (const auto& [c, v] : g->class_values) {
            EXPECT_EQ(parse_class_key(kind, 4, class_key(kind, c)), c);
        }
    }
    EXPECT_EQ(class_key(LatticeKind::partition, ClassVector{1, 1, 0}), "2+1");
    EXPECT_EQ(class_key(LatticeKind::embedded, ClassVector{1, 1, 1, 0}), "1:2+1");
    EXPECT_THROW(parse_class_key(LatticeKind::partition, 3, "2+2"), input_error);
    EXPECT_THROW(parse_class_key(LatticeKind::embedded, 3, "2:1+1+1"), input_error);
}

TEST(Games, NonSymmetricDetected)
{
    const auto p3 = Lattice::make(LatticeKind::partition, 3);
    EXPECT_FALSE(is_symmetric(zeta_game(p3, p3->atoms()[0])));
    EXPECT_TRUE(is_symmetric(atoms_one_top_two()));
    SymmetricGame partial{LatticeKind::partition, 3, {{ClassVector{3, 0, 0}, 0}}};
    EXPECT_THROW(symmetric_expand(partial), input_error);
}

TEST(Games, RelabelInvarianceOfSymmetricGames)
{
    std::mt19937_64 rng(3);
    const auto lat = Lattice::make(LatticeKind::partition, 4);
    const auto f = oracle::random_symmetric_game(lat, rng);
    const std::vector<int> perm{2, 0, 3, 1};
    for (Index x = 0; x < lat->cardinality(); ++x) {
        EXPECT_EQ(f[lat->relabel(x, perm)], f[x]);
    }
}

TEST(Games, ClusteringRestrict)
{
    const auto lat = Lattice::make(LatticeKind::partition, 4);
    std::mt19937_64 rng(5);
    const auto f = oracle::random_game(lat, rng);
    const Index cluster = *lat->find("1,2|3,4");
    const auto g = clustering_restrict(f, cluster);
    const auto mu = mobius(g);
    for (Index x = 0; x < lat->cardinality(); ++x) {
        EXPECT_EQ(mu[x], lat->leq(x, cluster) ? mobius(f)[x] : Rational(0));
        if (lat->leq(x, cluster)) {
            EXPECT_EQ(g[x], f[x]);
        }
    }
    EXPECT_EQ(g.at_top(), f[cluster]);
}

TEST(Games, AtomsOneTopTwoPredicates)
{
    const auto f = atoms_one_top_two();
    EXPECT_TRUE(is_supermodular(f));
    const auto tp = is_totally_positive(f);
    EXPECT_FALSE(tp);
    EXPECT_EQ(tp.witness, std::vector<Index>{f.lattice().top()});
    EXPECT_EQ(mobius(f)[f.lattice().top()], -1);
    EXPECT_TRUE(is_monotone(f));
}

TEST(Games, SizeIsTotallyPositiveAndSupermodular)
{
    for (int n = 2; n <= 5; ++n) {
        const auto s = size_game(Lattice::make(LatticeKind::partition, n));
        EXPECT_TRUE(is_totally_positive(s));
        EXPECT_TRUE(is_supermodular(s));
    }
}

TEST(Games, SupermodularityAgainstBruteForce)
{
    std::mt19937_64 rng(8);
    const auto lat = Lattice::make(LatticeKind::partition, 4);
    const auto P = oracle::build(*lat);
    int seen_true = 0;
    for (int t = 0; t < 200; ++t) {
        // Totally positive games are supermodular on these lattices; mix both.
        MobiusCoefficients mu(lat);
        for (Index x = 1; x < lat->cardinality(); ++x) {
            std::uniform_int_distribution<int> d(t % 2 ? 0 : -1, 3);
            mu[x] = d(rng);
        }
        const auto f = zeta_expand(mu);
        const auto v = oracle::values(P, f);
        bool brute = true;
        for (std::size_t x = 0; x < P.card() && brute; ++x) {
            for (std::size_t y = 0; y < P.card() && brute; ++y) {
                // Least upper and greatest lower bounds from the oracle order.
                std::size_t j = 0;
                std::size_t m = 0;
                for (std::size_t z = 0; z < P.card(); ++z) {
                    bool least = P.le[x][z] && P.le[y][z];
                    bool greatest = P.le[z][x] && P.le[z][y];
                    for (std::size_t w = 0; w < P.card(); ++w) {
                        least = least && (!(P.le[x][w] && P.le[y][w]) || P.le[z][w]);
                        greatest = greatest && (!(P.le[w][x] && P.le[w][y]) || P.le[w][z]);
                    }
                    j = least ? z : j;
                    m = greatest ? z : m;
                }
                brute = v[j] + v[m] >= v[x] + v[y];
            }
        }
        EXPECT_EQ(is_supermodular(f).holds, brute);
        seen_true += brute ? 1 : 0;
        if (is_totally_positive(f)) {
            EXPECT_TRUE(brute);
        }
    }
    EXPECT_GT(seen_true, 0);
    EXPECT_LT(seen_true, 200);
}

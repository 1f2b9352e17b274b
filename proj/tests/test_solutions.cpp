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

std::vector<Rational> shares_of(const Solution& s)
{
    return {s.shares().begin(), s.shares().end()};
}

/// Oracle vector reordered into library atom order.
std::vector<Rational> in_library_order(const oracle::Poset& P, const Lattice& lat, const std::vector<Rational>& v)
{
    std::vector<Rational> out(v.size());
    for (std::size_t k = 0; k < P.atoms.size(); ++k) {
        out[static_cast<std::size_t>(lat.atom_position(P.lib[static_cast<std::size_t>(P.atoms[k])]))] = v[k];
    }
    return out;
}

LatticePtr P3() { return Lattice::make(LatticeKind::partition, 3); }
LatticePtr E2() { return Lattice::make(LatticeKind::embedded, 2); }

}  // namespace

TEST(Shapley, BothFormsMatchPermutationOracle)
{
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 5; ++n) {
        const auto c = Lattice::make(LatticeKind::subset, n);
        for (int t = 0; t < 20; ++t) {
            const auto v = oracle::random_game(c, rng);
            const auto want = oracle::shapley_permutations(n, [&](unsigned s) { return v[c->index_of_subset(s)]; });
            EXPECT_EQ(shares_of(shapley_chain(v)), want);
            EXPECT_EQ(shares_of(shapley_dividends(v)), want);
        }
    }
}

TEST(Shapley, UnanimityAndInessential)
{
    const auto c = Lattice::make(LatticeKind::subset, 5);
    for (Index x = 1; x < c->cardinality(); ++x) {
        const auto sol = shapley_dividends(zeta_game(c, x));
        for (int i = 0; i < 5; ++i) {
            const bool in = (c->subset(x) >> i) & 1u;
            EXPECT_EQ(sol[static_cast<std::size_t>(i)], in ? Rational(1, c->size(x)) : Rational(0));
        }
    }
    const std::vector<Rational> w{2, Rational(-1, 3), 0, 5, Rational(7, 2)};
    const auto v = make_game(c, [&](Index x) {
        Rational s = 0;
        for (int i : members(c->subset(x))) {
            s += w[static_cast<std::size_t>(i - 1)];
        }
        return s;
    });
    EXPECT_EQ(shares_of(shapley_chain(v)), w);
    // phi(v)(A) = sum of the shares in A reproduces an inessential game.
    EXPECT_EQ(expand(shapley_chain(v)), v);
}

TEST(Shapley, WrongLattice)
{
    EXPECT_THROW(shapley_chain(rank_game(P3())), std::domain_error);
    EXPECT_THROW(shapley_dividends(rank_game(P3())), std::domain_error);
}

TEST(Solutions, WorkedExamplesGlobal)
{
    const auto lat = P3();
    const auto z = zeta_game(lat, *lat->find("1,2|3"));
    EXPECT_EQ(shares_of(su(z)), (std::vector<Rational>{1, 0, 0}));
    EXPECT_EQ(shares_of(cu(z)), (std::vector<Rational>{Rational(2, 3), Rational(1, 6), Rational(1, 6)}));
    EXPECT_EQ(shares_of(cu_chain_oracle(z)), shares_of(cu(z)));
    const auto r = rank_game(lat);
    const std::vector<Rational> two_thirds(3, Rational(2, 3));
    EXPECT_EQ(shares_of(su(r)), two_thirds);
    EXPECT_EQ(shares_of(cu(r)), two_thirds);
    EXPECT_EQ(shares_of(egalitarian(r)), two_thirds);
}

TEST(Solutions, WorkedExamplesEmbedded)
{
    const auto lat = E2();
    const auto z = zeta_game(lat, *lat->find("({};1,2)"));
    EXPECT_EQ(shares_of(su(z)), (std::vector<Rational>{0, 0, 1}));
    EXPECT_EQ(shares_of(cu(z)), (std::vector<Rational>{Rational(1, 6), Rational(1, 6), Rational(2, 3)}));
    const std::vector<Rational> two_thirds(3, Rational(2, 3));
    EXPECT_EQ(shares_of(su(rank_game(lat))), two_thirds);
    EXPECT_EQ(shares_of(cu(rank_game(lat))), two_thirds);
    EXPECT_EQ(shares_of(egalitarian(rank_game(lat))), two_thirds);

    const auto p3 = P3();
    const auto zp = zeta_game(p3, *p3->find("1,2|3"));
    EXPECT_EQ(transport_solution(su(z), p3), su(zp));
    EXPECT_EQ(transport_solution(cu(z), p3), cu(zp));
    EXPECT_EQ(transport_solution(transport_solution(cu(z))), cu(z));
}

TEST(Solutions, SuAndCuMatchOracles)
{
    std::mt19937_64 rng(22);
    const std::vector<LatticePtr> lats{Lattice::make(LatticeKind::subset, 4), Lattice::make(LatticeKind::partition, 4),
                                       Lattice::make(LatticeKind::embedded, 3),
                                       Lattice::make(LatticeKind::partition, 5)};
    for (const auto& lat : lats) {
        const auto P = oracle::build(*lat);
        const int rounds = lat->cardinality() > 30 ? 3 : 15;
        for (int t = 0; t < rounds; ++t) {
            const auto f = oracle::random_game(lat, rng);
            const auto vals = oracle::values(P, f);
            EXPECT_EQ(shares_of(su(f)), in_library_order(P, *lat, oracle::su(P, vals)));
            const auto want_cu = in_library_order(P, *lat, oracle::cu(P, vals));
            EXPECT_EQ(shares_of(cu(f)), want_cu);
            EXPECT_EQ(shares_of(cu_chain_oracle(f)), want_cu);
        }
    }
}

TEST(Solutions, AllCoincideWithShapleyOnSubsets)
{
    std::mt19937_64 rng(23);
    const auto c = Lattice::make(LatticeKind::subset, 4);
    for (int t = 0; t < 10; ++t) {
        const auto v = oracle::random_game(c, rng);
        EXPECT_EQ(su(v), shapley_dividends(v));
        EXPECT_EQ(cu(v), shapley_chain(v));
    }
}

TEST(Solutions, EfficiencyAndLinearity)
{
    std::mt19937_64 rng(24);
    for (auto kind : {LatticeKind::subset, LatticeKind::partition, LatticeKind::embedded}) {
        const auto lat = Lattice::make(kind, kind == LatticeKind::embedded ? 3 : 4);
        for (int t = 0; t < 5; ++t) {
            const auto f = oracle::random_game(lat, rng);
            const auto g = oracle::random_game(lat, rng);
            const Rational a(2, 5);
            const Rational b(-3);
            for (Solver s : {Solver::su, Solver::cu, Solver::egalitarian}) {
                EXPECT_EQ(solve(s, f).total(), f.at_top() - f.at_bottom()) << to_string(s);
                const auto lhs = solve(s, a * f + b * g);
                const auto sf = solve(s, f);
                const auto sg = solve(s, g);
                for (std::size_t k = 0; k < lat->atoms().size(); ++k) {
                    EXPECT_EQ(lhs[k], a * sf[k] + b * sg[k]);
                }
            }
        }
    }
}

TEST(Solutions, SuOnZetaGames)
{
    for (auto kind : {LatticeKind::partition, LatticeKind::embedded}) {
        const auto lat = Lattice::make(kind, 4);
        for (Index x = 1; x < lat->cardinality(); ++x) {
            const auto sol = su(zeta_game(lat, x));
            for (std::size_t k = 0; k < lat->atoms().size(); ++k) {
                const bool below = lat->leq(lat->atoms()[k], x);
                EXPECT_EQ(sol[k], below ? Rational(1, lat->size(x)) : Rational(0));
            }
        }
    }
}

TEST(Solutions, FixedPoints)
{
    for (int n = 3; n <= 5; ++n) {
        const auto lat = Lattice::make(LatticeKind::partition, n);
        MobiusCoefficients mu(lat);
        for (std::size_t k = 0; k < lat->atoms().size(); ++k) {
            mu[lat->atoms()[k]] = Rational(static_cast<long>(k) - 2, 3);
        }
        EXPECT_TRUE(is_fixed_point(Solver::su, zeta_expand(mu)));
        EXPECT_TRUE(is_fixed_point(Solver::cu, Rational(7, 2) * size_game(lat)));
        for (Index a : lat->atoms()) {
            EXPECT_FALSE(is_fixed_point(Solver::cu, zeta_game(lat, a)));
            EXPECT_TRUE(is_fixed_point(Solver::su, zeta_game(lat, a)));
        }
    }
    // cu(zeta_a)_a < 1 on P^3.
    const auto lat = P3();
    EXPECT_LT(cu(zeta_game(lat, lat->atoms()[0]))[0], 1);
}

TEST(Solutions, ExpandOnesIsSize)
{
    const auto lat = Lattice::make(LatticeKind::partition, 5);
    const Solution ones(lat, std::vector<Rational>(lat->atoms().size(), Rational(1)));
    EXPECT_EQ(expand(ones), size_game(lat));
    // C(n,2) zeta_top is shared as 1 per atom.
    const auto f = Rational(10) * zeta_game(lat, lat->top());
    EXPECT_EQ(egalitarian(f), ones);
    EXPECT_EQ(su(f), ones);
}

TEST(Solutions, SymmetricFastPath)
{
    std::mt19937_64 rng(25);
    for (auto kind : {LatticeKind::subset, LatticeKind::partition, LatticeKind::embedded}) {
        for (int n = 2; n <= 5; ++n) {
            if (kind == LatticeKind::embedded && n > 4) {
                continue;
            }
            const auto lat = Lattice::make(kind, n);
            const auto f = oracle::random_symmetric_game(lat, rng);
            const auto fast = symmetric_solution(f);
            EXPECT_EQ(fast, su(f));
            EXPECT_EQ(fast, cu(f));
            EXPECT_EQ(symmetric_solution(*is_symmetric(f), lat), fast);
        }
    }
    EXPECT_THROW(symmetric_solution(zeta_game(P3(), 1)), std::domain_error);
    // On E^2 the atom ({};1,2) is its own orbit: a class-symmetric game that
    // singles it out has unequal su shares, so the closed form must refuse it.
    const auto e2 = E2();
    const auto lone = zeta_game(e2, *e2->find("({};1,2)"));
    ASSERT_TRUE(is_symmetric(lone));
    EXPECT_THROW(symmetric_solution(lone), std::domain_error);
}

TEST(Myerson, MatchesComponentOracle)
{
    std::mt19937_64 rng(26);
    const int n = 4;
    const auto c = Lattice::make(LatticeKind::subset, n);
    const Graph g{{1, 2}, {2, 3}, {3, 4}};
    for (int t = 0; t < 5; ++t) {
        const auto v = oracle::random_game(c, rng);
        // v/G(A) = sum of v over the connected components of A.
        auto restricted = [&](unsigned a) {
            Rational s = 0;
            unsigned left = a;
            while (left) {
                unsigned comp = left & (~left + 1);
                for (bool grew = true; grew;) {
                    grew = false;
                    for (auto [i, j] : g) {
                        const unsigned bi = 1u << (i - 1);
                        const unsigned bj = 1u << (j - 1);
                        if ((comp & bi) && (left & bj) && !(comp & bj)) {
                            comp |= bj;
                            grew = true;
                        }
                        if ((comp & bj) && (left & bi) && !(comp & bi)) {
                            comp |= bi;
                            grew = true;
                        }
                    }
                }
                s += v[c->index_of_subset(comp)];
                left &= ~comp;
            }
            return s;
        };
        auto v0 = v;
        v0[0] = 0;
        const auto gr = graph_restrict(v0, g);
        for (Index x = 0; x < c->cardinality(); ++x) {
            EXPECT_EQ(gr[x], restricted(c->subset(x))) << c->key(x);
        }
        EXPECT_EQ(shares_of(myerson(v0, g)), oracle::shapley_permutations(n, restricted));
    }
    EXPECT_THROW(graph_restrict(oracle::random_game(c, rng), Graph{{1, 5}}), input_error);
    EXPECT_THROW(solve(Solver::myerson, oracle::random_game(c, rng)), input_error);
}

TEST(NodeSplit, EqualAndWeighted)
{
    const auto lat = P3();
    const Solution sol(lat, {4, 1, 0});
    EXPECT_EQ(split_to_nodes(sol), (NodeShares{Rational(5, 2), 2, Rational(1, 2)}));
    EdgeWeights w{{{1, 2}, {Rational(1, 4), Rational(3, 4)}}};
    EXPECT_EQ(split_to_nodes(sol, w), (NodeShares{Rational(3, 2), 3, Rational(1, 2)}));
    EdgeWeights bad{{{1, 2}, {Rational(1, 4), Rational(1, 4)}}};
    EXPECT_THROW(split_to_nodes(sol, bad), input_error);
    EdgeWeights unknown{{{1, 4}, {Rational(1, 2), Rational(1, 2)}}};
    EXPECT_THROW(split_to_nodes(sol, unknown), input_error);
    // Node shares add up to the edge total.
    const auto l5 = Lattice::make(LatticeKind::partition, 5);
    std::mt19937_64 rng(27);
    const auto s5 = su(oracle::random_game(l5, rng));
    Rational total = 0;
    for (const auto& v : split_to_nodes(s5)) {
        total += v;
    }
    EXPECT_EQ(total, s5.total());
}

TEST(Solvers, Parsing)
{
    EXPECT_EQ(parse_solver("cu"), Solver::cu);
    EXPECT_EQ(parse_solver("myerson"), Solver::myerson);
    EXPECT_THROW(parse_solver("banzhaf"), input_error);
}

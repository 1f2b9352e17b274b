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

#ifndef LATGAME_SOLUTIONS_HPP
#define LATGAME_SOLUTIONS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latgame/games.hpp"
#include "latgame/lattice.hpp"
#include "latgame/transform.hpp"

namespace latgame {

/// Point-valued solution: one exact share per atom, in Lattice::atoms() order.
/// Viewed as a game, it is the lattice function whose Moebius inversion is
/// the shares on atoms and zero elsewhere (see expand()).
class Solution
{
public:
    Solution() = default;

    explicit Solution(LatticePtr lattice) : lattice_(std::move(lattice)), shares_(lattice_->atoms().size()) {}

    Solution(LatticePtr lattice, std::vector<Rational> shares)
        : lattice_(std::move(lattice)), shares_(std::move(shares))
    {
        if (shares_.size() != lattice_->atoms().size()) {
            throw input_error("solution has " + std::to_string(shares_.size()) + " shares for " +
                              std::to_string(lattice_->atoms().size()) + " atoms");
        }
    }

    const Lattice& lattice() const noexcept { return *lattice_; }
    const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

    /// Share of the k-th atom.
    const Rational& operator[](std::size_t k) const { return shares_[k]; }
    Rational& operator[](std::size_t k) { return shares_[k]; }

    std::span<const Rational> shares() const noexcept { return shares_; }

    /// Share of the atom with lattice index a.
    const Rational& share_of(Index a) const
    {
        const int pos = lattice_->atom_position(a);
        if (pos < 0) {
            throw std::domain_error(lattice_->key(a) + " is not an atom");
        }
        return shares_[static_cast<std::size_t>(pos)];
    }

    Rational total() const
    {
        Rational t = 0;
        for (const auto& s : shares_) {
            t += s;
        }
        return t;
    }

    friend bool operator==(const Solution& a, const Solution& b)
    {
        return a.lattice_->kind() == b.lattice_->kind() && a.lattice_->players() == b.lattice_->players() &&
               a.shares_ == b.shares_;
    }

private:
    LatticePtr lattice_;
    std::vector<Rational> shares_;
};

enum class Solver { shapley, su, cu, egalitarian, myerson };

inline std::string to_string(Solver s)
{
    switch (s) {
    case Solver::shapley:
        return "shapley";
    case Solver::su:
        return "su";
    case Solver::cu:
        return "cu";
    case Solver::egalitarian:
        return "egalitarian";
    case Solver::myerson:
        return "myerson";
    }
    return "?";
}

inline Solver parse_solver(std::string_view s)
{
    for (Solver v : {Solver::shapley, Solver::su, Solver::cu, Solver::egalitarian, Solver::myerson}) {
        if (s == to_string(v)) {
            return v;
        }
    }
    throw input_error("unknown solver '" + std::string(s) + "'");
}

// -- Shapley value on the subset lattice --------------------------------------

/// Expected marginal contribution over uniformly random maximal chains:
/// phi_i = sum_{A not containing i} [v(A+i) - v(A)] |A|!(n-|A|-1)!/n!.
inline Solution shapley_chain(const LatticeGame& v)
{
    detail::require_kind(v.lattice(), LatticeKind::subset, "shapley_chain");
    const auto& lat = v.lattice();
    Solution sol(v.lattice_ptr());
    for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
        const Index a = lat.atoms()[k];
        Rational acc = 0;
        for (Index x = 0; x < lat.cardinality(); ++x) {
            if (!lat.leq(a, x)) {
                acc += lat.chain_pair_ratio(x, a) * (v[lat.join(x, a)] - v[x]);
            }
        }
        sol[k] = std::move(acc);
    }
    return sol;
}

/// Harsanyi dividends split equally among coalition members:
/// phi_i = sum_{A containing i} mu(A)/|A|.
inline Solution shapley_dividends(const LatticeGame& v)
{
    detail::require_kind(v.lattice(), LatticeKind::subset, "shapley_dividends");
    const auto& lat = v.lattice();
    const auto mu = mobius(v);
    Solution sol(v.lattice_ptr());
    for (Index x = 1; x < lat.cardinality(); ++x) {
        if (mu[x] == 0) {
            continue;
        }
        const Rational part = mu[x] / lat.size(x);
        for (Mask m = lat.subset(x); m != 0; m &= m - 1) {
            sol[static_cast<std::size_t>(std::countr_zero(m))] += part;
        }
    }
    return sol;
}

// -- size-uniform and chain-uniform solutions ------------------------------------

/// Size-uniform: each dividend mu(x) split equally among the s(x) atoms below x.
inline Solution su(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    const auto mu = mobius(f);
    Solution sol(f.lattice_ptr());
    for (Index x = 1; x < lat.cardinality(); ++x) {
        if (mu[x] == 0) {
            continue;
        }
        const Rational part = mu[x] / lat.size(x);
        for (Index y : lat.down_set(x)) {
            if (lat.rank(y) == 1) {
                sol[static_cast<std::size_t>(lat.atom_position(y))] += part;
            }
        }
    }
    return sol;
}

/// Chain-uniform: expected size-normalized marginal contribution of each atom
/// along uniformly random maximal chains, via the closed-form chain ratios.
inline Solution cu(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    Solution sol(f.lattice_ptr());
    for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
        const Index a = lat.atoms()[k];
        Rational acc = 0;
        for (Index x = 0; x < lat.cardinality(); ++x) {
            if (lat.leq(a, x)) {
                continue;
            }
            const Index y = lat.join(x, a);
            const Rational delta = f[y] - f[x];
            if (delta != 0) {
                acc += lat.chain_pair_ratio(x, a) * delta / (lat.size(y) - lat.size(x));
            }
        }
        sol[k] = std::move(acc);
    }
    return sol;
}

/// Chain-uniform solution by walking every maximal chain (small n only).
/// Each covering step x -> y credits every atom a with a not below x and
/// x v a = y the amount [f(y)-f(x)]/[s(y)-s(x)]; totals are divided by the
/// number of chains.
inline Solution cu_chain_oracle(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    const auto chains = lat.enumerate_maximal_chains();
    std::vector<Rational> credit(lat.atoms().size());
    for (const auto& chain : chains) {
        for (std::size_t s = 1; s < chain.size(); ++s) {
            const Index x = chain[s - 1];
            const Index y = chain[s];
            const Rational step = (f[y] - f[x]) / (lat.size(y) - lat.size(x));
            for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
                const Index a = lat.atoms()[k];
                if (!lat.leq(a, x) && lat.leq(a, y)) {
                    credit[k] += step;
                }
            }
        }
    }
    const Rational count(BigInt(chains.size()));
    for (auto& c : credit) {
        c /= count;
    }
    return Solution(f.lattice_ptr(), std::move(credit));
}

/// Every atom gets [f(top) - f(bottom)] / |atoms|.
inline Solution egalitarian(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    const Rational each = (f.at_top() - f.at_bottom()) / static_cast<long>(lat.atoms().size());
    return Solution(f.lattice_ptr(), std::vector<Rational>(lat.atoms().size(), each));
}

/// Closed form for class-symmetric games: f(top)/|atoms| per atom. On E^n the
/// game must also be symmetric on the image lattice.
inline Solution symmetric_solution(const SymmetricGame& g, LatticePtr lattice = nullptr)
{
    if (!lattice) {
        lattice = Lattice::make(g.kind, g.n);
    } else if (lattice->kind() != g.kind || lattice->players() != g.n) {
        throw std::domain_error("lattice does not match the symmetric game");
    }
    auto worth = [&](Index x) {
        auto it = g.class_values.find(lattice->class_of(x));
        if (it == g.class_values.end()) {
            throw input_error("symmetric game has no worth for class " +
                              class_key(g.kind, lattice->class_of(x)));
        }
        return it->second;
    };
    if (lattice->kind() == LatticeKind::embedded) {
        // Atoms of E^n fall into two orbits under relabeling of the n players,
        // so the uniform split needs symmetry of the image in P^(n+1) as well.
        std::map<ClassVector, Rational> image;
        for (Index x = 0; x < lattice->cardinality(); ++x) {
            auto [it, fresh] = image.emplace(lattice->partition(x).class_vector(), worth(x));
            if (!fresh && it->second != worth(x)) {
                throw std::domain_error("embedded game is not symmetric on its image partition lattice");
            }
        }
    }
    const Rational each = (worth(lattice->top()) - worth(lattice->bottom())) /
                          static_cast<long>(lattice->atoms().size());
    return Solution(lattice, std::vector<Rational>(lattice->atoms().size(), each));
}

inline Solution symmetric_solution(const LatticeGame& f)
{
    auto g = is_symmetric(f);
    if (!g) {
        throw std::domain_error("game is not class-symmetric");
    }
    return symmetric_solution(*g, f.lattice_ptr());
}

/// phi(f)(x) = sum of the shares of atoms below x.
inline LatticeGame expand(const Solution& sol)
{
    const auto& lat = sol.lattice();
    LatticeGame g(sol.lattice_ptr());
    for (Index x = 0; x < lat.cardinality(); ++x) {
        Rational acc = 0;
        for (Index y : lat.down_set(x)) {
            if (lat.rank(y) == 1) {
                acc += sol[static_cast<std::size_t>(lat.atom_position(y))];
            }
        }
        g[x] = std::move(acc);
    }
    return g;
}

// -- graph-restricted games ------------------------------------------------------

/// Undirected edges over players 1..n.
using Graph = std::vector<std::pair<int, int>>;

namespace detail {

inline std::vector<Mask> adjacency(const Graph& graph, int n)
{
    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : graph) {
        if (i < 1 || j < 1 || i > n || j > n || i == j) {
            throw input_error("edge " + std::to_string(i) + "-" + std::to_string(j) + " is not a pair in 1.." +
                              std::to_string(n));
        }
        adj[static_cast<std::size_t>(i - 1)] |= Mask{1} << (j - 1);
        adj[static_cast<std::size_t>(j - 1)] |= Mask{1} << (i - 1);
    }
    return adj;
}

inline bool induces_connected(Mask m, const std::vector<Mask>& adj)
{
    if (m == 0) {
        return true;
    }
    Mask seen = m & (~m + 1);
    Mask frontier = seen;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) {
            next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        }
        next &= m & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == m;
}

}  // namespace detail

/// v/G: equal to v on coalitions inducing a connected subgraph, with Moebius
/// inversion zero on all other coalitions. Dividends are fixed bottom-up.
inline LatticeGame graph_restrict(const LatticeGame& v, const Graph& graph)
{
    detail::require_kind(v.lattice(), LatticeKind::subset, "graph_restrict");
    const auto& lat = v.lattice();
    const auto adj = detail::adjacency(graph, lat.players());
    MobiusCoefficients mu(v.lattice_ptr());
    for (Index x = 0; x < lat.cardinality(); ++x) {
        if (!detail::induces_connected(lat.subset(x), adj)) {
            continue;
        }
        Rational acc = v[x];
        for (Index y : lat.down_set(x)) {
            if (y != x) {
                acc -= mu[y];
            }
        }
        mu[x] = std::move(acc);
    }
    return zeta_expand(mu);
}

/// Shapley value (dividend form) of the graph-restricted game.
inline Solution myerson(const LatticeGame& v, const Graph& graph)
{
    return shapley_dividends(graph_restrict(v, graph));
}

/// Dispatches to a solver; `graph` is only read by the Myerson value.
inline Solution solve(Solver solver, const LatticeGame& f, const Graph* graph = nullptr)
{
    switch (solver) {
    case Solver::shapley:
        return shapley_dividends(f);
    case Solver::su:
        return su(f);
    case Solver::cu:
        return cu(f);
    case Solver::egalitarian:
        return egalitarian(f);
    case Solver::myerson:
        if (graph == nullptr) {
            throw input_error("the Myerson value needs a graph");
        }
        return myerson(f, *graph);
    }
    throw std::logic_error("unreachable");
}

/// True iff expanding the solution reproduces the bottom-normalized game.
inline bool is_fixed_point(Solver solver, const LatticeGame& f)
{
    const auto g = normalize_bottom(f);
    return expand(solve(solver, g)) == g;
}

// -- embedded subsets <-> partitions of n+1 -------------------------------------

/// Relabels a solution on E^N as one on P^{n+1}, or back.
inline Solution transport_solution(const Solution& sol, LatticePtr target = nullptr)
{
    const auto& src = sol.lattice();
    LatticeKind to_kind;
    int to_n;
    if (src.kind() == LatticeKind::embedded) {
        to_kind = LatticeKind::partition;
        to_n = src.players() + 1;
    } else if (src.kind() == LatticeKind::partition) {
        to_kind = LatticeKind::embedded;
        to_n = src.players() - 1;
        if (to_n < 1) {
            throw std::domain_error("no embedded-subset lattice on zero players");
        }
    } else {
        throw std::domain_error("transport needs an embedded or partition lattice");
    }
    if (!target) {
        LatticeLimits limits = src.limits();
        limits.max_n = std::max(limits.max_n, to_n);
        target = Lattice::make(to_kind, to_n, limits);
    } else if (target->kind() != to_kind || target->players() != to_n) {
        throw std::domain_error("transport target lattice does not match");
    }
    Solution out(target);
    for (std::size_t k = 0; k < src.atoms().size(); ++k) {
        // Both lattices index embedded subsets through their images, so the
        // image partition identifies the atom on either side.
        const Index t = target->index_of(src.partition(src.atoms()[k]));
        out[static_cast<std::size_t>(target->atom_position(t))] = sol[k];
    }
    return out;
}

// -- splitting edge shares between endnodes -----------------------------------------

/// Per-edge split: `first` goes to the smaller endpoint, `second` to the larger.
using EdgeWeights = std::map<std::pair<int, int>, std::pair<Rational, Rational>>;

/// Share per node, index 0 for node 1.
using NodeShares = std::vector<Rational>;

/// Node i receives sum over edges {i,j} of its weight times the edge share;
/// edges without an explicit weight are split equally.
inline NodeShares split_to_nodes(const Solution& sol, const EdgeWeights& weights = {})
{
    const auto& lat = sol.lattice();
    detail::require_kind(lat, LatticeKind::partition, "split_to_nodes");
    for (const auto& [edge, w] : weights) {
        if (edge.first < 1 || edge.second > lat.players() || edge.first >= edge.second) {
            throw input_error("weight given for unknown edge " + std::to_string(edge.first) + "," +
                              std::to_string(edge.second));
        }
        if (w.first + w.second != 1) {
            throw input_error("weights of edge " + std::to_string(edge.first) + "," +
                              std::to_string(edge.second) + " sum to " + to_string(w.first + w.second) +
                              ", not 1");
        }
    }
    const Rational half(1, 2);
    NodeShares nodes(static_cast<std::size_t>(lat.players()));
    for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
        Mask edge = 0;
        for (Mask b : lat.partition(lat.atoms()[k]).blocks()) {
            if (popcount(b) == 2) {
                edge = b;
            }
        }
        const auto pair = members(edge);
        const int i = pair.at(0);
        const int j = pair.at(1);
        Rational wi = half;
        Rational wj = half;
        if (auto it = weights.find({i, j}); it != weights.end()) {
            wi = it->second.first;
            wj = it->second.second;
        }
        nodes[static_cast<std::size_t>(i - 1)] += wi * sol[k];
        nodes[static_cast<std::size_t>(j - 1)] += wj * sol[k];
    }
    return nodes;
}

}  // namespace latgame

#endif  // LATGAME_SOLUTIONS_HPP

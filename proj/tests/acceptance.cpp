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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is 1 on any
// FAIL other than a criterion refuted by a re-checked exact counterexample.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "latgame/latgame.hpp"
#include "oracle.hpp"

using namespace latgame;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
    /// Set when the criterion is refuted by an exact counterexample that this
    /// run re-checks; such a criterion is reported FAIL but not counted as a defect.
    bool unattainable = false;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<Rational> vec(const Solution& s) { return {s.shares().begin(), s.shares().end()}; }

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> v)
{
    std::vector<Rational> out;
    for (auto [a, b] : v) {
        out.emplace_back(a, b);
    }
    return out;
}

LatticePtr P(int n) { return Lattice::make(LatticeKind::partition, n); }
LatticePtr E(int n) { return Lattice::make(LatticeKind::embedded, n); }
LatticePtr C(int n) { return Lattice::make(LatticeKind::subset, n); }

std::vector<Rational> oracle_in_library_order(const oracle::Poset& Q, const Lattice& lat, const std::vector<Rational>& v)
{
    std::vector<Rational> out(v.size());
    for (std::size_t k = 0; k < Q.atoms.size(); ++k) {
        out[static_cast<std::size_t>(lat.atom_position(Q.lib[static_cast<std::size_t>(Q.atoms[k])]))] = v[k];
    }
    return out;
}

Outcome c1()
{
    Outcome o;
    const auto p3 = P(3);
    const auto f = zeta_game(p3, *p3->find("1,2|3"));
    o.require(vec(su(f)) == q({{1, 1}, {0, 1}, {0, 1}}), "su = " + cli::describe(su(f).shares()));
    o.require(vec(cu(f)) == q({{2, 3}, {1, 6}, {1, 6}}), "cu = " + cli::describe(cu(f).shares()));
    return o;
}

Outcome c2()
{
    Outcome o;
    const auto e2 = E(2);
    const auto f = zeta_game(e2, *e2->find("({};1,2)"));
    const auto s = su(f);
    const auto c = cu(f);
    o.require(vec(s) == q({{0, 1}, {0, 1}, {1, 1}}), "su = " + cli::describe(s.shares()));
    o.require(vec(c) == q({{1, 6}, {1, 6}, {2, 3}}), "cu = " + cli::describe(c.shares()));
    const auto p3 = P(3);
    o.require(vec(transport_solution(s, p3)) == q({{1, 1}, {0, 1}, {0, 1}}), "transported su differs");
    o.require(vec(transport_solution(c, p3)) == q({{2, 3}, {1, 6}, {1, 6}}), "transported cu differs");
    return o;
}

Outcome c3()
{
    Outcome o;
    for (const auto& lat : {P(3), E(2)}) {
        const auto f = rank_game(lat);
        const std::vector<Rational> want(3, Rational(2, 3));
        o.require(vec(su(f)) == want, to_string(lat->kind()) + " su");
        o.require(vec(cu(f)) == want, to_string(lat->kind()) + " cu");
        o.require(vec(egalitarian(f)) == want, to_string(lat->kind()) + " egalitarian");
    }
    return o;
}

Outcome c4()
{
    Outcome o;
    const auto p3 = P(3);
    LatticeGame f(p3);
    for (Index a : p3->atoms()) {
        f[a] = 1;
    }
    f[p3->top()] = 2;
    o.require(is_supermodular(f).holds, "not supermodular");
    o.require(mobius(f)[p3->top()] == -1, "mu(top) = " + to_string(mobius(f)[p3->top()]));
    const auto r = core_feasible(f);
    o.require(r.status == CoreStatus::empty, "core reported nonempty");
    o.require(r.status == CoreStatus::empty && verify_certificate(core_system(f), r.certificate),
              "certificate does not verify");
    return o;
}

Outcome c5()
{
    Outcome o;
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 6; ++n) {
        const auto c = C(n);
        for (int t = 0; t < 200; ++t) {
            const auto v = oracle::random_game(c, rng);
            o.require(shapley_chain(v) == shapley_dividends(v), "forms differ at n=" + std::to_string(n));
            if (t < 5 && n <= 5) {
                const auto perm = oracle::shapley_permutations(n, [&](unsigned m) { return v[c->index_of_subset(m)]; });
                o.require(vec(shapley_dividends(v)) == perm, "permutation oracle differs at n=" + std::to_string(n));
            }
        }
        for (Index a = 1; a < c->cardinality(); ++a) {
            const auto phi = shapley_dividends(zeta_game(c, a));
            for (int i = 1; i <= n; ++i) {
                const bool in = (c->subset(a) >> (i - 1)) & 1U;
                const Rational want = in ? Rational(1, c->size(a)) : Rational(0);
                o.require(phi[static_cast<std::size_t>(i - 1)] == want, "unanimity game " + c->key(a));
            }
        }
    }
    return o;
}

Outcome c6()
{
    Outcome o;
    std::vector<LatticePtr> cases;
    for (int n = 1; n <= 5; ++n) {
        cases.push_back(P(n));
    }
    for (int n = 1; n <= 4; ++n) {
        cases.push_back(E(n));
    }
    for (const auto& lat : cases) {
        const std::string tag = to_string(lat->kind()) + " n=" + std::to_string(lat->players());
        const auto Q = oracle::build(*lat);
        const auto chains = oracle::chains(Q);
        o.require(lat->chain_count_total() == BigInt(chains.size()), tag + " total");
        std::vector<long> through(Q.card(), 0);
        std::map<std::pair<int, int>, long> pair;
        for (const auto& ch : chains) {
            for (std::size_t s = 0; s < ch.size(); ++s) {
                ++through[static_cast<std::size_t>(ch[s])];
                if (s + 1 < ch.size()) {
                    ++pair[{ch[s], ch[s + 1]}];
                }
            }
        }
        for (std::size_t x = 0; x < Q.card(); ++x) {
            o.require(lat->chain_count_through(Q.lib[x]) == BigInt(through[x]), tag + " through " + Q.keys[x]);
            for (int a : Q.atoms) {
                const auto au = static_cast<std::size_t>(a);
                if (Q.le[au][x]) {
                    continue;
                }
                for (int y : Q.up[x]) {
                    if (Q.le[au][static_cast<std::size_t>(y)]) {
                        const Rational want(pair[{static_cast<int>(x), y}], static_cast<long>(chains.size()));
                        o.require(lat->chain_pair_ratio(Q.lib[x], Q.lib[au]) == want, tag + " ratio " + Q.keys[x]);
                    }
                }
            }
        }
    }
    for (int n = 1; n <= 8; ++n) {
        o.require(Lattice::chain_count_total(LatticeKind::partition, n) ==
                      factorial(n) * factorial(n - 1) / pow2(n - 1),
                  "P^N literal total at n=" + std::to_string(n));
        o.require(Lattice::chain_count_total(LatticeKind::embedded, n) == factorial(n + 1) * factorial(n) / pow2(n),
                  "E^N literal total at n=" + std::to_string(n));
    }
    return o;
}

Outcome c7()
{
    Outcome o;
    std::mt19937_64 rng(7);
    for (auto [lat, count] : {std::pair{P(4), 50}, std::pair{E(3), 20}}) {
        const auto Q = oracle::build(*lat);
        for (int t = 0; t < count; ++t) {
            const auto f = normalize_bottom(oracle::random_game(lat, rng));
            const auto fast = cu(f);
            o.require(fast == cu_chain_oracle(f), to_string(lat->kind()) + " chain oracle differs");
            if (t < 5) {
                o.require(vec(fast) == oracle_in_library_order(Q, *lat, oracle::cu(Q, oracle::values(Q, f))),
                          to_string(lat->kind()) + " independent walk differs");
            }
        }
    }
    return o;
}

Outcome c8()
{
    Outcome o;
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 5; ++n) {
        std::vector<LatticePtr> lats{P(n), C(n)};
        if (n <= 4) {
            lats.push_back(E(n));
        }
        for (const auto& lat : lats) {
            const std::string tag = to_string(lat->kind()) + " n=" + std::to_string(n);
            const auto f = normalize_bottom(oracle::random_game(lat, rng));
            const auto g = normalize_bottom(oracle::random_game(lat, rng));
            const Rational a(3, 5);
            const Rational b(-7, 4);
            const LatticeGame h = a * f + b * g;
            for (Solver s : {Solver::su, Solver::cu, Solver::egalitarian}) {
                const auto sf = solve(s, f);
                const auto sg = solve(s, g);
                const auto sh = solve(s, h);
                for (std::size_t k = 0; k < sh.shares().size(); ++k) {
                    o.require(sh[k] == a * sf[k] + b * sg[k], tag + " linearity of " + to_string(s));
                }
                o.require(sf.total() == f.at_top(), tag + " efficiency of " + to_string(s));
            }
            const auto mu = mobius(f);
            LatticeGame acc(lat);
            for (Index x = 0; x < lat->cardinality(); ++x) {
                acc += mu[x] * zeta_game(lat, x);
            }
            o.require(acc == f, tag + " zeta decomposition");
            for (Index x = 1; x < lat->cardinality(); ++x) {
                const auto s = su(zeta_game(lat, x));
                for (Index atom : lat->atoms()) {
                    const Rational want = lat->leq(atom, x) ? Rational(1, lat->size(x)) : Rational(0);
                    o.require(s.share_of(atom) == want, tag + " su on zeta " + lat->key(x));
                }
            }
            MobiusCoefficients atoms_only(lat);
            for (Index atom : lat->atoms()) {
                atoms_only[atom] = oracle::random_rational(rng);
            }
            o.require(is_fixed_point(Solver::su, zeta_expand(atoms_only)), tag + " su fixed on atom games");
            o.require(is_fixed_point(Solver::cu, Rational(5, 3) * size_game(lat)), tag + " cu fixed on a*size");
            if (lat->kind() == LatticeKind::partition && n >= 3) {
                for (Index atom : lat->atoms()) {
                    o.require(!is_fixed_point(Solver::cu, zeta_game(lat, atom)), tag + " cu fixed on zeta_a");
                }
            }
        }
    }
    return o;
}

LatticeGame from_mobius_by_size(const LatticePtr& c, const std::function<Rational(int)>& mu_of_size)
{
    MobiusCoefficients mu(c);
    for (Index s = 0; s < c->cardinality(); ++s) {
        mu[s] = mu_of_size(c->size(s));
    }
    return zeta_expand(mu);
}

Outcome c9()
{
    Outcome o;
    for (int n = 2; n <= 5; ++n) {
        const auto p = P(n);
        const auto c = C(n);
        const std::string tag = " n=" + std::to_string(n);
        const auto rank_sep = separability_test(rank_game(p));
        o.require(bool(rank_sep), "rank not separable" + tag);
        if (!rank_sep) {
            continue;
        }
        o.require(rank_sep.family->base == make_game(c, [&](Index s) { return std::max(c->size(s) - 1, 0); }),
                  "rank base" + tag);
        const auto rank_alt = from_mobius_by_size(c, [](int k) { return k > 1 ? Rational(k % 2 ? -1 : 1) : 0; });
        o.require(additive_global(rank_alt, p) == rank_game(p), "rank variant" + tag);
        o.require(separating_variant(*rank_sep.family, std::vector<Rational>(n, Rational(0))) == rank_alt,
                  "rank family member" + tag);

        const auto size_sep = separability_test(size_game(p));
        o.require(bool(size_sep), "size not separable" + tag);
        if (!size_sep) {
            continue;
        }
        o.require(size_sep.family->base == make_game(c, [&](Index s) { return binomial(c->size(s), 2); }),
                  "size base" + tag);
        const auto size_alt =
            from_mobius_by_size(c, [](int k) { return k == 2 ? Rational(0) : Rational(k % 2 ? 1 : -1); });
        o.require(additive_global(size_alt, p) == size_game(p), "size variant" + tag);
        o.require(separating_variant(*size_sep.family, std::vector<Rational>(n, Rational(0)), Rational(-1)) ==
                      size_alt,
                  "size family member" + tag);
        if (n >= 4) {
            const Index two_blocks = *p->find(n == 4 ? "1,2|3,4" : "1,2|3,4|5");
            const auto bad = separability_test(zeta_game(p, two_blocks));
            o.require(!bad && bad.violated == two_blocks, "zeta_{12|34} not reported non-separable" + tag);
        }
    }
    if (!o.pass) {
        return o;
    }
    // zeta_top is the block sum of the unanimity set function on N, so the
    // claim that it is non-separable cannot hold; confirm the refutation.
    bool refuted = true;
    for (int n = 3; n <= 5; ++n) {
        const auto p = P(n);
        const auto c = C(n);
        const auto top = zeta_game(p, p->top());
        refuted = refuted && additive_global(zeta_game(c, c->top()), p) == top && bool(separability_test(top));
    }
    o.require(!refuted, "zeta_top non-separability is unattainable: zeta_top = block sum of unanimity on N "
                        "(verified n=3..5); rank/size parts and zeta_{12|34} rejection pass");
    o.unattainable = refuted;
    return o;
}

Outcome c10()
{
    Outcome o;
    std::mt19937_64 rng(10);
    const auto path = (std::filesystem::temp_directory_path() / "latgame_acceptance_trace.json").string();
    for (int n = 3; n <= 5; ++n) {
        const std::string cluster = n == 3 ? "1,2|3" : n == 4 ? "1,2|3,4" : "1,2,3|4,5";
        const auto lat = P(n);
        const Index cluster_index = *lat->find(cluster);
        std::map<std::string, Rational> volumes;
        io::json vols = io::json::object();
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const Rational w(static_cast<long>(rng() % 30), static_cast<long>(1 + rng() % 5));
                const std::string key = std::to_string(i) + "," + std::to_string(j);
                volumes[key] = w;
                vols[key] = to_string(w);
            }
        }
        const io::json trace{{"n", n},
                                  {"periods", {{{"volumes", vols}}, {{"volumes", vols}, {"cluster", cluster}}}}};
        std::ofstream(path) << trace.dump();
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::guarded([&] { return cli::cmd_netshare(path, cli::Options{}, out); }, err);
        o.require(code == cli::ok, "netshare exit " + std::to_string(code) + ": " + err.str());
        if (code != cli::ok) {
            break;
        }
        const auto report = io::json::parse(out.str());
        const auto& plain = report["periods"][0];
        const auto& clustered = report["periods"][1];
        for (const auto& [key, w] : volumes) {
            o.require(plain["edgeShares"][key] == to_string(w), "edge " + key + " share differs from volume");
            const auto e = cli::parse_edge(key, n);
            const bool inside = lat->leq(lat->index_of(Partition::atom(n, e.first, e.second)), cluster_index);
            o.require(clustered["edgeShares"][key] == (inside ? to_string(w) : std::string("0")),
                      "clustered edge " + key);
        }
        o.require(plain["fixedPoint"].get<bool>() && plain["sharesEqualVolumes"].get<bool>(), "fixed-point flags");
    }
    std::filesystem::remove(path);
    return o;
}

Outcome c11()
{
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& lambda : integer_partitions(n)) {
            total += class_count(lambda);
        }
        o.require(total == oracle::bell(n).back(), "class counts at n=" + std::to_string(n));
    }
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n) {
        std::vector<LatticePtr> lats{P(n), C(n)};
        if (n <= 4) {
            lats.push_back(E(n));
        }
        for (const auto& lat : lats) {
            const auto f = oracle::random_symmetric_game(lat, rng);
            const auto fast = symmetric_solution(f);
            o.require(fast == su(f) && fast == cu(f), "fast path on " + to_string(lat->kind()) + " n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome c12()
{
    Outcome o;
    o.detail = "informational: no claims are made beyond the exact small-n range";
    return o;
}

}  // namespace

int main()
{
    struct Criterion
    {
        int id;
        std::string name;
        std::function<Outcome()> run;
        double budget_s;  // 0 means no time limit
    };
    const std::vector<Criterion> criteria{
        {1, "P^3 unanimity on 1,2|3: su and cu", c1, 1.0},
        {2, "E^2 unanimity on ({};1,2): su, cu and transport", c2, 0.0},
        {3, "rank game: su = cu = egalitarian = 2/3", c3, 0.0},
        {4, "supermodular game with empty core and certificate", c4, 1.0},
        {5, "Shapley forms agree; unanimity games", c5, 0.0},
        {6, "chain formulas match enumeration; literal totals", c6, 0.0},
        {7, "cu closed form matches chain oracle", c7, 60.0},
        {8, "axiom suite", c8, 0.0},
        {9, "separability of rank and size; zeta_top rejected", c9, 0.0},
        {10, "network shares equal volumes; clustering", c10, 0.0},
        {11, "class counts sum to Bell; symmetric fast path", c11, 0.0},
        {12, "scope note", c12, 0.0},
    };
    int failed = 0;
    int passed = 0;
    int unattainable = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.require(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
        }
        failed += o.pass || o.unattainable ? 0 : 1;
        unattainable += o.unattainable ? 1 : 0;
        passed += o.pass ? 1 : 0;
        std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed, %d unattainable as stated, %d failed\n", passed, criteria.size(),
                unattainable, failed);
    return failed == 0 ? 0 : 1;
}

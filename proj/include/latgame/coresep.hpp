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

#ifndef LATGAME_CORESEP_HPP
#define LATGAME_CORESEP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latgame/games.hpp"
#include "latgame/simplex.hpp"
#include "latgame/solutions.hpp"
#include "latgame/transform.hpp"

namespace latgame {

// -- core ---------------------------------------------------------------------

/// One row per lattice element x: sum_{a <= x} phi_a >= f(x); the top row
/// is an equality.
struct CoreConstraint
{
    Index element = 0;
    /// Positions (in atoms() order) of the atoms below the element.
    std::vector<std::size_t> atoms;
    Rational rhs;
    bool equality = false;
};

struct CoreSystem
{
    LatticePtr lattice;
    std::vector<CoreConstraint> constraints;

    std::size_t variables() const { return lattice->atoms().size(); }
};

inline CoreSystem core_system(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    CoreSystem sys{f.lattice_ptr(), {}};
    sys.constraints.reserve(lat.cardinality());
    for (Index x = 0; x < lat.cardinality(); ++x) {
        CoreConstraint row{x, {}, f[x], x == lat.top()};
        for (Index y : lat.down_set(x)) {
            if (lat.rank(y) == 1) {
                row.atoms.push_back(static_cast<std::size_t>(lat.atom_position(y)));
            }
        }
        sys.constraints.push_back(std::move(row));
    }
    return sys;
}

struct CoreMembership
{
    bool contains = true;
    /// First violated element, if any.
    std::optional<Index> violated;

    explicit operator bool() const noexcept { return contains; }
};

inline CoreMembership core_contains(const LatticeGame& f, const Solution& sol)
{
    const auto& lat = f.lattice();
    if (sol.lattice().kind() != lat.kind() || sol.lattice().players() != lat.players()) {
        throw input_error("solution and game live on different lattices");
    }
    for (const auto& row : core_system(f).constraints) {
        Rational lhs = 0;
        for (std::size_t k : row.atoms) {
            lhs += sol[k];
        }
        const bool ok = row.equality ? lhs == row.rhs : lhs >= row.rhs;
        if (!ok) {
            return {false, row.element};
        }
    }
    return {};
}

enum class CoreStatus { nonempty, empty };

struct CoreResult
{
    CoreStatus status = CoreStatus::empty;
    /// Core element (nonempty only).
    std::optional<Solution> witness;
    /// One multiplier per lattice element (empty only): nonnegative on every
    /// inequality row, any sign on the top equality. The weighted sum of the
    /// rows has zero coefficients and a positive right-hand side, i.e. 0 >= gap.
    std::vector<Rational> certificate;
    Rational gap;
};

/// Checks an emptiness certificate against the constraint system.
inline bool verify_certificate(const CoreSystem& sys, const std::vector<Rational>& multipliers)
{
    if (multipliers.size() != sys.constraints.size()) {
        return false;
    }
    std::vector<Rational> combo(sys.variables());
    Rational rhs = 0;
    for (std::size_t r = 0; r < sys.constraints.size(); ++r) {
        const auto& row = sys.constraints[r];
        const auto& m = multipliers[r];
        if (!row.equality && m < 0) {
            return false;
        }
        for (std::size_t k : row.atoms) {
            combo[k] += m;
        }
        rhs += m * row.rhs;
    }
    for (const auto& c : combo) {
        if (c != 0) {
            return false;
        }
    }
    return rhs > 0;
}

/// Exact core non-emptiness.
///
/// Solves  max sum_x y_x f(x)  s.t.  sum_{x >= a} y_x = 1 for every atom a,
/// y >= 0, whose optimum D is the least total share meeting every inequality
/// row. The core is nonempty iff D <= f(top): the optimal row prices then
/// give a witness after topping up one atom, and otherwise y combined with
/// the reversed top equality is the emptiness certificate.
inline CoreResult core_feasible(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    const auto sys = core_system(f);
    const std::size_t atoms = lat.atoms().size();
    CoreResult res;

    if (f.at_bottom() > 0) {
        // 0 >= f(bottom) fails on its own.
        res.status = CoreStatus::empty;
        res.certificate.assign(lat.cardinality(), Rational(0));
        res.certificate[lat.bottom()] = 1;
        res.gap = f.at_bottom();
        return res;
    }

    LinearProgram lp;
    lp.a.assign(atoms, std::vector<Rational>(lat.cardinality() - 1));
    lp.b.assign(atoms, Rational(1));
    lp.c.resize(lat.cardinality() - 1);
    for (Index x = 1; x < lat.cardinality(); ++x) {
        lp.c[x - 1] = f[x];
        for (std::size_t k : sys.constraints[x].atoms) {
            lp.a[k][x - 1] = 1;
        }
    }
    const auto lp_res = solve_lp(lp);
    if (lp_res.status != LpStatus::optimal) {
        // The top column alone is feasible and the primal is feasible, so
        // this cannot happen for a well-formed system.
        throw std::logic_error("core LP did not reach an optimum");
    }

    if (lp_res.objective <= f.at_top()) {
        res.status = CoreStatus::nonempty;
        Solution w(f.lattice_ptr(), lp_res.duals);
        if (atoms > 0) {
            w[0] += f.at_top() - lp_res.objective;
        }
        res.witness = std::move(w);
        return res;
    }

    res.status = CoreStatus::empty;
    res.certificate.assign(lat.cardinality(), Rational(0));
    for (Index x = 1; x < lat.cardinality(); ++x) {
        res.certificate[x] = lp_res.y[x - 1];
    }
    res.certificate[lat.top()] -= 1;
    res.gap = lp_res.objective - f.at_top();
    return res;
}

// -- additive separability --------------------------------------------------------

/// Set functions v (on the subset lattice) that additively separate a game:
/// f(P) = sum_{A in P} v(A) on partitions, h(A,P) = v(A) + sum_{B in P} v(B)
/// on embedded subsets.
struct SeparatingFamily
{
    /// The game being separated.
    LatticeGame game;
    /// A member of the family; v(empty) = 0 for partition games.
    LatticeGame base;
    /// Partition games leave singleton worths free up to their sum f(bottom);
    /// embedded-subset games pin v down completely.
    bool free_singletons = true;
};

/// First element where v fails to separate f, if any.
inline std::optional<Index> separation_violation(const LatticeGame& f, const LatticeGame& v)
{
    const auto& lat = f.lattice();
    const auto& sub = v.lattice();
    for (Index x = 0; x < lat.cardinality(); ++x) {
        Rational acc = 0;
        if (lat.kind() == LatticeKind::partition) {
            for (Mask b : lat.partition(x).blocks()) {
                acc += v[sub.index_of_subset(b)];
            }
        } else {
            const auto e = lat.embedded(x);
            acc += v[sub.index_of_subset(e.subset())];
            for (Mask b : e.partition().blocks()) {
                acc += v[sub.index_of_subset(b)];
            }
        }
        if (acc != f[x]) {
            return x;
        }
    }
    return std::nullopt;
}

struct SeparabilityResult
{
    std::optional<SeparatingFamily> family;
    /// First element where the recursively determined v fails.
    std::optional<Index> violated;

    explicit operator bool() const noexcept { return family.has_value(); }
};

/// Determines v from partitions with at most one non-singleton block
/// (singletons spread uniformly), then checks every remaining element.
inline SeparabilityResult separability_test(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    const int n = lat.players();
    if (lat.kind() == LatticeKind::subset) {
        throw std::domain_error("separability applies to partition or embedded-subset games");
    }
    LatticeLimits limits = lat.limits();
    limits.max_n = std::max(limits.max_n, n);
    const auto sub = Lattice::make(LatticeKind::subset, n, limits);
    LatticeGame v(sub);

    // Partition with block A and singletons elsewhere.
    auto lone_block = [&](Mask a) {
        std::vector<Mask> blocks;
        if (a != 0) {
            blocks.push_back(a);
        }
        for (int i = 0; i < n; ++i) {
            if (!(a & (Mask{1} << i))) {
                blocks.push_back(Mask{1} << i);
            }
        }
        return Partition::from_blocks(n, std::move(blocks));
    };
    auto singleton = [&](int i) { return sub->index_of_subset(Mask{1} << i); };

    if (lat.kind() == LatticeKind::partition) {
        const Rational each = f.at_bottom() / n;
        for (int i = 0; i < n; ++i) {
            v[singleton(i)] = each;
        }
        for (Index s = 0; s < sub->cardinality(); ++s) {
            const Mask a = sub->subset(s);
            if (popcount(a) < 2) {
                continue;
            }
            Rational val = f[lat.index_of(lone_block(a))];
            for (int i = 0; i < n; ++i) {
                if (!(a & (Mask{1} << i))) {
                    val -= v[singleton(i)];
                }
            }
            v[s] = std::move(val);
        }
    } else {
        const Partition bottom = Partition::bottom(n);
        const Rational h0 = f[lat.index_of(EmbeddedSubset(0, bottom))];
        std::vector<Rational> diff(static_cast<std::size_t>(n));
        Rational total = 0;
        for (int i = 0; i < n; ++i) {
            diff[static_cast<std::size_t>(i)] = f[lat.index_of(EmbeddedSubset(Mask{1} << i, bottom))] - h0;
            total += diff[static_cast<std::size_t>(i)];
        }
        const Rational empty = (h0 - total) / (n + 1);
        v[sub->bottom()] = empty;
        for (int i = 0; i < n; ++i) {
            v[singleton(i)] = diff[static_cast<std::size_t>(i)] + empty;
        }
        for (Index s = 0; s < sub->cardinality(); ++s) {
            const Mask a = sub->subset(s);
            if (popcount(a) < 2) {
                continue;
            }
            Rational val = f[lat.index_of(EmbeddedSubset(0, lone_block(a)))] - empty;
            for (int i = 0; i < n; ++i) {
                if (!(a & (Mask{1} << i))) {
                    val -= v[singleton(i)];
                }
            }
            v[s] = std::move(val);
        }
    }

    SeparabilityResult res;
    if (auto bad = separation_violation(f, v)) {
        res.violated = bad;
        return res;
    }
    res.family = SeparatingFamily{f, std::move(v), lat.kind() == LatticeKind::partition};
    return res;
}

/// The family member with the given singleton worths (player order) and
/// empty-set worth. Moving singleton i by t_i (with sum t_i = 0) moves every
/// coalition A by the sum of t_i over A, which leaves all block sums intact.
inline LatticeGame separating_variant(const SeparatingFamily& fam, const std::vector<Rational>& singletons,
                                      const Rational& empty_worth = 0)
{
    const auto& sub = fam.base.lattice();
    const int n = sub.players();
    if (static_cast<int>(singletons.size()) != n) {
        throw input_error("expected " + std::to_string(n) + " singleton worths");
    }
    Rational sum = 0;
    for (const auto& s : singletons) {
        sum += s;
    }
    Rational base_sum = 0;
    for (int i = 0; i < n; ++i) {
        base_sum += fam.base[sub.index_of_subset(Mask{1} << i)];
    }
    if (sum != base_sum) {
        throw input_error("singleton worths sum to " + to_string(sum) + ", expected " + to_string(base_sum));
    }
    LatticeGame v = fam.base;
    v[sub.bottom()] = empty_worth;
    for (Index s = 1; s < sub.cardinality(); ++s) {
        const Mask a = sub.subset(s);
        for (int i = 0; i < n; ++i) {
            if (a & (Mask{1} << i)) {
                v[s] += singletons[static_cast<std::size_t>(i)] - fam.base[sub.index_of_subset(Mask{1} << i)];
            }
        }
    }
    if (!fam.free_singletons && v != fam.base) {
        throw input_error("an embedded-subset game has a unique separating set function");
    }
    if (separation_violation(fam.game, v)) {
        throw std::logic_error("separating variant failed re-verification");
    }
    return v;
}

}  // namespace latgame

#endif  // LATGAME_CORESEP_HPP

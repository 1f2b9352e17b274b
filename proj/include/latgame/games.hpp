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

#ifndef LATGAME_GAMES_HPP
#define LATGAME_GAMES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latgame/lattice.hpp"
#include "latgame/transform.hpp"

namespace latgame {

namespace detail {

inline void require_kind(const Lattice& lat, LatticeKind kind, const char* op)
{
    if (lat.kind() != kind) {
        throw std::domain_error(std::string(op) + " needs a " + to_string(kind) + " lattice, got " +
                                to_string(lat.kind()));
    }
}

inline LatticePtr target_lattice(LatticePtr target, LatticeKind kind, const Lattice& source)
{
    if (!target) {
        return Lattice::make(kind, source.players(), source.limits());
    }
    if (target->kind() != kind || target->players() != source.players()) {
        throw std::domain_error("target lattice does not match the set function's ground set");
    }
    return target;
}

}  // namespace detail

/// f(P) = sum_{A in P} v(A) for a set function v on the subset lattice.
inline LatticeGame additive_global(const LatticeGame& v, LatticePtr target = nullptr)
{
    detail::require_kind(v.lattice(), LatticeKind::subset, "additive_global");
    const auto lat = detail::target_lattice(std::move(target), LatticeKind::partition, v.lattice());
    LatticeGame f(lat);
    for (Index x = 0; x < lat->cardinality(); ++x) {
        Rational acc = 0;
        for (Mask b : lat->partition(x).blocks()) {
            acc += v[v.lattice().index_of_subset(b)];
        }
        f[x] = std::move(acc);
    }
    return f;
}

/// h(A,P) = v(A) + sum_{B in P} v(B); v(empty) enters through A = empty.
inline LatticeGame additive_pff(const LatticeGame& v, LatticePtr target = nullptr)
{
    detail::require_kind(v.lattice(), LatticeKind::subset, "additive_pff");
    const auto lat = detail::target_lattice(std::move(target), LatticeKind::embedded, v.lattice());
    LatticeGame h(lat);
    for (Index x = 0; x < lat->cardinality(); ++x) {
        const auto e = lat->embedded(x);
        Rational acc = v[v.lattice().index_of_subset(e.subset())];
        for (Mask b : e.partition().blocks()) {
            acc += v[v.lattice().index_of_subset(b)];
        }
        h[x] = std::move(acc);
    }
    return h;
}

// -- symmetric games --------------------------------------------------------

/// Worth as a function of the class alone.
struct SymmetricGame
{
    LatticeKind kind = LatticeKind::partition;
    int n = 0;
    std::map<ClassVector, Rational> class_values;
};

/// Text form of a class: "3" on subsets (cardinality), "2+1" on partitions
/// (block sizes, descending), "1:2+1" on embedded subsets (|A| then c^P).
inline std::string class_key(LatticeKind kind, const ClassVector& c)
{
    auto parts = [](auto first, auto last) {
        std::string out;
        std::vector<int> sizes;
        int k = 1;
        for (auto it = first; it != last; ++it, ++k) {
            for (int r = 0; r < *it; ++r) {
                sizes.push_back(k);
            }
        }
        for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) {
            if (!out.empty()) {
                out += '+';
            }
            out += std::to_string(*it);
        }
        return out;
    };
    switch (kind) {
    case LatticeKind::subset:
        return std::to_string(c.at(0));
    case LatticeKind::partition:
        return parts(c.begin(), c.end());
    case LatticeKind::embedded:
        return std::to_string(c.at(0)) + ":" + parts(c.begin() + 1, c.end());
    }
    return {};
}

inline ClassVector parse_class_key(LatticeKind kind, int n, std::string_view text)
{
    auto bad = [&] { return input_error("malformed class '" + std::string(text) + "'"); };
    auto number = [&](std::string_view s) {
        if (s.empty() || s.size() > 3) {
            throw bad();
        }
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') {
                throw bad();
            }
            v = v * 10 + (c - '0');
        }
        return v;
    };
    auto parts = [&](std::string_view s) {
        ClassVector c(static_cast<std::size_t>(n), 0);
        int total = 0;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto plus = s.find('+', pos);
            if (plus == std::string_view::npos) {
                plus = s.size();
            }
            const int k = number(s.substr(pos, plus - pos));
            if (k < 1 || k > n) {
                throw bad();
            }
            ++c[static_cast<std::size_t>(k - 1)];
            total += k;
            pos = plus + 1;
        }
        if (total != n) {
            throw input_error("class '" + std::string(text) + "' does not partition " + std::to_string(n));
        }
        return c;
    };
    switch (kind) {
    case LatticeKind::subset: {
        const int k = number(text);
        if (k > n) {
            throw bad();
        }
        return {k};
    }
    case LatticeKind::partition:
        return parts(text);
    case LatticeKind::embedded: {
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) {
            throw bad();
        }
        const int a = number(text.substr(0, colon));
        ClassVector c{a};
        const auto rest = parts(text.substr(colon + 1));
        if (a > 0 && rest[static_cast<std::size_t>(a - 1)] == 0) {
            throw input_error("class '" + std::string(text) + "' has no block of size " + std::to_string(a));
        }
        c.insert(c.end(), rest.begin(), rest.end());
        return c;
    }
    }
    throw bad();
}

/// Assigns class_values[c^x] to every element x.
inline LatticeGame symmetric_expand(const SymmetricGame& g, LatticePtr lattice = nullptr)
{
    if (!lattice) {
        lattice = Lattice::make(g.kind, g.n);
    } else if (lattice->kind() != g.kind || lattice->players() != g.n) {
        throw std::domain_error("lattice does not match the symmetric game");
    }
    LatticeGame f(lattice);
    for (Index x = 0; x < lattice->cardinality(); ++x) {
        const auto c = lattice->class_of(x);
        auto it = g.class_values.find(c);
        if (it == g.class_values.end()) {
            throw input_error("symmetric game has no worth for class " + class_key(g.kind, c) +
                              " (element " + lattice->key(x) + ")");
        }
        f[x] = it->second;
    }
    return f;
}

/// The compressed form iff all same-class elements carry equal worth.
inline std::optional<SymmetricGame> is_symmetric(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    SymmetricGame g{lat.kind(), lat.players(), {}};
    for (Index x = 0; x < lat.cardinality(); ++x) {
        auto [it, inserted] = g.class_values.emplace(lat.class_of(x), f[x]);
        if (!inserted && it->second != f[x]) {
            return std::nullopt;
        }
    }
    return g;
}

/// Keeps the Moebius mass on the down-set of `cluster` and drops the rest,
/// so the restricted game takes f(cluster) at the top.
inline LatticeGame clustering_restrict(const LatticeGame& f, Index cluster)
{
    const auto& lat = f.lattice();
    auto mu = mobius(f);
    for (Index x = 0; x < lat.cardinality(); ++x) {
        if (!lat.leq(x, cluster)) {
            mu[x] = 0;
        }
    }
    return zeta_expand(mu);
}

// -- structural predicates ----------------------------------------------------

/// Outcome of a predicate scan; on failure `witness` holds the offending
/// element (or pair of elements).
struct PredicateResult
{
    bool holds = true;
    std::vector<Index> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// f(x ^ y) + f(x v y) >= f(x) + f(y) over all unordered pairs.
inline PredicateResult is_supermodular(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    for (Index x = 0; x < lat.cardinality(); ++x) {
        for (Index y = x + 1; y < lat.cardinality(); ++y) {
            if (f[lat.meet(x, y)] + f[lat.join(x, y)] < f[x] + f[y]) {
                return {false, {x, y}};
            }
        }
    }
    return {};
}

/// Nonnegative Moebius inversion everywhere.
inline PredicateResult is_totally_positive(const LatticeGame& f)
{
    const auto mu = mobius(f);
    for (Index x = 0; x < f.lattice().cardinality(); ++x) {
        if (mu[x] < 0) {
            return {false, {x}};
        }
    }
    return {};
}

/// x >= y implies f(x) >= f(y); witness is (y, x) with f(y) > f(x).
inline PredicateResult is_monotone(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    for (Index x = 0; x < lat.cardinality(); ++x) {
        for (Index y : lat.down_set(x)) {
            if (f[y] > f[x]) {
                return {false, {y, x}};
            }
        }
    }
    return {};
}

}  // namespace latgame

#endif  // LATGAME_GAMES_HPP

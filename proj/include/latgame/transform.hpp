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

#ifndef LATGAME_TRANSFORM_HPP
#define LATGAME_TRANSFORM_HPP

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "latgame/lattice.hpp"
#include "latgame/rational.hpp"

namespace latgame {

struct game_tag {};
struct mobius_tag {};

/// A dense exact-rational function on every element of one lattice.
///
/// The tag keeps game values and Moebius coefficients apart at the type level.
template <typename Tag>
class LatticeFunction
{
public:
    LatticeFunction() = default;

    explicit LatticeFunction(LatticePtr lattice)
        : lattice_(std::move(lattice)), values_(lattice_->cardinality())
    {
    }

    LatticeFunction(LatticePtr lattice, std::vector<Rational> values)
        : lattice_(std::move(lattice)), values_(std::move(values))
    {
        if (values_.size() != lattice_->cardinality()) {
            throw input_error("lattice function has " + std::to_string(values_.size()) +
                              " values for " + std::to_string(lattice_->cardinality()) + " elements");
        }
    }

    const Lattice& lattice() const noexcept { return *lattice_; }
    const LatticePtr& lattice_ptr() const noexcept { return lattice_; }

    std::span<const Rational> values() const noexcept { return values_; }

    const Rational& operator[](Index x) const { return values_[x]; }
    Rational& operator[](Index x) { return values_[x]; }

    const Rational& at_bottom() const { return values_.front(); }
    const Rational& at_top() const { return values_.back(); }

    LatticeFunction& operator+=(const LatticeFunction& other)
    {
        require_same_lattice(other);
        for (std::size_t i = 0; i < values_.size(); ++i) {
            values_[i] += other.values_[i];
        }
        return *this;
    }

    LatticeFunction& operator-=(const LatticeFunction& other)
    {
        require_same_lattice(other);
        for (std::size_t i = 0; i < values_.size(); ++i) {
            values_[i] -= other.values_[i];
        }
        return *this;
    }

    LatticeFunction& operator*=(const Rational& alpha)
    {
        for (auto& v : values_) {
            v *= alpha;
        }
        return *this;
    }

    friend LatticeFunction operator+(LatticeFunction a, const LatticeFunction& b) { return a += b; }
    friend LatticeFunction operator-(LatticeFunction a, const LatticeFunction& b) { return a -= b; }
    friend LatticeFunction operator*(const Rational& alpha, LatticeFunction f) { return f *= alpha; }

    friend bool operator==(const LatticeFunction& a, const LatticeFunction& b)
    {
        return a.same_lattice(b) && a.values_ == b.values_;
    }

    bool same_lattice(const LatticeFunction& other) const
    {
        return lattice_ == other.lattice_ ||
               (lattice_->kind() == other.lattice_->kind() &&
                lattice_->players() == other.lattice_->players());
    }

private:
    void require_same_lattice(const LatticeFunction& other) const
    {
        if (!same_lattice(other)) {
            throw std::domain_error("lattice functions live on different lattices");
        }
    }

    LatticePtr lattice_;
    std::vector<Rational> values_;
};

/// TU game f, v or h.
using LatticeGame = LatticeFunction<game_tag>;

/// Moebius inversion of a game (Harsanyi dividends on the subset lattice).
using MobiusCoefficients = LatticeFunction<mobius_tag>;

/// mu(x) = f(x) - sum_{y < x} mu(y), bottom up.
inline MobiusCoefficients mobius(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    MobiusCoefficients mu(f.lattice_ptr());
    for (Index x = 0; x < lat.cardinality(); ++x) {
        Rational acc = f[x];
        for (Index y : lat.down_set(x)) {
            if (y != x) {
                acc -= mu[y];
            }
        }
        mu[x] = std::move(acc);
    }
    return mu;
}

/// f(x) = sum_{y <= x} mu(y).
inline LatticeGame zeta_expand(const MobiusCoefficients& mu)
{
    const auto& lat = mu.lattice();
    LatticeGame f(mu.lattice_ptr());
    for (Index x = 0; x < lat.cardinality(); ++x) {
        Rational acc = 0;
        for (Index y : lat.down_set(x)) {
            acc += mu[y];
        }
        f[x] = std::move(acc);
    }
    return f;
}

/// Unanimity game: 1 on the up-set of x, 0 elsewhere.
inline LatticeGame zeta_game(const LatticePtr& lattice, Index x)
{
    LatticeGame f(lattice);
    for (Index y = 0; y < lattice->cardinality(); ++y) {
        if (lattice->leq(x, y)) {
            f[y] = 1;
        }
    }
    return f;
}

/// Game built pointwise from a callback on element indices.
template <typename Fn>
LatticeGame make_game(const LatticePtr& lattice, Fn&& value_of)
{
    LatticeGame f(lattice);
    for (Index x = 0; x < lattice->cardinality(); ++x) {
        f[x] = Rational(value_of(x));
    }
    return f;
}

/// The size s(x) as a game.
inline LatticeGame size_game(const LatticePtr& lattice)
{
    return make_game(lattice, [&](Index x) { return lattice->size(x); });
}

/// The rank r(x) as a game.
inline LatticeGame rank_game(const LatticePtr& lattice)
{
    return make_game(lattice, [&](Index x) { return lattice->rank(x); });
}

/// f - f(bottom), so the bottom worth is zero.
inline LatticeGame normalize_bottom(const LatticeGame& f)
{
    LatticeGame g = f;
    const Rational b = f.at_bottom();
    if (b != 0) {
        for (Index x = 0; x < f.lattice().cardinality(); ++x) {
            g[x] -= b;
        }
    }
    return g;
}

}  // namespace latgame

#endif  // LATGAME_TRANSFORM_HPP

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

#ifndef LATGAME_LATTICE_HPP
#define LATGAME_LATTICE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latgame/embedded.hpp"
#include "latgame/partition.hpp"
#include "latgame/rational.hpp"

namespace latgame {

/// The three lattices games live on: coalitions 2^N, partitions P^N and
/// embedded subsets E^N.
enum class LatticeKind { subset, partition, embedded };

inline std::string to_string(LatticeKind kind)
{
    switch (kind) {
    case LatticeKind::subset:
        return "subset";
    case LatticeKind::partition:
        return "partition";
    case LatticeKind::embedded:
        return "embedded";
    }
    return "?";
}

inline LatticeKind parse_lattice_kind(std::string_view s)
{
    if (s == "subset" || s == "2^N" || s == "boolean" || s == "C") {
        return LatticeKind::subset;
    }
    if (s == "partition" || s == "P^N" || s == "G") {
        return LatticeKind::partition;
    }
    if (s == "embedded" || s == "E^N" || s == "PFF") {
        return LatticeKind::embedded;
    }
    throw input_error("unknown lattice '" + std::string(s) + "'");
}

using Index = std::uint32_t;

struct LatticeLimits
{
    /// Cap on n for materializing a lattice.
    int max_n = default_max_n;
    /// Cap on n for enumerating maximal chains.
    int max_chain_n = 5;
};

namespace detail {

inline std::uint64_t code_of_blocks(std::vector<Mask>& blocks)
{
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        for (Mask b = blocks[k]; b != 0; b &= b - 1) {
            c |= static_cast<std::uint64_t>(k) << (4 * std::countr_zero(b));
        }
    }
    return c;
}

/// Set partitions of the players in `m`, each as a list of block masks.
inline std::vector<std::vector<Mask>> partitions_of_mask(Mask m)
{
    if (m == 0) {
        return {{}};
    }
    const Mask low = m & (~m + 1);
    const Mask rest = m & ~low;
    std::vector<std::vector<Mask>> out;
    // Choose the companions of the lowest player, then partition the remainder.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
        for (auto& tail : partitions_of_mask(rest & ~sub)) {
            tail.push_back(low | sub);
            out.push_back(std::move(tail));
        }
        if (sub == 0) {
            break;
        }
    }
    return out;
}

}  // namespace detail

/// One finite lattice, fully materialized and immutable after construction.
///
/// Elements are addressed by dense indices ordered by rank, so index 0 is the
/// bottom, the last index is the top, and every element appears after all
/// elements below it. Embedded subsets are stored through their image among
/// partitions of n+1 players.
class Lattice
{
public:
    static std::shared_ptr<const Lattice> make(LatticeKind kind, int n, const LatticeLimits& limits = {})
    {
        const int hard = kind == LatticeKind::embedded ? max_ground_size - 1 : max_ground_size;
        detail::check_cap(n, std::min(limits.max_n, hard), ("lattice " + to_string(kind)).c_str());
        return std::shared_ptr<const Lattice>(new Lattice(kind, n, limits));
    }

    LatticeKind kind() const noexcept { return kind_; }

    /// Number of players n.
    int players() const noexcept { return n_; }

    const LatticeLimits& limits() const noexcept { return limits_; }

    std::size_t cardinality() const noexcept { return rank_.size(); }

    Index bottom() const noexcept { return 0; }
    Index top() const noexcept { return static_cast<Index>(cardinality() - 1); }

    /// Atoms in reporting order: {i} ascending; [ij] by pair; for embedded
    /// subsets (i, P_bottom) by i, then (empty, [ij]) by pair.
    std::span<const Index> atoms() const noexcept { return atoms_; }

    /// Position of an atom within atoms(), or -1.
    int atom_position(Index x) const noexcept { return atom_pos_[x]; }

    int rank(Index x) const { return rank_[x]; }

    /// Number of atoms below x.
    int size(Index x) const { return size_[x]; }

    ClassVector class_of(Index x) const
    {
        switch (kind_) {
        case LatticeKind::subset:
            return {popcount(masks_[x])};
        case LatticeKind::partition:
            return parts_[x].class_vector();
        case LatticeKind::embedded:
            return embedded(x).class_vector();
        }
        return {};
    }

    /// x <= y.
    bool leq(Index x, Index y) const
    {
        if (kind_ == LatticeKind::subset) {
            return (masks_[x] & ~masks_[y]) == 0;
        }
        return coarsens(parts_[y], parts_[x]);
    }

    Index join(Index x, Index y) const
    {
        if (kind_ == LatticeKind::subset) {
            return index_of_mask_[masks_[x] | masks_[y]];
        }
        return index_of(latgame::join(parts_[x], parts_[y]));
    }

    Index meet(Index x, Index y) const
    {
        if (kind_ == LatticeKind::subset) {
            return index_of_mask_[masks_[x] & masks_[y]];
        }
        return index_of(latgame::meet(parts_[x], parts_[y]));
    }

    /// y covers x.
    bool covers(Index y, Index x) const { return rank_[y] == rank_[x] + 1 && leq(x, y); }

    /// Every element below or equal to x, in index order.
    std::span<const Index> down_set(Index x) const
    {
        return std::span<const Index>(down_).subspan(down_offset_[x], down_offset_[x + 1] - down_offset_[x]);
    }

    /// Elements covering x, in index order.
    std::vector<Index> upper_covers(Index x) const
    {
        std::vector<Index> out;
        for (Index a : atoms_) {
            if (!leq(a, x)) {
                out.push_back(join(x, a));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Canonical text key: "{1,2}", "1,2|3" or "({1};1|2)".
    std::string key(Index x) const
    {
        switch (kind_) {
        case LatticeKind::subset:
            return "{" + format_members(masks_[x]) + "}";
        case LatticeKind::partition:
            return parts_[x].to_string();
        case LatticeKind::embedded:
            return embedded(x).to_string();
        }
        return {};
    }

    /// Atom key used in reports: "i", "i,j", or the embedded-subset key.
    std::string atom_key(Index a) const
    {
        switch (kind_) {
        case LatticeKind::subset:
            return format_members(masks_[a]);
        case LatticeKind::partition:
            for (Mask b : parts_[a].blocks()) {
                if (popcount(b) == 2) {
                    return format_members(b);
                }
            }
            break;
        case LatticeKind::embedded:
            return key(a);
        }
        return key(a);
    }

    /// Looks up a key; subsets accept "{1,2}" or "1,2", partitions accept
    /// block notation or restricted-growth strings.
    std::optional<Index> find(std::string_view text) const
    {
        try {
            switch (kind_) {
            case LatticeKind::subset: {
                if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
                    text = text.substr(1, text.size() - 2);
                }
                return index_of_subset(Partition::parse_members(text, n_));
            }
            case LatticeKind::partition:
                return index_of(Partition::parse(text, n_));
            case LatticeKind::embedded:
                return index_of(EmbeddedSubset::parse(text, n_));
            }
        } catch (const input_error&) {
            return std::nullopt;
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        return std::nullopt;
    }

    Index index_of_subset(Mask m) const
    {
        require(LatticeKind::subset);
        if ((m & ~full_mask(n_)) != 0) {
            throw std::domain_error("subset leaves the ground set");
        }
        return index_of_mask_[m];
    }

    /// Index of a partition (partition lattice) or of a partition of n+1
    /// players (embedded lattice, as an image).
    Index index_of(const Partition& p) const
    {
        if (kind_ == LatticeKind::subset) {
            throw std::domain_error("subset lattice has no partition elements");
        }
        auto it = index_of_code_.find(p.code());
        if (p.ground_size() != image_players() || it == index_of_code_.end()) {
            throw std::domain_error("partition " + p.to_string() + " is not an element of this lattice");
        }
        return it->second;
    }

    Index index_of(const EmbeddedSubset& e) const
    {
        require(LatticeKind::embedded);
        if (e.ground_size() != n_) {
            throw std::domain_error("embedded subset over a different ground set");
        }
        return index_of(e.to_plus_partition());
    }

    Mask subset(Index x) const
    {
        require(LatticeKind::subset);
        return masks_[x];
    }

    /// The partition at x; for the embedded lattice, the image over n+1 players.
    const Partition& partition(Index x) const
    {
        if (kind_ == LatticeKind::subset) {
            throw std::domain_error("subset lattice has no partition elements");
        }
        return parts_[x];
    }

    EmbeddedSubset embedded(Index x) const
    {
        require(LatticeKind::embedded);
        return EmbeddedSubset::from_plus_partition(parts_[x]);
    }

    /// Image of x under the player relabeling i+1 -> perm[i]+1 (players of N only).
    Index relabel(Index x, std::span<const int> perm) const
    {
        switch (kind_) {
        case LatticeKind::subset: {
            Mask img = 0;
            for (Mask m = masks_[x]; m != 0; m &= m - 1) {
                img |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
            }
            return index_of_mask_[img];
        }
        case LatticeKind::partition:
            return index_of(parts_[x].relabel(perm));
        case LatticeKind::embedded: {
            std::vector<int> ext(perm.begin(), perm.end());
            ext.push_back(n_);
            return index_of(parts_[x].relabel(ext));
        }
        }
        return x;
    }

    // -- maximal chains ---------------------------------------------------

    /// Number of maximal chains: n!, n!(n-1)!/2^(n-1), or (n+1)!n!/2^n.
    BigInt chain_count_total() const { return chain_count_total(kind_, n_); }

    static BigInt chain_count_total(LatticeKind kind, int n)
    {
        switch (kind) {
        case LatticeKind::subset:
            return factorial(n);
        case LatticeKind::partition:
            return partition_chain_count(n);
        case LatticeKind::embedded:
            return factorial(n + 1) * factorial(n) / pow2(n);
        }
        return 0;
    }

    /// Number of maximal chains through x: chains of [bottom, x] times chains of [x, top].
    BigInt chain_count_through(Index x) const
    {
        if (kind_ == LatticeKind::subset) {
            const int k = popcount(masks_[x]);
            return factorial(k) * factorial(n_ - k);
        }
        // Embedded subsets go through their image among partitions of n+1.
        const auto& q = parts_[x];
        return chains_below(q) * partition_chain_count(q.block_count());
    }

    /// Fraction of maximal chains through both x and x v a, for an atom a not below x.
    /// Since x v a covers x, this is chains(bottom, x) * chains(x v a, top) / total.
    Rational chain_pair_ratio(Index x, Index a) const
    {
        if (atom_pos_[a] < 0) {
            throw std::domain_error(key(a) + " is not an atom");
        }
        if (leq(a, x)) {
            throw std::domain_error("atom " + key(a) + " lies below " + key(x));
        }
        if (kind_ == LatticeKind::subset) {
            const int k = popcount(masks_[x]);
            return Rational(factorial(k) * factorial(n_ - k - 1), factorial(n_));
        }
        const auto& q = parts_[x];
        return Rational(chains_below(q) * partition_chain_count(q.block_count() - 1),
                        partition_chain_count(image_players()));
    }

    /// Every maximal chain, bottom to top, as element indices.
    std::vector<std::vector<Index>> enumerate_maximal_chains() const
    {
        if (n_ > limits_.max_chain_n) {
            throw size_limit_error("maximal chain enumeration: n=" + std::to_string(n_) +
                                       " exceeds the size limit",
                                   limits_.max_chain_n);
        }
        std::vector<std::vector<Index>> covers_of(cardinality());
        for (Index x = 0; x < cardinality(); ++x) {
            covers_of[x] = upper_covers(x);
        }
        std::vector<std::vector<Index>> out;
        std::vector<Index> chain{bottom()};
        auto rec = [&](auto&& self) -> void {
            const Index x = chain.back();
            if (x == top()) {
                out.push_back(chain);
                return;
            }
            for (Index y : covers_of[x]) {
                chain.push_back(y);
                self(self);
                chain.pop_back();
            }
        };
        rec(rec);
        return out;
    }

private:
    Lattice(LatticeKind kind, int n, const LatticeLimits& limits) : kind_(kind), n_(n), limits_(limits)
    {
        if (kind_ == LatticeKind::subset) {
            build_subsets();
        } else {
            build_partitions();
        }
        for (Index x = 0; x < cardinality(); ++x) {
            if (rank_[x] == 1) {
                atoms_.push_back(x);
            }
        }
        atom_pos_.assign(cardinality(), -1);
        for (std::size_t k = 0; k < atoms_.size(); ++k) {
            atom_pos_[atoms_[k]] = static_cast<int>(k);
        }
        build_down_sets();
    }

    int image_players() const noexcept { return kind_ == LatticeKind::embedded ? n_ + 1 : n_; }

    void require(LatticeKind k) const
    {
        if (kind_ != k) {
            throw std::domain_error("operation needs a " + to_string(k) + " lattice, got " + to_string(kind_));
        }
    }

    void build_subsets()
    {
        const Mask full = full_mask(n_);
        for (Mask m = 0;; ++m) {
            masks_.push_back(m);
            if (m == full) {
                break;
            }
        }
        std::stable_sort(masks_.begin(), masks_.end(), [](Mask a, Mask b) {
            if (popcount(a) != popcount(b)) {
                return popcount(a) < popcount(b);
            }
            return members(a) < members(b);
        });
        index_of_mask_.assign(std::size_t{full} + 1, 0);
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            index_of_mask_[masks_[i]] = static_cast<Index>(i);
            rank_.push_back(popcount(masks_[i]));
            size_.push_back(popcount(masks_[i]));
        }
    }

    void build_partitions()
    {
        if (kind_ == LatticeKind::partition) {
            parts_ = enumerate_partitions(n_, n_);
        } else {
            for (const auto& e : enumerate_embedded(n_, n_)) {
                parts_.push_back(e.to_plus_partition());
            }
        }
        index_of_code_.reserve(parts_.size());
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            index_of_code_.emplace(parts_[i].code(), static_cast<Index>(i));
            rank_.push_back(parts_[i].rank());
            size_.push_back(parts_[i].size());
        }
    }

    void build_down_sets()
    {
        down_offset_.push_back(0);
        std::vector<Index> buf;
        for (Index x = 0; x < cardinality(); ++x) {
            buf.clear();
            if (kind_ == LatticeKind::subset) {
                const Mask m = masks_[x];
                for (Mask sub = m;; sub = (sub - 1) & m) {
                    buf.push_back(index_of_mask_[sub]);
                    if (sub == 0) {
                        break;
                    }
                }
            } else {
                // Refinements are products of partitions of each block.
                std::vector<std::vector<Mask>> acc{{}};
                for (Mask b : parts_[x].blocks()) {
                    const auto pieces = detail::partitions_of_mask(b);
                    std::vector<std::vector<Mask>> next;
                    next.reserve(acc.size() * pieces.size());
                    for (const auto& head : acc) {
                        for (const auto& piece : pieces) {
                            auto merged = head;
                            merged.insert(merged.end(), piece.begin(), piece.end());
                            next.push_back(std::move(merged));
                        }
                    }
                    acc = std::move(next);
                }
                for (auto& blocks : acc) {
                    buf.push_back(index_of_code_.at(detail::code_of_blocks(blocks)));
                }
            }
            std::sort(buf.begin(), buf.end());
            down_.insert(down_.end(), buf.begin(), buf.end());
            down_offset_.push_back(down_.size());
        }
    }

    /// Maximal chains of [bottom, q], a product of one partition lattice per
    /// block: the per-factor chains times the ways of interleaving their steps.
    static BigInt chains_below(const Partition& q)
    {
        BigInt prod = 1;
        BigInt orders = 1;
        int steps = 0;
        for (Mask b : q.blocks()) {
            const int k = popcount(b);
            prod *= partition_chain_count(k);
            orders *= factorial(k - 1);
            steps += k - 1;
        }
        return prod * (factorial(steps) / orders);
    }

    LatticeKind kind_;
    int n_;
    LatticeLimits limits_;
    std::vector<Mask> masks_;
    std::vector<Index> index_of_mask_;
    std::vector<Partition> parts_;
    std::unordered_map<std::uint64_t, Index> index_of_code_;
    std::vector<int> rank_;
    std::vector<int> size_;
    std::vector<Index> atoms_;
    std::vector<int> atom_pos_;
    std::vector<std::size_t> down_offset_;
    std::vector<Index> down_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

}  // namespace latgame

#endif  // LATGAME_LATTICE_HPP

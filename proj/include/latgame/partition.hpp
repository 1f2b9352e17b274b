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

#ifndef LATGAME_PARTITION_HPP
#define LATGAME_PARTITION_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latgame/errors.hpp"
#include "latgame/rational.hpp"

namespace latgame {

/// Bit set over the ground set; bit i stands for player i+1.
using Mask = std::uint32_t;

/// Largest ground set any lattice in this library is built over.
inline constexpr int max_ground_size = 16;

inline Mask full_mask(int n)
{
    return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m)
{
    return std::popcount(m);
}

/// Players of a mask, 1-based, ascending.
inline std::vector<int> members(Mask m)
{
    std::vector<int> out;
    for (int i = 0; m != 0; ++i, m >>= 1) {
        if (m & 1u) {
            out.push_back(i + 1);
        }
    }
    return out;
}

/// "1,2,5" (empty string for the empty set).
inline std::string format_members(Mask m)
{
    std::string out;
    for (int p : members(m)) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(p);
    }
    return out;
}

/// Class vector of a partition of n: entry k-1 counts blocks of cardinality k.
using ClassVector = std::vector<int>;

/// A set partition of {1..n}, stored canonically as block masks ordered by
/// their minimum element.
class Partition
{
public:
    Partition() = default;

    static Partition bottom(int n)
    {
        check_n(n);
        Partition p;
        p.n_ = n;
        for (int i = 0; i < n; ++i) {
            p.blocks_.push_back(Mask{1} << i);
        }
        return p;
    }

    static Partition top(int n)
    {
        check_n(n);
        Partition p;
        p.n_ = n;
        if (n > 0) {
            p.blocks_.push_back(full_mask(n));
        }
        return p;
    }

    /// The atom [ij]; i, j are 1-based and distinct.
    static Partition atom(int n, int i, int j)
    {
        check_n(n);
        if (i == j || i < 1 || j < 1 || i > n || j > n) {
            throw std::domain_error("atom [" + std::to_string(i) + std::to_string(j) +
                                    "] is not a pair of distinct players in 1.." + std::to_string(n));
        }
        std::vector<Mask> blocks;
        blocks.push_back((Mask{1} << (i - 1)) | (Mask{1} << (j - 1)));
        for (int k = 1; k <= n; ++k) {
            if (k != i && k != j) {
                blocks.push_back(Mask{1} << (k - 1));
            }
        }
        return from_blocks(n, std::move(blocks));
    }

    /// Validates disjointness, coverage and non-emptiness, then canonicalizes.
    static Partition from_blocks(int n, std::vector<Mask> blocks)
    {
        check_n(n);
        Mask seen = 0;
        for (Mask b : blocks) {
            if (b == 0) {
                throw input_error("partition has an empty block");
            }
            if ((b & ~full_mask(n)) != 0) {
                throw input_error("partition block {" + format_members(b) + "} leaves 1.." +
                                  std::to_string(n));
            }
            if ((seen & b) != 0) {
                throw input_error("partition blocks overlap on {" + format_members(seen & b) + "}");
            }
            seen |= b;
        }
        if (seen != full_mask(n)) {
            throw input_error("partition does not cover {" + format_members(full_mask(n) & ~seen) + "}");
        }
        Partition p;
        p.n_ = n;
        p.blocks_ = std::move(blocks);
        p.canonicalize();
        return p;
    }

    /// From a restricted-growth string given as block labels, one per player.
    static Partition from_rgs(std::span<const int> labels)
    {
        const int n = static_cast<int>(labels.size());
        check_n(n);
        std::vector<Mask> blocks;
        int next = 0;
        for (int i = 0; i < n; ++i) {
            const int l = labels[i];
            if (l < 0 || l > next) {
                throw input_error("not a restricted-growth string");
            }
            if (l == next) {
                blocks.push_back(0);
                ++next;
            }
            blocks[l] |= Mask{1} << i;
        }
        return from_blocks(n, std::move(blocks));
    }

    /// Accepts block notation "1,2|3|4,5" or a restricted-growth string "00102".
    /// A lone "1" is block notation for n = 1.
    static Partition parse(std::string_view text, int n)
    {
        const bool rgs = !text.empty() && text.front() == '0' &&
                         text.find_first_of(",|") == std::string_view::npos;
        if (rgs) {
            std::vector<int> labels;
            for (char c : text) {
                if (c >= '0' && c <= '9') {
                    labels.push_back(c - '0');
                } else if (c >= 'a' && c <= 'z') {
                    labels.push_back(c - 'a' + 10);
                } else {
                    throw input_error("bad restricted-growth string '" + std::string(text) + "'");
                }
            }
            if (static_cast<int>(labels.size()) != n) {
                throw input_error("restricted-growth string '" + std::string(text) +
                                  "' does not have length " + std::to_string(n));
            }
            return from_rgs(labels);
        }
        std::vector<Mask> blocks;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto bar = text.find('|', pos);
            if (bar == std::string_view::npos) {
                bar = text.size();
            }
            blocks.push_back(parse_members(text.substr(pos, bar - pos), n));
            pos = bar + 1;
        }
        return from_blocks(n, std::move(blocks));
    }

    int ground_size() const noexcept { return n_; }

    std::span<const Mask> blocks() const noexcept { return blocks_; }

    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }

    /// Block containing player i (0-based).
    Mask block_of(int i) const
    {
        for (Mask b : blocks_) {
            if (b & (Mask{1} << i)) {
                return b;
            }
        }
        throw std::out_of_range("player outside ground set");
    }

    /// Labels of the restricted-growth string, one per player.
    std::vector<int> rgs() const
    {
        std::vector<int> labels(static_cast<std::size_t>(n_));
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            for (int i = 0; i < n_; ++i) {
                if (blocks_[k] & (Mask{1} << i)) {
                    labels[static_cast<std::size_t>(i)] = static_cast<int>(k);
                }
            }
        }
        return labels;
    }

    std::string rgs_string() const
    {
        std::string out;
        for (int l : rgs()) {
            out += static_cast<char>(l < 10 ? '0' + l : 'a' + (l - 10));
        }
        return out;
    }

    /// Block notation, e.g. "1,2|3".
    std::string to_string() const
    {
        std::string out;
        for (Mask b : blocks_) {
            if (!out.empty()) {
                out += '|';
            }
            out += format_members(b);
        }
        return out;
    }

    /// Packs the restricted-growth string, four bits per player.
    std::uint64_t code() const
    {
        std::uint64_t c = 0;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            for (Mask b = blocks_[k]; b != 0; b &= b - 1) {
                c |= static_cast<std::uint64_t>(k) << (4 * std::countr_zero(b));
            }
        }
        return c;
    }

    int rank() const noexcept { return n_ - block_count(); }

    /// Number of atoms below: sum over blocks of C(|A|,2).
    int size() const noexcept
    {
        int s = 0;
        for (Mask b : blocks_) {
            const int k = popcount(b);
            s += k * (k - 1) / 2;
        }
        return s;
    }

    ClassVector class_vector() const
    {
        ClassVector c(static_cast<std::size_t>(n_), 0);
        for (Mask b : blocks_) {
            ++c[static_cast<std::size_t>(popcount(b) - 1)];
        }
        return c;
    }

    /// Relabels players: player i+1 becomes perm[i]+1.
    Partition relabel(std::span<const int> perm) const
    {
        std::vector<Mask> blocks;
        for (Mask b : blocks_) {
            Mask img = 0;
            for (Mask m = b; m != 0; m &= m - 1) {
                img |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(m))];
            }
            blocks.push_back(img);
        }
        return from_blocks(n_, std::move(blocks));
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Lexicographic on restricted-growth strings.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        const auto ra = a.rgs();
        const auto rb = b.rgs();
        return std::lexicographical_compare_three_way(ra.begin(), ra.end(), rb.begin(), rb.end());
    }

    static Mask parse_members(std::string_view text, int n)
    {
        Mask m = 0;
        std::size_t pos = 0;
        if (text.empty()) {
            return 0;
        }
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string_view::npos) {
                comma = text.size();
            }
            auto tok = text.substr(pos, comma - pos);
            while (!tok.empty() && tok.front() == ' ') {
                tok.remove_prefix(1);
            }
            while (!tok.empty() && tok.back() == ' ') {
                tok.remove_suffix(1);
            }
            int v = 0;
            if (tok.empty() || tok.size() > 3) {
                throw input_error("bad player token '" + std::string(tok) + "'");
            }
            for (char c : tok) {
                if (c < '0' || c > '9') {
                    throw input_error("bad player token '" + std::string(tok) + "'");
                }
                v = v * 10 + (c - '0');
            }
            if (v < 1 || v > n) {
                throw input_error("player " + std::to_string(v) + " outside 1.." + std::to_string(n));
            }
            if (m & (Mask{1} << (v - 1))) {
                throw input_error("player " + std::to_string(v) + " listed twice");
            }
            m |= Mask{1} << (v - 1);
            pos = comma + 1;
        }
        return m;
    }

private:
    static void check_n(int n)
    {
        if (n < 0 || n > max_ground_size) {
            throw size_limit_error("ground set of size " + std::to_string(n) + " unsupported",
                                   max_ground_size);
        }
    }

    void canonicalize()
    {
        std::sort(blocks_.begin(), blocks_.end(),
                  [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
    }

    int n_ = 0;
    std::vector<Mask> blocks_;
};

namespace detail {

inline void require_same_ground(const Partition& p, const Partition& q)
{
    if (p.ground_size() != q.ground_size()) {
        throw std::domain_error("partitions over different ground sets (" +
                                std::to_string(p.ground_size()) + " vs " +
                                std::to_string(q.ground_size()) + ")");
    }
}

}  // namespace detail

/// True iff every block of q lies inside a block of p (p is coarser, p >= q).
inline bool coarsens(const Partition& p, const Partition& q)
{
    detail::require_same_ground(p, q);
    for (Mask b : q.blocks()) {
        if ((b & ~p.block_of(std::countr_zero(b))) != 0) {
            return false;
        }
    }
    return true;
}

/// Common refinement: nonempty pairwise block intersections.
inline Partition meet(const Partition& p, const Partition& q)
{
    detail::require_same_ground(p, q);
    std::vector<Mask> blocks;
    for (Mask a : p.blocks()) {
        for (Mask b : q.blocks()) {
            if (a & b) {
                blocks.push_back(a & b);
            }
        }
    }
    return Partition::from_blocks(p.ground_size(), std::move(blocks));
}

/// Connected components of the union of the two block relations.
inline Partition join(const Partition& p, const Partition& q)
{
    detail::require_same_ground(p, q);
    std::vector<Mask> blocks(p.blocks().begin(), p.blocks().end());
    for (Mask b : q.blocks()) {
        Mask merged = b;
        std::vector<Mask> rest;
        for (Mask a : blocks) {
            if (a & merged) {
                merged |= a;
            } else {
                rest.push_back(a);
            }
        }
        rest.push_back(merged);
        blocks = std::move(rest);
    }
    return Partition::from_blocks(p.ground_size(), std::move(blocks));
}

/// True iff p covers q, i.e. p merges exactly two blocks of q.
inline bool covers(const Partition& p, const Partition& q)
{
    detail::require_same_ground(p, q);
    return p.rank() == q.rank() + 1 && coarsens(p, q);
}

/// Ordering used for every enumeration: by rank, then lexicographic on the
/// restricted-growth string. Bottom comes first and top last.
inline bool graded_less(const Partition& a, const Partition& b)
{
    if (a.rank() != b.rank()) {
        return a.rank() < b.rank();
    }
    return a < b;
}

namespace detail {

inline void check_cap(int n, int cap, const char* what)
{
    if (n < 1) {
        throw input_error(std::string(what) + ": n must be at least 1");
    }
    if (n > cap) {
        throw size_limit_error(std::string(what) + ": n=" + std::to_string(n) + " exceeds the size limit",
                               cap);
    }
}

template <typename Visit>
void visit_rgs(int n, std::vector<int>& labels, int pos, int max_label, Visit& visit)
{
    if (pos == n) {
        visit(labels);
        return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
        labels[static_cast<std::size_t>(pos)] = l;
        visit_rgs(n, labels, pos + 1, std::max(max_label, l), visit);
    }
}

}  // namespace detail

/// Default cap on n for operations that materialize a whole lattice.
inline constexpr int default_max_n = 8;

/// All Bell(n) partitions of {1..n}, bottom first, top last (see graded_less).
inline std::vector<Partition> enumerate_partitions(int n, int cap = default_max_n)
{
    detail::check_cap(n, std::min(cap, max_ground_size), "enumerate_partitions");
    std::vector<Partition> out;
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    auto visit = [&](const std::vector<int>& l) { out.push_back(Partition::from_rgs(l)); };
    detail::visit_rgs(n, labels, 1, 0, visit);
    std::stable_sort(out.begin(), out.end(), graded_less);
    return out;
}

/// Integer partitions of n as class vectors (entry k-1 counts parts equal to k).
inline std::vector<ClassVector> integer_partitions(int n)
{
    std::vector<ClassVector> out;
    ClassVector cur(static_cast<std::size_t>(std::max(n, 0)), 0);
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            ++cur[static_cast<std::size_t>(k - 1)];
            self(self, remaining - k, k);
            --cur[static_cast<std::size_t>(k - 1)];
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of set partitions of an n-set with class lambda:
/// n! / prod_k (k!^lambda_k lambda_k!).
inline BigInt class_count(std::span<const int> lambda)
{
    int n = 0;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        if (lambda[k] < 0) {
            throw input_error("class vector has a negative entry");
        }
        n += static_cast<int>(k + 1) * lambda[k];
    }
    if (n != static_cast<int>(lambda.size())) {
        throw input_error("class vector entries weighted by block size sum to " + std::to_string(n) +
                          ", expected " + std::to_string(lambda.size()));
    }
    BigInt den = 1;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        const int c = lambda[k];
        for (int r = 0; r < c; ++r) {
            den *= factorial(static_cast<int>(k + 1));
        }
        den *= factorial(c);
    }
    return factorial(n) / den;
}

/// Number of maximal chains in the partition lattice of a k-set: k!(k-1)!/2^(k-1).
inline BigInt partition_chain_count(int k)
{
    if (k <= 1) {
        return 1;
    }
    return factorial(k) * factorial(k - 1) / pow2(k - 1);
}

}  // namespace latgame

#endif  // LATGAME_PARTITION_HPP

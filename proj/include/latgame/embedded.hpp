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

#ifndef LATGAME_EMBEDDED_HPP
#define LATGAME_EMBEDDED_HPP

#include <algorithm>
#include <bit>
#include <string>
#include <string_view>
#include <vector>

#include "latgame/partition.hpp"

namespace latgame {

/// An embedded subset (A, P): A is a block of P, or A is empty.
///
/// The lattice of embedded subsets over n players is handled through the
/// bijection with partitions of n+1 players: a nonempty A absorbs the extra
/// player n+1, an empty A leaves n+1 as a singleton. Order, meet, join and
/// covering are whatever that bijection transports.
class EmbeddedSubset
{
public:
    EmbeddedSubset() = default;

    EmbeddedSubset(Mask subset, Partition partition) : subset_(subset), partition_(std::move(partition))
    {
        if (subset_ == 0) {
            return;
        }
        const auto blocks = partition_.blocks();
        if (std::find(blocks.begin(), blocks.end(), subset_) == blocks.end()) {
            throw input_error("embedded subset {" + format_members(subset_) + "} is not a block of " +
                              partition_.to_string());
        }
    }

    Mask subset() const noexcept { return subset_; }
    const Partition& partition() const noexcept { return partition_; }
    int ground_size() const noexcept { return partition_.ground_size(); }

    /// r(P) + min(|A|, 1).
    int rank() const noexcept { return partition_.rank() + (subset_ != 0 ? 1 : 0); }

    /// |A| + s(P).
    int size() const noexcept { return popcount(subset_) + partition_.size(); }

    /// (|A|, c^P_1, ..., c^P_n).
    ClassVector class_vector() const
    {
        ClassVector c{popcount(subset_)};
        const auto cp = partition_.class_vector();
        c.insert(c.end(), cp.begin(), cp.end());
        return c;
    }

    /// Image among partitions of {1..n+1}.
    Partition to_plus_partition() const
    {
        const int n = ground_size();
        const Mask extra = Mask{1} << n;
        std::vector<Mask> blocks;
        for (Mask b : partition_.blocks()) {
            blocks.push_back(b == subset_ ? (b | extra) : b);
        }
        if (subset_ == 0) {
            blocks.push_back(extra);
        }
        return Partition::from_blocks(n + 1, std::move(blocks));
    }

    static EmbeddedSubset from_plus_partition(const Partition& q)
    {
        const int n = q.ground_size() - 1;
        if (n < 0) {
            throw input_error("partition of an empty set has no embedded preimage");
        }
        const Mask extra = Mask{1} << n;
        Mask a = 0;
        std::vector<Mask> blocks;
        for (Mask b : q.blocks()) {
            if (b & extra) {
                a = b & ~extra;
                if (a != 0) {
                    blocks.push_back(a);
                }
            } else {
                blocks.push_back(b);
            }
        }
        return EmbeddedSubset(a, Partition::from_blocks(n, std::move(blocks)));
    }

    /// "({1,2};1,2|3)"; the empty subset renders as "{}".
    std::string to_string() const
    {
        return "({" + format_members(subset_) + "};" + partition_.to_string() + ")";
    }

    static EmbeddedSubset parse(std::string_view text, int n)
    {
        auto bad = [&] { return input_error("malformed embedded subset '" + std::string(text) + "'"); };
        if (text.size() < 5 || text.front() != '(' || text.back() != ')' || text[1] != '{') {
            throw bad();
        }
        const auto close = text.find('}');
        if (close == std::string_view::npos || close + 1 >= text.size() || text[close + 1] != ';') {
            throw bad();
        }
        const Mask a = Partition::parse_members(text.substr(2, close - 2), n);
        const auto rest = text.substr(close + 2, text.size() - close - 3);
        return EmbeddedSubset(a, Partition::parse(rest, n));
    }

    friend bool operator==(const EmbeddedSubset&, const EmbeddedSubset&) = default;

private:
    Mask subset_ = 0;
    Partition partition_;
};

/// All Bell(n+1) embedded subsets, ordered by rank; within a rank, nonempty
/// subsets first (by member list), then by partition.
inline std::vector<EmbeddedSubset> enumerate_embedded(int n, int cap = default_max_n)
{
    detail::check_cap(n, std::min(cap, max_ground_size - 1), "enumerate_embedded");
    std::vector<EmbeddedSubset> out;
    for (const auto& p : enumerate_partitions(n + 1, n + 1)) {
        out.push_back(EmbeddedSubset::from_plus_partition(p));
    }
    std::stable_sort(out.begin(), out.end(), [](const EmbeddedSubset& x, const EmbeddedSubset& y) {
        if (x.rank() != y.rank()) {
            return x.rank() < y.rank();
        }
        if ((x.subset() == 0) != (y.subset() == 0)) {
            return x.subset() != 0;
        }
        if (x.subset() != y.subset()) {
            const auto mx = members(x.subset());
            const auto my = members(y.subset());
            return mx < my;
        }
        return x.partition() < y.partition();
    });
    return out;
}

}  // namespace latgame

#endif  // LATGAME_EMBEDDED_HPP

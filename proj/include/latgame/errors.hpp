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

#ifndef LATGAME_ERRORS_HPP
#define LATGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latgame {

/// Malformed or partial input (bad keys, missing lattice elements, bad weights).
class input_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested ground-set size exceeds a configured cap.
class size_limit_error : public std::length_error
{
public:
    size_limit_error(const std::string& what, int cap)
        : std::length_error(what + " (cap is n=" + std::to_string(cap) + ")"), cap_(cap)
    {
    }

    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

// Mathematical preconditions (mismatched ground sets, atom below element, ...)
// are reported as std::domain_error.

}  // namespace latgame

#endif  // LATGAME_ERRORS_HPP

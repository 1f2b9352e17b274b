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

#ifndef LATGAME_IO_HPP
#define LATGAME_IO_HPP

// JSON forms of games, solutions and core reports. Rationals always travel
// as "p/q" strings; integers are also accepted as JSON numbers on input.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latgame/coresep.hpp"
#include "latgame/games.hpp"
#include "latgame/solutions.hpp"

namespace latgame::io {

using json = nlohmann::ordered_json;

inline Rational rational_from_json(const json& j, const std::string& where)
{
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const input_error& e) {
            throw input_error(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw input_error(where + ": expected a \"p/q\" string or an integer");
}

inline json to_json(const Rational& q)
{
    return to_string(q);
}

/// {"A":[1,2], "P":"1,2|3"}
inline json to_json(const EmbeddedSubset& e)
{
    return json{{"A", members(e.subset())}, {"P", e.partition().to_string()}};
}

inline EmbeddedSubset embedded_from_json(const json& j, int n)
{
    if (!j.is_object() || !j.contains("A") || !j.contains("P") || !j["A"].is_array() || !j["P"].is_string()) {
        throw input_error("embedded subset record needs \"A\" (array) and \"P\" (string)");
    }
    Mask a = 0;
    for (const auto& p : j["A"]) {
        if (!p.is_number_integer() || p.get<int>() < 1 || p.get<int>() > n) {
            throw input_error("embedded subset member outside 1.." + std::to_string(n));
        }
        a |= Mask{1} << (p.get<int>() - 1);
    }
    return EmbeddedSubset(a, Partition::parse(j["P"].get<std::string>(), n));
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline int read_players(const json& j)
{
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw input_error("game needs an integer \"n\"");
    }
    return j["n"].get<int>();
}

inline LatticeKind read_kind(const json& j)
{
    if (!j.contains("lattice") || !j["lattice"].is_string()) {
        throw input_error("game needs a \"lattice\" string");
    }
    return parse_lattice_kind(j["lattice"].get<std::string>());
}

inline SymmetricGame symmetric_from_json(const json& j)
{
    SymmetricGame g{read_kind(j), read_players(j), {}};
    if (!j.contains("classValues") || !j["classValues"].is_object()) {
        throw input_error("symmetric game needs a \"classValues\" object");
    }
    for (const auto& [key, val] : j["classValues"].items()) {
        auto c = parse_class_key(g.kind, g.n, key);
        if (!g.class_values.emplace(std::move(c), rational_from_json(val, "class " + key)).second) {
            throw input_error("class " + key + " given twice");
        }
    }
    return g;
}

inline json to_json(const SymmetricGame& g)
{
    json cv = json::object();
    for (const auto& [c, v] : g.class_values) {
        cv[class_key(g.kind, c)] = to_string(v);
    }
    return json{{"lattice", to_string(g.kind)}, {"n", g.n}, {"classValues", cv}};
}

/// Reads {lattice, n, values:{key:"p/q"}} or a symmetric {lattice, n, classValues}.
/// Every element must be present exactly once.
inline LatticeGame game_from_json(const json& j, const LatticeLimits& limits = {})
{
    if (!j.is_object()) {
        throw input_error("game file must hold a JSON object");
    }
    const auto kind = read_kind(j);
    const int n = read_players(j);
    const auto lat = Lattice::make(kind, n, limits);
    if (j.contains("classValues")) {
        return symmetric_expand(symmetric_from_json(j), lat);
    }
    if (!j.contains("values") || !j["values"].is_object()) {
        throw input_error("game needs a \"values\" object");
    }
    LatticeGame f(lat);
    std::vector<bool> seen(lat->cardinality(), false);
    for (const auto& [key, val] : j["values"].items()) {
        const auto x = lat->find(key);
        if (!x) {
            throw input_error("'" + key + "' is not an element of the " + to_string(kind) + " lattice on " +
                              std::to_string(n) + " players");
        }
        if (seen[*x]) {
            throw input_error("element " + lat->key(*x) + " given twice");
        }
        seen[*x] = true;
        f[*x] = rational_from_json(val, "element " + key);
    }
    for (Index x = 0; x < lat->cardinality(); ++x) {
        if (!seen[x]) {
            throw input_error("game is not total: missing element " + lat->key(x));
        }
    }
    return f;
}

inline LatticeGame read_game(const std::string& path, const LatticeLimits& limits = {})
{
    return game_from_json(read_json_file(path), limits);
}

inline json to_json(const LatticeGame& f)
{
    const auto& lat = f.lattice();
    json values = json::object();
    for (Index x = 0; x < lat.cardinality(); ++x) {
        values[lat.key(x)] = to_string(f[x]);
    }
    return json{{"lattice", to_string(lat.kind())}, {"n", lat.players()}, {"values", values}};
}

/// {lattice, n, shares:{atom key:"p/q"}, efficiencyCheck:"p/q"}
inline json to_json(const Solution& sol)
{
    const auto& lat = sol.lattice();
    json shares = json::object();
    for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
        shares[lat.atom_key(lat.atoms()[k])] = to_string(sol[k]);
    }
    return json{{"lattice", to_string(lat.kind())},
                {"n", lat.players()},
                {"shares", shares},
                {"efficiencyCheck", to_string(sol.total())}};
}

inline json to_json(const NodeShares& nodes)
{
    json out = json::object();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out[std::to_string(i + 1)] = to_string(nodes[i]);
    }
    return out;
}

/// {status, witness|certificate, violated:[...]}
inline json to_json(const CoreResult& r, const LatticeGame& f)
{
    const auto& lat = f.lattice();
    json out{{"status", r.status == CoreStatus::nonempty ? "nonempty" : "empty"}};
    if (r.witness) {
        out["witness"] = to_json(*r.witness)["shares"];
        out["violated"] = json::array();
    } else {
        json cert = json::object();
        json violated = json::array();
        for (Index x = 0; x < lat.cardinality(); ++x) {
            if (r.certificate[x] != 0) {
                cert[lat.key(x)] = to_string(r.certificate[x]);
                violated.push_back(lat.key(x));
            }
        }
        out["certificate"] = cert;
        out["gap"] = to_string(r.gap);
        out["violated"] = violated;
    }
    return out;
}

inline json to_json(const SeparatingFamily& fam)
{
    const auto& sub = fam.base.lattice();
    json v = json::object();
    for (Index s = 0; s < sub.cardinality(); ++s) {
        v[sub.key(s)] = to_string(fam.base[s]);
    }
    return json{{"separable", true}, {"freeSingletons", fam.free_singletons}, {"v", v}};
}

inline std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace latgame::io

#endif  // LATGAME_IO_HPP

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

#ifndef LATGAME_TOOLS_COMMANDS_HPP
#define LATGAME_TOOLS_COMMANDS_HPP

// Subcommand bodies of the latgame tool, kept apart from argument parsing so
// tests can drive them with string streams.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "latgame/io.hpp"
#include "latgame/latgame.hpp"

namespace latgame::cli {

enum ExitCode : int { ok = 0, mismatch = 1, bad_input = 2, too_large = 3 };

enum class Format { json, csv };

struct Options
{
    std::optional<int> max_n;
    Format format = Format::json;
    /// Adds an approximate decimal column to CSV output.
    bool decimals = false;
    Solver solver = Solver::su;
    /// "equal", a weights file, or empty for no node split.
    std::string split;
    std::string cluster_file;
    bool normalize = true;
    /// Edge list "1-2;2-3" for the Myerson value.
    std::string graph;
    std::string inject_fault;
};

/// Precedence: --max-n, then LATTICE_GAMES_MAX_N, then the library default.
inline int resolve_cap(const Options& opt)
{
    if (opt.max_n) {
        if (*opt.max_n < 1) {
            throw input_error("--max-n must be positive");
        }
        return *opt.max_n;
    }
    if (const char* env = std::getenv("LATTICE_GAMES_MAX_N"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > max_ground_size) {
            throw input_error(std::string("LATTICE_GAMES_MAX_N='") + env + "' is not a size in 1.." +
                              std::to_string(max_ground_size));
        }
        return static_cast<int>(v);
    }
    return default_max_n;
}

inline LatticeLimits limits_of(const Options& opt)
{
    LatticeLimits l;
    l.max_n = resolve_cap(opt);
    return l;
}

// -- CSV helpers --------------------------------------------------------------

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline std::string approx(const Rational& q)
{
    std::ostringstream os;
    os << std::setprecision(12) << to_double(q);
    return os.str();
}

class CsvWriter
{
public:
    CsvWriter(std::ostream& out, bool decimals) : out_(out), decimals_(decimals) {}

    /// `exact` names the column holding the exact value; an approximate column
    /// follows it when decimals are on.
    void header(std::vector<std::string> cols, const std::string& exact)
    {
        for (std::size_t k = 0; k < cols.size(); ++k) {
            out_ << (k ? "," : "") << cols[k];
        }
        out_ << "," << exact;
        if (decimals_) {
            out_ << "," << exact << "_approx_decimal";
        }
        out_ << "\n";
    }

    void row(const std::vector<std::string>& cols, const Rational& value)
    {
        for (std::size_t k = 0; k < cols.size(); ++k) {
            out_ << (k ? "," : "") << csv_field(cols[k]);
        }
        out_ << "," << to_string(value);
        if (decimals_) {
            out_ << "," << approx(value);
        }
        out_ << "\n";
    }

private:
    std::ostream& out_;
    bool decimals_;
};

// -- input helpers ---------------------------------------------------------------

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_on(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

inline int parse_node(const std::string& tok, int n)
{
    const std::string t = trim(tok);
    if (t.empty() || t.size() > 3 || t.find_first_not_of("0123456789") != std::string::npos) {
        throw input_error("bad node '" + tok + "'");
    }
    const int v = std::stoi(t);
    if (v < 1 || (n > 0 && v > n)) {
        throw input_error("node " + t + " outside 1.." + std::to_string(n));
    }
    return v;
}

/// "i,j" or "i-j", returned with i < j.
inline std::pair<int, int> parse_edge(const std::string& text, int n)
{
    const auto sep = text.find_first_of(",-");
    if (sep == std::string::npos) {
        throw input_error("edge '" + text + "' must look like i,j");
    }
    int i = parse_node(text.substr(0, sep), n);
    int j = parse_node(text.substr(sep + 1), n);
    if (i == j) {
        throw input_error("edge '" + text + "' joins a node to itself");
    }
    if (i > j) {
        std::swap(i, j);
    }
    return {i, j};
}

inline Graph parse_graph(const std::string& text, int n)
{
    Graph g;
    for (const auto& tok : split_on(text, ';')) {
        if (!trim(tok).empty()) {
            g.push_back(parse_edge(trim(tok), n));
        }
    }
    return g;
}

/// Weights file: {"1,2": ["1/3", "2/3"], ...}; the first weight goes to the
/// smaller endpoint.
inline EdgeWeights read_weights(const std::string& path, int n)
{
    const auto j = io::read_json_file(path);
    if (!j.is_object()) {
        throw input_error("weights file must hold a JSON object");
    }
    EdgeWeights w;
    for (const auto& [key, val] : j.items()) {
        const auto e = parse_edge(key, n);
        if (!val.is_array() || val.size() != 2) {
            throw input_error("weights for edge " + key + " must be a pair");
        }
        if (!w.emplace(e, std::pair{io::rational_from_json(val[0], "weight " + key),
                                    io::rational_from_json(val[1], "weight " + key)})
                 .second) {
            throw input_error("edge " + key + " weighted twice");
        }
    }
    return w;
}

inline std::optional<EdgeWeights> split_weights(const Options& opt, int n)
{
    if (opt.split.empty()) {
        return std::nullopt;
    }
    if (opt.split == "equal") {
        return EdgeWeights{};
    }
    return read_weights(opt.split, n);
}

// -- solve ------------------------------------------------------------------------

inline int cmd_solve(const std::string& game_file, const Options& opt, std::ostream& out)
{
    const auto raw = io::read_game(game_file, limits_of(opt));
    const Rational bottom = raw.at_bottom();
    const auto f = opt.normalize ? normalize_bottom(raw) : raw;
    std::optional<Graph> graph;
    if (opt.solver == Solver::myerson) {
        if (opt.graph.empty()) {
            throw input_error("--solver=myerson needs --graph");
        }
        graph = parse_graph(opt.graph, f.lattice().players());
    }
    const auto sol = solve(opt.solver, f, graph ? &*graph : nullptr);
    std::optional<NodeShares> nodes;
    if (auto w = split_weights(opt, f.lattice().players())) {
        nodes = split_to_nodes(sol, *w);
    }

    if (opt.format == Format::csv) {
        CsvWriter csv(out, opt.decimals);
        csv.header({"kind", "key"}, "share");
        const auto& lat = f.lattice();
        for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
            csv.row({"atom", lat.atom_key(lat.atoms()[k])}, sol[k]);
        }
        if (nodes) {
            for (std::size_t i = 0; i < nodes->size(); ++i) {
                csv.row({"node", std::to_string(i + 1)}, (*nodes)[i]);
            }
        }
        csv.row({"efficiency", "total"}, sol.total());
        return ok;
    }
    auto j = io::to_json(sol);
    j["solver"] = to_string(opt.solver);
    j["bottomNormalized"] = opt.normalize;
    j["bottomWorth"] = to_string(bottom);
    if (bottom != 0) {
        j["note"] = opt.normalize ? "game shifted by -" + to_string(bottom) + " so the bottom worth is 0"
                                  : "bottom worth is " + to_string(bottom) + "; shares sum to f(top) - f(bottom)";
    }
    if (nodes) {
        j["nodeShares"] = io::to_json(*nodes);
    }
    out << io::dump(j);
    return ok;
}

// -- core -------------------------------------------------------------------------

inline int cmd_core(const std::string& game_file, const Options& opt, std::ostream& out)
{
    const auto raw = io::read_game(game_file, limits_of(opt));
    const auto f = opt.normalize ? normalize_bottom(raw) : raw;
    const auto res = core_feasible(f);
    const bool supermodular = is_supermodular(f).holds;
    const auto tp = is_totally_positive(f);
    const auto& lat = f.lattice();

    if (opt.format == Format::csv) {
        CsvWriter csv(out, opt.decimals);
        csv.header({"kind", "key"}, "value");
        if (res.witness) {
            for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
                csv.row({"witness", lat.atom_key(lat.atoms()[k])}, (*res.witness)[k]);
            }
        } else {
            for (Index x = 0; x < lat.cardinality(); ++x) {
                if (res.certificate[x] != 0) {
                    csv.row({"certificate", lat.key(x)}, res.certificate[x]);
                }
            }
            csv.row({"gap", "total"}, res.gap);
        }
        csv.row({"status", res.status == CoreStatus::nonempty ? "nonempty" : "empty"}, Rational(0));
        csv.row({"supermodular", supermodular ? "true" : "false"}, Rational(0));
        csv.row({"totallyPositive", tp.holds ? "true" : "false"}, Rational(0));
        return ok;
    }
    auto j = io::to_json(res, f);
    j["supermodular"] = supermodular;
    j["totallyPositive"] = tp.holds;
    if (!tp.holds) {
        j["negativeMobius"] = {{"element", lat.key(tp.witness.at(0))},
                               {"value", to_string(mobius(f)[tp.witness.at(0)])}};
    }
    j["bottomNormalized"] = opt.normalize;
    out << io::dump(j);
    return ok;
}

// -- netshare ---------------------------------------------------------------------

struct TracePeriod
{
    std::string label;
    std::optional<std::string> cluster;
    std::map<std::pair<int, int>, Rational> volumes;
};

struct TrafficTrace
{
    int n = 0;
    std::vector<TracePeriod> periods;
};

inline void add_volume(TracePeriod& p, std::pair<int, int> e, Rational w)
{
    if (w < 0) {
        throw input_error("negative volume " + to_string(w) + " on edge " + std::to_string(e.first) + "," +
                          std::to_string(e.second) + " in period " + p.label);
    }
    if (!p.volumes.emplace(e, std::move(w)).second) {
        throw input_error("edge " + std::to_string(e.first) + "," + std::to_string(e.second) +
                          " listed twice in period " + p.label);
    }
}

/// JSON: {"n": 3, "periods": [{"volumes": {"1,2": "4"}, "cluster": "1,2|3"}]}.
inline TrafficTrace trace_from_json(const io::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("periods") ||
        !j["periods"].is_array()) {
        throw input_error("trace needs an integer \"n\" and a \"periods\" array");
    }
    TrafficTrace t{j["n"].get<int>(), {}};
    if (t.n < 2) {
        throw input_error("trace needs at least two nodes");
    }
    for (std::size_t k = 0; k < j["periods"].size(); ++k) {
        const auto& pj = j["periods"][k];
        TracePeriod p;
        p.label = std::to_string(k);
        if (!pj.is_object() || !pj.contains("volumes") || !pj["volumes"].is_object()) {
            throw input_error("period " + p.label + " needs a \"volumes\" object");
        }
        if (pj.contains("cluster")) {
            if (!pj["cluster"].is_string()) {
                throw input_error("period " + p.label + ": \"cluster\" must be a partition string");
            }
            p.cluster = pj["cluster"].get<std::string>();
        }
        for (const auto& [key, val] : pj["volumes"].items()) {
            add_volume(p, parse_edge(key, t.n), io::rational_from_json(val, "volume " + key));
        }
        t.periods.push_back(std::move(p));
    }
    return t;
}

/// CSV with header period,i,j,volume; n is the largest node mentioned unless
/// given. Periods are reported in order of first appearance.
inline TrafficTrace trace_from_csv(const std::string& text, int n = 0)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "period,i,j,volume") {
        throw input_error("trace CSV must start with the header period,i,j,volume");
    }
    struct Row
    {
        std::string period;
        int i, j;
        Rational w;
        int line;
    };
    std::vector<Row> rows;
    int lineno = 1;
    int max_node = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        const auto f = split_on(trim(line), ',');
        if (f.size() != 4) {
            throw input_error("trace CSV line " + std::to_string(lineno) + " needs 4 fields");
        }
        const int i = parse_node(f[1], n);
        const int j = parse_node(f[2], n);
        rows.push_back({trim(f[0]), i, j, parse_rational(trim(f[3])), lineno});
        max_node = std::max({max_node, i, j});
    }
    TrafficTrace t{n > 0 ? n : max_node, {}};
    if (t.n < 2) {
        throw input_error("trace needs at least two nodes");
    }
    std::map<std::string, std::size_t> slot;
    for (auto& r : rows) {
        if (r.i == r.j) {
            throw input_error("trace CSV line " + std::to_string(r.line) + " joins a node to itself");
        }
        auto [it, fresh] = slot.emplace(r.period, t.periods.size());
        if (fresh) {
            t.periods.push_back(TracePeriod{r.period, std::nullopt, {}});
        }
        add_volume(t.periods[it->second], {std::min(r.i, r.j), std::max(r.i, r.j)}, std::move(r.w));
    }
    return t;
}

inline TrafficTrace read_trace(const std::string& path)
{
    const auto text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return trace_from_json(io::json::parse(text));
        } catch (const io::json::parse_error& e) {
            throw input_error("'" + path + "' is not valid JSON: " + e.what());
        }
    }
    return trace_from_csv(text);
}

/// One partition per line: a single line applies to every period, otherwise
/// there must be one line per period.
inline void apply_cluster_file(TrafficTrace& t, const std::string& path)
{
    std::vector<std::string> lines;
    for (const auto& l : split_on(read_text_file(path), '\n')) {
        if (!trim(l).empty()) {
            lines.push_back(trim(l));
        }
    }
    if (lines.size() == 1) {
        for (auto& p : t.periods) {
            p.cluster = lines[0];
        }
    } else if (lines.size() == t.periods.size()) {
        for (std::size_t k = 0; k < lines.size(); ++k) {
            t.periods[k].cluster = lines[k];
        }
    } else {
        throw input_error("cluster file has " + std::to_string(lines.size()) + " partitions for " +
                          std::to_string(t.periods.size()) + " periods");
    }
}

/// The global game on P^n with Moebius mass w_ij on the atom [ij] and none
/// elsewhere, optionally restricted to the down-set of a clustering.
inline LatticeGame traffic_game(const LatticePtr& lat, const TracePeriod& p)
{
    const int n = lat->players();
    MobiusCoefficients mu(lat);
    for (const auto& [e, w] : p.volumes) {
        if (e.second > n) {
            throw input_error("edge " + std::to_string(e.first) + "," + std::to_string(e.second) +
                              " is not between nodes 1.." + std::to_string(n));
        }
        mu[lat->index_of(Partition::atom(n, e.first, e.second))] = w;
    }
    auto f = zeta_expand(mu);
    if (p.cluster) {
        f = clustering_restrict(f, lat->index_of(Partition::parse(*p.cluster, n)));
    }
    return f;
}

inline int cmd_netshare(const std::string& trace_file, const Options& opt, std::ostream& out)
{
    if (opt.solver != Solver::su && opt.solver != Solver::cu && opt.solver != Solver::egalitarian) {
        throw input_error("netshare supports the su, cu and egalitarian solvers");
    }
    auto trace = read_trace(trace_file);
    if (!opt.cluster_file.empty()) {
        apply_cluster_file(trace, opt.cluster_file);
    }
    const auto lat = Lattice::make(LatticeKind::partition, trace.n, limits_of(opt));
    Options split_opt = opt;
    if (split_opt.split.empty()) {
        split_opt.split = "equal";
    }
    const auto weights = *split_weights(split_opt, trace.n);

    io::json periods = io::json::array();
    std::optional<CsvWriter> csv;
    if (opt.format == Format::csv) {
        csv.emplace(out, opt.decimals);
        csv->header({"period", "kind", "key"}, "share");
    }
    for (const auto& p : trace.periods) {
        const auto f = traffic_game(lat, p);
        const auto sol = solve(opt.solver, f);
        const auto nodes = split_to_nodes(sol, weights);
        // Edge shares against the traffic that survives the clustering.
        const auto expected = mobius(f);
        bool equals_volumes = true;
        for (std::size_t k = 0; k < lat->atoms().size(); ++k) {
            equals_volumes = equals_volumes && sol[k] == expected[lat->atoms()[k]];
        }
        const bool fixed = expand(sol) == f;
        if (csv) {
            for (std::size_t k = 0; k < lat->atoms().size(); ++k) {
                csv->row({p.label, "edge", lat->atom_key(lat->atoms()[k])}, sol[k]);
            }
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                csv->row({p.label, "node", std::to_string(i + 1)}, nodes[i]);
            }
            csv->row({p.label, "fixedPoint", fixed ? "true" : "false"}, sol.total());
            continue;
        }
        io::json pj{{"period", p.label}};
        if (p.cluster) {
            pj["cluster"] = Partition::parse(*p.cluster, trace.n).to_string();
        }
        pj["edgeShares"] = io::to_json(sol)["shares"];
        pj["nodeShares"] = io::to_json(nodes);
        pj["total"] = to_string(sol.total());
        pj["fixedPoint"] = fixed;
        pj["sharesEqualVolumes"] = equals_volumes;
        periods.push_back(std::move(pj));
    }
    if (!csv) {
        out << io::dump(io::json{{"lattice", to_string(LatticeKind::partition)},
                                 {"n", trace.n},
                                 {"solver", to_string(opt.solver)},
                                 {"split", split_opt.split},
                                 {"periods", periods}});
    }
    return ok;
}

// -- paper-examples ----------------------------------------------------------------

/// Known fault names for --inject-fault.
inline const std::vector<std::string>& known_faults()
{
    static const std::vector<std::string> faults{"ratio-table", "rank-table", "core-rhs"};
    return faults;
}

/// Chain pair ratios kappa_x^a / kappa for every atom a and x not above a.
using RatioTable = std::map<std::pair<Index, Index>, Rational>;

inline RatioTable ratio_table(const Lattice& lat, bool corrupt)
{
    RatioTable t;
    for (Index a : lat.atoms()) {
        for (Index x = 0; x < lat.cardinality(); ++x) {
            if (!lat.leq(a, x)) {
                t[{x, a}] = lat.chain_pair_ratio(x, a);
            }
        }
    }
    if (corrupt && !t.empty()) {
        t.begin()->second += Rational(1, 100);
    }
    return t;
}

/// Chain-uniform shares computed from an explicit ratio table.
inline std::vector<Rational> cu_from_table(const LatticeGame& f, const RatioTable& t)
{
    const auto& lat = f.lattice();
    std::vector<Rational> out(lat.atoms().size());
    for (std::size_t k = 0; k < lat.atoms().size(); ++k) {
        const Index a = lat.atoms()[k];
        for (Index x = 0; x < lat.cardinality(); ++x) {
            if (lat.leq(a, x)) {
                continue;
            }
            const Index y = lat.join(x, a);
            out[k] += t.at({x, a}) * (f[y] - f[x]) / (lat.size(y) - lat.size(x));
        }
    }
    return out;
}

struct ExampleCheck
{
    std::string name;
    int needs_n;
    /// Empty string on success, otherwise what went wrong.
    std::function<std::string()> run;
};

inline std::string describe(std::span<const Rational> v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k ? "," : "") + to_string(v[k]);
    }
    return s + ")";
}

inline std::string expect_shares(const std::string& what, std::span<const Rational> got,
                                 const std::vector<Rational>& want)
{
    if (std::equal(got.begin(), got.end(), want.begin(), want.end())) {
        return {};
    }
    return what + ": got " + describe(got) + ", expected " + describe(want);
}

inline std::vector<ExampleCheck> paper_example_checks(const LatticeLimits& limits, const std::string& fault)
{
    const Rational third2(2, 3);
    const Rational sixth(1, 6);
    auto P = [limits](int n) { return Lattice::make(LatticeKind::partition, n, limits); };
    auto E = [limits](int n) { return Lattice::make(LatticeKind::embedded, n, limits); };
    auto C = [limits](int n) { return Lattice::make(LatticeKind::subset, n, limits); };
    auto rank_of = [fault](const LatticePtr& lat) {
        auto r = rank_game(lat);
        if (fault == "rank-table") {
            r[lat->top()] += 1;
        }
        return r;
    };
    auto atoms_one_top_two = [P](const std::string& fault_name) {
        auto lat = P(3);
        LatticeGame f(lat);
        for (Index a : lat->atoms()) {
            f[a] = 1;
        }
        f[lat->top()] = fault_name == "core-rhs" ? 3 : 2;
        return f;
    };
    auto zeta12 = [P]() {
        auto lat = P(3);
        return zeta_game(lat, lat->index_of(Partition::atom(3, 1, 2)));
    };
    auto zeta_e12 = [E]() {
        auto lat = E(2);
        return zeta_game(lat, lat->index_of(EmbeddedSubset(0, Partition::top(2))));
    };

    std::vector<ExampleCheck> checks;
    checks.push_back({"p3-elements", 3, [P] {
                          auto lat = P(3);
                          if (lat->cardinality() != 5 || lat->atoms().size() != 3) {
                              return std::string("P^3 should have 5 elements and 3 atoms");
                          }
                          const auto j = lat->join(lat->index_of(Partition::atom(3, 1, 2)),
                                                   lat->index_of(Partition::atom(3, 1, 3)));
                          if (j != lat->top()) {
                              return "[12] v [13] = " + lat->key(j) + ", expected the top";
                          }
                          if (lat->size(lat->top()) != 3 || lat->rank(lat->top()) != 2) {
                              return std::string("top of P^3 should have size 3 and rank 2");
                          }
                          return std::string();
                      }});
    checks.push_back({"size-mobius-on-atoms", 4, [P] {
                          auto lat = P(4);
                          const auto mu = mobius(size_game(lat));
                          for (Index x = 0; x < lat->cardinality(); ++x) {
                              if (mu[x] != (lat->rank(x) == 1 ? 1 : 0)) {
                                  return "Moebius inversion of the size at " + lat->key(x) + " is " +
                                         to_string(mu[x]);
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"zeta12-support", 3, [zeta12] {
                          const auto f = zeta12();
                          const auto& lat = f.lattice();
                          for (Index x = 0; x < lat.cardinality(); ++x) {
                              const bool on = lat.key(x) == "1,2|3" || x == lat.top();
                              if (f[x] != (on ? 1 : 0)) {
                                  return "zeta_[12] is wrong at " + lat.key(x);
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"e2-zeta-support", 3, [zeta_e12] {
                          const auto f = zeta_e12();
                          const auto& lat = f.lattice();
                          for (Index x = 0; x < lat.cardinality(); ++x) {
                              const bool on = lat.key(x) == "({};1,2)" || lat.key(x) == "({1,2};1,2)";
                              if (f[x] != (on ? 1 : 0)) {
                                  return "zeta_(empty,[12]) is wrong at " + lat.key(x);
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"e2-atoms-match-p3", 3, [E, P] {
                          auto e = E(2);
                          auto p = P(3);
                          const std::vector<std::string> want{"1,3|2", "1|2,3", "1,2|3"};
                          for (std::size_t k = 0; k < 3; ++k) {
                              const auto img = e->partition(e->atoms()[k]).to_string();
                              if (img != want[k]) {
                                  return "atom " + e->key(e->atoms()[k]) + " maps to " + img + ", expected " +
                                         want[k];
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"chain-ratios-sum-to-one", 4, [P, E, fault] {
                          for (const auto& lat : {P(4), E(3)}) {
                              const auto t = ratio_table(*lat, fault == "ratio-table");
                              for (Index a : lat->atoms()) {
                                  Rational s = 0;
                                  for (const auto& [key, r] : t) {
                                      if (key.second == a) {
                                          s += r;
                                      }
                                  }
                                  if (s != 1) {
                                      return "ratios for atom " + lat->key(a) + " sum to " + to_string(s);
                                  }
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"rank-additively-separated", 4, [P, C, rank_of] {
                          auto p = P(4);
                          auto c = C(4);
                          // The worth of the empty coalition never enters a block sum.
                          auto v = make_game(c, [&](Index s) { return std::max(c->size(s) - 1, 0); });
                          if (additive_global(v, p) != rank_of(p)) {
                              return std::string("v(A) = |A|-1 does not separate the rank");
                          }
                          auto sep = separability_test(rank_of(p));
                          if (!sep) {
                              return "rank reported non-separable at " + p->key(*sep.violated);
                          }
                          return std::string();
                      }});
    checks.push_back({"size-additively-separated", 4, [P, C] {
                          auto p = P(4);
                          auto c = C(4);
                          auto v = make_game(c, [&](Index s) { return binomial(c->size(s), 2); });
                          if (additive_global(v, p) != size_game(p)) {
                              return std::string("v(A) = C(|A|,2) does not separate the size");
                          }
                          if (!separability_test(size_game(p))) {
                              return std::string("size reported non-separable");
                          }
                          return std::string();
                      }});
    checks.push_back({"rank-symmetric", 4, [P, rank_of] {
                          return is_symmetric(rank_of(P(4))) ? std::string() : "rank is not class-symmetric";
                      }});
    checks.push_back({"atoms1-top2-supermodular", 3, [atoms_one_top_two, fault] {
                          return is_supermodular(atoms_one_top_two(fault)).holds ? std::string()
                                                                        : "atoms-1 top-2 game is not supermodular";
                      }});
    checks.push_back({"atoms1-top2-not-totally-positive", 3, [atoms_one_top_two, fault] {
                          const auto f = atoms_one_top_two(fault);
                          const auto m = mobius(f)[f.lattice().top()];
                          return m == -1 ? std::string() : "mu(top) = " + to_string(m) + ", expected -1";
                      }});
    checks.push_back({"atoms1-top2-core-empty", 3, [atoms_one_top_two, fault] {
                          const auto f = atoms_one_top_two(fault);
                          const auto r = core_feasible(f);
                          if (r.status != CoreStatus::empty) {
                              return std::string("core reported nonempty");
                          }
                          if (!verify_certificate(core_system(f), r.certificate)) {
                              return std::string("emptiness certificate does not verify");
                          }
                          return std::string();
                      }});
    checks.push_back({"size-totally-positive", 4, [P] {
                          return is_totally_positive(size_game(P(4))).holds ? std::string()
                                                                            : "size is not totally positive";
                      }});
    checks.push_back({"shapley-unanimity", 4, [C] {
                          auto c = C(4);
                          for (Index x = 1; x < c->cardinality(); ++x) {
                              const auto sol = shapley_chain(zeta_game(c, x));
                              for (int i = 0; i < 4; ++i) {
                                  const bool in = (c->subset(x) >> i) & 1;
                                  if (sol[static_cast<std::size_t>(i)] != (in ? Rational(1, c->size(x)) : 0)) {
                                      return "Shapley value of zeta_" + c->key(x) + " is " + describe(sol.shares());
                                  }
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"shapley-inessential", 4, [C] {
                          auto c = C(4);
                          const std::vector<Rational> w{3, Rational(-1, 2), 0, Rational(7, 3)};
                          const auto v = make_game(c, [&](Index x) {
                              Rational s = 0;
                              for (int i : members(c->subset(x))) {
                                  s += w[static_cast<std::size_t>(i - 1)];
                              }
                              return s;
                          });
                          const auto sol = shapley_chain(v);
                          return expect_shares("Shapley value of an inessential game", sol.shares(), w);
                      }});
    checks.push_back({"su-zeta12", 3, [zeta12] {
                          const auto sol = su(zeta12());
                          return expect_shares("su(zeta_[12])", sol.shares(), {1, 0, 0});
                      }});
    checks.push_back({"cu-zeta12", 3, [zeta12, third2, sixth, fault] {
                          const auto f = zeta12();
                          const auto sol = cu(f);
                          if (auto e = expect_shares("cu(zeta_[12])", sol.shares(), {third2, sixth, sixth}); !e.empty()) {
                              return e;
                          }
                          const auto tab = cu_from_table(f, ratio_table(f.lattice(), fault == "ratio-table"));
                          return expect_shares("cu(zeta_[12]) from the ratio table", tab, {third2, sixth, sixth});
                      }});
    checks.push_back({"rank-p3-su-cu-egalitarian", 3, [P, rank_of, third2] {
                          const auto r = rank_of(P(3));
                          const std::vector<Rational> want(3, third2);
                          for (Solver s : {Solver::su, Solver::cu, Solver::egalitarian}) {
                              const auto sol = solve(s, r);
                              if (auto e = expect_shares(to_string(s) + "(rank) on P^3", sol.shares(), want); !e.empty()) {
                                  return e;
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"rank-e2-su-cu-egalitarian", 3, [E, rank_of, third2] {
                          const auto r = rank_of(E(2));
                          const std::vector<Rational> want(3, third2);
                          for (Solver s : {Solver::su, Solver::cu, Solver::egalitarian}) {
                              const auto sol = solve(s, r);
                              if (auto e = expect_shares(to_string(s) + "(rank) on E^2", sol.shares(), want); !e.empty()) {
                                  return e;
                              }
                          }
                          return std::string();
                      }});
    checks.push_back({"su-e2-zeta", 3, [zeta_e12] {
                          const auto sol = su(zeta_e12());
                          return expect_shares("su(zeta_(empty,[12]))", sol.shares(), {0, 0, 1});
                      }});
    checks.push_back({"cu-e2-zeta", 3, [zeta_e12, third2, sixth] {
                          const auto sol = cu(zeta_e12());
                          return expect_shares("cu(zeta_(empty,[12]))", sol.shares(), {sixth, sixth, third2});
                      }});
    checks.push_back({"transport-e2-to-p3", 3, [zeta_e12, zeta12] {
                          const auto fe = zeta_e12();
                          const auto fp = zeta12();
                          const auto p = fp.lattice_ptr();
                          if (transport_solution(su(fe), p) != su(fp)) {
                              return std::string("transported su differs from su on P^3");
                          }
                          const auto t = transport_solution(cu(fe), p);
                          return expect_shares("transported cu", t.shares(),
                                               {Rational(2, 3), Rational(1, 6), Rational(1, 6)});
                      }});
    checks.push_back({"cu-linear-size", 4, [P] {
                          auto lat = P(4);
                          auto f = Rational(5) * size_game(lat);
                          const auto sol = cu(f);
                          if (!is_fixed_point(Solver::cu, f)) {
                              return std::string("cu does not fix 5*size");
                          }
                          return expect_shares("cu(5*size)", sol.shares(), std::vector<Rational>(6, 5));
                      }});
    checks.push_back({"cu-not-fixed-on-zeta12", 3, [zeta12] {
                          return is_fixed_point(Solver::cu, zeta12()) ? "cu fixes zeta_[12]" : std::string();
                      }});
    checks.push_back({"su-fixed-on-atom-games", 4, [P] {
                          auto lat = P(4);
                          MobiusCoefficients mu(lat);
                          for (std::size_t k = 0; k < lat->atoms().size(); ++k) {
                              mu[lat->atoms()[k]] = Rational(static_cast<long>(k) + 1, 3);
                          }
                          return is_fixed_point(Solver::su, zeta_expand(mu)) ? std::string()
                                                                             : "su is not fixed on an atom game";
                      }});
    checks.push_back({"egalitarian-top-unanimity", 3, [P] {
                          auto lat = P(3);
                          const auto f = Rational(3) * zeta_game(lat, lat->top());
                          const auto sol = egalitarian(f);
                          if (expand(sol) != size_game(lat)) {
                              return std::string("egalitarian(3 zeta_top) does not expand to the size");
                          }
                          return expect_shares("egalitarian(3 zeta_top)", sol.shares(), {1, 1, 1});
                      }});
    checks.push_back({"subset-core-system", 3, [C] {
                          const auto sys = core_system(LatticeGame(C(3)));
                          return sys.constraints.size() == 8 && sys.variables() == 3
                                     ? std::string()
                                     : "core system on 2^N, n=3 should be 8 rows over 3 variables";
                      }});
    return checks;
}

inline int cmd_paper_examples(const Options& opt, std::ostream& out)
{
    if (!opt.inject_fault.empty() &&
        std::find(known_faults().begin(), known_faults().end(), opt.inject_fault) == known_faults().end()) {
        throw input_error("unknown fault '" + opt.inject_fault + "'");
    }
    const auto limits = limits_of(opt);
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    io::json results = io::json::array();
    for (const auto& check : paper_example_checks(limits, opt.inject_fault)) {
        io::json r{{"name", check.name}};
        if (check.needs_n > limits.max_n) {
            ++skipped;
            r["status"] = "skipped";
            r["detail"] = "needs n=" + std::to_string(check.needs_n) + ", cap is n=" + std::to_string(limits.max_n);
        } else {
            const auto msg = check.run();
            if (msg.empty()) {
                ++passed;
                r["status"] = "pass";
            } else {
                ++failed;
                r["status"] = "fail";
                r["detail"] = msg;
            }
        }
        results.push_back(std::move(r));
    }
    if (opt.format == Format::csv) {
        out << "name,status,detail\n";
        for (const auto& r : results) {
            out << csv_field(r["name"].get<std::string>()) << "," << r["status"].get<std::string>() << ","
                << csv_field(r.value("detail", "")) << "\n";
        }
    } else {
        out << io::dump(io::json{{"checks", results}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}});
    }
    return failed == 0 ? ok : mismatch;
}

/// Runs a command body, mapping library exceptions onto exit codes.
inline int guarded(const std::function<int()>& body, std::ostream& err)
{
    try {
        return body();
    } catch (const size_limit_error& e) {
        err << "error: " << e.what() << "\n";
        return too_large;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const io::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
}

}  // namespace latgame::cli

#endif  // LATGAME_TOOLS_COMMANDS_HPP

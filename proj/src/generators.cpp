#include "segcover/generators.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace segcover {

using nlohmann::json;

// --- GadgetMeta -----------------------------------------------------------

namespace {

[[noreturn]] void missing(const std::string& kind, const std::string& name) {
    throw std::invalid_argument("GadgetMeta: no " + kind + " named \"" + name + "\"");
}

}  // namespace

const std::vector<std::size_t>& GadgetMeta::points(const std::string& name) const {
    const auto it = point_sets.find(name);
    if (it == point_sets.end()) missing("point set", name);
    return it->second;
}

const std::vector<std::size_t>& GadgetMeta::segments(const std::string& name) const {
    const auto it = segment_sets.find(name);
    if (it == segment_sets.end()) missing("segment set", name);
    return it->second;
}

std::size_t GadgetMeta::segment(const std::string& name) const {
    const auto& set = segments(name);
    if (set.size() != 1) missing("singleton segment set", name);
    return set.front();
}

const Rational& GadgetMeta::param(const std::string& name) const {
    const auto it = params.find(name);
    if (it == params.end()) missing("param", name);
    return it->second;
}

std::string save_meta(const GadgetMeta& meta) {
    json j;
    j["point_sets"] = meta.point_sets;
    j["segment_sets"] = meta.segment_sets;
    json p;
    for (const auto& [name, value] : meta.params) p[name] = to_string(value);
    j["params"] = std::move(p);
    j["ints"] = meta.ints;
    return j.dump(2) + "\n";
}

GadgetMeta load_meta(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("meta: JSON parse error: ") + e.what());
    }
    GadgetMeta meta;
    if (j.contains("point_sets")) {
        meta.point_sets = j["point_sets"].get<std::map<std::string, std::vector<std::size_t>>>();
    }
    if (j.contains("segment_sets")) {
        meta.segment_sets = j["segment_sets"].get<std::map<std::string, std::vector<std::size_t>>>();
    }
    if (j.contains("params")) {
        for (const auto& [name, value] : j["params"].items()) {
            const auto r = parse_rational(value.get<std::string>());
            if (!r) throw parse_error("meta: malformed rational param \"" + name + "\"");
            meta.params.emplace(name, *r);
        }
    }
    if (j.contains("ints")) {
        meta.ints = j["ints"].get<std::map<std::string, std::vector<long>>>();
    }
    return meta;
}

// --- shared helpers --------------------------------------------------------

namespace {

void add_point(Instance& inst, Point p, std::string label) {
    inst.points.push_back(std::move(p));
    inst.labels->points.push_back(std::move(label));
}

std::size_t add_segment(Instance& inst, Segment s, Rational w, std::string label) {
    inst.segments.push_back(WeightedSegment{std::move(s), std::move(w)});
    inst.labels->segments.push_back(std::move(label));
    return inst.segments.size() - 1;
}

std::map<Segment, std::size_t> segment_index_map(const Instance& inst) {
    std::map<Segment, std::size_t> out;
    for (std::size_t i = 0; i < inst.segments.size(); ++i) {
        out.emplace(inst.segments[i].seg, i);  // first occurrence wins
    }
    return out;
}

void validate_chains(long n_range, const std::vector<Chain>& chains) {
    std::set<long> all_elements;
    std::size_t total = 0;
    const std::size_t len = chains.empty() ? 0 : chains.front().sets.size();
    for (std::size_t j = 0; j < chains.size(); ++j) {
        const Chain& chain = chains[j];
        if (chain.sets.size() != len || len == 0) {
            throw std::invalid_argument("gen_choice: chains must all have the same positive length");
        }
        for (const auto& set : chain.sets) {
            if (set.empty()) throw std::invalid_argument("gen_choice: chain sets must be nonempty");
            for (long v : set) {
                if (v < 1 || v > n_range) {
                    throw std::invalid_argument("gen_choice: chain elements must lie in 1..N");
                }
            }
            std::set<long> uniq(set.begin(), set.end());
            if (uniq.size() != set.size()) {
                throw std::invalid_argument("gen_choice: chain sets must not repeat elements");
            }
            all_elements.insert(set.begin(), set.end());
            total += set.size();
        }
        for (std::size_t t = 0; t + 1 < chain.sets.size(); ++t) {
            const long hi = *std::max_element(chain.sets[t].begin(), chain.sets[t].end());
            const long lo =
                *std::min_element(chain.sets[t + 1].begin(), chain.sets[t + 1].end());
            if (hi >= lo) {
                throw std::invalid_argument(
                    "gen_choice: consecutive chain sets must strictly increase");
            }
        }
    }
    if (all_elements.size() != total) {
        throw std::invalid_argument("gen_choice: chain sets must be pairwise disjoint");
    }
}

// Appends the 1-D construction for one horizontal line y = y0: the 3N+1
// universe points and, per named chain, the segment blocks between
// consecutive sets. Returns through meta: point sets <prefix>zero / I /
// Iminus / Iplus / all and segment sets R_<name>.
void append_choice_gadget(Instance& inst, GadgetMeta& meta, long n_range, const Rational& y0,
                          const std::vector<std::pair<std::string, const Chain*>>& chains,
                          bool unit_weights, const std::string& prefix) {
    const Rational eps = Rational(1) / (Rational(n_range) * Rational(n_range));
    std::vector<std::size_t>&zero = meta.point_sets[prefix + "zero"];
    std::vector<std::size_t>& ints = meta.point_sets[prefix + "I"];
    std::vector<std::size_t>& minus = meta.point_sets[prefix + "Iminus"];
    std::vector<std::size_t>& plus = meta.point_sets[prefix + "Iplus"];
    std::vector<std::size_t>& all = meta.point_sets[prefix + "all"];

    const auto track = [&](std::vector<std::size_t>& set) {
        set.push_back(inst.points.size() - 1);
        all.push_back(inst.points.size() - 1);
    };
    add_point(inst, Point{Rational(0), y0}, prefix + "0");
    track(zero);
    for (long i = 1; i <= n_range; ++i) {
        const Rational x(i);
        add_point(inst, Point{x - eps, y0}, prefix + std::to_string(i) + "-");
        track(minus);
        add_point(inst, Point{x, y0}, prefix + std::to_string(i));
        track(ints);
        add_point(inst, Point{x + eps, y0}, prefix + std::to_string(i) + "+");
        track(plus);
    }

    const auto weight_of = [&](const Segment& s) {
        return unit_weights ? Rational(1) : axis_parallel_length(s);
    };
    for (const auto& [name, chain] : chains) {
        std::vector<std::size_t>& members = meta.segment_sets["R_" + name];
        const std::size_t len = chain->sets.size();
        for (long a : chain->sets.front()) {
            Segment s(Point{Rational(0), y0}, Point{Rational(a) - eps, y0});
            Rational w = weight_of(s);
            members.push_back(add_segment(inst, std::move(s), std::move(w),
                                          "R_" + name + ":[0," + std::to_string(a) + "-]"));
        }
        for (std::size_t t = 0; t + 1 < len; ++t) {
            for (long a : chain->sets[t]) {
                for (long b : chain->sets[t + 1]) {
                    Segment s(Point{Rational(a) + eps, y0}, Point{Rational(b) - eps, y0});
                    Rational w = weight_of(s);
                    members.push_back(add_segment(inst, std::move(s), std::move(w),
                                                  "R_" + name + ":[" + std::to_string(a) + "+," +
                                                      std::to_string(b) + "-]"));
                }
            }
        }
        for (long a : chain->sets.back()) {
            Segment s(Point{Rational(a) + eps, y0}, Point{Rational(n_range + 1), y0});
            Rational w = weight_of(s);
            members.push_back(add_segment(inst, std::move(s), std::move(w),
                                          "R_" + name + ":[" + std::to_string(a) + "+," +
                                              std::to_string(n_range + 1) + "]"));
        }
    }
}

std::pair<Instance, GadgetMeta> gen_choice_impl(long n_range, const std::vector<Chain>& chains) {
    if (!chains.empty()) validate_chains(n_range, chains);
    Instance inst;
    inst.labels = InstanceLabels{};
    GadgetMeta meta;
    meta.params.emplace("N", Rational(n_range));
    meta.params.emplace("eps", Rational(1) / (Rational(n_range) * Rational(n_range)));
    meta.params.emplace("p", Rational(static_cast<long>(chains.size())));
    meta.params.emplace("ell",
                        Rational(chains.empty() ? 0 : static_cast<long>(chains[0].sets.size())));
    std::vector<std::pair<std::string, const Chain*>> named;
    for (std::size_t j = 0; j < chains.size(); ++j) {
        named.emplace_back(std::to_string(j), &chains[j]);
        for (std::size_t t = 0; t < chains[j].sets.size(); ++t) {
            meta.ints["chain_" + std::to_string(j) + "_" + std::to_string(t)] = chains[j].sets[t];
        }
    }
    append_choice_gadget(inst, meta, n_range, Rational(0), named, /*unit_weights=*/true, "");
    return {std::move(inst), std::move(meta)};
}

}  // namespace

std::pair<Instance, GadgetMeta> gen_choice(long n_range, const std::vector<Chain>& chains) {
    if (n_range <= 100) throw std::invalid_argument("gen_choice: N must exceed 100");
    return gen_choice_impl(n_range, chains);
}

namespace detail {

std::pair<Instance, GadgetMeta> gen_choice_relaxed(long n_range, const std::vector<Chain>& chains) {
    if (n_range < 2) throw std::invalid_argument("gen_choice_relaxed: N must be at least 2");
    return gen_choice_impl(n_range, chains);
}

}  // namespace detail

Solution build_choice_cover(const Instance& inst, const GadgetMeta& meta, std::size_t chain_index,
                            const std::vector<long>& transversal) {
    const long n_range = meta.param("N").get_num().get_si();
    const Rational eps = meta.param("eps");
    const std::size_t len = static_cast<std::size_t>(meta.param("ell").get_num().get_si());
    const std::size_t p = static_cast<std::size_t>(meta.param("p").get_num().get_si());
    if (chain_index >= p) throw std::invalid_argument("build_choice_cover: no such chain");
    if (transversal.size() != len) {
        throw std::invalid_argument("build_choice_cover: transversal must pick one element per set");
    }
    for (std::size_t t = 0; t < len; ++t) {
        const auto it =
            meta.ints.find("chain_" + std::to_string(chain_index) + "_" + std::to_string(t));
        if (it == meta.ints.end() ||
            std::find(it->second.begin(), it->second.end(), transversal[t]) == it->second.end()) {
            throw std::invalid_argument("build_choice_cover: transversal element " +
                                        std::to_string(transversal[t]) +
                                        " is not in the chain's set " + std::to_string(t));
        }
    }
    const auto by_coords = segment_index_map(inst);
    const Rational y = inst.points.at(0).y;
    const auto lookup = [&](const Segment& s) {
        const auto it = by_coords.find(s);
        if (it == by_coords.end()) {
            throw std::logic_error("build_choice_cover: generated segment not found");
        }
        return it->second;
    };
    std::vector<std::size_t> picked;
    picked.push_back(
        lookup(Segment(Point{Rational(0), y}, Point{Rational(transversal[0]) - eps, y})));
    for (std::size_t t = 0; t + 1 < len; ++t) {
        picked.push_back(lookup(Segment(Point{Rational(transversal[t]) + eps, y},
                                        Point{Rational(transversal[t + 1]) - eps, y})));
    }
    picked.push_back(lookup(
        Segment(Point{Rational(transversal[len - 1]) + eps, y}, Point{Rational(n_range + 1), y})));
    return make_solution(inst, std::move(picked));
}

// --- subgraph-isomorphism reduction ----------------------------------------

namespace {

struct PsiGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v
    std::vector<int> lambda;
};

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

std::vector<std::set<int>> h_adjacency(const PsiInput& input) {
    if (input.k < 4) throw std::invalid_argument("gen_psi: pattern graph needs at least 4 vertices");
    std::vector<std::set<int>> adj(static_cast<std::size_t>(input.k) + 1);
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : input.h_edges) {
        if (a < 1 || a > input.k || b < 1 || b > input.k || a == b) {
            throw std::invalid_argument("gen_psi: pattern edge out of range");
        }
        if (!seen.insert(norm_edge(a, b)).second) {
            throw std::invalid_argument("gen_psi: duplicate pattern edge");
        }
        adj[static_cast<std::size_t>(a)].insert(b);
        adj[static_cast<std::size_t>(b)].insert(a);
    }
    for (int a = 1; a <= input.k; ++a) {
        if (adj[static_cast<std::size_t>(a)].size() != 3) {
            throw std::invalid_argument("gen_psi: pattern graph is not 3-regular");
        }
    }
    return adj;
}

PsiGraph validated_host(const PsiInput& input, const std::vector<std::set<int>>& h_adj) {
    PsiGraph g;
    g.vertices = input.g_vertices;
    g.lambda = input.lambda;
    if (g.vertices < 1 || static_cast<std::size_t>(g.vertices) != g.lambda.size()) {
        throw std::invalid_argument("gen_psi: lambda must color every host vertex");
    }
    for (int c : g.lambda) {
        if (c < 1 || c > input.k) throw std::invalid_argument("gen_psi: lambda value out of range");
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : input.g_edges) {
        if (u < 1 || u > g.vertices || v < 1 || v > g.vertices || u == v) {
            throw std::invalid_argument("gen_psi: host edge out of range");
        }
        const auto e = norm_edge(u, v);
        if (!seen.insert(e).second) throw std::invalid_argument("gen_psi: duplicate host edge");
        const int a = g.lambda[static_cast<std::size_t>(e.first) - 1];
        const int b = g.lambda[static_cast<std::size_t>(e.second) - 1];
        if (a == b || !h_adj[static_cast<std::size_t>(a)].count(b)) {
            throw std::invalid_argument("gen_psi: host edge " + std::to_string(u) + "-" +
                                        std::to_string(v) + " is lambda-incompatible");
        }
        g.edges.push_back(e);
    }
    if (g.edges.empty()) throw std::invalid_argument("gen_psi: host graph has no edges");
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Duplicates a vertex (first one with an edge) until |E| > 100k. A copy gets
// the same color and the same neighborhood, so embeddings transfer both ways.
void pad_host(PsiGraph& g, int k) {
    std::vector<int> degree(static_cast<std::size_t>(g.vertices) + 1, 0);
    for (const auto& [u, v] : g.edges) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    int donor = 0;
    for (int u = 1; u <= g.vertices; ++u) {
        if (degree[static_cast<std::size_t>(u)] > 0) {
            donor = u;
            break;
        }
    }
    while (g.edges.size() <= static_cast<std::size_t>(100) * static_cast<std::size_t>(k)) {
        const int copy = ++g.vertices;
        g.lambda.push_back(g.lambda[static_cast<std::size_t>(donor) - 1]);
        std::vector<std::pair<int, int>> added;
        for (const auto& [u, v] : g.edges) {
            if (u == donor) added.push_back(norm_edge(copy, v));
            if (v == donor) added.push_back(norm_edge(copy, u));
        }
        g.edges.insert(g.edges.end(), added.begin(), added.end());
        std::sort(g.edges.begin(), g.edges.end());
    }
}

}  // namespace

std::pair<Instance, GadgetMeta> gen_psi(const PsiInput& input) {
    const auto h_adj = h_adjacency(input);
    PsiGraph g = validated_host(input, h_adj);
    pad_host(g, input.k);

    const long n_edges = static_cast<long>(g.edges.size());
    const Rational eps = Rational(1) / (Rational(n_edges) * Rational(n_edges));
    const Rational delta = eps * eps;  // 1/N^4
    const int ell = 3 * input.k / 2;

    // xi: number the host edges so that every class E_ab occupies a
    // contiguous block; classes in lex order, edges lex within a class.
    std::vector<std::pair<int, int>> h_edge_list;
    for (int a = 1; a <= input.k; ++a) {
        for (int b : h_adj[static_cast<std::size_t>(a)]) {
            if (a < b) h_edge_list.push_back({a, b});
        }
    }
    std::sort(h_edge_list.begin(), h_edge_list.end());
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> classes;
    for (const auto& e : g.edges) {
        classes[norm_edge(g.lambda[static_cast<std::size_t>(e.first) - 1],
                          g.lambda[static_cast<std::size_t>(e.second) - 1])]
            .push_back(e);
    }
    std::map<std::pair<int, int>, long> xi;
    std::vector<std::pair<int, int>> edges_in_xi_order;
    for (const auto& ab : h_edge_list) {
        const auto it = classes.find(ab);
        if (it == classes.end()) continue;
        for (const auto& e : it->second) {
            xi.emplace(e, static_cast<long>(edges_in_xi_order.size()) + 1);
            edges_in_xi_order.push_back(e);
        }
    }

    Instance inst;
    inst.labels = InstanceLabels{};
    GadgetMeta meta;
    meta.params.emplace("k", Rational(input.k));
    meta.params.emplace("N", Rational(n_edges));
    meta.params.emplace("eps", eps);
    meta.params.emplace("delta", delta);
    meta.params.emplace("ell", Rational(ell));
    meta.params.emplace("kprime", make_rational(11L * input.k, 2));
    meta.params.emplace("W", Rational(input.k) * (Rational(n_edges + 1) - 6 * eps) +
                                 delta * Rational(ell));
    meta.ints["lambda"] = std::vector<long>(g.lambda.begin(), g.lambda.end());
    meta.ints["g_vertices"] = {static_cast<long>(g.vertices)};
    for (const auto& [a, b] : h_edge_list) {
        meta.ints["h_edge_a"].push_back(a);
        meta.ints["h_edge_b"].push_back(b);
    }
    for (const auto& [u, v] : edges_in_xi_order) {
        meta.ints["xi_u"].push_back(u);
        meta.ints["xi_v"].push_back(v);
    }

    // Per pattern vertex a: one chain per usable host vertex of color a,
    // over the xi values of its incident edges split by class.
    for (int a = 1; a <= input.k; ++a) {
        std::vector<std::pair<long, int>> order;  // (class xi start, neighbor)
        for (int b : h_adj[static_cast<std::size_t>(a)]) {
            const auto it = classes.find(norm_edge(a, b));
            long start = 0;
            if (it != classes.end()) start = xi.at(it->second.front());
            order.push_back({start, b});
        }
        std::sort(order.begin(), order.end());
        for (const auto& [start, b] : order) {
            meta.ints["chain_order_" + std::to_string(a)].push_back(b);
        }

        std::vector<Chain> chains;
        std::vector<long> chain_vertices;
        for (int u = 1; u <= g.vertices; ++u) {
            if (g.lambda[static_cast<std::size_t>(u) - 1] != a) continue;
            Chain chain;
            bool usable = true;
            for (const auto& [start, b] : order) {
                std::vector<long> values;
                for (const auto& e : g.edges) {
                    if (e.first != u && e.second != u) continue;
                    const int other = e.first == u ? e.second : e.first;
                    if (g.lambda[static_cast<std::size_t>(other) - 1] != b) continue;
                    values.push_back(xi.at(e));
                }
                if (values.empty()) {
                    usable = false;  // u cannot be phi(a): no edge into this class
                    break;
                }
                std::sort(values.begin(), values.end());
                chain.sets.push_back(std::move(values));
            }
            if (!usable) {
                meta.ints["dropped"].push_back(u);
                continue;
            }
            chains.push_back(std::move(chain));
            chain_vertices.push_back(u);
        }
        meta.ints["chain_vertices_" + std::to_string(a)] = chain_vertices;

        std::vector<std::pair<std::string, const Chain*>> named;
        for (std::size_t i = 0; i < chains.size(); ++i) {
            named.emplace_back("a" + std::to_string(a) + "_u" + std::to_string(chain_vertices[i]),
                               &chains[i]);
        }
        append_choice_gadget(inst, meta, n_edges, Rational(a), named, /*unit_weights=*/false,
                             "a" + std::to_string(a) + "_");
    }

    // Vertical edge segments, weight delta each.
    std::vector<std::size_t>& edge_set = meta.segment_sets["edge_segments"];
    for (const auto& e : edges_in_xi_order) {
        const Rational x(xi.at(e));
        const Rational ya(g.lambda[static_cast<std::size_t>(e.first) - 1]);
        const Rational yb(g.lambda[static_cast<std::size_t>(e.second) - 1]);
        edge_set.push_back(add_segment(inst, Segment(Point{x, ya}, Point{x, yb}), delta,
                                       "s_" + std::to_string(e.first) + "_" +
                                           std::to_string(e.second)));
    }
    return {std::move(inst), std::move(meta)};
}

Solution build_psi_solution(const Instance& inst, const GadgetMeta& meta,
                            const std::vector<int>& phi) {
    const int k = static_cast<int>(meta.param("k").get_num().get_si());
    const long n_edges = meta.param("N").get_num().get_si();
    const Rational eps = meta.param("eps");
    const auto& lambda = meta.ints.at("lambda");
    const auto& xi_u = meta.ints.at("xi_u");
    const auto& xi_v = meta.ints.at("xi_v");
    if (phi.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("build_psi_solution: phi must map every pattern vertex");
    }
    std::map<std::pair<long, long>, long> xi;
    for (std::size_t r = 0; r < xi_u.size(); ++r) {
        xi.emplace(std::make_pair(std::min(xi_u[r], xi_v[r]), std::max(xi_u[r], xi_v[r])),
                   static_cast<long>(r) + 1);
    }
    for (int a = 1; a <= k; ++a) {
        const long u = phi[static_cast<std::size_t>(a) - 1];
        if (u < 1 || static_cast<std::size_t>(u) > lambda.size() ||
            lambda[static_cast<std::size_t>(u) - 1] != a) {
            throw std::invalid_argument("build_psi_solution: phi does not respect the coloring");
        }
    }
    const auto& h_a = meta.ints.at("h_edge_a");
    const auto& h_b = meta.ints.at("h_edge_b");
    for (std::size_t e = 0; e < h_a.size(); ++e) {
        const long u = phi[static_cast<std::size_t>(h_a[e]) - 1];
        const long v = phi[static_cast<std::size_t>(h_b[e]) - 1];
        if (!xi.count({std::min(u, v), std::max(u, v)})) {
            throw std::invalid_argument("build_psi_solution: phi is not an embedding (edge " +
                                        std::to_string(h_a[e]) + "-" + std::to_string(h_b[e]) +
                                        " has no host edge)");
        }
    }

    const auto by_coords = segment_index_map(inst);
    const auto lookup = [&](const Segment& s) {
        const auto it = by_coords.find(s);
        if (it == by_coords.end()) {
            throw std::logic_error("build_psi_solution: generated segment not found");
        }
        return it->second;
    };
    std::vector<std::size_t> picked;
    for (int a = 1; a <= k; ++a) {
        const long u = phi[static_cast<std::size_t>(a) - 1];
        const auto& order = meta.ints.at("chain_order_" + std::to_string(a));
        std::vector<long> b_values;
        for (long b : order) {
            const long v = phi[static_cast<std::size_t>(b) - 1];
            b_values.push_back(xi.at({std::min(u, v), std::max(u, v)}));
        }
        const Rational y(a);
        picked.push_back(
            lookup(Segment(Point{Rational(0), y}, Point{Rational(b_values[0]) - eps, y})));
        for (std::size_t t = 0; t + 1 < b_values.size(); ++t) {
            picked.push_back(lookup(Segment(Point{Rational(b_values[t]) + eps, y},
                                            Point{Rational(b_values[t + 1]) - eps, y})));
        }
        picked.push_back(lookup(Segment(Point{Rational(b_values.back()) + eps, y},
                                        Point{Rational(n_edges + 1), y})));
    }
    for (std::size_t e = 0; e < h_a.size(); ++e) {
        const long u = phi[static_cast<std::size_t>(h_a[e]) - 1];
        const long v = phi[static_cast<std::size_t>(h_b[e]) - 1];
        const Rational x(xi.at({std::min(u, v), std::max(u, v)}));
        picked.push_back(
            lookup(Segment(Point{x, Rational(h_a[e])}, Point{x, Rational(h_b[e])})));
    }
    return make_solution(inst, std::move(picked));
}

// --- SAT reduction -----------------------------------------------------------

CnfFormula cnf_from_signed(int variables, const std::vector<std::array<int, 3>>& clauses) {
    CnfFormula f;
    f.variables = variables;
    for (const auto& clause : clauses) {
        std::array<CnfLiteral, 3> lits;
        for (int t = 0; t < 3; ++t) {
            const int raw = clause[static_cast<std::size_t>(t)];
            if (raw == 0) throw std::invalid_argument("cnf_from_signed: literal 0 is not allowed");
            lits[static_cast<std::size_t>(t)] = CnfLiteral{std::abs(raw), raw < 0};
        }
        f.clauses.push_back(lits);
    }
    return f;
}

namespace {

void validate_formula(const CnfFormula& f) {
    if (f.variables < 3 || f.variables % 3 != 0) {
        throw std::invalid_argument("gen_sat: variable count must be a positive multiple of 3");
    }
    if (f.clauses.size() != static_cast<std::size_t>(f.variables) * 5 / 3) {
        throw std::invalid_argument("gen_sat: clause count must be 5n/3");
    }
    std::vector<int> occurrences(static_cast<std::size_t>(f.variables) + 1, 0);
    for (const auto& clause : f.clauses) {
        for (const CnfLiteral& lit : clause) {
            if (lit.var < 1 || lit.var > f.variables) {
                throw std::invalid_argument("gen_sat: literal variable out of range");
            }
            ++occurrences[static_cast<std::size_t>(lit.var)];
        }
    }
    for (int v = 1; v <= f.variables; ++v) {
        if (occurrences[static_cast<std::size_t>(v)] != 5) {
            throw std::invalid_argument("gen_sat: variable " + std::to_string(v) +
                                        " must occur exactly 5 times");
        }
    }
}

bool satisfies(const std::vector<bool>& eta, const CnfLiteral& lit) {
    return eta[static_cast<std::size_t>(lit.var) - 1] != lit.negated;
}

}  // namespace

std::pair<Instance, GadgetMeta> gen_sat(const CnfFormula& formula) {
    validate_formula(formula);
    const long n = formula.variables;
    const long m = static_cast<long>(formula.clauses.size());
    const long big = 100 * n;  // clears every clause column: 20m + 9 < 100n

    Instance inst;
    inst.labels = InstanceLabels{};
    GadgetMeta meta;
    meta.params.emplace("n", Rational(n));
    meta.params.emplace("m", Rational(m));
    meta.params.emplace("L", Rational(big));

    const auto pt = [](long x, long y) { return Point{Rational(x), Rational(y)}; };

    // Variable gadgets. g/h only anchor segment endpoints and stay out of U.
    for (long i = 1; i <= n; ++i) {
        const std::string vi = std::to_string(i);
        const long base = 4 * i;
        const Point a = pt(-3 * big, base), b = pt(-2 * big, base), c = pt(-big, base);
        const Point d = pt(-3 * big, base + 1), e = pt(-2 * big, base + 1);
        const Point f = pt(-2 * big, base + 2);
        const Point g = pt(big, base), h = pt(big, base + 2);
        auto& points = meta.point_sets["pointsVariable_" + vi];
        const Point named[6] = {a, b, c, d, e, f};
        const char* tags = "abcdef";
        for (int t = 0; t < 6; ++t) {
            add_point(inst, named[t], "v" + vi + "." + tags[t]);
            points.push_back(inst.points.size() - 1);
        }
        auto& true_set = meta.segment_sets["chooseVariableTrue_" + vi];
        auto& false_set = meta.segment_sets["chooseVariableFalse_" + vi];
        auto& all = meta.segment_sets["segmentsVariable_" + vi];
        const auto add = [&](std::vector<std::size_t>& set, const Point& u, const Point& v,
                             const char* tag) {
            const std::size_t idx =
                add_segment(inst, Segment(u, v), Rational(1), "v" + vi + "." + tag);
            set.push_back(idx);
            all.push_back(idx);
            return idx;
        };
        add(true_set, a, d, "ad");
        add(true_set, b, f, "bf");
        meta.segment_sets["xTrueSegment_" + vi] = {add(true_set, c, g, "cg")};
        add(false_set, a, c, "ac");
        add(false_set, d, e, "de");
        meta.segment_sets["xFalseSegment_" + vi] = {add(false_set, f, h, "fh")};
    }

    // Clause gadgets: three transfer columns feeding two chained OR gadgets.
    for (long i = 1; i <= m; ++i) {
        const std::string ci = std::to_string(i);
        const auto& clause = formula.clauses[static_cast<std::size_t>(i) - 1];
        const auto literal_y = [&](int t) {
            const CnfLiteral& lit = clause[static_cast<std::size_t>(t)];
            return 4 * static_cast<long>(lit.var) + (lit.negated ? 2 : 0);
        };
        const Point x0 = pt(20 * i, literal_y(0)), x1 = pt(20 * i, 4 * (n + 1));
        const Point y0 = pt(20 * i + 1, literal_y(1)), y1 = pt(20 * i + 1, 4 * (n + 1) + 4);
        const Point z0 = pt(20 * i + 2, literal_y(2)), z1 = pt(20 * i + 2, 4 * (n + 1) + 6);

        auto& clause_points = meta.point_sets["pointsClause_" + ci];
        const auto add_clause_point = [&](const Point& p, const std::string& tag) {
            add_point(inst, p, "c" + ci + "." + tag);
            clause_points.push_back(inst.points.size() - 1);
            return inst.points.size() - 1;
        };
        auto& literal_points = meta.point_sets["literalPoints_" + ci];
        literal_points.push_back(add_clause_point(x0, "x0"));
        add_clause_point(x1, "x1");
        literal_points.push_back(add_clause_point(y0, "y0"));
        add_clause_point(y1, "y1");
        literal_points.push_back(add_clause_point(z0, "z0"));
        add_clause_point(z1, "z1");

        // OR gadget points; v_{i,0} coincides with l_{i,1} and is added once.
        Point l[2], mm[2], nn[2], o[2], pp[2], q[2], r[2], s[2], t[2], u[2], v[2];
        for (int j = 0; j < 2; ++j) {
            const long ox = 20 * i + 3 + 3 * j;
            const long oy = 4 * (n + 1) + 2 * j;
            l[j] = pt(ox, oy);
            mm[j] = pt(ox, oy + 1);
            nn[j] = pt(ox, oy + 2);
            o[j] = pt(ox, oy + 3);
            pp[j] = pt(ox, oy + 4);
            q[j] = pt(ox + 1, oy + 1);
            r[j] = pt(ox + 1, oy + 3);
            s[j] = pt(ox + 2, oy + 1);
            t[j] = pt(ox + 2, oy + 2);
            u[j] = pt(ox + 2, oy + 3);
            v[j] = pt(ox + 3, oy + 2);
            auto& or_points = meta.point_sets["pointsOr_" + ci + "_" + std::to_string(j)];
            const Point named[10] = {l[j], mm[j], nn[j], o[j], pp[j], q[j], r[j], s[j], t[j], u[j]};
            const char* tags[10] = {"l", "m", "n", "o", "p", "q", "r", "s", "t", "u"};
            for (int w = 0; w < 10; ++w) {
                add_point(inst, named[w], "c" + ci + ".or" + std::to_string(j) + "." + tags[w]);
                or_points.push_back(inst.points.size() - 1);
                clause_points.push_back(inst.points.size() - 1);
            }
        }
        add_clause_point(v[1], "v1");

        auto& clause_segments = meta.segment_sets["segmentsClause_" + ci];
        const auto add_named = [&](const std::string& name, const Point& from, const Point& to,
                                   const std::string& tag) {
            const std::size_t idx =
                add_segment(inst, Segment(from, to), Rational(1), "c" + ci + "." + tag);
            meta.segment_sets[name] = {idx};
            clause_segments.push_back(idx);
            return idx;
        };
        add_named("moveX_" + ci, x0, x1, "moveX");
        add_named("moveY_" + ci, y0, y1, "moveY");
        add_named("moveZ_" + ci, z0, z1, "moveZ");
        add_named("transferX_" + ci, x1, l[0], "transferX");
        add_named("transferY_" + ci, y1, pp[0], "transferY");
        add_named("transferZ_" + ci, z1, pp[1], "transferZ");
        for (int j = 0; j < 2; ++j) {
            const std::string sj = ci + "_" + std::to_string(j);
            const std::string oj = "or" + std::to_string(j) + ".";
            auto& or_segments = meta.segment_sets["segmentsOr_" + sj];
            auto& or_false = meta.segment_sets["chooseOrFalse_" + sj];
            auto& or_true = meta.segment_sets["chooseOrTrue_" + sj];
            const auto add_or = [&](std::vector<std::size_t>& set, const Point& from,
                                    const Point& to, const std::string& tag) {
                const std::size_t idx =
                    add_segment(inst, Segment(from, to), Rational(1), "c" + ci + "." + oj + tag);
                set.push_back(idx);
                or_segments.push_back(idx);
                clause_segments.push_back(idx);
                return idx;
            };
            add_or(or_false, q[j], r[j], "qr");
            add_or(or_false, s[j], u[j], "su");
            add_or(or_true, mm[j], s[j], "ms");
            add_or(or_true, o[j], u[j], "ou");
            meta.segment_sets["orOutput_" + sj] = {add_or(or_true, t[j], v[j], "tv")};
            meta.segment_sets["orMoveLow_" + sj] = {add_or(
                meta.segment_sets["orMove_" + sj], l[j], nn[j], "ln")};
            meta.segment_sets["orMoveHigh_" + sj] = {add_or(
                meta.segment_sets["orMove_" + sj], nn[j], pp[j], "np")};
        }
        meta.ints["clause_" + ci] = {
            clause[0].negated ? -static_cast<long>(clause[0].var) : clause[0].var,
            clause[1].negated ? -static_cast<long>(clause[1].var) : clause[1].var,
            clause[2].negated ? -static_cast<long>(clause[2].var) : clause[2].var};
    }
    return {std::move(inst), std::move(meta)};
}

namespace {

CnfLiteral literal_from_signed(long raw) {
    return CnfLiteral{static_cast<int>(std::abs(raw)), raw < 0};
}

}  // namespace

Solution build_sat_solution(const Instance& inst, const GadgetMeta& meta,
                            const std::vector<bool>& eta,
                            const std::vector<std::optional<int>>& choices) {
    const long n = meta.param("n").get_num().get_si();
    const long m = meta.param("m").get_num().get_si();
    if (eta.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("build_sat_solution: assignment must cover every variable");
    }
    if (choices.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("build_sat_solution: one choice entry per clause required");
    }
    std::vector<std::size_t> picked;
    const auto append = [&](const std::vector<std::size_t>& set) {
        picked.insert(picked.end(), set.begin(), set.end());
    };
    for (long i = 1; i <= n; ++i) {
        append(meta.segments((eta[static_cast<std::size_t>(i) - 1] ? "chooseVariableTrue_"
                                                                   : "chooseVariableFalse_") +
                             std::to_string(i)));
    }
    for (long i = 1; i <= m; ++i) {
        const std::string ci = std::to_string(i);
        const auto& raw = meta.ints.at("clause_" + ci);
        const std::optional<int>& choice = choices[static_cast<std::size_t>(i) - 1];
        if (choice) {
            if (*choice < 0 || *choice > 2) {
                throw std::invalid_argument("build_sat_solution: literal choice out of range");
            }
            if (!satisfies(eta, literal_from_signed(raw[static_cast<std::size_t>(*choice)]))) {
                throw std::invalid_argument("build_sat_solution: chosen literal of clause " + ci +
                                            " is not satisfied");
            }
            switch (*choice) {
                case 0:
                    picked.push_back(meta.segment("orMoveHigh_" + ci + "_0"));
                    append(meta.segments("chooseOrTrue_" + ci + "_0"));
                    picked.push_back(meta.segment("orMoveHigh_" + ci + "_1"));
                    append(meta.segments("chooseOrTrue_" + ci + "_1"));
                    picked.push_back(meta.segment("transferX_" + ci));
                    picked.push_back(meta.segment("moveY_" + ci));
                    picked.push_back(meta.segment("moveZ_" + ci));
                    break;
                case 1:
                    picked.push_back(meta.segment("orMoveLow_" + ci + "_0"));
                    append(meta.segments("chooseOrTrue_" + ci + "_0"));
                    picked.push_back(meta.segment("orMoveHigh_" + ci + "_1"));
                    append(meta.segments("chooseOrTrue_" + ci + "_1"));
                    picked.push_back(meta.segment("moveX_" + ci));
                    picked.push_back(meta.segment("transferY_" + ci));
                    picked.push_back(meta.segment("moveZ_" + ci));
                    break;
                default:
                    append(meta.segments("orMove_" + ci + "_0"));
                    append(meta.segments("chooseOrFalse_" + ci + "_0"));
                    picked.push_back(meta.segment("orMoveLow_" + ci + "_1"));
                    append(meta.segments("chooseOrTrue_" + ci + "_1"));
                    picked.push_back(meta.segment("moveX_" + ci));
                    picked.push_back(meta.segment("moveY_" + ci));
                    picked.push_back(meta.segment("transferZ_" + ci));
                    break;
            }
        } else {
            for (long lit : raw) {
                if (satisfies(eta, literal_from_signed(lit))) {
                    throw std::invalid_argument("build_sat_solution: clause " + ci +
                                                " is satisfied but no literal was chosen");
                }
            }
            append(meta.segments("orMove_" + ci + "_0"));
            append(meta.segments("chooseOrFalse_" + ci + "_0"));
            append(meta.segments("orMove_" + ci + "_1"));
            append(meta.segments("chooseOrFalse_" + ci + "_1"));
            picked.push_back(meta.segment("moveX_" + ci));
            picked.push_back(meta.segment("moveY_" + ci));
            picked.push_back(meta.segment("moveZ_" + ci));
            picked.push_back(meta.segment("orOutput_" + ci + "_1"));
        }
    }
    return make_solution(inst, std::move(picked));
}

Solution build_sat_solution(const Instance& inst, const GadgetMeta& meta,
                            const std::vector<bool>& eta) {
    const long m = meta.param("m").get_num().get_si();
    std::vector<std::optional<int>> choices(static_cast<std::size_t>(m));
    for (long i = 1; i <= m; ++i) {
        const auto& raw = meta.ints.at("clause_" + std::to_string(i));
        for (int t = 0; t < 3; ++t) {
            if (satisfies(eta, literal_from_signed(raw[static_cast<std::size_t>(t)]))) {
                choices[static_cast<std::size_t>(i) - 1] = t;
                break;
            }
        }
    }
    return build_sat_solution(inst, meta, eta, choices);
}

std::vector<bool> decode_sat_assignment(const Instance& inst, const GadgetMeta& meta,
                                        const Solution& sol) {
    if (!verify_cover(inst, sol).covered) {
        throw std::invalid_argument("decode_sat_assignment: solution does not cover the instance");
    }
    const long n = meta.param("n").get_num().get_si();
    const std::set<std::size_t> selected(sol.indices.begin(), sol.indices.end());
    std::vector<bool> eta(static_cast<std::size_t>(n), false);
    for (long i = 1; i <= n; ++i) {
        const std::string vi = std::to_string(i);
        std::size_t used = 0;
        for (std::size_t s : meta.segments("segmentsVariable_" + vi)) used += selected.count(s);
        if (used >= 4) {
            eta[static_cast<std::size_t>(i) - 1] = true;  // overpaid gadget defaults to true
        } else {
            eta[static_cast<std::size_t>(i) - 1] =
                selected.count(meta.segment("xTrueSegment_" + vi)) > 0;
        }
    }
    return eta;
}

}  // namespace segcover

#pragma once

#include "segcover/instance.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>

namespace segcover {

// A chain: consecutive sets strictly increase, i.e. every element of sets[t]
// is smaller than every element of sets[t+1]. Sets are nonempty sets of
// positive integers.
struct Chain {
    std::vector<std::vector<long>> sets;
};

// Input of the subgraph-embedding reduction: a 3-regular pattern graph H on
// vertices 1..k, a host graph G on vertices 1..g_vertices, and a coloring
// lambda of G's vertices by H's vertices. Every edge uv of G must satisfy
// lambda(u)lambda(v) in E(H).
struct PsiInput {
    int k = 0;
    std::vector<std::pair<int, int>> h_edges;
    int g_vertices = 0;
    std::vector<std::pair<int, int>> g_edges;
    std::vector<int> lambda;
};

struct CnfLiteral {
    int var = 0;  // 1-based
    bool negated = false;
};

// CNF with exactly 3 literals per clause and exactly 5 occurrences of every
// variable; consequently 3 | n and m = 5n/3.
struct CnfFormula {
    int variables = 0;
    std::vector<std::array<CnfLiteral, 3>> clauses;
};

// Converts DIMACS-style signed literal triples.
CnfFormula cnf_from_signed(int variables, const std::vector<std::array<int, 3>>& clauses);

// Named index maps tying generated instances back to their gadget anatomy,
// plus the construction parameters. Everything needed to assemble and decode
// the constructive solutions below.
struct GadgetMeta {
    std::map<std::string, std::vector<std::size_t>> point_sets;
    std::map<std::string, std::vector<std::size_t>> segment_sets;
    std::map<std::string, Rational> params;
    std::map<std::string, std::vector<long>> ints;

    const std::vector<std::size_t>& points(const std::string& name) const;
    const std::vector<std::size_t>& segments(const std::string& name) const;
    std::size_t segment(const std::string& name) const;  // singleton sets
    const Rational& param(const std::string& name) const;
};

std::string save_meta(const GadgetMeta& meta);
GadgetMeta load_meta(const std::string& text);

// --- choice gadget ------------------------------------------------------

// One-dimensional construction on the x-axis for integer N and chains over
// {1..N} with pairwise disjoint sets: universe {0} u {i-eps, i, i+eps} for
// eps = 1/N^2, and per chain the unit-weight segments [0,a-eps],
// [a+eps,b-eps], [a+eps,N+1] between consecutive chain sets. Cheap covers of
// everything but the integers are forced to skip exactly one transversal of
// one chain. Requires N > 100.
std::pair<Instance, GadgetMeta> gen_choice(long n_range, const std::vector<Chain>& chains);

namespace detail {
// Test-only entry point with the N > 100 bound relaxed to N >= 2, so the
// small fixtures stay exhaustively enumerable.
std::pair<Instance, GadgetMeta> gen_choice_relaxed(long n_range, const std::vector<Chain>& chains);
}  // namespace detail

// The canonical cover that misses exactly the transversal B of the given
// chain: [0,b1-eps], [b1+eps,b2-eps], ..., [bl+eps,N+1]. chain_index is
// 0-based; B picks one element from each set of that chain.
Solution build_choice_cover(const Instance& inst, const GadgetMeta& meta, std::size_t chain_index,
                            const std::vector<long>& transversal);

// --- subgraph-isomorphism reduction --------------------------------------

// The weighted instance encoding a PsiInput: one choice gadget per pattern
// vertex a on the horizontal line y = a (segments weighted by their length),
// one vertical segment of weight 1/N^4 per host edge, and the budget
// W = k(N+1-6/N^2) + ell/N^4. G is padded by duplicating a vertex until
// |E(G)| > 100k.
std::pair<Instance, GadgetMeta> gen_psi(const PsiInput& input);

// The solution induced by an embedding phi (phi[a-1] = host vertex of
// pattern vertex a): 4 choice segments per pattern vertex plus the ell edge
// segments, 11k/2 segments of total weight exactly W.
Solution build_psi_solution(const Instance& inst, const GadgetMeta& meta,
                            const std::vector<int>& phi);

// --- SAT reduction --------------------------------------------------------

// The unweighted axis-parallel instance encoding a Max-(E3,E5)-SAT formula:
// per variable a 6-point/6-segment gadget with two complementary 3-segment
// covers, per clause two chained OR gadgets plus value-transfer segments,
// with minimum clause cost 11 when some literal's point is already covered
// by the matching variable segment and 12 otherwise.
std::pair<Instance, GadgetMeta> gen_sat(const CnfFormula& formula);

// The cover induced by an assignment: the matching 3-segment choice per
// variable, an 11-segment clause cover through the chosen satisfied literal
// (choices[i] in {0,1,2}), or the 12-segment fallback where choices[i] is
// nullopt (allowed only if the clause is really unsatisfied). Size is
// 64n/3 + #unsatisfied.
Solution build_sat_solution(const Instance& inst, const GadgetMeta& meta,
                            const std::vector<bool>& eta,
                            const std::vector<std::optional<int>>& choices);

// Convenience: picks the first satisfying literal of each clause.
Solution build_sat_solution(const Instance& inst, const GadgetMeta& meta,
                            const std::vector<bool>& eta);

// Reads an assignment back out of a cover: true iff the gadget's xTrue
// segment was picked, with variables whose gadget got 4 or more segments
// defaulting to true. Requires sol to cover the instance.
std::vector<bool> decode_sat_assignment(const Instance& inst, const GadgetMeta& meta,
                                        const Solution& sol);

}  // namespace segcover

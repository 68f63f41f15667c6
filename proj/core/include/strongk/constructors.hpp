#pragma once
#include <optional>
#include <string>
#include <vector>

#include "strongk/digraph.hpp"
#include "strongk/exact_solver.hpp"

namespace strongk {

/// Vertex-disjoint cycles; a length-2 sequence denotes a digon.  Used as the
/// deleted arc set turning a complete digraph into a minimally strong
/// subgraph (2, n-2)-arc-connected one.
struct CycleCover {
    std::vector<std::vector<int>> cycles;
};

/// "0-1,2-3-4" -> two cycles.
CycleCover parse_cycle_cover(const std::string& text);
std::string format_cycle_cover(const CycleCover& cover);

/// n-1 pairwise arc-disjoint directed Hamiltonian cycles partitioning the
/// arcs of the complete bidirected digraph of order n.  Odd n by rotation of
/// an undirected Hamiltonian decomposition, each cycle in both orientations;
/// even n by bounded backtracking search.  Throws ParamError for n in {4, 6}
/// (no decomposition exists) and CapError for even n above the search limit
/// (default 8).
std::vector<std::vector<Arc>> hamiltonian_decomposition(int n,
                                                        int search_limit = 8);

/// Exhaustive existence check used to certify the k = n in {4, 6} upper
/// bound: does the complete bidirected digraph of order n decompose into
/// n-1 directed Hamiltonian cycles?  The first cycle is fixed to the
/// rotation, which is harmless for existence by relabeling.
bool hamiltonian_decomposition_exists(int n, long node_budget = 50000000);

/// The exact value of lambda_k on the complete bidirected digraph of
/// order n: n-2 when k = n in {4, 6}, else n-1.
int lambda_k_complete_value(int n, int k);

/// A verified packing in the complete bidirected digraph of order n of size
/// lambda_k_complete_value(n, |S|).
Packing complete_packing(int n, const VertexSet& s);

/// A verified packing in cartesian_product(g, h) of size
/// lambda_2(g) + lambda_2(h), following the fiber-copy construction with
/// its conflict-repair step.  S must be two distinct product vertices.
Packing product_packing(const Digraph& g, const Digraph& h, const VertexSet& s,
                        const SolverConfig& cfg = {});

/// Complete bidirected digraph of order n minus the cover's arcs.  The
/// cover must consist of vertex-disjoint cycles of length >= 2 covering at
/// least n-1 vertices.
Digraph minimal_graph(int n, const CycleCover& cover);

/// True iff the deleted arc set A(complete) \ A(D) is nonempty, touches
/// each vertex at most once in and once out, decomposes into vertex-disjoint
/// cycles, and covers at least n-1 vertices.
bool recognize_minimal_2_nminus2(const Digraph& d);

/// A verified packing of exactly n-2 parts for a digraph accepted by
/// recognize_minimal_2_nminus2 and any 2-element S, built case by case from
/// the deleted cycle structure.
Packing minimal_packing(const Digraph& d, const VertexSet& s);

} // namespace strongk

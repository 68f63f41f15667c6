#pragma once
#include <utility>
#include <vector>

#include "strongk/digraph.hpp"

namespace strongk {

enum class GadgetStage { Dprime, Ddouble, Dtriple, Dquad };

/// A reduction instance: the constructed digraph, its terminal set S, the
/// images of the source terminals, and the gadget vertices.  Fresh vertices
/// always take consecutive ids after the existing ones, in construction
/// order, so certificates on gadgets are reproducible.
struct GadgetInstance {
    Digraph digraph;
    VertexSet S;
    int s1 = -1, t1 = -1, s2 = -1, t2 = -1; // current terminal images
    int x = -1, y = -1;
    std::vector<int> satellites;
    GadgetStage stage = GadgetStage::Dprime;
};

/// Adds fresh x, y and the eight attachment arcs
/// t1->x, x->s1, t2->y, y->s2, x->s2, s2->x, y->t1, t1->y; S = {x, y}.
GadgetInstance build_dprime(const Digraph& d, int s1, int t1, int s2, int t2);

/// Every original vertex u becomes u- -> u+ (u- keeps id u, u+ gets a fresh
/// id); arc uv becomes u+v-; arcs z->u become z->u- and u->z become u+->z
/// for z in {x, y}.  Terminal images move to (s1-, t1+, s2-, t2+).
GadgetInstance split_vertices(const GadgetInstance& inst);

/// Adds ell-2 subdivided x-y digons (two fresh vertices and four arcs per
/// copy); ell = 2 returns the input unchanged.
GadgetInstance add_xy_cycles(const GadgetInstance& inst, int ell);

/// Adds k-2 satellites, each joined to x by ell subdivided digons;
/// S becomes {x, y, x_1, ..., x_{k-2}}.  k = 2 returns the input unchanged.
GadgetInstance extend_terminals(const GadgetInstance& inst, int k, int ell);

/// True iff there are pairwise arc-disjoint paths P_i from s_i to t_i.
/// Exhaustive backtracking over simple paths; requires
/// |A(D)| <= threshold.
bool weak_linkage_bruteforce(const Digraph& d,
                             const std::vector<std::pair<int, int>>& pairs,
                             int threshold = 14);

} // namespace strongk

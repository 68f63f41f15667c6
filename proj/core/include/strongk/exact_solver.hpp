#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongk/digraph.hpp"

namespace strongk {

/// Certificate: pairwise arc-disjoint arc sets, each inducing a strong
/// subgraph that contains every vertex of S.
struct Packing {
    VertexSet S;
    std::vector<std::vector<Arc>> parts;
};

struct LambdaResult {
    int value = 0;
    VertexSet witness_S;
    Packing certificate;
};

struct SolverConfig {
    int candidate_cap = 50000;
    int oracle_threshold = 14;
};

/// All inclusion-minimal arc sets P such that (endpoints(P), P) is strong
/// and S is covered by endpoints(P).  Sorted by size, then lexicographically
/// by arc list.  Throws CapError when the count exceeds the configured cap
/// or the instance is beyond the solver's arc limit (64).
std::vector<std::vector<Arc>> minimal_candidates(const Digraph& d,
                                                 const VertexSet& s,
                                                 const SolverConfig& cfg = {});

/// Maximum number of pairwise arc-disjoint strong subgraphs containing S,
/// with a verifiable certificate.  Value 0 with an empty certificate when no
/// strong subgraph contains S.
LambdaResult lambda_S_exact(const Digraph& d, const VertexSet& s,
                            const SolverConfig& cfg = {});

/// min over all k-subsets S of lambda_S; witness_S is the lexicographically
/// smallest minimizer.
LambdaResult lambda_k_exact(const Digraph& d, int k,
                            const SolverConfig& cfg = {});

/// True with an ell-part certificate iff lambda_S(d) >= ell; the search
/// stops as soon as ell parts are packed.
std::pair<bool, std::optional<Packing>> decide_lambda_S(
    const Digraph& d, const VertexSet& s, int ell,
    const SolverConfig& cfg = {});

/// Brute-force oracle: considers every one of the 2^m arc subsets, keeps
/// those inducing a strong subgraph containing S, and maximizes the number
/// of disjoint parts by exhaustive (memoized) assignment.  Independent of
/// the candidate/branch-and-bound path above.  Requires m <= threshold.
int oracle_lambda_S(const Digraph& d, const VertexSet& s,
                    const SolverConfig& cfg = {});

/// Same oracle with per-digraph precomputation shared across terminal sets.
class AssignmentOracle {
  public:
    AssignmentOracle(const Digraph& d, int threshold = 14);
    int lambda_S(const VertexSet& s) const;

  private:
    const Digraph d_;
    int m_;
    std::vector<uint32_t> endpoints_; // vertex mask per arc-subset mask
    std::vector<uint8_t> strong_;     // 1 iff subset induces a strong digraph
};

/// Checks every Packing invariant against d; never trusts the producer.
bool verify_packing(const Digraph& d, const Packing& p);

/// Structured-text schema: {"n": int, "S": [ints], "parts": [[[u,v],...],...]}
std::string packing_to_json(int n, const Packing& p);
std::pair<int, Packing> packing_from_json(const std::string& text);

} // namespace strongk

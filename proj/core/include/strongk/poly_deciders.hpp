#pragma once
#include <optional>
#include <string>
#include <utility>

#include "strongk/digraph.hpp"
#include "strongk/exact_solver.hpp"

namespace strongk {

/// Global arc connectivity lambda(D): min over u != 0 of
/// min(maxflow(0 -> u), maxflow(u -> 0)) with unit arc capacities.
/// 0 iff D is not strong.  Requires n >= 2.
int arc_connectivity(const Digraph& d);

struct BoundsReport {
    int k = 0;
    int lower = 0;
    int upper = 0;
    std::string lower_rule;
    std::string upper_rule;
};

/// lower = 0 if not strong, else max(1, floor(lambda/k) when k <= lambda);
/// upper = min(lambda(D), min out-degree, min in-degree, n-1).
BoundsReport bounds(const Digraph& d, int k);

/// The unique 2-arc-strong semicomplete digraph of order 4 without two
/// arc-disjoint strong spanning subgraphs, derived by exhaustive scan with
/// the exact solver (never transcribed).  Cached after first derivation.
/// Throws std::logic_error if the scan does not find exactly one
/// isomorphism class.
const Digraph& derive_S4();

/// lambda_k(D) >= 2 iff D is 2-arc-strong and not the k = n = 4 case of
/// S4.  The S4 exception is spanning-only: its exact values are
/// lambda_2 = lambda_3 = 2 and lambda_4 = 1, so for k < n being
/// 2-arc-strong suffices.
bool decide2_semicomplete(const Digraph& d, int k);

/// lambda_k(D) >= 2 iff the strong symmetric digraph D has no bridge.
/// On yes, returns the 2-part spanning certificate {H, H^rev} built from a
/// strong orientation; its parts contain every k-set, and the embedded S is
/// the lexicographically smallest one.
std::pair<bool, std::optional<Packing>> decide2_symmetric(const Digraph& d,
                                                          int k);

/// One arc kept per digon such that the result is strong (lowpoint
/// orientation of the underlying graph).  Requires symmetric, strong,
/// bridgeless; the output is verified strong before returning.
Digraph strong_orientation(const Digraph& d);

/// lambda_2 of a symmetric digraph equals its arc connectivity, which
/// equals the edge connectivity of the underlying graph.
int lambda2_symmetric(const Digraph& d);

/// is_strong(D) and no single arc deletion keeps it strong.
bool is_minimally_strong(const Digraph& d);

struct NGReport {
    int k = 0;
    int lambda_D = 0;
    int lambda_Dc = 0;
    int sum = 0;
    int product = 0;
    bool sum_zero_iff_both_nonstrong = false;
};

/// Computes lambda_k of D and its complement exactly and checks the
/// complementary-pair bounds 0 <= sum <= n-1 and
/// 0 <= product <= ((n-1)/2)^2, plus the zero characterizations.
/// Throws std::logic_error if a bound fails.
NGReport nordhaus_gaddum(const Digraph& d, int k, const SolverConfig& cfg = {});

} // namespace strongk

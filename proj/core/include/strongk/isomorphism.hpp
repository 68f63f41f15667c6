#pragma once
#include <cstdint>
#include <utility>

#include "strongk/digraph.hpp"

namespace strongk {

/// Canonical key: lexicographically smallest adjacency bitmask of the
/// digraph over all vertex relabelings.  Bit u*n+v set iff arc (u, v).
/// Intended for small orders; throws ParamError when n > limit.
struct CanonicalKey {
    int n = 0;
    uint64_t lo = 0, hi = 0; // bits 0..63 and 64..127
    auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const Digraph& d, int limit = 8);

/// True iff a vertex bijection maps arcs onto arcs exactly.  Permutation
/// search; limit guards the factorial blowup (default n <= 8).
bool are_isomorphic(const Digraph& a, const Digraph& b, int limit = 8);

} // namespace strongk

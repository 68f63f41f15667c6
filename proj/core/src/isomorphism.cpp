#include "strongk/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace strongk {

namespace {

struct Key128 {
    uint64_t lo = 0, hi = 0;
    bool operator<(const Key128& o) const {
        return hi != o.hi ? hi < o.hi : lo < o.lo;
    }
};

void set_bit(Key128& k, int idx) {
    if (idx < 64)
        k.lo |= uint64_t{1} << idx;
    else
        k.hi |= uint64_t{1} << (idx - 64);
}

} // namespace

CanonicalKey canonical_key(const Digraph& d, int limit) {
    int n = d.order();
    if (n > limit)
        throw ParamError("canonical_key: order " + std::to_string(n) +
                         " exceeds limit " + std::to_string(limit));
    if (n * n > 128) throw ParamError("canonical_key: order too large");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Key128 best;
    bool first = true;
    do {
        Key128 k;
        for (const Arc& a : d.arcs())
            set_bit(k, perm[a.from] * n + perm[a.to]);
        if (first || k < best) {
            best = k;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalKey{n, best.lo, best.hi};
}

bool are_isomorphic(const Digraph& a, const Digraph& b, int limit) {
    if (a.order() != b.order()) return false;
    if (a.arc_count() != b.arc_count()) return false;
    return canonical_key(a, limit) == canonical_key(b, limit);
}

} // namespace strongk

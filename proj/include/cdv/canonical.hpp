#pragma once
#include "cdv/int_matrix.hpp"

namespace cdv {

// Lexicographically minimal relabeling of a small integer matrix under
// simultaneous row/column permutation, by branch-and-bound over placements.
// The order minimized is the incremental key
//     step t:  [invariant[v]] , a(v, placed...) , a(placed..., v)
// which determines the permuted matrix uniquely.  An optional per-vertex
// invariant (weights, colors) is minimized along with the entries.
struct CanonicalResult {
    IntMatrix matrix;            // relabeled matrix
    IntVec invariant;            // relabeled invariant (empty when none given)
    std::vector<int> perm;       // perm[new] = old
};

CanonicalResult canonical_form(const IntMatrix& a, const IntVec* invariant = nullptr);

// Convenience: equality of canonical forms.
bool permutation_equivalent(const IntMatrix& a, const IntMatrix& b);

}  // namespace cdv

#pragma once
#include "cdv/enumerate.hpp"

namespace cdv {

struct OrbitAutomorphism {
    std::vector<int> sigma;                // permutation of 0..n-1
    std::vector<std::vector<int>> orbits;  // each sorted; list sorted by minimal member

    int n() const { return static_cast<int>(sigma.size()); }
    int orbit_count() const { return static_cast<int>(orbits.size()); }
    int orbit_of(int i) const;

    static OrbitAutomorphism from_permutation(std::vector<int> sigma);
    // cycle notation with 1-based indices, e.g. "(3 4)" or "(1 5)(2 4)";
    // unmentioned indices are fixed.
    static std::optional<OrbitAutomorphism> parse_cycles(const std::string& text, int n);
};

// Eq-by-eq admissibility: sigma preserves B, intra-orbit entries vanish, and
// orbit rows are sign-aligned columnwise.
bool is_admissible(const ExchangeMatrix& m, const OrbitAutomorphism& sigma);

// Product of mutations over one orbit (they commute).  Admissibility is
// rechecked on the result so a stability violation fails loudly.
ExchangeMatrix orbit_mutate(const ExchangeMatrix& m, const OrbitAutomorphism& sigma, int orbit);
SeedState orbit_mutate_seed(const SeedState& s, const OrbitAutomorphism& sigma, int orbit);

// Folded matrix over orbit indices: entry(i-bar, j-bar) = sum over s in i-bar
// of b(s, j) for any representative j; representative independence and
// admissibility are enforced.
ExchangeMatrix fold_matrix(const ExchangeMatrix& m, const OrbitAutomorphism& sigma);

// Folded C-matrix (rows summed over orbits, column representative).  Requires
// the sigma-invariance c(sigma i, sigma j) = c(i, j) and the per-orbit row
// sign coherence; violations throw.
IntMatrix fold_c_matrix(const IntMatrix& c, const OrbitAutomorphism& sigma);

// Folded D-matrix; requires sigma-invariance and the sign condition on
// sum_t d(s,t) b(t,k) per orbit.
IntMatrix fold_d_matrix(const IntMatrix& d, const OrbitAutomorphism& sigma,
                        const ExchangeMatrix& b);

struct Unfolding {
    ExchangeMatrix unfolded;  // sigma-invariant matrix with fold = the input
    OrbitAutomorphism sigma;
};

// For a matrix of cluster type B_n (via D_{n+1}) or C_n (via A_{2n-1}),
// constructs the sigma-invariant unfolding with fold_matrix equal to the
// input exactly, by orbit-mutation search from the standard unfolded seed.
Unfolding unfold_type(const ExchangeMatrix& folded, size_t cap = kDefaultClassCap);

IntVec fold_vector(const IntVec& v, const OrbitAutomorphism& sigma);

}  // namespace cdv

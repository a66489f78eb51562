#pragma once
#include "cdv/diagrams.hpp"
#include "cdv/folding.hpp"

namespace cdv {

struct RootSystemContext {
    CartanMatrix cartan;  // symmetrizable; T inside

    int n() const { return cartan.n(); }
    static RootSystemContext of(const ExchangeMatrix& b) {
        return RootSystemContext{cartan_counterpart(b)};
    }
};

enum class RootKind { RealRoot, ImaginaryRoot, NotARoot };

const char* to_string(RootKind k);

// Reflection-walk membership test.  Negative sign-coherent vectors are
// reduced to positive first.  Real when the walk reaches a simple root;
// imaginary at a fixed point with connected support (Kac's criterion);
// NotARoot when the walk leaves the positive cone, the fixed-point support is
// disconnected, or the step cap is hit.  The walk is cross-checked against
// the sign of the quadratic form t(v) T A v.
RootKind classify_root(const RootSystemContext& ctx, IntVec v, int step_cap = 10'000);

// Induced subdiagram on the support is acyclic.  Support must be connected.
bool support_is_tree(const IntVec& v, const DynkinDiagram& x);

// Euler form of the quiver of a skew-symmetric B:
//   <c,d> = sum_i c_i d_i - sum_{b_ij > 0} b_ij c_j d_i
i64 euler_form(const ExchangeMatrix& b, const IntVec& c, const IntVec& d);

// Folds the Cartan matrix and the vector over the orbits of sigma and checks
// that a root stays a root.
bool check_folding_of_roots(const RootSystemContext& unfolded, const OrbitAutomorphism& sigma,
                            const IntVec& v);

}  // namespace cdv

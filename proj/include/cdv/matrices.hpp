#pragma once
#include <optional>

#include "cdv/int_matrix.hpp"

namespace cdv {

// Skew-symmetrizable exchange matrix together with the minimal positive
// integer symmetrizer T (diagonal, as a vector): T*B is skew-symmetric.
struct ExchangeMatrix {
    IntMatrix b;
    IntVec symmetrizer;

    int n() const { return b.n(); }
    bool operator==(const ExchangeMatrix&) const = default;
};

// One vertex of the exchange pattern with principal coefficients.
// Columns of c are the c-vectors, columns of d the d-vectors; initially
// c = I and d = -I (the tropical shadow of x_j is x_j itself).
struct SeedState {
    ExchangeMatrix b;
    IntMatrix c;
    IntMatrix d;
    std::vector<int> path;

    int n() const { return b.n(); }
    static SeedState initial(const ExchangeMatrix& b0) {
        return SeedState{b0, IntMatrix::identity(b0.n()),
                         IntMatrix::identity(b0.n()).negated(), {}};
    }
    bool same_triple(const SeedState& o) const {
        return b.b == o.b.b && c == o.c && d == o.d;
    }
};

// Symmetrizable generalized Cartan matrix (2 on the diagonal, <= 0 off it).
struct CartanMatrix {
    IntMatrix a;
    IntVec symmetrizer;

    int n() const { return a.n(); }
    bool operator==(const CartanMatrix&) const = default;
};

// Minimal positive integer diagonal T with T*B skew-symmetric, found by
// propagating |b_ij|/|b_ji| ratios over the connectivity graph and clearing
// denominators per component.  nullopt when the sign pattern or a cycle
// obstructs.
std::optional<IntVec> compute_symmetrizer(const IntMatrix& b);

// Throwing variant with validation of the full exchange-matrix invariants.
ExchangeMatrix make_exchange_matrix(const IntMatrix& b);

ExchangeMatrix mutate_b(const ExchangeMatrix& m, int k);
SeedState mutate_seed(const SeedState& s, int k);

// a_ii = 2, a_ij = -|b_ij|; the symmetrizer carries over.
CartanMatrix cartan_counterpart(const ExchangeMatrix& m);

// Symmetrizer for a symmetrizable Cartan-like matrix (t_i a_ij = t_j a_ji).
std::optional<IntVec> compute_cartan_symmetrizer(const IntMatrix& a);

// Every index is a sink or a source of the valued quiver.
bool is_bipartite(const ExchangeMatrix& m);

// Nonzero with all entries of one weak sign.
bool is_sign_coherent(const IntVec& v);

bool is_initial_d_column(const IntVec& v);  // -e_i for some i

}  // namespace cdv

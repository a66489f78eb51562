#pragma once
#include <map>

#include "cdv/enumerate.hpp"

namespace cdv {

// Dynkin diagram of a symmetrizable Cartan matrix: vertices 0..n-1 and, for
// every edge {i,j}, the ordered multiplicity pair (m(i,j), m(j,i)) with
// m(i,j) = -a_ij = |b_ij|.  The pair records which endpoint carries which
// multiplicity (the length inequality); isomorphisms must preserve it.
struct DynkinDiagram {
    IntMatrix mult;  // zero diagonal, m(i,j) = 0 iff m(j,i) = 0

    int n() const { return mult.n(); }
    bool has_edge(int i, int j) const { return mult(i, j) != 0; }
    bool operator==(const DynkinDiagram&) const = default;
    auto operator<=>(const DynkinDiagram&) const = default;
};

struct WeightedDiagram {
    DynkinDiagram diagram;
    IntVec weights;  // positive, one per vertex

    int n() const { return diagram.n(); }
    bool operator==(const WeightedDiagram&) const = default;
    auto operator<=>(const WeightedDiagram&) const = default;
};

// Full-subdiagram embedding of a template into a target, recorded by one
// representative vertex map (embeddings are identified up to template
// automorphism, equivalently by their induced vector).
struct Embedding {
    std::vector<int> vertex_map;  // template vertex -> target vertex
    IntVec vector;                // induced weights on the target, 0 off image
};

DynkinDiagram diagram_of(const CartanMatrix& a);

// Induced subdiagram on the support of a nonnegative vector, weighted by it.
// Throws DisconnectedSupport when the support is not connected in x.
WeightedDiagram vector_to_weighted_diagram(const IntVec& v, const DynkinDiagram& x);

std::vector<Embedding> enumerate_embeddings(const WeightedDiagram& w, const DynkinDiagram& x);

// Canonical relabeling (weights act as a vertex invariant).
WeightedDiagram canonical_weighted_diagram(const WeightedDiagram& w);
bool isomorphic(const DynkinDiagram& a, const DynkinDiagram& b);
bool isomorphic(const WeightedDiagram& a, const WeightedDiagram& b);

// W(A_n): strings of length 1..n, all weights 1.
std::vector<WeightedDiagram> templates_A(int n);

struct TemplateOptions {
    size_t class_cap = kDefaultClassCap;
    size_t seed_cap = kDefaultSeedCap;
    size_t member_limit = 0;  // 0 = whole class; otherwise first N members
};

// W(Z), generated: enumerate the matrix class of the standard bipartite seed,
// compute positive c-vectors per member, convert to weighted diagrams on the
// member's X(B), and keep one representative per isomorphism class.
std::vector<WeightedDiagram> extract_templates(ClusterTypeLabel z, const TemplateOptions& opts = {});

// V(B): all vectors induced by template embeddings into X(B).
std::set<IntVec> compute_V(const ExchangeMatrix& b, const std::vector<WeightedDiagram>& templates);

// The explicit membership predicate for X(A_n).
bool check_membership_X_An(const DynkinDiagram& x);

// Oracle realization of membership in X(Z) for the other families: the set of
// diagrams of the whole mutation class of the standard seed.
struct MembershipOracle {
    ClusterTypeLabel z;
    bool complete = false;
    std::vector<IntMatrix> canonical_diagrams;  // sorted

    static MembershipOracle build(ClusterTypeLabel z, size_t class_cap = kDefaultClassCap);
    bool contains(const DynkinDiagram& x) const;
};

bool check_membership_X(ClusterTypeLabel z, const DynkinDiagram& x, size_t class_cap = kDefaultClassCap);

// Emitters.
std::string to_dot(const DynkinDiagram& x);
std::string to_dot(const WeightedDiagram& w);

}  // namespace cdv

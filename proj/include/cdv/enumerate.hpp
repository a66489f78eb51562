#pragma once
#include <set>

#include "cdv/cartan_table.hpp"
#include "cdv/matrices.hpp"

namespace cdv {

// Seed identity used for deduplication during breadth-first enumeration.
//   LabeledTriple    : states are exact (B,C,D) triples.
//   UpToPermutation  : states are identified under simultaneous slot
//                      relabeling; the canonical representative sorts the
//                      columns by (C column, D column), which is always a
//                      strict order because C is invertible.  One state per
//                      unlabeled seed (cluster); the extracted vector sets
//                      are identical to the labeled ones.
enum class SeedKey { LabeledTriple, UpToPermutation };

inline constexpr size_t kDefaultSeedCap = 1'000'000;
inline constexpr size_t kDefaultClassCap = 100'000;

struct SeedAtlas {
    ExchangeMatrix initial;
    SeedKey mode = SeedKey::LabeledTriple;
    bool complete = false;
    size_t cap = 0;
    int depth_reached = 0;
    std::vector<SeedState> states;  // BFS discovery order (directions ascending)
};

SeedAtlas enumerate_seeds(const ExchangeMatrix& initial, size_t cap = kDefaultSeedCap,
                          SeedKey mode = SeedKey::LabeledTriple);

struct VectorSets {
    std::set<IntVec> c_all;            // C(B)
    std::set<IntVec> c_pos;            // C_+(B)
    std::set<IntVec> d_noninit;        // D(B)
    std::set<IntVec> c_pos_bipartite;  // C_+^b(B)
    std::set<IntVec> d_bipartite;      // D^b(B)
};

// Unions of C columns / non-initial D columns over all states; the bipartite
// subsets are restricted to bipartite seeds.  Throws IncompleteAtlas unless
// the atlas reached closure.
VectorSets extract_vector_sets(const SeedAtlas& atlas);

struct MatrixClass {
    bool complete = false;
    size_t cap = 0;
    std::vector<ExchangeMatrix> members;  // canonical forms, BFS order
};

// Mutation class of B-matrices up to simultaneous permutation.
MatrixClass enumerate_matrix_class(const ExchangeMatrix& seed, size_t cap = kDefaultClassCap);

struct TypeDetection {
    std::optional<ClusterTypeLabel> label;  // nullopt = Indeterminate
    bool class_exhausted = false;           // saw the whole class, no witness
    size_t members_seen = 0;
};

// Searches the mutation class for a member whose Cartan counterpart is a
// finite-type Cartan matrix up to simultaneous permutation.
TypeDetection detect_cluster_type(const ExchangeMatrix& m, size_t cap = kDefaultClassCap);

// Vectors reachable within `depth` mutations of the initial seed, with no
// completeness claim.  Collects nothing at depth 0.
VectorSets bounded_depth_probe(const ExchangeMatrix& initial, int depth);

}  // namespace cdv

#pragma once
#include <memory>

#include "cdv/matrices.hpp"

namespace cdv::surface {

// Model surfaces: type A_n is a disk with n+3 boundary marked points, type
// D_n a disk with n boundary points and one interior puncture.  Boundary
// points are numbered counterclockwise.
struct MarkedSurface {
    int rank = 0;
    bool punctured = false;

    int boundary_count() const { return punctured ? rank : rank + 3; }
    static MarkedSurface type_A(int n) { return {n, false}; }
    static MarkedSurface type_D(int n) { return {n, true}; }
    bool operator==(const MarkedSurface&) const = default;
};

enum class Tag : char { Plain = 'p', Notched = 'n' };

// Chords join two boundary points; in the punctured disk a chord is recorded
// as the ordered pair (p,q) whose counterclockwise boundary path p -> q cuts
// off the puncture-free side (so (p,q) and (q,p) are the two homotopy
// classes).  In type A the pair is normalized with the smaller point first.
// Radii join a boundary point to the puncture and carry a tag.
struct TaggedArc {
    enum class Kind : char { Chord = 'c', Radius = 'r' } kind = Kind::Chord;
    int p = 0;
    int q = 0;          // chords only
    Tag tag = Tag::Plain;  // radii only

    static TaggedArc chord(int p, int q) { return {Kind::Chord, p, q, Tag::Plain}; }
    static TaggedArc radius(int p, Tag t) { return {Kind::Radius, p, 0, t}; }
    bool is_chord() const { return kind == Kind::Chord; }
    bool operator==(const TaggedArc&) const = default;
    auto operator<=>(const TaggedArc&) const = default;
    std::string str() const;
};

// Maximal set of pairwise compatible arcs; slots are ordered (they play the
// role of cluster-seed directions).
struct Triangulation {
    std::vector<TaggedArc> arcs;

    int n() const { return static_cast<int>(arcs.size()); }
    int slot_of(const TaggedArc& a) const;
    bool operator==(const Triangulation&) const = default;
    auto operator<=>(const Triangulation&) const = default;
};

struct ArcNotInTriangulation : std::runtime_error {
    ArcNotInTriangulation() : std::runtime_error("arc is not part of the triangulation") {}
};

struct UnsupportedTagConfiguration : std::runtime_error {
    UnsupportedTagConfiguration()
        : std::runtime_error("tag configuration admits no shear-coordinate reduction") {}
};

struct ReductionNotFound : std::runtime_error {
    ReductionNotFound()
        : std::runtime_error("no bipartite triangulation realizes the c-vector (bug signal)") {}
};

// Computation context for one marked surface.  Exact crossing counts; the
// punctured disk is handled on its branched double cover.  Shear-coordinate
// event lists are memoized internally, so a Surface is cheap to query
// repeatedly but not safe to share across threads.
class Surface {
  public:
    explicit Surface(MarkedSurface shape);
    ~Surface();
    Surface(Surface&&) noexcept;
    Surface& operator=(Surface&&) noexcept;

    const MarkedSurface& shape() const;
    // Full arc census in a deterministic order (chords, then radii).
    const std::vector<TaggedArc>& arcs() const;

    // -1 on equality, tag rules for radii, otherwise the minimal crossing
    // number.  Symmetric.
    int intersection_pairing(const TaggedArc& a, const TaggedArc& b) const;

    // All triangulations, each with slots sorted in arc order.
    const std::vector<Triangulation>& triangulations() const;

    // Replaces the arc in `slot` by the unique alternative.
    std::pair<Triangulation, TaggedArc> flip(const Triangulation& t, int slot) const;

    // Signed adjacency matrix of the triangulation (rotation rule).
    ExchangeMatrix b_matrix(const Triangulation& t) const;

    // d_gamma = ((gamma_i | gamma))_i for the initial triangulation t0.
    IntVec geometric_d_vector(const TaggedArc& gamma, const Triangulation& t0) const;

    // Shear coordinates of the elementary lamination of `lam_arc` with
    // respect to t, indexed by t's slots.
    IntVec shear_coordinates(const TaggedArc& lam_arc, const Triangulation& t) const;

    // c_{gamma,t} with respect to the multilamination of lam0: entry i is the
    // shear coordinate of the elementary lamination of lam0's slot-i arc.
    IntVec geometric_c_vector(const TaggedArc& gamma, const Triangulation& t,
                              const Triangulation& lam0) const;

    // Full geometric C-matrix: column j is geometric_c_vector of t's slot j.
    IntMatrix geometric_c_matrix(const Triangulation& lam0, const Triangulation& t) const;

    // A bipartite triangulation and arc realizing the same positive c-vector,
    // found by search over bipartite triangulations.
    std::pair<Triangulation, TaggedArc> bipartite_quadrilateral_reduction(
        const TaggedArc& gamma, const Triangulation& t, const Triangulation& lam0) const;

    std::string flip_graph_dot() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace cdv::surface

#include <doctest.h>

#include "cdv/enumerate.hpp"

using namespace cdv;

namespace {
const IntMatrix kCyclicA3(3, {0, 1, -1, -1, 0, 1, 1, -1, 0});
const IntMatrix kMarkov(3, {0, 2, -2, -2, 0, 2, 2, -2, 0});
const IntMatrix kExample36(5, {0, 1, 0, 0, 0, -1, 0, 1, -1, 0, 0, -1, 0, 1, -1, 0, 1, -1, 0, 1,
                               0, 0, 1, -1, 0});

std::set<IntVec> the_six() {
    return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
}
}  // namespace

TEST_CASE("A2: labeled atlas closes with C+ = {e1, e2, e1+e2}") {
    SeedAtlas atlas = enumerate_seeds(make_exchange_matrix(IntMatrix(2, {0, 1, -1, 0})));
    CHECK(atlas.complete);
    CHECK(atlas.states.size() == 10);  // 5 clusters, 2 labelings each
    VectorSets s = extract_vector_sets(atlas);
    CHECK(s.c_pos == std::set<IntVec>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(s.c_pos.size() == 3);  // nh/2 for A2
}

TEST_CASE("rank 1 gives exactly two labeled seeds") {
    SeedAtlas atlas = enumerate_seeds(make_exchange_matrix(IntMatrix(1, {0})));
    CHECK(atlas.complete);
    CHECK(atlas.states.size() == 2);
    VectorSets s = extract_vector_sets(atlas);
    CHECK(s.c_pos == std::set<IntVec>{{1}});
    CHECK(s.d_noninit == std::set<IntVec>{{1}});
}

TEST_CASE("the cyclic A3 matrix yields the six vectors of its type") {
    SeedAtlas atlas = enumerate_seeds(make_exchange_matrix(kCyclicA3));
    CHECK(atlas.complete);
    VectorSets s = extract_vector_sets(atlas);
    CHECK(s.c_pos == the_six());
    CHECK(s.d_noninit == the_six());
    // sign decomposition: C = C+  disjoint-union  -C+
    std::set<IntVec> all = s.c_pos;
    for (const IntVec& v : s.c_pos) all.insert({-v[0], -v[1], -v[2]});
    CHECK(all == s.c_all);
    CHECK(s.c_all.size() == 2 * s.c_pos.size());
    // bipartite restriction changes nothing
    CHECK(s.c_pos_bipartite == s.c_pos);
    CHECK(s.d_bipartite == s.d_noninit);
}

TEST_CASE("permutation-quotient atlas gives the same sets, one state per cluster") {
    ExchangeMatrix m = make_exchange_matrix(kCyclicA3);
    SeedAtlas lab = enumerate_seeds(m);
    SeedAtlas red = enumerate_seeds(m, kDefaultSeedCap, SeedKey::UpToPermutation);
    CHECK(lab.states.size() == 84);
    CHECK(red.states.size() == 14);
    CHECK(extract_vector_sets(lab).c_pos == extract_vector_sets(red).c_pos);
    CHECK(extract_vector_sets(lab).d_noninit == extract_vector_sets(red).d_noninit);
}

TEST_CASE("the Markov matrix blows past any small cap") {
    SeedAtlas atlas = enumerate_seeds(make_exchange_matrix(kMarkov), 10'000);
    CHECK(!atlas.complete);
    CHECK_THROWS_AS(extract_vector_sets(atlas), IncompleteAtlas);
}

TEST_CASE("enumerate_matrix_class") {
    // rank 2: a single class member up to permutation
    MatrixClass r2 = enumerate_matrix_class(make_exchange_matrix(IntMatrix(2, {0, 1, -1, 0})));
    CHECK(r2.complete);
    CHECK(r2.members.size() == 1);

    // the A3 class contains both the linear and the cyclic shapes
    ExchangeMatrix lin = make_exchange_matrix(IntMatrix(3, {0, 1, 0, -1, 0, 1, 0, -1, 0}));
    MatrixClass a3 = enumerate_matrix_class(lin);
    CHECK(a3.complete);
    CHECK(a3.members.size() == 4);
    bool has_cyclic = false, has_linear = false;
    for (const ExchangeMatrix& m : a3.members) {
        int nonzero = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (m.b(i, j) != 0) ++nonzero;
        if (nonzero == 6) has_cyclic = true;  // triangle
        if (nonzero == 4) has_linear = true;  // path
    }
    CHECK(has_cyclic);
    CHECK(has_linear);

    // D4 class includes a member whose diagram is a 4-cycle
    MatrixClass d4 = enumerate_matrix_class(standard_bipartite_seed({Family::D, 4}));
    CHECK(d4.complete);
    bool has_square = false;
    for (const ExchangeMatrix& m : d4.members) {
        int deg2 = 0;
        for (int i = 0; i < 4; ++i) {
            int deg = 0;
            for (int j = 0; j < 4; ++j)
                if (m.b(i, j) != 0) ++deg;
            if (deg == 2) ++deg2;
        }
        int edges = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (m.b(i, j) != 0) ++edges;
        if (deg2 == 4 && edges == 4) has_square = true;
    }
    CHECK(has_square);
}

TEST_CASE("detect_cluster_type") {
    auto det = detect_cluster_type(make_exchange_matrix(kCyclicA3));
    REQUIRE(det.label.has_value());
    CHECK(*det.label == ClusterTypeLabel{Family::A, 3});

    auto d5 = detect_cluster_type(make_exchange_matrix(kExample36));
    REQUIRE(d5.label.has_value());
    CHECK(*d5.label == ClusterTypeLabel{Family::D, 5});

    auto markov = detect_cluster_type(make_exchange_matrix(kMarkov));
    CHECK(!markov.label.has_value());
    CHECK(markov.class_exhausted);  // the Markov class is tiny and never finite type
}

TEST_CASE("bounded_depth_probe collects nothing at depth 0") {
    VectorSets s = bounded_depth_probe(make_exchange_matrix(kMarkov), 0);
    CHECK(s.c_pos.empty());
    CHECK(s.d_noninit.empty());
}

TEST_CASE("atlas determinism: two runs agree state for state") {
    ExchangeMatrix m = make_exchange_matrix(kCyclicA3);
    SeedAtlas a = enumerate_seeds(m), b = enumerate_seeds(m);
    REQUIRE(a.states.size() == b.states.size());
    for (size_t i = 0; i < a.states.size(); ++i) CHECK(a.states[i].same_triple(b.states[i]));
}

TEST_CASE("a Cartan-counterpart-only golden instance of type C5") {
    // a rank-5 generalized Cartan matrix printed alongside the C5 discussion;
    // any orientation with these absolute values detects as C5 with 25 vectors
    IntMatrix a(5, {2, -1, 0, 0,  0,
                    -1, 2, -1, 0, 0,
                    0, -1, 2, -2, -1,
                    0, 0, -1, 2, -1,
                    0, 0, -1, -2, 2});
    auto t = compute_cartan_symmetrizer(a);
    REQUIRE(t.has_value());
    // orient so that the chordless triangle {2,3,4} is cyclically oriented
    // (acyclic cycles are never finite type)
    IntMatrix b(5, {0, 1, 0, 0, 0,
                    -1, 0, 1, 0, 0,
                    0, -1, 0, 2, -1,
                    0, 0, -1, 0, 1,
                    0, 0, 1, -2, 0});
    ExchangeMatrix m = make_exchange_matrix(b);
    CHECK(cartan_counterpart(m).a == a);
    auto det = detect_cluster_type(m);
    REQUIRE(det.label.has_value());
    CHECK(*det.label == ClusterTypeLabel{Family::C, 5});
    VectorSets sets =
        extract_vector_sets(enumerate_seeds(m, kDefaultSeedCap, SeedKey::UpToPermutation));
    CHECK(sets.c_pos.size() == 25);
    CHECK(sets.c_pos == sets.d_noninit);
}

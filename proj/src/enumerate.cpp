#include "cdv/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "cdv/canonical.hpp"

namespace cdv {

namespace {

struct TripleKey {
    IntVec flat;  // B | C | D entries back to back
    bool operator==(const TripleKey&) const = default;
};

struct TripleKeyHash {
    size_t operator()(const TripleKey& k) const {
        size_t h = 1469598103934665603ull;
        for (i64 v : k.flat) {
            auto u = static_cast<std::uint64_t>(v);
            h ^= u + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

TripleKey key_of(const SeedState& s) {
    TripleKey k;
    k.flat.reserve(3 * s.b.b.flat().size());
    auto app = [&](const IntMatrix& m) { k.flat.insert(k.flat.end(), m.flat().begin(), m.flat().end()); };
    app(s.b.b);
    app(s.c);
    app(s.d);
    return k;
}

// Canonical slot order for the permutation quotient: sort by (C col, D col).
SeedState reduce_by_permutation(const SeedState& s) {
    const int n = s.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto colkey = [&](int j) {
        IntVec k;
        k.reserve(2 * n);
        for (int i = 0; i < n; ++i) k.push_back(s.c(i, j));
        for (int i = 0; i < n; ++i) k.push_back(s.d(i, j));
        return k;
    };
    std::vector<IntVec> keys(n);
    for (int j = 0; j < n; ++j) keys[j] = colkey(j);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    SeedState out;
    out.b.b = s.b.b.permuted(perm);
    out.b.symmetrizer.resize(n);
    for (int i = 0; i < n; ++i) out.b.symmetrizer[i] = s.b.symmetrizer[perm[i]];
    out.c = s.c.columns_permuted(perm);
    out.d = s.d.columns_permuted(perm);
    return out;
}

}  // namespace

SeedAtlas enumerate_seeds(const ExchangeMatrix& initial, size_t cap, SeedKey mode) {
    SeedAtlas atlas;
    atlas.initial = initial;
    atlas.mode = mode;
    atlas.cap = cap;
    const int n = initial.n();

    SeedState start = SeedState::initial(initial);
    if (mode == SeedKey::UpToPermutation) start = reduce_by_permutation(start);

    std::unordered_set<TripleKey, TripleKeyHash> seen;
    seen.insert(key_of(start));
    atlas.states.push_back(start);
    std::deque<std::pair<size_t, int>> frontier;  // (state index, depth)
    frontier.emplace_back(0, 0);
    atlas.complete = true;
    while (!frontier.empty()) {
        auto [idx, depth] = frontier.front();
        frontier.pop_front();
        atlas.depth_reached = std::max(atlas.depth_reached, depth);
        for (int k = 0; k < n; ++k) {
            SeedState next = mutate_seed(atlas.states[idx], k);
            if (mode == SeedKey::UpToPermutation) next = reduce_by_permutation(next);
            TripleKey tk = key_of(next);
            if (seen.contains(tk)) continue;
            if (atlas.states.size() >= cap) {
                atlas.complete = false;
                return atlas;  // partial atlas, depth_reached reported
            }
            seen.insert(std::move(tk));
            atlas.states.push_back(std::move(next));
            frontier.emplace_back(atlas.states.size() - 1, depth + 1);
        }
    }
    return atlas;
}

namespace {

void collect_state(const SeedState& s, VectorSets& out) {
    const int n = s.n();
    const bool bip = is_bipartite(s.b);
    for (int j = 0; j < n; ++j) {
        IntVec cc = s.c.column(j);
        out.c_all.insert(cc);
        bool nonneg = true, nonzero = false;
        for (i64 x : cc) {
            if (x < 0) nonneg = false;
            if (x != 0) nonzero = true;
        }
        if (nonneg && nonzero) {
            out.c_pos.insert(cc);
            if (bip) out.c_pos_bipartite.insert(cc);
        }
        IntVec dd = s.d.column(j);
        if (!is_initial_d_column(dd)) {
            out.d_noninit.insert(dd);
            if (bip) out.d_bipartite.insert(std::move(dd));
        }
    }
}

}  // namespace

VectorSets extract_vector_sets(const SeedAtlas& atlas) {
    if (!atlas.complete) throw IncompleteAtlas();
    VectorSets out;
    for (const SeedState& s : atlas.states) collect_state(s, out);
    return out;
}

MatrixClass enumerate_matrix_class(const ExchangeMatrix& seed, size_t cap) {
    MatrixClass cls;
    cls.cap = cap;
    const int n = seed.n();
    std::unordered_set<IntMatrix, IntMatrixHash> seen;
    IntMatrix start = canonical_form(seed.b).matrix;
    seen.insert(start);
    cls.members.push_back(make_exchange_matrix(start));
    cls.complete = true;
    for (size_t idx = 0; idx < cls.members.size(); ++idx) {
        for (int k = 0; k < n; ++k) {
            IntMatrix next = canonical_form(mutate_b(cls.members[idx], k).b).matrix;
            if (seen.contains(next)) continue;
            if (cls.members.size() >= cap) {
                cls.complete = false;
                return cls;
            }
            seen.insert(next);
            cls.members.push_back(make_exchange_matrix(std::move(next)));
        }
    }
    return cls;
}

TypeDetection detect_cluster_type(const ExchangeMatrix& m, size_t cap) {
    TypeDetection det;
    const int n = m.n();
    std::vector<std::pair<IntMatrix, ClusterTypeLabel>> table;
    for (ClusterTypeLabel z : finite_types_of_rank(n))
        table.emplace_back(canonical_form(standard_cartan(z).a).matrix, z);

    std::unordered_set<IntMatrix, IntMatrixHash> seen;
    std::vector<IntMatrix> members{canonical_form(m.b).matrix};
    seen.insert(members[0]);
    auto check = [&](const IntMatrix& b) -> std::optional<ClusterTypeLabel> {
        IntMatrix a = canonical_form(cartan_counterpart(make_exchange_matrix(b)).a).matrix;
        for (const auto& [ca, z] : table)
            if (a == ca) return z;
        return std::nullopt;
    };
    for (size_t idx = 0; idx < members.size(); ++idx) {
        ++det.members_seen;
        if (auto z = check(members[idx])) {
            det.label = z;
            return det;
        }
        for (int k = 0; k < n; ++k) {
            IntMatrix next = canonical_form(mutate_b(make_exchange_matrix(members[idx]), k).b).matrix;
            if (seen.contains(next)) continue;
            if (members.size() >= cap) return det;  // cap exceeded, no witness
            seen.insert(next);
            members.push_back(std::move(next));
        }
    }
    det.class_exhausted = true;  // whole class seen: definitely not finite type
    return det;
}

VectorSets bounded_depth_probe(const ExchangeMatrix& initial, int depth) {
    VectorSets out;
    const int n = initial.n();
    std::unordered_set<TripleKey, TripleKeyHash> seen;
    std::vector<SeedState> cur{SeedState::initial(initial)};
    seen.insert(key_of(cur[0]));
    for (int d = 0; d < depth; ++d) {
        std::vector<SeedState> next;
        for (const SeedState& s : cur) {
            for (int k = 0; k < n; ++k) {
                SeedState t = mutate_seed(s, k);
                TripleKey tk = key_of(t);
                if (seen.contains(tk)) continue;
                seen.insert(std::move(tk));
                collect_state(t, out);
                next.push_back(std::move(t));
            }
        }
        cur = std::move(next);
    }
    return out;
}

}  // namespace cdv

#include "cdv/canonical.hpp"

namespace cdv {

namespace {

struct Search {
    const IntMatrix& a;
    const IntVec* inv;
    int n;
    std::vector<int> cur;        // cur[t] = vertex placed at new index t
    std::vector<char> used;
    IntVec cur_key, best_key;
    std::vector<int> best_perm;

    explicit Search(const IntMatrix& m, const IntVec* iv)
        : a(m), inv(iv), n(m.n()), used(m.n(), 0) {
        cur.reserve(n);
    }

    // Appends the key segment for placing v at depth t; returns segment size.
    int append_segment(int v, int t) {
        int len = 0;
        if (inv) {
            cur_key.push_back((*inv)[v]);
            ++len;
        }
        for (int s = 0; s < t; ++s) {
            cur_key.push_back(a(v, cur[s]));
            cur_key.push_back(a(cur[s], v));
            len += 2;
        }
        cur_key.push_back(a(v, v));
        ++len;
        return len;
    }

    void seed_identity() {
        for (int v = 0; v < n; ++v) {
            append_segment(v, v);
            cur.push_back(v);
        }
        best_key = cur_key;
        best_perm = cur;
        cur.clear();
        cur_key.clear();
    }

    // tied: the current prefix equals best_key on every compared position.
    // best_key only ever decreases during the search, which keeps stale
    // equalities sound for pruning; completions are compared in full.
    void rec(int t, bool tied) {
        if (t == n) {
            if (cur_key < best_key) {
                best_key = cur_key;
                best_perm = cur;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            const size_t off = cur_key.size();
            const int len = append_segment(v, t);
            bool next_tied = tied;
            bool prune = false;
            if (tied) {
                for (int i = 0; i < len; ++i) {
                    const i64 c = cur_key[off + i], b = best_key[off + i];
                    if (c < b) {
                        next_tied = false;
                        break;
                    }
                    if (c > b) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) {
                used[v] = 1;
                cur.push_back(v);
                rec(t + 1, next_tied);
                cur.pop_back();
                used[v] = 0;
            }
            cur_key.resize(off);
        }
    }
};

}  // namespace

CanonicalResult canonical_form(const IntMatrix& a, const IntVec* invariant) {
    Search s(a, invariant);
    s.seed_identity();
    s.rec(0, true);
    CanonicalResult r;
    r.perm = s.best_perm;
    r.matrix = a.permuted(r.perm);
    if (invariant) {
        r.invariant.resize(a.n());
        for (int i = 0; i < a.n(); ++i) r.invariant[i] = (*invariant)[r.perm[i]];
    }
    return r;
}

bool permutation_equivalent(const IntMatrix& a, const IntMatrix& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a).matrix == canonical_form(b).matrix;
}

}  // namespace cdv

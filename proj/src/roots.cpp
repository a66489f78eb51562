#include "cdv/roots.hpp"

namespace cdv {

const char* to_string(RootKind k) {
    switch (k) {
        case RootKind::RealRoot: return "real";
        case RootKind::ImaginaryRoot: return "imaginary";
        case RootKind::NotARoot: return "not_a_root";
    }
    return "?";
}

namespace {

i64 quadratic_form(const RootSystemContext& ctx, const IntVec& v) {
    const int n = ctx.n();
    i64 q = 0;
    for (int i = 0; i < n; ++i) {
        i64 av = 0;
        for (int j = 0; j < n; ++j) av = checked_add(av, checked_mul(ctx.cartan.a(i, j), v[j]));
        q = checked_add(q, checked_mul(checked_mul(ctx.cartan.symmetrizer[i], v[i]), av));
    }
    return q;
}

bool support_connected(const RootSystemContext& ctx, const IntVec& v) {
    std::vector<int> supp;
    for (int i = 0; i < ctx.n(); ++i)
        if (v[i] != 0) supp.push_back(i);
    if (supp.empty()) return false;
    std::vector<char> seen(supp.size(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!st.empty()) {
        int a = st.back();
        st.pop_back();
        for (size_t b = 0; b < supp.size(); ++b)
            if (!seen[b] && ctx.cartan.a(supp[a], supp[b]) != 0) {
                seen[b] = 1;
                ++cnt;
                st.push_back(static_cast<int>(b));
            }
    }
    return cnt == supp.size();
}

}  // namespace

RootKind classify_root(const RootSystemContext& ctx, IntVec v, int step_cap) {
    const int n = ctx.n();
    bool pos = false, neg = false;
    for (i64 x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    if (pos && neg) throw NotSignCoherent();
    if (!pos && !neg) throw NotSignCoherent();
    if (neg)
        for (i64& x : v) x = checked_neg(x);

    const i64 q = quadratic_form(ctx, v);
    auto finish = [&](RootKind k) {
        // the reflection walk and the quadratic-form sign must agree
        if (k == RootKind::RealRoot && q <= 0)
            throw std::logic_error("classify_root: real root with nonpositive form");
        if (k == RootKind::ImaginaryRoot && q > 0)
            throw std::logic_error("classify_root: imaginary root with positive form");
        return k;
    };

    for (int step = 0; step < step_cap; ++step) {
        i64 height = 0, nonzero = 0;
        int last = -1;
        for (int i = 0; i < n; ++i) {
            height = checked_add(height, v[i]);
            if (v[i] != 0) {
                ++nonzero;
                last = i;
            }
        }
        if (nonzero == 1 && v[last] == 1) return finish(RootKind::RealRoot);
        int pick = -1;
        for (int i = 0; i < n && pick < 0; ++i) {
            if (v[i] <= 0) continue;
            i64 av = 0;
            for (int j = 0; j < n; ++j) av = checked_add(av, checked_mul(ctx.cartan.a(i, j), v[j]));
            if (av > 0) pick = i;
        }
        if (pick < 0)
            return support_connected(ctx, v) ? finish(RootKind::ImaginaryRoot)
                                             : RootKind::NotARoot;
        i64 av = 0;
        for (int j = 0; j < n; ++j)
            av = checked_add(av, checked_mul(ctx.cartan.a(pick, j), v[j]));
        v[pick] = checked_sub(v[pick], av);
        if (v[pick] < 0) return RootKind::NotARoot;  // left the positive cone
    }
    return RootKind::NotARoot;  // cap; only reachable with positive form
}

bool support_is_tree(const IntVec& v, const DynkinDiagram& x) {
    std::vector<int> supp;
    for (int i = 0; i < x.n(); ++i)
        if (v[i] != 0) supp.push_back(i);
    if (supp.empty()) throw DisconnectedSupport();
    // connectivity
    std::vector<char> seen(supp.size(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    size_t cnt = 1;
    size_t edges = 0;
    for (size_t a = 0; a < supp.size(); ++a)
        for (size_t b = a + 1; b < supp.size(); ++b)
            if (x.has_edge(supp[a], supp[b])) ++edges;
    while (!st.empty()) {
        int a = st.back();
        st.pop_back();
        for (size_t b = 0; b < supp.size(); ++b)
            if (!seen[b] && x.has_edge(supp[a], supp[b])) {
                seen[b] = 1;
                ++cnt;
                st.push_back(static_cast<int>(b));
            }
    }
    if (cnt != supp.size()) throw DisconnectedSupport();
    return edges == supp.size() - 1;
}

i64 euler_form(const ExchangeMatrix& b, const IntVec& c, const IntVec& d) {
    const int n = b.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.b(i, j) != checked_neg(b.b(j, i))) throw NotSkewSymmetric();
    i64 acc = 0;
    for (int i = 0; i < n; ++i) acc = checked_add(acc, checked_mul(c[i], d[i]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.b(i, j) > 0)
                acc = checked_sub(acc, checked_mul(b.b(i, j), checked_mul(c[j], d[i])));
    return acc;
}

bool check_folding_of_roots(const RootSystemContext& unfolded, const OrbitAutomorphism& sigma,
                            const IntVec& v) {
    if (classify_root(unfolded, v) == RootKind::NotARoot) return false;
    const int k = sigma.orbit_count();
    IntMatrix fa(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            i64 s = 0;
            for (int i : sigma.orbits[a]) s = checked_add(s, unfolded.cartan.a(i, sigma.orbits[b][0]));
            fa(a, b) = s;
        }
    auto t = compute_cartan_symmetrizer(fa);
    if (!t) return false;
    RootSystemContext folded{CartanMatrix{fa, *t}};
    return classify_root(folded, fold_vector(v, sigma)) != RootKind::NotARoot;
}

}  // namespace cdv

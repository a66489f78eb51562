#include "cdv/diagrams.hpp"

#include <algorithm>
#include <sstream>

#include "cdv/canonical.hpp"

namespace cdv {

DynkinDiagram diagram_of(const CartanMatrix& a) {
    const int n = a.n();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m(i, j) = checked_neg(a.a(i, j));
    return DynkinDiagram{m};
}

WeightedDiagram vector_to_weighted_diagram(const IntVec& v, const DynkinDiagram& x) {
    std::vector<int> supp;
    for (int i = 0; i < x.n(); ++i) {
        if (v[i] < 0) throw NotSignCoherent();
        if (v[i] > 0) supp.push_back(i);
    }
    if (supp.empty()) throw NotSignCoherent();
    // connectivity on the support
    std::vector<char> seen(supp.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (size_t b = 0; b < supp.size(); ++b)
            if (!seen[b] && x.has_edge(supp[a], supp[b])) {
                seen[b] = 1;
                ++reached;
                stack.push_back(static_cast<int>(b));
            }
    }
    if (reached != supp.size()) throw DisconnectedSupport();
    const int k = static_cast<int>(supp.size());
    IntMatrix m(k);
    IntVec w(k);
    for (int a = 0; a < k; ++a) {
        w[a] = v[supp[a]];
        for (int b = 0; b < k; ++b) m(a, b) = x.mult(supp[a], supp[b]);
    }
    return WeightedDiagram{DynkinDiagram{m}, w};
}

std::vector<Embedding> enumerate_embeddings(const WeightedDiagram& w, const DynkinDiagram& x) {
    const int k = w.n(), n = x.n();
    std::vector<Embedding> out;
    if (k > n) return out;
    // place template vertices in a connectivity-friendly order
    std::vector<int> order;
    std::vector<char> placed(k, 0);
    order.push_back(0);
    placed[0] = 1;
    while (static_cast<int>(order.size()) < k) {
        bool grew = false;
        for (int v = 0; v < k && !grew; ++v)
            if (!placed[v])
                for (int u : order)
                    if (w.diagram.has_edge(u, v)) {
                        order.push_back(v);
                        placed[v] = 1;
                        grew = true;
                        break;
                    }
        if (!grew)  // template is connected by invariant; tolerate anyway
            for (int v = 0; v < k; ++v)
                if (!placed[v]) {
                    order.push_back(v);
                    placed[v] = 1;
                    break;
                }
    }
    std::vector<int> map(k, -1);
    std::vector<char> used(n, 0);
    std::set<IntVec> vectors;
    auto rec = [&](auto&& self, size_t t) -> void {
        if (t == order.size()) {
            IntVec vec(n, 0);
            for (int v = 0; v < k; ++v) vec[map[v]] = w.weights[v];
            if (vectors.insert(vec).second) out.push_back(Embedding{map, vec});
            return;
        }
        const int v = order[t];
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (size_t s = 0; s < t && ok; ++s) {
                const int u = order[s];
                ok = w.diagram.mult(v, u) == x.mult(c, map[u]) &&
                     w.diagram.mult(u, v) == x.mult(map[u], c);
            }
            if (!ok) continue;
            map[v] = c;
            used[c] = 1;
            self(self, t + 1);
            used[c] = 0;
            map[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const Embedding& a, const Embedding& b) { return a.vector < b.vector; });
    return out;
}

WeightedDiagram canonical_weighted_diagram(const WeightedDiagram& w) {
    CanonicalResult r = canonical_form(w.diagram.mult, &w.weights);
    return WeightedDiagram{DynkinDiagram{r.matrix}, r.invariant};
}

bool isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
    return permutation_equivalent(a.mult, b.mult);
}

bool isomorphic(const WeightedDiagram& a, const WeightedDiagram& b) {
    if (a.n() != b.n()) return false;
    return canonical_weighted_diagram(a) == canonical_weighted_diagram(b);
}

std::vector<WeightedDiagram> templates_A(int n) {
    std::vector<WeightedDiagram> out;
    for (int len = 1; len <= n; ++len) {
        IntMatrix m(len);
        for (int i = 0; i + 1 < len; ++i) m(i, i + 1) = m(i + 1, i) = 1;
        out.push_back(WeightedDiagram{DynkinDiagram{m}, IntVec(len, 1)});
    }
    return out;
}

std::vector<WeightedDiagram> extract_templates(ClusterTypeLabel z, const TemplateOptions& opts) {
    if (z.family == Family::A) return templates_A(z.rank);
    MatrixClass cls = enumerate_matrix_class(standard_bipartite_seed(z), opts.class_cap);
    size_t limit = opts.member_limit ? std::min(opts.member_limit, cls.members.size())
                                     : cls.members.size();
    std::set<WeightedDiagram> seen;
    for (size_t i = 0; i < limit; ++i) {
        const ExchangeMatrix& b = cls.members[i];
        SeedAtlas atlas = enumerate_seeds(b, opts.seed_cap, SeedKey::UpToPermutation);
        VectorSets sets = extract_vector_sets(atlas);
        DynkinDiagram x = diagram_of(cartan_counterpart(b));
        for (const IntVec& v : sets.c_pos)
            seen.insert(canonical_weighted_diagram(vector_to_weighted_diagram(v, x)));
    }
    return {seen.begin(), seen.end()};
}

std::set<IntVec> compute_V(const ExchangeMatrix& b, const std::vector<WeightedDiagram>& templates) {
    DynkinDiagram x = diagram_of(cartan_counterpart(b));
    std::set<IntVec> out;
    for (const WeightedDiagram& w : templates)
        for (const Embedding& e : enumerate_embeddings(w, x)) out.insert(e.vector);
    return out;
}

namespace {

// blocks (2-connected components) must all be single edges or triangles for
// "every cycle is a triangle"
bool blocks_are_edges_or_triangles(const DynkinDiagram& x) {
    const int n = x.n();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack;
    int counter = 0;
    bool ok = true;
    auto component_ok = [&](std::vector<std::pair<int, int>> edges) {
        std::set<int> verts;
        for (auto [a, b] : edges) {
            verts.insert(a);
            verts.insert(b);
        }
        if (edges.size() == 1) return true;
        return verts.size() == 3 && edges.size() == 3;
    };
    auto dfs = [&](auto&& self, int u, int parent) -> void {
        num[u] = low[u] = counter++;
        for (int v = 0; v < n; ++v) {
            if (!x.has_edge(u, v) || v == parent) continue;
            if (num[v] == -1) {
                stack.emplace_back(u, v);
                self(self, v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                    if (!component_ok(block)) ok = false;
                }
            } else if (num[v] < num[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], num[v]);
            }
        }
    };
    for (int i = 0; i < n && ok; ++i)
        if (num[i] == -1) dfs(dfs, i, -1);
    return ok;
}

}  // namespace

bool check_membership_X_An(const DynkinDiagram& x) {
    const int n = x.n();
    if (n == 0) return false;
    // connected and simply laced
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (x.mult(u, v) < 0 || x.mult(u, v) > 1 || x.mult(u, v) != x.mult(v, u)) return false;
            if (x.has_edge(u, v) && !seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != n) return false;
    if (!blocks_are_edges_or_triangles(x)) return false;
    for (int u = 0; u < n; ++u) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (x.has_edge(u, v)) nb.push_back(v);
        if (nb.size() > 4) return false;
        if (nb.size() == 3) {
            int adj = 0;
            for (size_t a = 0; a < nb.size(); ++a)
                for (size_t b = a + 1; b < nb.size(); ++b)
                    if (x.has_edge(nb[a], nb[b])) ++adj;
            if (adj != 1) return false;
        }
        if (nb.size() == 4) {
            // adjacency among the four neighbours must be a perfect matching
            int deg[4] = {0, 0, 0, 0};
            int adj = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    if (x.has_edge(nb[a], nb[b])) {
                        ++adj;
                        ++deg[a];
                        ++deg[b];
                    }
            if (adj != 2 || *std::max_element(deg, deg + 4) != 1) return false;
        }
    }
    return true;
}

MembershipOracle MembershipOracle::build(ClusterTypeLabel z, size_t class_cap) {
    MembershipOracle o;
    o.z = z;
    MatrixClass cls = enumerate_matrix_class(standard_bipartite_seed(z), class_cap);
    o.complete = cls.complete;
    for (const ExchangeMatrix& b : cls.members)
        o.canonical_diagrams.push_back(canonical_form(diagram_of(cartan_counterpart(b)).mult).matrix);
    std::sort(o.canonical_diagrams.begin(), o.canonical_diagrams.end());
    o.canonical_diagrams.erase(
        std::unique(o.canonical_diagrams.begin(), o.canonical_diagrams.end()),
        o.canonical_diagrams.end());
    return o;
}

bool MembershipOracle::contains(const DynkinDiagram& x) const {
    if (x.n() != z.rank) return false;
    IntMatrix c = canonical_form(x.mult).matrix;
    return std::binary_search(canonical_diagrams.begin(), canonical_diagrams.end(), c);
}

bool check_membership_X(ClusterTypeLabel z, const DynkinDiagram& x, size_t class_cap) {
    if (x.n() != z.rank) return false;
    if (z.family == Family::A) return check_membership_X_An(x);
    return MembershipOracle::build(z, class_cap).contains(x);
}

std::string to_dot(const DynkinDiagram& x) {
    std::ostringstream os;
    os << "graph X {\n  node [shape=circle];\n";
    for (int i = 0; i < x.n(); ++i) os << "  v" << i << " [label=\"" << i << "\"];\n";
    for (int i = 0; i < x.n(); ++i)
        for (int j = i + 1; j < x.n(); ++j)
            if (x.has_edge(i, j)) {
                os << "  v" << i << " -- v" << j;
                if (x.mult(i, j) != 1 || x.mult(j, i) != 1)
                    os << " [label=\"(" << x.mult(i, j) << "," << x.mult(j, i) << ")\"]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

std::string to_dot(const WeightedDiagram& w) {
    std::ostringstream os;
    os << "graph W {\n  node [shape=circle];\n";
    for (int i = 0; i < w.n(); ++i) os << "  v" << i << " [label=\"" << w.weights[i] << "\"];\n";
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            if (w.diagram.has_edge(i, j)) {
                os << "  v" << i << " -- v" << j;
                if (w.diagram.mult(i, j) != 1 || w.diagram.mult(j, i) != 1)
                    os << " [label=\"(" << w.diagram.mult(i, j) << "," << w.diagram.mult(j, i)
                       << ")\"]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

}  // namespace cdv

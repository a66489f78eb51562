#include "cdv/cartan_table.hpp"

#include <cctype>

namespace cdv {

std::optional<ClusterTypeLabel> parse_type_label(const std::string& s) {
    if (s.size() < 2) return std::nullopt;
    char f = static_cast<char>(std::toupper(s[0]));
    if (std::string("ABCDEFG").find(f) == std::string::npos) return std::nullopt;
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    ClusterTypeLabel z{static_cast<Family>(f), std::stoi(s.substr(1))};
    if (!is_valid_finite_type(z)) return std::nullopt;
    return z;
}

bool is_valid_finite_type(ClusterTypeLabel z) {
    switch (z.family) {
        case Family::A: return z.rank >= 1;
        case Family::B:
        case Family::C: return z.rank >= 2;
        case Family::D: return z.rank >= 4;
        case Family::E: return z.rank >= 6 && z.rank <= 8;
        case Family::F: return z.rank == 4;
        case Family::G: return z.rank == 2;
    }
    return false;
}

std::vector<ClusterTypeLabel> finite_types_of_rank(int n) {
    std::vector<ClusterTypeLabel> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
        ClusterTypeLabel z{f, n};
        if (is_valid_finite_type(z)) out.push_back(z);
    }
    return out;
}

namespace {

// edge list of the standard diagram with (a_ij, a_ji) per edge
struct Edge {
    int i, j;
    i64 aij, aji;
};

std::vector<Edge> standard_edges(ClusterTypeLabel z) {
    const int n = z.rank;
    std::vector<Edge> e;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) e.push_back({i, i + 1, -1, -1});
    };
    switch (z.family) {
        case Family::A: chain(n); break;
        case Family::B:
            chain(n - 1);
            e.push_back({n - 2, n - 1, -1, -2});  // last root short
            break;
        case Family::C:
            chain(n - 1);
            e.push_back({n - 2, n - 1, -2, -1});  // last root long
            break;
        case Family::D:
            chain(n - 1);
            e.push_back({n - 3, n - 1, -1, -1});
            break;
        case Family::E:
            chain(n - 1);
            e.push_back({2, n - 1, -1, -1});
            break;
        case Family::F:
            e.push_back({0, 1, -1, -1});
            e.push_back({1, 2, -2, -1});
            e.push_back({2, 3, -1, -1});
            break;
        case Family::G: e.push_back({0, 1, -1, -3}); break;
    }
    return e;
}

}  // namespace

CartanMatrix standard_cartan(ClusterTypeLabel z) {
    const int n = z.rank;
    IntMatrix a(n);
    for (int i = 0; i < n; ++i) a(i, i) = 2;
    for (const Edge& e : standard_edges(z)) {
        a(e.i, e.j) = e.aij;
        a(e.j, e.i) = e.aji;
    }
    auto t = compute_cartan_symmetrizer(a);
    return CartanMatrix{a, *t};
}

ExchangeMatrix standard_bipartite_seed(ClusterTypeLabel z) {
    const int n = z.rank;
    auto edges = standard_edges(z);
    // 2-color the tree, sources on color 0
    std::vector<int> color(n, -1);
    color[0] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Edge& e : edges) {
            if (color[e.i] >= 0 && color[e.j] < 0) color[e.j] = 1 - color[e.i], changed = true;
            if (color[e.j] >= 0 && color[e.i] < 0) color[e.i] = 1 - color[e.j], changed = true;
        }
    }
    IntMatrix b(n);
    for (const Edge& e : edges) {
        if (color[e.i] == 0) {
            b(e.i, e.j) = -e.aij;
            b(e.j, e.i) = e.aji;
        } else {
            b(e.i, e.j) = e.aij;
            b(e.j, e.i) = -e.aji;
        }
    }
    return make_exchange_matrix(b);
}

int coxeter_number(ClusterTypeLabel z) {
    switch (z.family) {
        case Family::A: return z.rank + 1;
        case Family::B:
        case Family::C: return 2 * z.rank;
        case Family::D: return 2 * z.rank - 2;
        case Family::E: return z.rank == 6 ? 12 : (z.rank == 7 ? 18 : 30);
        case Family::F: return 12;
        case Family::G: return 6;
    }
    return 0;
}

i64 positive_root_count(ClusterTypeLabel z) {
    return static_cast<i64>(z.rank) * coxeter_number(z) / 2;
}

}  // namespace cdv

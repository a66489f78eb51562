#include "cdv/matrices.hpp"

#include <numeric>

#include "cdv/kernels.hpp"

namespace cdv {

namespace {

struct Ratio {  // positive rational, reduced
    i64 num = 1, den = 1;
    void reduce() {
        i64 g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
};

}  // namespace

std::optional<IntVec> compute_symmetrizer(const IntMatrix& b) {
    const int n = b.n();
    for (int i = 0; i < n; ++i) {
        if (b(i, i) != 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            if ((b(i, j) == 0) != (b(j, i) == 0)) return std::nullopt;
            if (b(i, j) != 0 && sign_of(b(i, j)) == sign_of(b(j, i))) return std::nullopt;
        }
    }
    // t_j / t_i = |b_ij| / |b_ji| along every edge; BFS each component.
    std::vector<Ratio> t(n);
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = ncomp;
        t[root] = {1, 1};
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (b(i, j) == 0 || j == i) continue;
                Ratio r{checked_mul(t[i].num, std::abs(b(i, j))),
                        checked_mul(t[i].den, std::abs(b(j, i)))};
                r.reduce();
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    t[j] = r;
                    stack.push_back(j);
                } else if (t[j].num != r.num || t[j].den != r.den) {
                    return std::nullopt;  // inconsistent cycle
                }
            }
        }
        ++ncomp;
    }
    // componentwise-least positive integers: clear denominators, divide by gcd
    IntVec out(n);
    for (int c = 0; c < ncomp; ++c) {
        i64 l = 1;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) l = std::lcm(l, t[i].den);
        i64 g = 0;
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) g = std::gcd(g, checked_mul(t[i].num, l / t[i].den));
        for (int i = 0; i < n; ++i)
            if (comp[i] == c) out[i] = checked_mul(t[i].num, l / t[i].den) / g;
    }
    return out;
}

ExchangeMatrix make_exchange_matrix(const IntMatrix& b) {
    auto t = compute_symmetrizer(b);
    if (!t) throw NotSkewSymmetrizable("no positive diagonal symmetrizer exists");
    return ExchangeMatrix{b, *t};
}

ExchangeMatrix mutate_b(const ExchangeMatrix& m, int k) {
    const int n = m.n();
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    IntMatrix out(n);
    kernels::select(m.b.max_abs()).mutate_b(m.b.data(), out.data(), n, k);
    return ExchangeMatrix{out, m.symmetrizer};  // T*B skew-symmetry is preserved
}

SeedState mutate_seed(const SeedState& s, int k) {
    const int n = s.n();
    if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
    const i64 bound = std::max({s.b.b.max_abs(), s.c.max_abs(), s.d.max_abs()});
    const auto& kt = kernels::select(bound);
    SeedState out;
    out.b.b = IntMatrix(n);
    out.b.symmetrizer = s.b.symmetrizer;
    out.c = IntMatrix(n);
    out.d = IntMatrix(n);
    // C and D recursions read the pre-mutation B
    kt.mutate_c(s.c.data(), s.b.b.data(), out.c.data(), n, k);
    kt.mutate_d(s.d.data(), s.b.b.data(), out.d.data(), n, k);
    kt.mutate_b(s.b.b.data(), out.b.b.data(), n, k);
    out.path = s.path;
    if (!out.path.empty() && out.path.back() == k)
        out.path.pop_back();  // involution: retrace instead of growing
    else
        out.path.push_back(k);
    return out;
}

CartanMatrix cartan_counterpart(const ExchangeMatrix& m) {
    const int n = m.n();
    IntMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = (i == j) ? 2 : checked_neg(std::abs(m.b(i, j)));
    return CartanMatrix{a, m.symmetrizer};
}

std::optional<IntVec> compute_cartan_symmetrizer(const IntMatrix& a) {
    const int n = a.n();
    for (int i = 0; i < n; ++i) {
        if (a(i, i) != 2) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a(i, j) > 0) return std::nullopt;
            if ((a(i, j) == 0) != (a(j, i) == 0)) return std::nullopt;
        }
    }
    // same ratio propagation as the skew case: t_j/t_i = a_ij/a_ji
    IntMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b(i, j) = (j > i) ? -a(i, j) : a(i, j);
    return compute_symmetrizer(b);
}

bool is_bipartite(const ExchangeMatrix& m) {
    const int n = m.n();
    for (int i = 0; i < n; ++i) {
        bool has_out = false, has_in = false;
        for (int j = 0; j < n; ++j) {
            if (m.b(i, j) > 0) has_out = true;
            if (m.b(i, j) < 0) has_in = true;
        }
        if (has_out && has_in) return false;
    }
    return true;
}

bool is_sign_coherent(const IntVec& v) {
    bool pos = false, neg = false;
    for (i64 x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    return (pos || neg) && !(pos && neg);
}

bool is_initial_d_column(const IntVec& v) {
    int minus_ones = 0;
    for (i64 x : v) {
        if (x == -1)
            ++minus_ones;
        else if (x != 0)
            return false;
    }
    return minus_ones == 1;
}

}  // namespace cdv

#include "cdv/folding.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "cdv/canonical.hpp"

namespace cdv {

int OrbitAutomorphism::orbit_of(int i) const {
    for (int o = 0; o < orbit_count(); ++o)
        if (std::binary_search(orbits[o].begin(), orbits[o].end(), i)) return o;
    return -1;
}

OrbitAutomorphism OrbitAutomorphism::from_permutation(std::vector<int> sigma) {
    OrbitAutomorphism s;
    const int n = static_cast<int>(sigma.size());
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> orb;
        for (int j = i; !seen[j]; j = sigma[j]) {
            seen[j] = 1;
            orb.push_back(j);
        }
        std::sort(orb.begin(), orb.end());
        s.orbits.push_back(std::move(orb));
    }
    std::sort(s.orbits.begin(), s.orbits.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    s.sigma = std::move(sigma);
    return s;
}

std::optional<OrbitAutomorphism> OrbitAutomorphism::parse_cycles(const std::string& text, int n) {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(') return std::nullopt;
        size_t close = text.find(')', pos);
        if (close == std::string::npos) return std::nullopt;
        std::string body = text.substr(pos + 1, close - pos - 1);
        for (char& ch : body)
            if (ch == ',') ch = ' ';
        std::istringstream is(body);
        std::vector<int> cyc;
        int v;
        while (is >> v) {
            if (v < 1 || v > n) return std::nullopt;
            cyc.push_back(v - 1);
        }
        if (cyc.size() < 2) return std::nullopt;
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (sigma[cyc[i]] != cyc[i]) return std::nullopt;  // overlapping cycles
        }
        for (size_t i = 0; i < cyc.size(); ++i) sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
        pos = close + 1;
    }
    return from_permutation(std::move(sigma));
}

bool is_admissible(const ExchangeMatrix& m, const OrbitAutomorphism& s) {
    const int n = m.n();
    if (s.n() != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.b(s.sigma[i], s.sigma[j]) != m.b(i, j)) return false;
    for (const auto& orb : s.orbits) {
        for (int i1 : orb)
            for (int i2 : orb) {
                if (i1 != i2 && m.b(i1, i2) != 0) return false;
                for (int j = 0; j < n; ++j)
                    if (checked_mul(sign_of(m.b(i1, j)), sign_of(m.b(i2, j))) < 0) return false;
            }
    }
    return true;
}

ExchangeMatrix orbit_mutate(const ExchangeMatrix& m, const OrbitAutomorphism& sigma, int orbit) {
    if (!is_admissible(m, sigma)) throw NotAdmissible("before orbit mutation");
    ExchangeMatrix cur = m;
    for (int t : sigma.orbits.at(orbit)) cur = mutate_b(cur, t);
    if (!is_admissible(cur, sigma)) throw NotAdmissible("stability violated after orbit mutation");
    return cur;
}

SeedState orbit_mutate_seed(const SeedState& s, const OrbitAutomorphism& sigma, int orbit) {
    if (!is_admissible(s.b, sigma)) throw NotAdmissible("before orbit mutation");
    SeedState cur = s;
    for (int t : sigma.orbits.at(orbit)) cur = mutate_seed(cur, t);
    if (!is_admissible(cur.b, sigma)) throw NotAdmissible("stability violated after orbit mutation");
    return cur;
}

ExchangeMatrix fold_matrix(const ExchangeMatrix& m, const OrbitAutomorphism& sigma) {
    if (!is_admissible(m, sigma)) throw NotAdmissible("fold_matrix");
    const int k = sigma.orbit_count();
    IntMatrix out(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            bool first = true;
            i64 val = 0;
            for (int j : sigma.orbits[b]) {
                i64 s = 0;
                for (int i : sigma.orbits[a]) s = checked_add(s, m.b(i, j));
                if (first) {
                    val = s;
                    first = false;
                } else if (s != val) {
                    throw RepresentativeDependent();
                }
            }
            out(a, b) = val;
        }
    return make_exchange_matrix(out);
}

namespace {

void require_sigma_invariant(const IntMatrix& m, const OrbitAutomorphism& s) {
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (m(s.sigma[i], s.sigma[j]) != m(i, j)) throw RepresentativeDependent();
}

IntMatrix fold_rows_pick_column(const IntMatrix& m, const OrbitAutomorphism& s) {
    const int k = s.orbit_count();
    IntMatrix out(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            i64 v = 0;
            for (int i : s.orbits[a]) v = checked_add(v, m(i, s.orbits[b][0]));
            out(a, b) = v;
        }
    return out;
}

}  // namespace

IntMatrix fold_c_matrix(const IntMatrix& c, const OrbitAutomorphism& sigma) {
    require_sigma_invariant(c, sigma);
    for (const auto& orb : sigma.orbits)
        for (int j = 0; j < c.n(); ++j) {
            int pos = 0, neg = 0;
            for (int s : orb) {
                if (c(s, j) > 0) pos = 1;
                if (c(s, j) < 0) neg = 1;
            }
            if (pos && neg)
                throw SignConditionViolated("c-row signs differ inside an orbit");
        }
    return fold_rows_pick_column(c, sigma);
}

IntMatrix fold_d_matrix(const IntMatrix& d, const OrbitAutomorphism& sigma,
                        const ExchangeMatrix& b) {
    require_sigma_invariant(d, sigma);
    const int n = d.n();
    for (const auto& orb : sigma.orbits)
        for (int k = 0; k < n; ++k) {
            int pos = 0, neg = 0;
            for (int s : orb) {
                i64 acc = 0;
                for (int t = 0; t < n; ++t) acc = checked_add(acc, checked_mul(d(s, t), b.b(t, k)));
                if (acc > 0) pos = 1;
                if (acc < 0) neg = 1;
            }
            if (pos && neg)
                throw SignConditionViolated("d-row combination signs differ inside an orbit");
        }
    return fold_rows_pick_column(d, sigma);
}

IntVec fold_vector(const IntVec& v, const OrbitAutomorphism& sigma) {
    IntVec out(sigma.orbit_count(), 0);
    for (int a = 0; a < sigma.orbit_count(); ++a)
        for (int i : sigma.orbits[a]) out[a] = checked_add(out[a], v[i]);
    return out;
}

namespace {

// standard sigma-symmetric seed for the unfolding of B_n / C_n
Unfolding standard_unfolded(ClusterTypeLabel z) {
    if (z.family == Family::B && z.rank >= 3) {
        const int m = z.rank + 1;  // D_{n+1}
        ExchangeMatrix b = standard_bipartite_seed(ClusterTypeLabel{Family::D, m});
        std::vector<int> sig(m);
        for (int i = 0; i < m; ++i) sig[i] = i;
        std::swap(sig[m - 2], sig[m - 1]);  // swap the fork tips
        return Unfolding{b, OrbitAutomorphism::from_permutation(sig)};
    }
    // C_n (and the rank-2 case B2 = C2): A_{2n-1} with the order-2 reflection
    const int m = 2 * z.rank - 1;
    ExchangeMatrix b = standard_bipartite_seed(ClusterTypeLabel{Family::A, m});
    std::vector<int> sig(m);
    for (int i = 0; i < m; ++i) sig[i] = m - 1 - i;
    return Unfolding{b, OrbitAutomorphism::from_permutation(sig)};
}

}  // namespace

Unfolding unfold_type(const ExchangeMatrix& folded, size_t cap) {
    TypeDetection det = detect_cluster_type(folded, cap);
    if (!det.label) throw NotFoldedType("type not detected");
    ClusterTypeLabel z = *det.label;
    if (z.family != Family::B && z.family != Family::C)
        throw NotFoldedType("detected type " + z.str());
    if (z.rank == 2) z.family = Family::C;  // B2 = C2, realized from A3

    Unfolding start = standard_unfolded(z);
    if (!is_admissible(start.unfolded, start.sigma))
        throw NotFoldedType("standard seed is not sigma-admissible (internal)");

    const IntMatrix target_canon = canonical_form(folded.b).matrix;
    std::unordered_set<IntMatrix, IntMatrixHash> seen;
    std::vector<ExchangeMatrix> frontier{start.unfolded};
    seen.insert(start.unfolded.b);
    for (size_t idx = 0; idx < frontier.size(); ++idx) {
        ExchangeMatrix cur = frontier[idx];
        ExchangeMatrix f = fold_matrix(cur, start.sigma);
        CanonicalResult cf = canonical_form(f.b);
        if (cf.matrix == target_canon) {
            // relabel so that the fold equals the input exactly
            CanonicalResult ct = canonical_form(folded.b);
            const int k = start.sigma.orbit_count();
            // phi[folded index of input] = orbit index of cur
            std::vector<int> phi(k);
            for (int i = 0; i < k; ++i) phi[ct.perm[i]] = cf.perm[i];
            std::vector<int> vert_perm;  // new unfolded index -> old
            for (int a = 0; a < k; ++a)
                for (int v : start.sigma.orbits[phi[a]]) vert_perm.push_back(v);
            IntMatrix nb = cur.b.permuted(vert_perm);
            std::vector<int> inv(vert_perm.size());
            for (size_t i = 0; i < vert_perm.size(); ++i) inv[vert_perm[i]] = static_cast<int>(i);
            std::vector<int> nsig(vert_perm.size());
            for (size_t i = 0; i < vert_perm.size(); ++i)
                nsig[i] = inv[start.sigma.sigma[vert_perm[i]]];
            Unfolding out{make_exchange_matrix(nb), OrbitAutomorphism::from_permutation(nsig)};
            if (fold_matrix(out.unfolded, out.sigma).b != folded.b)
                throw NotFoldedType("relabeled unfolding mismatch (internal)");
            return out;
        }
        for (int o = 0; o < start.sigma.orbit_count(); ++o) {
            ExchangeMatrix next = orbit_mutate(cur, start.sigma, o);
            if (seen.contains(next.b)) continue;
            if (frontier.size() >= cap) throw NotFoldedType("orbit-mutation search cap exceeded");
            seen.insert(next.b);
            frontier.push_back(std::move(next));
        }
    }
    throw NotFoldedType("no unfolding found in the orbit-mutation class");
}

}  // namespace cdv

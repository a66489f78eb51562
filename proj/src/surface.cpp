#include "cdv/surface.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace cdv::surface {

std::string TaggedArc::str() const {
    std::ostringstream os;
    if (is_chord())
        os << "c(" << p << "," << q << ")";
    else
        os << "r(" << p << (tag == Tag::Plain ? ",plain" : ",notched") << ")";
    return os.str();
}

int Triangulation::slot_of(const TaggedArc& a) const {
    for (int i = 0; i < n(); ++i)
        if (arcs[i] == a) return i;
    return -1;
}

namespace {

using Q = mpq_class;

struct Pt {
    Q x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

struct GeomError : std::runtime_error {
    GeomError() : std::runtime_error("degenerate surface geometry (internal)") {}
};

// position along a polyline: piece index plus parameter inside the piece
struct Param {
    int piece;
    Q t;
    bool operator<(const Param& o) const { return piece != o.piece ? piece < o.piece : t < o.t; }
};

struct Polyline {
    std::vector<Pt> p;
};

// transversal interior crossing of two segments; unexpected contact throws
std::optional<std::tuple<Q, Q, int>> seg_cross(const Pt& p1, const Pt& p2, const Pt& q1,
                                               const Pt& q2) {
    const Q d1x = p2.x - p1.x, d1y = p2.y - p1.y;
    const Q d2x = q2.x - q1.x, d2y = q2.y - q1.y;
    const Q den = d1x * d2y - d1y * d2x;
    const Q rx = q1.x - p1.x, ry = q1.y - p1.y;
    if (den == 0) {
        if (d1x * ry - d1y * rx == 0 &&
            !((p1 == q1 && p2 == q2) || (p1 == q2 && p2 == q1)))
            throw GeomError();
        return std::nullopt;
    }
    const Q t = (rx * d2y - ry * d2x) / den;
    const Q u = (rx * d1y - ry * d1x) / den;
    const bool ti = t > 0 && t < 1, ui = u > 0 && u < 1;
    if (ti && ui) return std::make_tuple(t, u, den > 0 ? 1 : -1);
    const bool shared = p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2;
    if (!shared && (((t == 0 || t == 1) && ui) || ((u == 0 || u == 1) && ti))) throw GeomError();
    return std::nullopt;
}

std::vector<std::pair<Param, int>> polyline_crossings(const Polyline& a, const Polyline& b) {
    std::vector<std::pair<Param, int>> out;
    for (size_t i = 0; i + 1 < a.p.size(); ++i)
        for (size_t j = 0; j + 1 < b.p.size(); ++j)
            if (auto c = seg_cross(a.p[i], a.p[i + 1], b.p[j], b.p[j + 1]))
                out.push_back({Param{static_cast<int>(i), std::get<0>(*c)}, std::get<2>(*c)});
    return out;
}

int crossing_count(const Polyline& a, const Polyline& b) {
    int c = 0;
    for (size_t i = 0; i + 1 < a.p.size(); ++i)
        for (size_t j = 0; j + 1 < b.p.size(); ++j)
            if (seg_cross(a.p[i], a.p[i + 1], b.p[j], b.p[j + 1])) ++c;
    return c;
}

Pt circle_pt(const Q& t) {
    const Q d = 1 + t * t;
    return Pt{(1 - t * t) / d, 2 * t / d};
}

// ideal arcs: tagged arcs plus the loop that resolves a homotopic digon pair
struct IdealArc {
    enum class K : char { Chord, Radius, Loop } k;
    int p = 0, q = 0;
};

struct CurveCopy {
    int slot;
    Polyline poly;
    Pt u, v;  // endpoint markers used for attachment classification
};

}  // namespace

struct Surface::Impl {
    MarkedSurface shape;
    int n;     // rank
    int M;     // boundary points of the working polygon (2n upstairs for type D)
    bool punct;
    std::vector<Pt> V, Vp;  // vertices; shifted points, Vp[k] in the gap (k-1, k)
    Q r_a{1, 256}, r_b{1, 512}, eps{1, 64};
    Pt O{Q(0), Q(0)};

    std::vector<TaggedArc> census;
    std::map<TaggedArc, int> census_index;
    std::vector<std::vector<int>> pair_table;
    mutable std::optional<std::vector<Triangulation>> all_tris;
    mutable std::map<std::pair<std::vector<TaggedArc>, TaggedArc>, IntVec> shear_memo;

    explicit Impl(MarkedSurface s) : shape(s), n(s.rank), punct(s.punctured) {
        M = punct ? 2 * n : n + 3;
        if (punct && n < 3) throw std::invalid_argument("type D needs rank >= 3");
        if (!punct && n < 1) throw std::invalid_argument("type A needs rank >= 1");
        layout();
        build_census();
        build_pairing();
    }

    void layout() {
        std::vector<Q> ts(M);
        for (int k = 0; k < M; ++k) {
            double phi = -M_PI + M_PI * (2 * k + 1) / M;
            ts[k] = Q(static_cast<long>(std::llround(std::tan(phi / 2) * 65536)), 65536);
            ts[k].canonicalize();
        }
        for (int k = 0; k + 1 < M; ++k)
            if (!(ts[k] < ts[k + 1])) throw GeomError();
        V.resize(M);
        Vp.resize(M);
        for (int k = 0; k < M; ++k) {
            V[k] = circle_pt(ts[k]);
            Vp[k] = circle_pt(k == 0 ? Q(ts[M - 1] + 1) : Q((ts[k - 1] + ts[k]) / 2));
        }
        if (punct) {
            // the spiral winding radius must clear every chord in use
            Q d2min;
            bool first = true;
            auto dist2 = [&](const Pt& a, const Pt& b) {
                Q num = (b.x - a.x) * (0 - a.y) - (b.y - a.y) * (0 - a.x);
                num = num * num;
                Q den = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
                return Q(num / den);
            };
            for (int p = 0; p < M; ++p)
                for (int s = 2; s < n; ++s) {
                    for (Q d2 : {dist2(V[p], V[(p + s) % M]), dist2(Vp[p], Vp[(p + s) % M])}) {
                        if (first || d2 < d2min) d2min = d2, first = false;
                    }
                }
            if (!(r_a * r_a < d2min)) throw GeomError();
        }
    }

    void build_census() {
        if (!punct) {
            for (int p = 0; p < M; ++p)
                for (int q = p + 1; q < M; ++q)
                    if (q - p != 1 && (q - p) != M - 1) census.push_back(TaggedArc::chord(p, q));
        } else {
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    int s = (q - p + n) % n;
                    if (s >= 2 && s <= n - 1) census.push_back(TaggedArc::chord(p, q));
                }
            for (int p = 0; p < n; ++p) {
                census.push_back(TaggedArc::radius(p, Tag::Plain));
                census.push_back(TaggedArc::radius(p, Tag::Notched));
            }
        }
        std::sort(census.begin(), census.end());
        for (size_t i = 0; i < census.size(); ++i) census_index[census[i]] = static_cast<int>(i);
    }

    int chord_span(const TaggedArc& a) const { return punct ? (a.q - a.p + n) % n : a.q - a.p; }

    Polyline chord_lift(const TaggedArc& a, int which) const {
        if (!punct) return Polyline{{V[a.p], V[a.q]}};
        const int s = chord_span(a);
        const int base = (a.p + which * n) % M;
        return Polyline{{V[base], V[(base + s) % M]}};
    }
    Polyline radius_diameter(int p) const { return Polyline{{V[p], O, V[(p + n) % M]}}; }
    Polyline radius_half(int p, int which) const { return Polyline{{V[(p + which * n) % M], O}}; }
    Polyline loop_lift(int p, int which) const {
        const Pt a = V[p], b = V[(p + n) % M];
        Q ux = a.y - b.y, uy = b.x - a.x;
        Q ax = abs(ux), ay = abs(uy);
        Q den = ax > ay ? ax : ay;
        Pt X{eps * ux / den, eps * uy / den};
        if (which) X = Pt{-X.x, -X.y};
        return Polyline{{a, X, b}};
    }

    int compute_pairing(const TaggedArc& a, const TaggedArc& b) {
        if (a == b) return -1;
        if (!a.is_chord() && !b.is_chord()) {
            if (a.p == b.p) return 0;  // homotopic radii, tags differ
            return (a.tag == b.tag) ? 0 : 1;
        }
        if (!punct) {
            int p = a.p, q = a.q, r = b.p, s = b.q;
            auto inside = [&](int x, int lo, int hi) { return lo < x && x < hi; };
            bool share = p == r || p == s || q == r || q == s;
            return (!share && (inside(r, p, q) != inside(s, p, q))) ? 1 : 0;
        }
        if (a.is_chord() && b.is_chord())
            return crossing_count(chord_lift(a, 0), chord_lift(b, 0)) +
                   crossing_count(chord_lift(a, 0), chord_lift(b, 1));
        const TaggedArc& c = a.is_chord() ? a : b;
        const TaggedArc& r = a.is_chord() ? b : a;
        return crossing_count(chord_lift(c, 0), radius_diameter(r.p));
    }

    void build_pairing() {
        const int k = static_cast<int>(census.size());
        pair_table.assign(k, std::vector<int>(k, 0));
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                pair_table[i][j] = pair_table[j][i] = compute_pairing(census[i], census[j]);
    }

    int pairing(const TaggedArc& a, const TaggedArc& b) const {
        return pair_table[census_index.at(a)][census_index.at(b)];
    }

    const std::vector<Triangulation>& triangulations() const {
        if (all_tris) return *all_tris;
        all_tris.emplace();
        const int k = static_cast<int>(census.size());
        std::vector<int> cur;
        auto bt = [&](auto&& self, int start) -> void {
            if (static_cast<int>(cur.size()) == n) {
                Triangulation t;
                for (int i : cur) t.arcs.push_back(census[i]);
                all_tris->push_back(std::move(t));
                return;
            }
            if (static_cast<int>(cur.size()) + (k - start) < n) return;
            for (int i = start; i < k; ++i) {
                bool ok = true;
                for (int c : cur)
                    if (pair_table[i][c] > 0) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    cur.push_back(i);
                    self(self, i + 1);
                    cur.pop_back();
                }
            }
        };
        bt(bt, 0);
        return *all_tris;
    }

    std::pair<Triangulation, TaggedArc> flip(const Triangulation& t, int slot) const {
        if (slot < 0 || slot >= t.n()) throw ArcNotInTriangulation();
        std::vector<int> rest;
        for (int j = 0; j < t.n(); ++j)
            if (j != slot) rest.push_back(census_index.at(t.arcs[j]));
        const int old = census_index.at(t.arcs[slot]);
        std::optional<int> found;
        for (int i = 0; i < static_cast<int>(census.size()); ++i) {
            if (i == old) continue;
            bool ok = true;
            for (int c : rest)
                if (i == c || pair_table[i][c] > 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                if (found) throw std::logic_error("flip replacement not unique (internal)");
                found = i;
            }
        }
        if (!found) throw std::logic_error("flip replacement missing (internal)");
        Triangulation out = t;
        out.arcs[slot] = census[*found];
        return {out, census[*found]};
    }

    // ---------- rotation-rule B matrix ----------
    static bool all_notched(const std::vector<TaggedArc>& arcs) {
        bool any = false;
        for (const TaggedArc& a : arcs)
            if (!a.is_chord()) {
                if (a.tag != Tag::Notched) return false;
                any = true;
            }
        return any;
    }

    IntMatrix b_matrix(const Triangulation& t_in) const {
        std::vector<TaggedArc> tri = t_in.arcs;
        require_reducible_tags(tri);
        if (all_notched(tri))
            for (TaggedArc& a : tri)
                if (!a.is_chord()) a.tag = Tag::Plain;
        IntMatrix B(n);
        std::map<std::pair<int, int>, bool> rel;
        const int npts = punct ? n : M;
        for (int m = 0; m < npts; ++m) {
            // ends at m keyed by counterclockwise span toward the far end
            std::vector<std::pair<int, std::vector<int>>> ends;
            for (int idx = 0; idx < t_in.n(); ++idx) {
                const TaggedArc& a = tri[idx];
                if (a.is_chord()) {
                    if (a.p == m) ends.push_back({punct ? chord_span(a) : a.q - a.p, {idx}});
                    if (a.q == m)
                        ends.push_back({punct ? M - chord_span(a) : M - (a.q - a.p), {idx}});
                } else if (a.p == m) {
                    ends.push_back({punct ? n : 0, {idx}});
                }
            }
            std::sort(ends.begin(), ends.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            std::vector<std::pair<int, std::vector<int>>> grouped;
            for (auto& e : ends) {
                if (!grouped.empty() && grouped.back().first == e.first)
                    grouped.back().second.insert(grouped.back().second.end(), e.second.begin(),
                                                 e.second.end());
                else
                    grouped.push_back(std::move(e));
            }
            for (size_t g = 0; g + 1 < grouped.size(); ++g)
                for (int i : grouped[g].second)
                    for (int j : grouped[g + 1].second) rel[{i, j}] = true;
        }
        if (punct) {
            std::vector<std::vector<int>> groups;  // radii around the puncture, ccw
            for (int p = 0; p < n; ++p) {
                std::vector<int> slots;
                for (int idx = 0; idx < t_in.n(); ++idx)
                    if (!tri[idx].is_chord() && tri[idx].p == p) slots.push_back(idx);
                if (!slots.empty()) groups.push_back(std::move(slots));
            }
            if (groups.size() >= 3)
                for (size_t g = 0; g < groups.size(); ++g)
                    for (int i : groups[g])
                        for (int j : groups[(g + 1) % groups.size()]) rel[{i, j}] = true;
        }
        for (const auto& [ij, unused] : rel) {
            (void)unused;
            if (rel.count({ij.second, ij.first})) continue;
            B(ij.first, ij.second) += 1;
            B(ij.second, ij.first) -= 1;
        }
        return B;
    }

    // ---------- shear coordinates ----------
    struct Event {
        Param at;
        int copy = -1;  // crossing when >= 0
        int sign = 0;
        enum class EK : char { Crossing, Bnd, Center } ek = EK::Crossing;
        Pt ea, eb;  // boundary gap endpoints (Bnd events)
    };

    struct EventList {
        std::vector<CurveCopy> copies;
        std::vector<Event> events;
        bool winding_ccw = false;  // of the lifted lamination (spirals only)
    };

    Polyline lam_lift(const TaggedArc& arc, bool reverse, bool& ccw_out) const {
        if (arc.is_chord()) {
            if (!punct) return Polyline{{Vp[arc.p], Vp[arc.q]}};
            const int s = chord_span(arc);
            return Polyline{{Vp[arc.p], Vp[(arc.p + s) % M]}};
        }
        bool ccw = (arc.tag == Tag::Plain);
        if (reverse) ccw = !ccw;
        ccw_out = ccw;
        Polyline poly;
        poly.p.push_back(Vp[arc.p]);
        const int steps = 3 * n + 2;
        for (int j = 1; j <= steps; ++j) {
            const int d = ccw ? (arc.p + j) % M : ((arc.p - j) % M + M) % M;
            Q rad = r_a - (r_a - r_b) * Q(j, steps);
            poly.p.push_back(Pt{rad * Vp[d].x, rad * Vp[d].y});
        }
        poly.p.push_back(O);
        return poly;
    }

    static std::vector<IdealArc> ideal_arcs(const std::vector<TaggedArc>& tri, int digon_p) {
        std::vector<IdealArc> out;
        for (const TaggedArc& a : tri) {
            if (a.is_chord())
                out.push_back({IdealArc::K::Chord, a.p, a.q});
            else if (digon_p >= 0 && a.p == digon_p && a.tag == Tag::Notched)
                out.push_back({IdealArc::K::Loop, a.p, 0});
            else
                out.push_back({IdealArc::K::Radius, a.p, 0});
        }
        return out;
    }

    EventList build_events(const TaggedArc& lam_arc, const std::vector<IdealArc>& arcs2,
                           bool reverse) const {
        EventList el;
        for (int idx = 0; idx < static_cast<int>(arcs2.size()); ++idx) {
            const IdealArc& a = arcs2[idx];
            switch (a.k) {
                case IdealArc::K::Chord: {
                    TaggedArc c = TaggedArc::chord(a.p, a.q);
                    Polyline c0 = chord_lift(c, 0);
                    el.copies.push_back({idx, c0, c0.p.front(), c0.p.back()});
                    if (punct) {
                        Polyline c1 = chord_lift(c, 1);
                        el.copies.push_back({idx, c1, c1.p.front(), c1.p.back()});
                    }
                    break;
                }
                case IdealArc::K::Radius: {
                    Polyline h0 = radius_half(a.p, 0), h1 = radius_half(a.p, 1);
                    el.copies.push_back({idx, h0, h0.p.front(), O});
                    el.copies.push_back({idx, h1, h1.p.front(), O});
                    break;
                }
                case IdealArc::K::Loop: {
                    const Pt u = V[a.p], v = V[(a.p + n) % M];
                    el.copies.push_back({idx, loop_lift(a.p, 0), u, v});
                    el.copies.push_back({idx, loop_lift(a.p, 1), u, v});
                    break;
                }
            }
        }
        Polyline lam = lam_lift(lam_arc, reverse, el.winding_ccw);
        for (int ci = 0; ci < static_cast<int>(el.copies.size()); ++ci)
            for (auto& [at, sgn] : polyline_crossings(lam, el.copies[ci].poly)) {
                Event e;
                e.at = at;
                e.copy = ci;
                e.sign = sgn;
                el.events.push_back(e);
            }
        std::sort(el.events.begin(), el.events.end(),
                  [](const Event& a, const Event& b) { return a.at < b.at; });
        auto bnd_event = [&](int k, int piece) {
            Event e;
            e.at = Param{piece, Q(0)};
            e.ek = Event::EK::Bnd;
            e.ea = V[(k - 1 + M) % M];
            e.eb = V[k % M];
            return e;
        };
        Event start = bnd_event(lam_arc.p, -1);
        Event fin;
        if (lam_arc.is_chord()) {
            fin = bnd_event(punct ? (lam_arc.p + chord_span(lam_arc)) % M : lam_arc.q, 1 << 20);
        } else {
            fin.at = Param{1 << 20, Q(0)};
            fin.ek = Event::EK::Center;
        }
        el.events.insert(el.events.begin(), start);
        el.events.push_back(fin);
        return el;
    }

    enum class Attach { U, V, Center };
    static std::optional<Attach> attach(const EventList& el, const Event& e, const Pt& gu,
                                        const Pt& gv) {
        if (e.ek == Event::EK::Center) return Attach::Center;
        const Pt *a, *b;
        if (e.ek == Event::EK::Bnd) {
            a = &e.ea;
            b = &e.eb;
        } else {
            a = &el.copies[e.copy].u;
            b = &el.copies[e.copy].v;
        }
        const bool au = *a == gu, av = *a == gv, bu = *b == gu, bv = *b == gv;
        if (int shared = (au || av ? 1 : 0) + (bu || bv ? 1 : 0); shared != 1) return std::nullopt;
        return (au || bu) ? Attach::U : Attach::V;
    }

    int eval_slot(const EventList& el, int gslot, bool g_is_loop, int radius_slot) const {
        int total = 0;
        const auto& ev = el.events;
        auto slot_of = [&](const Event& e) { return e.copy >= 0 ? el.copies[e.copy].slot : -1; };
        for (size_t i = 1; i + 1 < ev.size();) {
            if (slot_of(ev[i]) != gslot) {
                ++i;
                continue;
            }
            const Pt& gu = el.copies[ev[i].copy].u;
            const Pt& gv = el.copies[ev[i].copy].v;
            if (g_is_loop) {
                // a pass through the folded lens reads (loop, radius, loop)
                if (i + 2 < ev.size() && slot_of(ev[i + 1]) == radius_slot &&
                    slot_of(ev[i + 2]) == gslot) {
                    const Event& prev = ev[i - 1];
                    const Event& next = ev[std::min(i + 3, ev.size() - 1)];
                    if (slot_of(prev) != gslot && slot_of(next) != gslot) {
                        auto a1 = attach(el, prev, gu, gv);
                        auto a2 = attach(el, next, gu, gv);
                        if (!a1 || !a2) throw GeomError();
                        if (*a1 != Attach::Center && *a2 != Attach::Center && *a1 != *a2)
                            total += (*a1 == Attach::U ? 1 : -1) * ev[i].sign;
                    }
                    i += 3;
                    continue;
                }
                // spiral terminating inside the lens: virtual exit selected by
                // the winding sense and the entry orientation
                bool tail_clear = true;
                for (size_t j = i + 2; j < ev.size(); ++j)
                    if (slot_of(ev[j]) == gslot) {
                        tail_clear = false;
                        break;
                    }
                if (slot_of(ev[i + 1]) == radius_slot && tail_clear) {
                    auto a1 = slot_of(ev[i - 1]) == gslot ? std::optional<Attach>{}
                                                          : attach(el, ev[i - 1], gu, gv);
                    Attach a2 = (el.winding_ccw != (ev[i].sign < 0)) ? Attach::U : Attach::V;
                    if (a1 && *a1 != Attach::Center && *a1 != a2)
                        total += (*a1 == Attach::U ? 1 : -1) * ev[i].sign;
                }
                ++i;
                continue;
            }
            auto a1 = attach(el, ev[i - 1], gu, gv);
            auto a2 = attach(el, ev[i + 1], gu, gv);
            if (!a1 || !a2) throw GeomError();
            if (*a1 != Attach::Center && *a2 != Attach::Center && *a1 != *a2)
                total += (*a1 == Attach::U ? 1 : -1) * ev[i].sign;
            ++i;
        }
        return total;
    }

    // shear coordinates memoized on the sorted arc set, then remapped to slots
    IntVec shear_row(const TaggedArc& lam_arc, const Triangulation& t_in) const {
        std::vector<TaggedArc> sorted = t_in.arcs;
        std::sort(sorted.begin(), sorted.end());
        IntVec row;
        auto key = std::make_pair(sorted, lam_arc);
        if (auto it = shear_memo.find(key); it != shear_memo.end()) {
            row = it->second;
        } else {
            row = shear_row_sorted(lam_arc, sorted);
            shear_memo.emplace(std::move(key), row);
        }
        IntVec out(t_in.n());
        for (int s = 0; s < t_in.n(); ++s) {
            auto pos = std::lower_bound(sorted.begin(), sorted.end(), t_in.arcs[s]);
            out[s] = row[pos - sorted.begin()];
        }
        return out;
    }

    // valid tag configurations: all radii plain, all notched, or one
    // homotopic digon pair; anything else is not a tagged triangulation
    static void require_reducible_tags(const std::vector<TaggedArc>& tri) {
        std::vector<TaggedArc> radii;
        for (const TaggedArc& a : tri)
            if (!a.is_chord()) radii.push_back(a);
        if (radii.size() == 2 && radii[0].p == radii[1].p && radii[0].tag != radii[1].tag)
            return;
        bool any_plain = false, any_notched = false;
        for (const TaggedArc& a : radii)
            (a.tag == Tag::Plain ? any_plain : any_notched) = true;
        if (any_plain && any_notched) throw UnsupportedTagConfiguration();
    }

    IntVec shear_row_sorted(const TaggedArc& lam_arc, const std::vector<TaggedArc>& tri_in) const {
        std::vector<TaggedArc> tri = tri_in;
        require_reducible_tags(tri);
        bool lamflip = false;
        if (all_notched(tri)) {  // simultaneous tag and winding flip
            for (TaggedArc& a : tri)
                if (!a.is_chord()) a.tag = Tag::Plain;
            lamflip = true;
        }
        int digon_p = -1;
        for (size_t i = 0; i < tri.size(); ++i)
            for (size_t j = i + 1; j < tri.size(); ++j)
                if (!tri[i].is_chord() && !tri[j].is_chord() && tri[i].p == tri[j].p)
                    digon_p = tri[i].p;
        std::vector<IdealArc> arcs2 = ideal_arcs(tri, digon_p);
        int loop_slot = -1, radius_slot = -1;
        for (int i = 0; i < static_cast<int>(arcs2.size()); ++i) {
            if (arcs2[i].k == IdealArc::K::Loop) loop_slot = i;
            if (digon_p >= 0 && arcs2[i].k == IdealArc::K::Radius && arcs2[i].p == digon_p)
                radius_slot = i;
        }
        EventList normal = build_events(lam_arc, arcs2, lamflip);
        std::optional<EventList> reversed;

        IntVec out(tri.size(), 0);
        for (int slot = 0; slot < static_cast<int>(tri.size()); ++slot) {
            if (digon_p >= 0 && slot == radius_slot) {
                // plain partner of the digon: loop coordinate of the
                // winding-reversed lamination
                if (!reversed) reversed = build_events(lam_arc, arcs2, !lamflip);
                out[slot] = eval_slot(*reversed, loop_slot, true, radius_slot);
            } else if (digon_p >= 0 && slot == loop_slot) {
                out[slot] = eval_slot(normal, loop_slot, true, radius_slot);
            } else {
                out[slot] = eval_slot(normal, slot, false, -1);
            }
        }
        return out;
    }
};

Surface::Surface(MarkedSurface shape) : impl_(std::make_unique<Impl>(shape)) {}
Surface::~Surface() = default;
Surface::Surface(Surface&&) noexcept = default;
Surface& Surface::operator=(Surface&&) noexcept = default;

const MarkedSurface& Surface::shape() const { return impl_->shape; }
const std::vector<TaggedArc>& Surface::arcs() const { return impl_->census; }

int Surface::intersection_pairing(const TaggedArc& a, const TaggedArc& b) const {
    if (a == b) return -1;
    return impl_->pairing(a, b);
}

const std::vector<Triangulation>& Surface::triangulations() const {
    return impl_->triangulations();
}

std::pair<Triangulation, TaggedArc> Surface::flip(const Triangulation& t, int slot) const {
    return impl_->flip(t, slot);
}

ExchangeMatrix Surface::b_matrix(const Triangulation& t) const {
    return make_exchange_matrix(impl_->b_matrix(t));
}

IntVec Surface::geometric_d_vector(const TaggedArc& gamma, const Triangulation& t0) const {
    IntVec out(t0.n());
    for (int i = 0; i < t0.n(); ++i)
        out[i] = (t0.arcs[i] == gamma) ? -1 : impl_->pairing(t0.arcs[i], gamma);
    return out;
}

IntVec Surface::shear_coordinates(const TaggedArc& lam_arc, const Triangulation& t) const {
    return impl_->shear_row(lam_arc, t);
}

IntVec Surface::geometric_c_vector(const TaggedArc& gamma, const Triangulation& t,
                                   const Triangulation& lam0) const {
    const int slot = t.slot_of(gamma);
    if (slot < 0) throw ArcNotInTriangulation();
    IntVec out(lam0.n());
    for (int i = 0; i < lam0.n(); ++i) out[i] = impl_->shear_row(lam0.arcs[i], t)[slot];
    return out;
}

IntMatrix Surface::geometric_c_matrix(const Triangulation& lam0, const Triangulation& t) const {
    IntMatrix m(lam0.n());
    for (int i = 0; i < lam0.n(); ++i) {
        IntVec row = impl_->shear_row(lam0.arcs[i], t);
        for (int j = 0; j < t.n(); ++j) m(i, j) = row[j];
    }
    return m;
}

std::pair<Triangulation, TaggedArc> Surface::bipartite_quadrilateral_reduction(
    const TaggedArc& gamma, const Triangulation& t, const Triangulation& lam0) const {
    IntVec c = geometric_c_vector(gamma, t, lam0);
    for (i64 x : c)
        if (x < 0) throw std::invalid_argument("c-vector is not positive");
    for (const Triangulation& cand : impl_->triangulations()) {
        if (!cdv::is_bipartite(b_matrix(cand))) continue;
        for (int slot = 0; slot < cand.n(); ++slot)
            if (geometric_c_vector(cand.arcs[slot], cand, lam0) == c)
                return {cand, cand.arcs[slot]};
    }
    throw ReductionNotFound();
}

std::string Surface::flip_graph_dot() const {
    const auto& tris = impl_->triangulations();
    std::map<std::vector<TaggedArc>, int> index;
    for (size_t i = 0; i < tris.size(); ++i) index[tris[i].arcs] = static_cast<int>(i);
    std::ostringstream os;
    os << "graph flips {\n  node [shape=point];\n";
    for (size_t i = 0; i < tris.size(); ++i) {
        for (int s = 0; s < tris[i].n(); ++s) {
            Triangulation u = impl_->flip(tris[i], s).first;
            std::sort(u.arcs.begin(), u.arcs.end());
            int j = index.at(u.arcs);
            if (static_cast<int>(i) < j) os << "  t" << i << " -- t" << j << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace cdv::surface

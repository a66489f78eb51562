#include "cdv/analysis.hpp"

#include <chrono>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cdv/io.hpp"

namespace cdv {

namespace {

SeedKey pick_mode(const AnalyzeOptions& opts, int rank) {
    if (opts.mode) return *opts.mode;
    return rank <= 5 ? SeedKey::LabeledTriple : SeedKey::UpToPermutation;
}

std::set<IntVec> negated(const std::set<IntVec>& s) {
    std::set<IntVec> out;
    for (const IntVec& v : s) {
        IntVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
        out.insert(std::move(w));
    }
    return out;
}

}  // namespace

std::vector<WeightedDiagram> templates_from_atlas(const ExchangeMatrix& b,
                                                  const std::set<IntVec>& c_pos) {
    DynkinDiagram x = diagram_of(cartan_counterpart(b));
    std::set<WeightedDiagram> seen;
    for (const IntVec& v : c_pos)
        seen.insert(canonical_weighted_diagram(vector_to_weighted_diagram(v, x)));
    return {seen.begin(), seen.end()};
}

Report analyze_matrix(const ExchangeMatrix& b, const AnalyzeOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.input_b = b.b;

    if (opts.known_type) {
        rep.type = opts.known_type;
    } else {
        TypeDetection det = detect_cluster_type(b, opts.class_cap);
        rep.type = det.label;
        rep.type_class_exhausted = det.class_exhausted;
    }

    rep.mode = pick_mode(opts, b.n());
    SeedAtlas atlas = io::enumerate_seeds_cached(b, opts.seed_cap, rep.mode, opts.cache_dir);
    rep.enumeration_complete = atlas.complete;
    rep.state_count = atlas.states.size();
    rep.depth_reached = atlas.depth_reached;
    rep.checklist["enumeration_complete"] = atlas.complete;
    if (!atlas.complete) {
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rep;  // no theorem checks without closure; probe separately
    }

    VectorSets sets = extract_vector_sets(atlas);
    rep.c_pos = sets.c_pos;
    rep.d_noninit = sets.d_noninit;
    rep.c_all = sets.c_all;

    rep.checklist["sign_decomposition"] = [&] {
        std::set<IntVec> neg = negated(sets.c_pos);
        if (!std::includes(sets.c_all.begin(), sets.c_all.end(), sets.c_pos.begin(),
                           sets.c_pos.end()))
            return false;
        std::set<IntVec> uni = sets.c_pos;
        uni.insert(neg.begin(), neg.end());
        for (const IntVec& v : sets.c_pos)
            if (neg.contains(v)) return false;  // disjointness
        return uni == sets.c_all;
    }();

    rep.checklist["c_pos_equals_d"] = sets.c_pos == sets.d_noninit;
    rep.checklist["bipartite_occurrence"] =
        sets.c_pos_bipartite == sets.c_pos && sets.d_bipartite == sets.d_noninit;

    // roots and supports
    RootSystemContext ctx = RootSystemContext::of(b);
    DynkinDiagram x = diagram_of(ctx.cartan);
    bool all_roots = true, real_iff_tree = true;
    std::set<IntVec> both = sets.c_pos;
    both.insert(sets.d_noninit.begin(), sets.d_noninit.end());
    for (const IntVec& v : both) {
        RootKind kind = classify_root(ctx, v);
        bool tree = support_is_tree(v, x);
        rep.root_status[v] = {kind, tree};
        if (kind == RootKind::NotARoot) all_roots = false;
        if ((kind == RootKind::RealRoot) != tree) real_iff_tree = false;
    }
    rep.checklist["all_vectors_are_roots"] = all_roots;
    rep.checklist["real_iff_tree_support"] = real_iff_tree;

    if (rep.type) {
        rep.checklist["count_matches_type"] =
            static_cast<i64>(sets.c_pos.size()) == positive_root_count(*rep.type) &&
            sets.c_pos.size() == sets.d_noninit.size();
    }

    // V(B) from templates: supplied catalog, else generated for classical
    // families, else this matrix's own template set (self-consistency)
    std::optional<std::vector<WeightedDiagram>> own;
    const std::vector<WeightedDiagram>* tpl = opts.templates;
    if (!tpl && rep.type) {
        switch (rep.type->family) {
            case Family::A:
                own = templates_A(rep.type->rank);
                break;
            case Family::B:
            case Family::C:
            case Family::D:
                own = extract_templates(*rep.type,
                                        TemplateOptions{opts.class_cap, opts.seed_cap, 0});
                break;
            default:
                own = templates_from_atlas(b, sets.c_pos);
                break;
        }
        tpl = &*own;
    }
    if (tpl) {
        rep.v_set = compute_V(b, *tpl);
        rep.checklist["v_equals_c_pos"] = *rep.v_set == sets.c_pos;
    }

    if (opts.check_abs_invariance) {
        ExchangeMatrix nb = make_exchange_matrix(b.b.negated());
        SeedAtlas na = io::enumerate_seeds_cached(nb, opts.seed_cap, rep.mode, opts.cache_dir);
        if (na.complete) {
            rep.checklist["abs_value_invariance"] =
                extract_vector_sets(na).c_pos == sets.c_pos;
        }
    }

    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

bool Report::all_pass() const {
    for (const auto& [k, v] : checklist)
        if (!v) return false;
    return !checklist.empty();
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema"] = "cdv-report-v1";
    j["input"] = io::matrix_to_json(input_b);
    j["type"] = type ? nlohmann::json(type->str()) : nlohmann::json();
    j["type_class_exhausted"] = type_class_exhausted;
    j["enumeration"] = {{"mode", mode == SeedKey::LabeledTriple ? "labeled" : "reduced"},
                        {"complete", enumeration_complete},
                        {"states", state_count},
                        {"depth", depth_reached}};
    // X(B): edge list with ordered multiplicity pairs
    DynkinDiagram x = diagram_of(cartan_counterpart(make_exchange_matrix(input_b)));
    nlohmann::json edges = nlohmann::json::array();
    for (int i = 0; i < x.n(); ++i)
        for (int k = i + 1; k < x.n(); ++k)
            if (x.has_edge(i, k))
                edges.push_back(nlohmann::json::array({i, k, x.mult(i, k), x.mult(k, i)}));
    j["diagram"] = {{"vertices", x.n()}, {"edges", edges}};
    auto setj = [](const std::set<IntVec>& s) {
        nlohmann::json a = nlohmann::json::array();
        for (const IntVec& v : s) a.push_back(v);
        return a;
    };
    j["sets"] = {{"c_pos", setj(c_pos)},
                 {"d_noninit", setj(d_noninit)},
                 {"cardinalities",
                  {{"c_pos", c_pos.size()},
                   {"d_noninit", d_noninit.size()},
                   {"c_all", c_all.size()}}}};
    if (v_set) {
        j["sets"]["v"] = setj(*v_set);
        j["sets"]["cardinalities"]["v"] = v_set->size();
    }
    if (type) j["sets"]["cardinalities"]["expected_nh2"] = positive_root_count(*type);
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& [v, st] : root_status)
        vecs.push_back({{"v", v}, {"root", to_string(st.first)}, {"support_tree", st.second}});
    j["vectors"] = vecs;
    j["checklist"] = checklist;
    j["all_pass"] = all_pass();
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "matrix (rank " << input_b.n() << "):\n" << io::matrix_to_text(input_b);
    os << "type: " << (type ? type->str() : std::string("indeterminate"));
    if (!type && type_class_exhausted) os << " (mutation class exhausted, not finite type)";
    os << "\n";
    DynkinDiagram x = diagram_of(cartan_counterpart(make_exchange_matrix(input_b)));
    os << "X(B): ";
    bool first = true;
    for (int i = 0; i < x.n(); ++i)
        for (int k = i + 1; k < x.n(); ++k)
            if (x.has_edge(i, k)) {
                os << (first ? "" : ", ") << i << "-" << k;
                if (x.mult(i, k) != 1 || x.mult(k, i) != 1)
                    os << "(" << x.mult(i, k) << "," << x.mult(k, i) << ")";
                first = false;
            }
    os << (first ? "no edges" : "") << "\n";
    os << "seeds: " << state_count << (mode == SeedKey::LabeledTriple ? " labeled" : " reduced")
       << (enumeration_complete ? "" : "  CAP EXCEEDED") << ", depth " << depth_reached << "\n";
    if (enumeration_complete) {
        os << "|C+| = " << c_pos.size() << ", |D| = " << d_noninit.size();
        if (v_set) os << ", |V| = " << v_set->size();
        if (type) os << "  (nh/2 = " << positive_root_count(*type) << ")";
        os << "\n";
        os << "vectors:\n";
        for (const auto& [v, st] : root_status) {
            os << "  (";
            for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << ")  " << to_string(st.first) << (st.second ? ", tree support" : ", cyclic support")
               << "\n";
        }
    } else {
        os << "enumeration did not close; rerun with a larger --cap or use `probe` for "
              "bounded-depth vector families\n";
    }
    os << "checks:\n";
    for (const auto& [k, v] : checklist) os << "  " << (v ? "pass" : "FAIL") << "  " << k << "\n";
    os << (all_pass() ? "ALL CHECKS PASS" : "CHECK FAILURES") << "  (" << elapsed_ms << " ms)\n";
    return os.str();
}

VerifyReport verify_type(ClusterTypeLabel z, const VerifyOptions& opts) {
    VerifyReport vr;
    vr.type = z;
    MatrixClass cls = enumerate_matrix_class(standard_bipartite_seed(z), opts.class_cap);
    vr.class_size = cls.members.size();
    vr.class_complete = cls.complete;

    std::optional<std::vector<WeightedDiagram>> catalog;
    bool classical = z.family == Family::A || z.family == Family::B || z.family == Family::C ||
                     z.family == Family::D;
    if (classical)
        catalog = extract_templates(z, TemplateOptions{opts.class_cap, opts.seed_cap, 0});

    size_t limit = opts.sample ? std::min(opts.sample, cls.members.size()) : cls.members.size();
    for (size_t i = 0; i < limit; ++i) {
        AnalyzeOptions ao;
        ao.seed_cap = opts.seed_cap;
        ao.class_cap = opts.class_cap;
        ao.mode = SeedKey::UpToPermutation;  // one state per cluster at scale
        ao.known_type = z;
        ao.templates = catalog ? &*catalog : nullptr;
        ao.check_abs_invariance = false;  // covered by the dedicated pair check
        ao.cache_dir = opts.cache_dir;
        vr.members.push_back(analyze_matrix(cls.members[i], ao));
        ++vr.members_checked;
    }
    return vr;
}

bool VerifyReport::all_pass() const {
    if (members.empty()) return false;
    for (const Report& r : members)
        if (!r.all_pass()) return false;
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "cdv-verify-v1";
    j["type"] = type.str();
    j["class_size"] = class_size;
    j["class_complete"] = class_complete;
    j["members_checked"] = members_checked;
    j["all_pass"] = all_pass();
    nlohmann::json arr = nlohmann::json::array();
    for (const Report& r : members) arr.push_back(r.to_json());
    j["members"] = arr;
    return j;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "type " << type.str() << ": class size " << class_size
       << (class_complete ? "" : " (capped)") << ", checked " << members_checked << "\n";
    for (size_t i = 0; i < members.size(); ++i) {
        const Report& r = members[i];
        os << "  member " << i << ": |C+|=" << r.c_pos.size()
           << (r.all_pass() ? "  pass" : "  FAIL") << "\n";
    }
    os << (all_pass() ? "ALL MEMBERS PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

}  // namespace cdv

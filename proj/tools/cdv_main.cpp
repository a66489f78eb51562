// cdv: c-vectors and d-vectors of finite-type cluster algebras.
//
// Subcommands: analyze, verify, enumerate, templates, fold, surface, probe.
// Matrices are read from a file (or stdin with "-") either as whitespace rows
// or as {"rank": n, "b": [[...]]}.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>

#include "cdv/analysis.hpp"
#include "cdv/io.hpp"

using namespace cdv;
using nlohmann::json;

namespace {

IntMatrix read_matrix_arg(const std::string& arg) {
    if (arg == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return io::parse_matrix_any(buf.str());
    }
    return io::read_matrix_file(arg);
}

std::filesystem::path cache_dir_from(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CDV_CACHE_DIR")) return env;
    return {};
}

int run_analyze(const std::string& matrix_arg, const std::string& format, size_t cap,
                size_t class_cap, const std::string& mode, bool no_abs, const std::string& cache) {
    ExchangeMatrix b = make_exchange_matrix(read_matrix_arg(matrix_arg));
    AnalyzeOptions opts;
    opts.seed_cap = cap;
    opts.class_cap = class_cap;
    if (mode == "labeled") opts.mode = SeedKey::LabeledTriple;
    if (mode == "reduced") opts.mode = SeedKey::UpToPermutation;
    opts.check_abs_invariance = !no_abs;
    opts.cache_dir = cache_dir_from(cache);
    Report rep = analyze_matrix(b, opts);
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else if (format == "dot")
        std::cout << to_dot(diagram_of(cartan_counterpart(b)));
    else
        std::cout << rep.to_text();
    if (!rep.enumeration_complete) return 2;
    return rep.all_pass() ? 0 : 1;
}

int run_verify(const std::string& family, int rank, const std::string& format, size_t cap,
               size_t class_cap, size_t sample, const std::string& cache) {
    auto z = parse_type_label(family + std::to_string(rank));
    if (!z) {
        std::cerr << "unknown finite type " << family << rank << "\n";
        return 2;
    }
    VerifyOptions opts;
    opts.seed_cap = cap;
    opts.class_cap = class_cap;
    opts.sample = sample;
    opts.cache_dir = cache_dir_from(cache);
    VerifyReport vr = verify_type(*z, opts);
    if (format == "json")
        std::cout << vr.to_json().dump(2) << "\n";
    else
        std::cout << vr.to_text();
    return vr.all_pass() ? 0 : 1;
}

int run_enumerate(const std::string& matrix_arg, const std::string& format, size_t cap,
                  const std::string& mode, const std::string& cache) {
    ExchangeMatrix b = make_exchange_matrix(read_matrix_arg(matrix_arg));
    SeedKey key = (mode == "reduced") ? SeedKey::UpToPermutation : SeedKey::LabeledTriple;
    SeedAtlas atlas = io::enumerate_seeds_cached(b, cap, key, cache_dir_from(cache));
    if (format == "json") {
        json j{{"states", atlas.states.size()},
               {"complete", atlas.complete},
               {"depth", atlas.depth_reached},
               {"mode", mode == "reduced" ? "reduced" : "labeled"}};
        if (atlas.complete) {
            VectorSets sets = extract_vector_sets(atlas);
            auto setj = [](const std::set<IntVec>& s) {
                json a = json::array();
                for (const IntVec& v : s) a.push_back(v);
                return a;
            };
            j["c_pos"] = setj(sets.c_pos);
            j["d_noninit"] = setj(sets.d_noninit);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "states: " << atlas.states.size()
                  << (atlas.complete ? " (closed)" : " (CAP EXCEEDED)")
                  << ", depth: " << atlas.depth_reached << "\n";
        if (atlas.complete) {
            VectorSets sets = extract_vector_sets(atlas);
            std::cout << "|C+| = " << sets.c_pos.size() << ", |D| = " << sets.d_noninit.size()
                      << "\n";
        }
    }
    return atlas.complete ? 0 : 2;
}

int run_templates(const std::string& type_str, const std::string& out_file, size_t cap,
                  size_t class_cap, size_t member_limit) {
    auto z = parse_type_label(type_str);
    if (!z) {
        std::cerr << "unknown finite type " << type_str << "\n";
        return 2;
    }
    if (!out_file.empty() && std::filesystem::exists(out_file)) {
        // idempotent: keep an existing catalog of the same type
        std::ifstream f(out_file);
        json j = json::parse(f, nullptr, false);
        if (!j.is_discarded() && j.value("schema", "") == io::kCatalogSchema &&
            j.value("type", "") == z->str()) {
            std::cout << "catalog for " << z->str() << " already present ("
                      << j.value("count", size_t{0}) << " templates)\n";
            return 0;
        }
    }
    TemplateOptions topts{class_cap, cap, member_limit};
    std::vector<WeightedDiagram> tpl = extract_templates(*z, topts);
    json cat = io::catalog_to_json(*z, tpl);
    if (out_file.empty()) {
        std::cout << cat.dump(2) << "\n";
    } else {
        std::ofstream f(out_file);
        f << cat.dump(2) << "\n";
        std::cout << "wrote " << tpl.size() << " templates for " << z->str() << " to " << out_file
                  << "\n";
    }
    return 0;
}

int run_fold(const std::string& matrix_arg, const std::string& sigma_str, bool verify_walk,
             int walk_len, const std::string& format) {
    ExchangeMatrix b = make_exchange_matrix(read_matrix_arg(matrix_arg));
    auto sigma = OrbitAutomorphism::parse_cycles(sigma_str, b.n());
    if (!sigma) {
        std::cerr << "cannot parse permutation '" << sigma_str << "' (1-based cycles)\n";
        return 2;
    }
    if (!is_admissible(b, *sigma)) {
        std::cerr << "permutation is not an admissible automorphism of the matrix\n";
        return 1;
    }
    ExchangeMatrix folded = fold_matrix(b, *sigma);
    if (format == "json")
        std::cout << io::matrix_to_json(folded.b).dump(2) << "\n";
    else
        std::cout << io::matrix_to_text(folded.b);
    if (!verify_walk) return 0;

    // commutation walk: fold(orbit_mutate(B)) == mutate(fold(B)) step by step,
    // with the folded C/D recursions checked against the folded algebra
    std::mt19937 rng(20240611);
    SeedState up = SeedState::initial(b);
    SeedState down = SeedState::initial(folded);
    for (int step = 0; step < walk_len; ++step) {
        int orb = std::uniform_int_distribution<int>(0, sigma->orbit_count() - 1)(rng);
        up = orbit_mutate_seed(up, *sigma, orb);
        down = mutate_seed(down, orb);
        if (fold_matrix(up.b, *sigma).b != down.b.b || fold_c_matrix(up.c, *sigma) != down.c ||
            fold_d_matrix(up.d, *sigma, up.b) != down.d) {
            std::cout << "commutation FAILED at step " << step << "\n";
            return 1;
        }
    }
    std::cout << "commutation walk of " << walk_len << " orbit mutations: pass\n";
    return 0;
}

int run_surface(const std::string& type, int rank, const std::string& format) {
    using namespace cdv::surface;
    MarkedSurface ms = (type == "D") ? MarkedSurface::type_D(rank) : MarkedSurface::type_A(rank);
    Surface s(ms);
    if (format == "dot") {
        std::cout << s.flip_graph_dot();
        return 0;
    }
    if (format == "json") {
        json j{{"type", type},
               {"rank", rank},
               {"arcs", json::array()},
               {"triangulations", json::array()}};
        for (const auto& a : s.arcs()) j["arcs"].push_back(io::arc_to_json(a));
        for (const auto& t : s.triangulations()) j["triangulations"].push_back(io::triangulation_to_json(t));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "type " << type << rank << ": " << s.arcs().size() << " tagged arcs, "
              << s.triangulations().size() << " triangulations\n";
    return 0;
}

bool in_markov_family(const IntVec& v);
bool in_a21_family(const IntVec& v);

int run_probe(const std::string& matrix_arg, int depth, const std::string& family,
              const std::string& format) {
    ExchangeMatrix b = make_exchange_matrix(read_matrix_arg(matrix_arg));
    VectorSets sets = bounded_depth_probe(b, depth);
    if (format == "json") {
        auto setj = [](const std::set<IntVec>& s) {
            json a = json::array();
            for (const IntVec& v : s) a.push_back(v);
            return a;
        };
        std::cout << json{{"depth", depth},
                          {"c_pos", setj(sets.c_pos)},
                          {"d_noninit", setj(sets.d_noninit)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "depth " << depth << ": |C+| = " << sets.c_pos.size()
                  << ", |D| = " << sets.d_noninit.size() << "\n";
    }
    if (family.empty()) return 0;
    bool ok = true;
    if (family == "markov") {
        for (const IntVec& v : sets.c_pos) ok = ok && in_markov_family(v);
        std::cout << "markov c-vector family membership: " << (ok ? "pass" : "FAIL") << "\n";
    } else if (family == "a2tilde1") {
        for (const IntVec& v : sets.d_noninit) ok = ok && in_a21_family(v);
        std::cout << "A2^(1) d-vector family membership: " << (ok ? "pass" : "FAIL") << "\n";
    } else {
        std::cerr << "unknown family " << family << "\n";
        return 2;
    }
    return ok ? 0 : 1;
}

bool in_markov_family(const IntVec& v) {
    if (v.size() != 3) return false;
    IntVec s = v;
    std::sort(s.begin(), s.end());
    i64 m = *std::max_element(s.begin(), s.end());
    for (i64 a = 1; a <= m + 2; ++a)
        for (i64 b = a; b <= m + 2; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (IntVec cand : {IntVec{1, 2, 2}, IntVec{a + 1, b + 1, a + b + 1},
                                IntVec{a - 1, b - 1, a + b - 1}}) {
                std::sort(cand.begin(), cand.end());
                if (cand == s) return true;
            }
        }
    return false;
}

bool in_a21_family(const IntVec& v) {
    if (v.size() != 3) return false;
    if (v == IntVec{0, 1, 0} || v == IntVec{1, 1, 1}) return true;
    i64 m = *std::max_element(v.begin(), v.end());
    for (i64 a = 0; a <= m + 1; ++a)
        for (IntVec cand : {IntVec{a, 0, a + 1}, IntVec{a + 1, 0, a}, IntVec{a, 1, a + 1},
                            IntVec{a + 1, 1, a}})
            if (cand == v) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"c-vectors and d-vectors of finite-type cluster algebras"};
    app.require_subcommand(1);

    std::string matrix_arg = "-", format = "text", mode, cache, sigma_str, family, type_str = "A";
    size_t cap = kDefaultSeedCap, class_cap = kDefaultClassCap, sample = 0, member_limit = 0;
    int rank = 3, depth = 6, walk_len = 20;
    bool no_abs = false, verify_walk = false;
    std::string out_file;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", format, "text|json|dot");
        c->add_option("--cap", cap, "seed-state cap");
        c->add_option("--class-cap", class_cap, "matrix-class cap");
        c->add_option("--cache-dir", cache, "atlas cache directory (or CDV_CACHE_DIR)");
    };

    CLI::App* an = app.add_subcommand("analyze", "full pipeline for one matrix");
    an->add_option("matrix", matrix_arg, "matrix file or - for stdin");
    an->add_option("--mode", mode, "labeled|reduced seed identity");
    an->add_flag("--no-abs-check", no_abs, "skip the C+(-B) = C+(B) check");
    add_common(an);

    CLI::App* ve = app.add_subcommand("verify", "check a whole mutation class");
    ve->add_option("family", type_str, "A|B|C|D|E|F|G")->required();
    ve->add_option("rank", rank, "rank")->required();
    ve->add_option("--sample", sample, "only the first N class members");
    add_common(ve);

    CLI::App* en = app.add_subcommand("enumerate", "seed atlas for one matrix");
    en->add_option("matrix", matrix_arg, "matrix file or - for stdin");
    en->add_option("--mode", mode, "labeled|reduced");
    add_common(en);

    CLI::App* te = app.add_subcommand("templates", "generate the template catalog W(Z)");
    te->add_option("type", type_str, "e.g. A3, D4, G2")->required();
    te->add_option("--out", out_file, "output file (idempotent)");
    te->add_option("--member-limit", member_limit, "restrict to the first N class members");
    add_common(te);

    CLI::App* fo = app.add_subcommand("fold", "fold a matrix along an admissible automorphism");
    fo->add_option("matrix", matrix_arg, "matrix file or - for stdin");
    fo->add_option("--sigma", sigma_str, "permutation, 1-based cycles, e.g. \"(3 4)\"")->required();
    fo->add_flag("--verify", verify_walk, "run the commutation walk report");
    fo->add_option("--walk", walk_len, "walk length for --verify");
    add_common(fo);

    CLI::App* su = app.add_subcommand("surface", "polygon / punctured-disk models");
    su->add_option("--type", type_str, "A|D")->required();
    su->add_option("--rank", rank, "rank")->required();
    add_common(su);

    CLI::App* pr = app.add_subcommand("probe", "bounded-depth vector families");
    pr->add_option("matrix", matrix_arg, "matrix file or - for stdin");
    pr->add_option("--depth", depth, "mutation depth");
    pr->add_option("--family", family, "markov|a2tilde1 membership check");
    add_common(pr);

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed())
            return run_analyze(matrix_arg, format, cap, class_cap, mode, no_abs, cache);
        if (ve->parsed())
            return run_verify(type_str, rank, format, cap, class_cap, sample, cache);
        if (en->parsed()) return run_enumerate(matrix_arg, format, cap, mode, cache);
        if (te->parsed()) return run_templates(type_str, out_file, cap, class_cap, member_limit);
        if (fo->parsed())
            return run_fold(matrix_arg, sigma_str, verify_walk, walk_len, format);
        if (su->parsed()) return run_surface(type_str, rank, format);
        if (pr->parsed()) return run_probe(matrix_arg, depth, family, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

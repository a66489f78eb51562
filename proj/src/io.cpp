#include "cdv/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace cdv::io {

IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<IntVec> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        IntVec row;
        i64 v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof() && ls.fail()) {
            ls.clear();
            std::string tok;
            ls >> tok;
            throw std::invalid_argument("bad matrix token: '" + tok + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix input");
    const size_t n = rows.size();
    for (const IntVec& r : rows)
        if (r.size() != n) throw std::invalid_argument("matrix is not square");
    return IntMatrix::from_rows(rows);
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("b")) throw std::invalid_argument("expected {\"rank\",\"b\"}");
    std::vector<IntVec> rows;
    for (const auto& r : j.at("b")) rows.push_back(r.get<IntVec>());
    if (j.contains("rank") && j.at("rank").get<size_t>() != rows.size())
        throw std::invalid_argument("rank does not match the matrix");
    const size_t n = rows.size();
    for (const IntVec& r : rows)
        if (r.size() != n) throw std::invalid_argument("matrix is not square");
    return IntMatrix::from_rows(rows);
}

IntMatrix parse_matrix_any(const std::string& content) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return matrix_from_json(json::parse(content));
        break;
    }
    return parse_matrix_text(content);
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.n(); ++i) rows.push_back(m.row(i));
    return json{{"rank", m.n()}, {"b", rows}};
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os.str();
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_matrix_any(buf.str());
}

std::string atlas_cache_key(const ExchangeMatrix& initial, SeedKey mode) {
    IntMatrixHash h;
    std::ostringstream os;
    os << "atlas-" << std::hex << h(initial.b) << (mode == SeedKey::LabeledTriple ? "-lab" : "-red");
    return os.str();
}

void save_atlas(const SeedAtlas& atlas, const std::filesystem::path& file) {
    std::ofstream f(file);
    if (!f) throw std::runtime_error("cannot write " + file.string());
    json head{{"schema", kAtlasSchema},
              {"rank", atlas.initial.n()},
              {"b", matrix_to_json(atlas.initial.b)},
              {"mode", atlas.mode == SeedKey::LabeledTriple ? "labeled" : "reduced"},
              {"cap", atlas.cap},
              {"complete", atlas.complete},
              {"depth", atlas.depth_reached},
              {"states", atlas.states.size()}};
    f << head.dump() << "\n";
    for (const SeedState& s : atlas.states) {
        json line = json::array({s.b.b.flat(), s.c.flat(), s.d.flat()});
        f << line.dump() << "\n";
    }
}

std::optional<SeedAtlas> load_atlas(const std::filesystem::path& file,
                                    const ExchangeMatrix& initial, SeedKey mode) {
    std::ifstream f(file);
    if (!f) return std::nullopt;
    std::string line;
    if (!std::getline(f, line)) return std::nullopt;
    json head = json::parse(line, nullptr, false);
    if (head.is_discarded() || head.value("schema", "") != kAtlasSchema) return std::nullopt;
    if (matrix_from_json(head.at("b")) != initial.b) return std::nullopt;
    const std::string want = mode == SeedKey::LabeledTriple ? "labeled" : "reduced";
    if (head.value("mode", "") != want) return std::nullopt;

    SeedAtlas atlas;
    atlas.initial = initial;
    atlas.mode = mode;
    atlas.cap = head.value("cap", size_t{0});
    atlas.complete = head.value("complete", false);
    atlas.depth_reached = head.value("depth", 0);
    const int n = initial.n();
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_array() || j.size() != 3) return std::nullopt;
        auto to_mat = [&](const json& a) {
            IntVec flat = a.get<IntVec>();
            if (static_cast<int>(flat.size()) != n * n) throw std::runtime_error("bad atlas row");
            IntMatrix m(n);
            std::copy(flat.begin(), flat.end(), m.data());
            return m;
        };
        SeedState s;
        s.b = ExchangeMatrix{to_mat(j[0]), initial.symmetrizer};
        s.c = to_mat(j[1]);
        s.d = to_mat(j[2]);
        atlas.states.push_back(std::move(s));
    }
    if (atlas.states.size() != head.value("states", size_t{0})) return std::nullopt;
    return atlas;
}

SeedAtlas enumerate_seeds_cached(const ExchangeMatrix& initial, size_t cap, SeedKey mode,
                                 const std::filesystem::path& cache_dir) {
    if (cache_dir.empty()) return enumerate_seeds(initial, cap, mode);
    std::filesystem::path file = cache_dir / (atlas_cache_key(initial, mode) + ".jsonl");
    if (auto cached = load_atlas(file, initial, mode))
        if (cached->complete || cached->cap >= cap) return *cached;
    SeedAtlas atlas = enumerate_seeds(initial, cap, mode);
    std::filesystem::create_directories(cache_dir);
    save_atlas(atlas, file);
    return atlas;
}

json weighted_diagram_to_json(const WeightedDiagram& w) {
    json edges = json::array();
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            if (w.diagram.has_edge(i, j))
                edges.push_back(json::array({i, j, w.diagram.mult(i, j), w.diagram.mult(j, i)}));
    return json{{"vertices", w.n()}, {"edges", edges}, {"weights", w.weights}};
}

WeightedDiagram weighted_diagram_from_json(const json& j) {
    const int n = j.at("vertices").get<int>();
    IntMatrix m(n);
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        m(a, b) = e.at(2).get<i64>();
        m(b, a) = e.at(3).get<i64>();
    }
    return WeightedDiagram{DynkinDiagram{m}, j.at("weights").get<IntVec>()};
}

json catalog_to_json(ClusterTypeLabel z, const std::vector<WeightedDiagram>& templates) {
    json list = json::array();
    for (const WeightedDiagram& w : templates) list.push_back(weighted_diagram_to_json(w));
    return json{{"schema", kCatalogSchema},
                {"type", z.str()},
                {"generator_version", kGeneratorVersion},
                {"count", templates.size()},
                {"templates", list}};
}

std::vector<WeightedDiagram> catalog_from_json(const json& j, ClusterTypeLabel* label_out) {
    if (j.value("schema", "") != kCatalogSchema) throw std::runtime_error("bad catalog schema");
    if (label_out) {
        auto z = parse_type_label(j.at("type").get<std::string>());
        if (!z) throw std::runtime_error("bad catalog type tag");
        *label_out = *z;
    }
    std::vector<WeightedDiagram> out;
    for (const auto& t : j.at("templates")) out.push_back(weighted_diagram_from_json(t));
    return out;
}

json arc_to_json(const surface::TaggedArc& a) {
    if (a.is_chord()) return json{{"kind", "chord"}, {"p", a.p}, {"q", a.q}};
    return json{{"kind", "radius"},
                {"p", a.p},
                {"tag", a.tag == surface::Tag::Plain ? "plain" : "notched"}};
}

json triangulation_to_json(const surface::Triangulation& t) {
    json arcs = json::array();
    for (const auto& a : t.arcs) arcs.push_back(arc_to_json(a));
    return json{{"arcs", arcs}};
}

}  // namespace cdv::io

#pragma once
#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "cdv/diagrams.hpp"
#include "cdv/surface.hpp"

namespace cdv::io {

using json = nlohmann::json;

// Matrix input: either whitespace-separated rows, one per line, or the JSON
// form {"rank": n, "b": [[...]]}.  Both are accepted wherever a matrix is
// expected.
IntMatrix parse_matrix_text(const std::string& text);
IntMatrix parse_matrix_any(const std::string& content);
IntMatrix matrix_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);
std::string matrix_to_text(const IntMatrix& m);

IntMatrix read_matrix_file(const std::filesystem::path& path);

// ---- seed-atlas cache (line JSON, versioned) ----
inline constexpr const char* kAtlasSchema = "cdv-atlas-v1";

std::string atlas_cache_key(const ExchangeMatrix& initial, SeedKey mode);
void save_atlas(const SeedAtlas& atlas, const std::filesystem::path& file);
// checks schema, initial matrix, mode; returns nothing on any mismatch
std::optional<SeedAtlas> load_atlas(const std::filesystem::path& file,
                                    const ExchangeMatrix& initial, SeedKey mode);

// cached enumerate: goes through cache_dir when provided (non-empty)
SeedAtlas enumerate_seeds_cached(const ExchangeMatrix& initial, size_t cap, SeedKey mode,
                                 const std::filesystem::path& cache_dir);

// ---- template catalogs ----
inline constexpr const char* kCatalogSchema = "cdv-templates-v1";
inline constexpr int kGeneratorVersion = 1;

json weighted_diagram_to_json(const WeightedDiagram& w);
WeightedDiagram weighted_diagram_from_json(const json& j);
json catalog_to_json(ClusterTypeLabel z, const std::vector<WeightedDiagram>& templates);
std::vector<WeightedDiagram> catalog_from_json(const json& j, ClusterTypeLabel* label_out = nullptr);

// ---- surface descriptions ----
json triangulation_to_json(const surface::Triangulation& t);
json arc_to_json(const surface::TaggedArc& a);

}  // namespace cdv::io

#pragma once
#include <filesystem>
#include <map>
#include <nlohmann/json_fwd.hpp>

#include "cdv/roots.hpp"

namespace cdv {

struct AnalyzeOptions {
    size_t seed_cap = kDefaultSeedCap;
    size_t class_cap = kDefaultClassCap;
    // nullopt: labeled triples through rank 5, permutation quotient beyond
    std::optional<SeedKey> mode;
    std::optional<ClusterTypeLabel> known_type;  // skips detection
    const std::vector<WeightedDiagram>* templates = nullptr;  // catalog to use for V
    bool check_abs_invariance = true;  // C_+(-B) = C_+(B): the set depends on |B| only
    std::filesystem::path cache_dir;   // empty: no atlas cache
};

// Machine-checkable verdicts; absent checks (e.g. no type detected) are
// simply not present in the map.
struct Report {
    IntMatrix input_b;
    std::optional<ClusterTypeLabel> type;
    bool type_class_exhausted = false;
    SeedKey mode = SeedKey::LabeledTriple;
    bool enumeration_complete = false;
    size_t state_count = 0;
    int depth_reached = 0;

    std::set<IntVec> c_pos, d_noninit, c_all;
    std::optional<std::set<IntVec>> v_set;
    std::map<IntVec, std::pair<RootKind, bool>> root_status;  // vector -> (kind, support tree)
    std::map<std::string, bool> checklist;
    double elapsed_ms = 0;

    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

Report analyze_matrix(const ExchangeMatrix& b, const AnalyzeOptions& opts = {});

// Templates derived from one matrix's own positive c-vectors (the
// self-consistency route used for exceptional types).
std::vector<WeightedDiagram> templates_from_atlas(const ExchangeMatrix& b,
                                                  const std::set<IntVec>& c_pos);

struct VerifyOptions {
    size_t seed_cap = kDefaultSeedCap;
    size_t class_cap = kDefaultClassCap;
    size_t sample = 0;  // 0 = whole class
    std::filesystem::path cache_dir;
};

struct VerifyReport {
    ClusterTypeLabel type{Family::A, 1};
    size_t class_size = 0;
    bool class_complete = false;
    size_t members_checked = 0;
    std::vector<Report> members;
    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

VerifyReport verify_type(ClusterTypeLabel z, const VerifyOptions& opts = {});

}  // namespace cdv

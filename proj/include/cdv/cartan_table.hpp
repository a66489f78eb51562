#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cdv/matrices.hpp"

namespace cdv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One entry of the finite-type classification.  Valid ranks: A n>=1, B/C n>=2,
// D n>=4, E 6..8, F 4, G 2.  B2 and C2 denote the same type.
struct ClusterTypeLabel {
    Family family;
    int rank;

    std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
    bool operator==(const ClusterTypeLabel&) const = default;
    auto operator<=>(const ClusterTypeLabel&) const = default;
};

std::optional<ClusterTypeLabel> parse_type_label(const std::string& s);
bool is_valid_finite_type(ClusterTypeLabel z);
std::vector<ClusterTypeLabel> finite_types_of_rank(int n);

// Cartan matrix in the length convention used throughout: the edge label pair
// is (-a_ji, -a_ij) and B_n carries the short root at the last node
// (a_{n-1,n} = -1, a_{n,n-1} = -2); C_n is the transpose.
CartanMatrix standard_cartan(ClusterTypeLabel z);

// Bipartite orientation of the standard diagram (sources on even BFS layers).
ExchangeMatrix standard_bipartite_seed(ClusterTypeLabel z);

// Coxeter number h and the positive-root count nh/2.
int coxeter_number(ClusterTypeLabel z);
i64 positive_root_count(ClusterTypeLabel z);

}  // namespace cdv

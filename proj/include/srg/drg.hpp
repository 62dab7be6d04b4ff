#pragma once

#include <optional>
#include <set>
#include <vector>

#include "srg/graph.hpp"

namespace srg {

struct BadIndex : std::runtime_error {
    explicit BadIndex(const std::string& m) : std::runtime_error(m) {}
};
struct Bipartite : std::runtime_error {
    explicit Bipartite(const std::string& m) : std::runtime_error(m) {}
};
struct Inapplicable : std::runtime_error {
    explicit Inapplicable(const std::string& m) : std::runtime_error(m) {}
};

// All-pairs distances of a connected graph.
struct DistancePartition {
    std::vector<std::vector<int>> dist;
    int diameter{0};
};

DistancePartition distance_partition(const Graph& g);

// Graph on the same vertices, adjacency iff distance exactly r.
Graph distance_graph(const Graph& g, int r);

// Intersection numbers p^h_{ij}: vertices at distance i from u and j from w,
// for every pair (u, w) at distance h.
struct DrgCertificate {
    int diameter{0};
    std::vector<std::vector<std::vector<int>>> intersection;  // [h][i][j]
};

// Brute-force distance-regularity test against the definition.
std::optional<DrgCertificate> is_distance_regular(const Graph& g);

struct MergedGraph {
    std::set<int> merge_set;
    Graph graph;
    int degree{0};
};

// Union of the distance graphs G_r over r in R.
MergedGraph merged_graph(const Graph& g, const std::set<int>& R);

// Exact integer check Adj(g) * Adj(m) == Adj(m) * Adj(g).
bool commutation_merge_check(const Graph& g, const Graph& m);

bool is_complete_multipartite(const Graph& g);

struct GodsilEntry {
    double theta{0};
    int multiplicity{0};
    bool diameter_ok{false};  // diameter <= 3m - 4
    bool degree_ok{false};    // k <= (m-1)(m+2)/2
    bool size_ok{false};      // v < m^{6m}
};

struct GodsilReport {
    int degree{0};
    int diameter{0};
    std::vector<GodsilEntry> entries;
    bool all_ok{true};
};

// Eigenvalue-multiplicity bounds for distance-regular graphs; throws
// Inapplicable for k <= 2 or complete multipartite inputs.
GodsilReport godsil_bound_check(const Graph& g);

struct MergedGapReport {
    int degree{0};           // p, degree of the merged graph
    double lambda2{0};       // Lambda(M)
    double bound{0};         // sqrt(6 p v lnln v / ln v)
    bool holds{false};
    int t_min{0};            // smallest non-principal multiplicity of M
    double mult_lower{0};    // ln v / (6 lnln v)
    bool mult_ok{false};     // t_min > mult_lower
};

// Second-eigenvalue bound for connected merged graphs of non-bipartite,
// non-complete-multipartite distance-regular graphs, v >= 16.
MergedGapReport merged_gap_bound_check(const Graph& g, const std::set<int>& R);

// True iff the eigenvalue clusters of m can be formed by grouping whole
// eigenvalue clusters of g (eigenspace refinement, checked via multiplicities).
bool multiplicity_coarsening(const Graph& g, const Graph& m);

}  // namespace srg

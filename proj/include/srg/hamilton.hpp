#pragma once

#include <optional>
#include <vector>

#include "srg/exact.hpp"
#include "srg/graph.hpp"

namespace srg {

struct TooSmall : std::runtime_error {
    explicit TooSmall(const std::string& m) : std::runtime_error(m) {}
};
struct CompleteGraph : std::runtime_error {
    explicit CompleteGraph(const std::string& m) : std::runtime_error(m) {}
};

// Cyclic vertex order visiting every vertex exactly once.
struct CycleCertificate {
    std::vector<int> order;
};

struct SearchBudget {
    long long node_limit{1'000'000};
    double time_limit_s{30.0};
    unsigned long long seed{0};
};

enum class HamVerdict { Found, NotFoundExhaustive, BudgetExhausted };

const char* ham_verdict_name(HamVerdict v);

struct HamResult {
    HamVerdict verdict{HamVerdict::BudgetExhausted};
    std::optional<CycleCertificate> cycle;
    long long nodes{0};
};

// Posa rotation-extension with seeded restarts; exhaustive backtracking
// fallback for v <= 32.  NotFoundExhaustive only when the backtracking
// search completed without a budget cut.
HamResult find_hamiltonian(const Graph& g, const SearchBudget& b);

// Pure certificate check, independent of the search.
bool verify_cycle(const Graph& g, const CycleCertificate& c);

// Exact number of undirected Hamiltonian cycles, v <= 14.
long long count_hamiltonian_cycles(const Graph& g);

// Exact toughness min |X| / c(V - X) over disconnecting sets, v <= 20.
// Throws CompleteGraph when no disconnecting set exists.
Fraction toughness_exact(const Graph& g);

// Spectral lower bound k / Lambda - 2.
double toughness_lower_bound(const Graph& g);

struct KsReport {
    bool defined{false};  // false when v < 16
    double ratio{0};      // k / Lambda
    double threshold{0};
    bool fires{false};
};

// Compares k / Lambda against the hamiltonicity threshold.
KsReport ks_verdict(const Graph& g);

struct DeletionTrial {
    long long deleted_edges{0};
    bool found{false};
    long long nodes{0};
};

struct DeletionReport {
    double eps{0};
    long long max_deleted_degree{0};
    std::vector<DeletionTrial> trials;
};

// Per trial: delete a random subgraph of max degree <= (1/2 - eps) * k and
// search the remainder for a Hamiltonian cycle.  Evidence, not proof.
DeletionReport robust_deletion_experiment(const Graph& g, double eps,
                                          unsigned long long seed, int trials,
                                          const SearchBudget& b = {});

}  // namespace srg

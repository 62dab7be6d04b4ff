#include "srg/hamilton.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "srg/params.hpp"
#include "srg/spectral.hpp"

namespace srg {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    long long limit;
    Clock::time_point deadline;
    long long nodes{0};
    bool cut{false};

    // Returns false once the budget is exhausted.
    bool tick() {
        if (cut) return false;
        ++nodes;
        if (nodes > limit || ((nodes & 0x3ff) == 0 && Clock::now() > deadline)) cut = true;
        return !cut;
    }
};

std::optional<CycleCertificate> posa_run(const Graph& g, int start,
                                         std::mt19937_64& rng, BudgetState& bs) {
    const int v = g.order();
    std::vector<int> path{start};
    std::vector<char> in_path(v, 0);
    in_path[start] = 1;
    const int stall_limit = 4 * v + 32;
    int stall = 0;
    std::vector<int> cand;

    while (bs.tick()) {
        const int end = path.back();
        cand.clear();
        for (int w : g.neighbors(end))
            if (!in_path[w]) cand.push_back(w);
        if (!cand.empty()) {
            const int next = cand[rng() % cand.size()];
            path.push_back(next);
            in_path[next] = 1;
            stall = 0;
            continue;
        }
        if (static_cast<int>(path.size()) == v && g.adjacent(end, path.front()))
            return CycleCertificate{path};
        // Rotate: pick a path neighbor of the endpoint and reverse the tail.
        cand.clear();
        for (size_t i = 0; i + 2 < path.size(); ++i)
            if (g.adjacent(end, path[i])) cand.push_back(static_cast<int>(i));
        if (cand.empty() || ++stall > stall_limit) return std::nullopt;
        const int i = cand[rng() % cand.size()];
        std::reverse(path.begin() + i + 1, path.end());
    }
    return std::nullopt;
}

// Exhaustive backtracking from vertex 0; returns nullopt when no cycle
// exists (bs.cut distinguishes a budget cut from full exhaustion).
std::optional<CycleCertificate> backtrack(const Graph& g, BudgetState& bs) {
    const int v = g.order();
    std::vector<int> path{0};
    std::vector<char> used(v, 0);
    used[0] = 1;
    std::vector<int> next_try(v + 1, 0);

    int depth = 1;
    while (depth > 0) {
        if (!bs.tick()) return std::nullopt;
        if (depth == v) {
            if (g.adjacent(path.back(), 0)) return CycleCertificate{path};
            // fall through to backtrack
        }
        bool advanced = false;
        if (depth < v) {
            const int cur = path.back();
            for (int w = next_try[depth]; w < v; ++w) {
                if (used[w] || !g.adjacent(cur, w)) continue;
                next_try[depth] = w + 1;
                path.push_back(w);
                used[w] = 1;
                ++depth;
                next_try[depth] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            used[path.back()] = 0;
            path.pop_back();
            --depth;
        }
    }
    return std::nullopt;
}

}  // namespace

const char* ham_verdict_name(HamVerdict v) {
    switch (v) {
        case HamVerdict::Found: return "found";
        case HamVerdict::NotFoundExhaustive: return "not_found_exhaustive";
        case HamVerdict::BudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

HamResult find_hamiltonian(const Graph& g, const SearchBudget& b) {
    if (g.order() < 3) throw TooSmall("hamiltonicity needs v >= 3");
    if (!g.is_connected()) throw Disconnected("graph is disconnected");
    const int v = g.order();

    BudgetState bs{b.node_limit,
                   Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(b.time_limit_s))};

    // Start vertices in degree-ascending order, ties by index.
    std::vector<int> starts(v);
    std::iota(starts.begin(), starts.end(), 0);
    std::stable_sort(starts.begin(), starts.end(),
                     [&g](int a, int c) { return g.degree(a) < g.degree(c); });

    const long long heuristic_cap = v <= 32 ? b.node_limit / 2 : b.node_limit;
    for (unsigned long long restart = 0; bs.nodes < heuristic_cap && !bs.cut; ++restart) {
        std::mt19937_64 rng(b.seed * 0x9e3779b97f4a7c15ull + restart);
        BudgetState run{std::min(heuristic_cap, bs.limit), bs.deadline};
        run.nodes = bs.nodes;
        auto cycle = posa_run(g, starts[restart % v], rng, run);
        bs.nodes = run.nodes;
        bs.cut = run.cut;
        if (cycle && verify_cycle(g, *cycle))
            return {HamVerdict::Found, std::move(cycle), bs.nodes};
    }

    // A cut at the heuristic cap is not a real budget cut; the exhaustive
    // phase may still spend the remaining nodes and time.
    if (bs.cut && bs.nodes < bs.limit && Clock::now() < bs.deadline) bs.cut = false;
    if (v <= 32 && !bs.cut) {
        auto cycle = backtrack(g, bs);
        if (cycle && verify_cycle(g, *cycle))
            return {HamVerdict::Found, std::move(cycle), bs.nodes};
        if (!bs.cut) return {HamVerdict::NotFoundExhaustive, std::nullopt, bs.nodes};
    }
    return {HamVerdict::BudgetExhausted, std::nullopt, bs.nodes};
}

bool verify_cycle(const Graph& g, const CycleCertificate& c) {
    const int v = g.order();
    if (static_cast<int>(c.order.size()) != v || v < 3) return false;
    std::vector<char> seen(v, 0);
    for (int x : c.order) {
        if (x < 0 || x >= v || seen[x]) return false;
        seen[x] = 1;
    }
    for (int i = 0; i < v; ++i)
        if (!g.adjacent(c.order[i], c.order[(i + 1) % v])) return false;
    return true;
}

long long count_hamiltonian_cycles(const Graph& g) {
    const int v = g.order();
    if (v > 14) throw SizeLimit("exact cycle count limited to v <= 14");
    if (v < 3) return 0;
    // Paths starting at vertex 0: count[mask][last].
    const int full = (1 << v) - 1;
    std::vector<std::vector<long long>> count(1 << v, std::vector<long long>(v, 0));
    count[1][0] = 1;
    for (int mask = 1; mask <= full; ++mask) {
        if (!(mask & 1)) continue;
        for (int last = 0; last < v; ++last) {
            const long long c = count[mask][last];
            if (c == 0) continue;
            for (int w = 1; w < v; ++w) {
                if (mask & (1 << w)) continue;
                if (g.adjacent(last, w)) count[mask | (1 << w)][w] += c;
            }
        }
    }
    long long directed = 0;
    for (int last = 1; last < v; ++last)
        if (g.adjacent(last, 0)) directed += count[full][last];
    return directed / 2;  // each undirected cycle traversed in two directions
}

Fraction toughness_exact(const Graph& g) {
    const int v = g.order();
    if (v > 20) throw SizeLimit("exact toughness limited to v <= 20");
    if (!g.is_connected()) throw Disconnected("toughness needs a connected graph");
    std::vector<uint32_t> adj(v, 0);
    for (int u = 0; u < v; ++u)
        for (int w = 0; w < v; ++w)
            if (g.adjacent(u, w)) adj[u] |= 1u << w;

    auto components = [&adj, v](uint32_t rem) {
        int c = 0;
        while (rem) {
            ++c;
            uint32_t comp = rem & (~rem + 1);  // lowest set bit seeds a component
            for (;;) {
                uint32_t grow = comp;
                uint32_t scan = comp;
                while (scan) {
                    const int u = std::countr_zero(scan);
                    scan &= scan - 1;
                    grow |= adj[u] & rem;
                }
                if (grow == comp) break;
                comp = grow;
            }
            rem &= ~comp;
        }
        return c;
    };

    const uint32_t all = v == 32 ? ~0u : (1u << v) - 1;
    bool found = false;
    Fraction best(v, 1);
    for (uint32_t x = 1; x < all; ++x) {
        const uint32_t rest = all & ~x;
        const int c = components(rest);
        if (c < 2) continue;
        const Fraction q(std::popcount(x), c);
        if (!found || q < best) best = q;
        found = true;
    }
    if (!found) throw CompleteGraph("no disconnecting vertex set");
    return best;
}

double toughness_lower_bound(const Graph& g) {
    int k = 0;
    if (!g.is_regular(&k)) throw NotRegular("bound needs a regular graph");
    return static_cast<double>(k) / second_eigenvalue(g) - 2.0;
}

KsReport ks_verdict(const Graph& g) {
    int k = 0;
    if (!g.is_regular(&k)) throw NotRegular("verdict needs a regular graph");
    if (!g.is_connected()) throw Disconnected("verdict needs a connected graph");
    KsReport rep;
    rep.ratio = static_cast<double>(k) / second_eigenvalue(g);
    if (g.order() < 16) return rep;
    rep.defined = true;
    rep.threshold = ks_threshold(g.order());
    rep.fires = rep.ratio > rep.threshold;
    return rep;
}

DeletionReport robust_deletion_experiment(const Graph& g, double eps,
                                          unsigned long long seed, int trials,
                                          const SearchBudget& b) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must be in (0, 1/2)");
    if (trials < 0) throw std::invalid_argument("trials must be non-negative");
    int k = 0;
    if (!g.is_regular(&k)) throw NotRegular("experiment needs a regular graph");

    DeletionReport rep;
    rep.eps = eps;
    rep.max_deleted_degree = static_cast<long long>(std::floor((0.5 - eps) * k));
    const auto edges = g.edge_list();

    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<unsigned>(trial));
        auto shuffled = edges;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<int> hdeg(g.order(), 0);
        std::vector<char> removed(shuffled.size(), 0);
        long long deleted = 0;
        for (size_t i = 0; i < shuffled.size(); ++i) {
            const auto& [u, w] = shuffled[i];
            if (hdeg[u] < rep.max_deleted_degree && hdeg[w] < rep.max_deleted_degree) {
                removed[i] = 1;
                ++hdeg[u];
                ++hdeg[w];
                ++deleted;
            }
        }
        Graph pruned(g.order());
        for (size_t i = 0; i < shuffled.size(); ++i)
            if (!removed[i]) pruned.add_edge(shuffled[i].first, shuffled[i].second);
        DeletionTrial t;
        t.deleted_edges = deleted;
        SearchBudget tb = b;
        tb.seed = seed + static_cast<unsigned>(trial);
        const auto res = find_hamiltonian(pruned, tb);
        t.found = res.verdict == HamVerdict::Found;
        t.nodes = res.nodes;
        rep.trials.push_back(t);
    }
    return rep;
}

}  // namespace srg

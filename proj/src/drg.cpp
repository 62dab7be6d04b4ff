#include "srg/drg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "srg/params.hpp"
#include "srg/spectral.hpp"

namespace srg {

DistancePartition distance_partition(const Graph& g) {
    const int v = g.order();
    DistancePartition dp;
    dp.dist.assign(v, std::vector<int>(v, -1));
    for (int s = 0; s < v; ++s) {
        auto& d = dp.dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w = 0; w < v; ++w)
                if (d[w] == -1 && g.adjacent(u, w)) {
                    d[w] = d[u] + 1;
                    dp.diameter = std::max(dp.diameter, d[w]);
                    q.push(w);
                }
        }
        for (int w = 0; w < v; ++w)
            if (d[w] == -1) throw Disconnected("distance partition needs a connected graph");
    }
    return dp;
}

Graph distance_graph(const Graph& g, int r) {
    const auto dp = distance_partition(g);
    if (r < 1 || r > dp.diameter) throw BadIndex("distance index out of 1..diameter");
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int w = u + 1; w < g.order(); ++w)
            if (dp.dist[u][w] == r) out.add_edge(u, w);
    return out;
}

std::optional<DrgCertificate> is_distance_regular(const Graph& g) {
    const auto dp = distance_partition(g);
    const int v = g.order();
    const int dm = dp.diameter;
    DrgCertificate cert;
    cert.diameter = dm;
    cert.intersection.assign(dm + 1, std::vector<std::vector<int>>(
                                         dm + 1, std::vector<int>(dm + 1, -1)));
    std::vector<std::vector<int>> count(dm + 1, std::vector<int>(dm + 1, 0));
    for (int u = 0; u < v; ++u)
        for (int w = u; w < v; ++w) {
            const int h = dp.dist[u][w];
            for (auto& row : count) std::fill(row.begin(), row.end(), 0);
            for (int x = 0; x < v; ++x) ++count[dp.dist[u][x]][dp.dist[w][x]];
            for (int i = 0; i <= dm; ++i)
                for (int j = 0; j <= dm; ++j) {
                    int& slot = cert.intersection[h][i][j];
                    if (slot == -1)
                        slot = count[i][j];
                    else if (slot != count[i][j])
                        return std::nullopt;
                }
        }
    return cert;
}

MergedGraph merged_graph(const Graph& g, const std::set<int>& R) {
    if (R.empty()) throw BadIndex("merge set must be non-empty");
    const auto dp = distance_partition(g);
    for (int r : R)
        if (r < 1 || r > dp.diameter) throw BadIndex("merge distance out of range");
    MergedGraph m{R, Graph(g.order()), 0};
    for (int u = 0; u < g.order(); ++u)
        for (int w = u + 1; w < g.order(); ++w)
            if (R.count(dp.dist[u][w])) m.graph.add_edge(u, w);
    int p = 0;
    if (!m.graph.is_regular(&p)) throw NotRegular("merged graph of a non-DRG input");
    m.degree = p;
    return m;
}

bool commutation_merge_check(const Graph& g, const Graph& m) {
    const int v = g.order();
    if (m.order() != v) return false;
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            int ab = 0, ba = 0;
            for (int l = 0; l < v; ++l) {
                ab += (g.adjacent(i, l) && m.adjacent(l, j)) ? 1 : 0;
                ba += (m.adjacent(i, l) && g.adjacent(l, j)) ? 1 : 0;
            }
            if (ab != ba) return false;
        }
    return true;
}

bool is_complete_multipartite(const Graph& g) {
    // Complement must be a disjoint union of at least two equal-size cliques.
    const Graph c = g.complement();
    const int v = g.order();
    std::vector<int> part(v, -1);
    int parts = 0;
    for (int s = 0; s < v; ++s) {
        if (part[s] != -1) continue;
        part[s] = parts;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < v; ++w)
                if (part[w] == -1 && c.adjacent(u, w)) {
                    part[w] = parts;
                    stack.push_back(w);
                }
        }
        ++parts;
    }
    if (parts < 2) return false;
    std::vector<int> size(parts, 0);
    for (int u = 0; u < v; ++u) ++size[part[u]];
    for (int s : size)
        if (s != size[0]) return false;
    // Each part must be independent in g (clique in the complement).
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w)
            if (g.adjacent(u, w) == (part[u] == part[w])) return false;
    return true;
}

GodsilReport godsil_bound_check(const Graph& g) {
    int k = 0;
    if (!g.is_regular(&k)) throw NotRegular("bound check needs a regular graph");
    if (!g.is_connected()) throw Disconnected("bound check needs a connected graph");
    if (k <= 2) throw Inapplicable("degree must exceed 2");
    if (is_complete_multipartite(g)) throw Inapplicable("complete multipartite input");

    const auto dp = distance_partition(g);
    const auto clusters = eigen_multiplicities(spectrum(g));
    GodsilReport rep;
    rep.degree = k;
    rep.diameter = dp.diameter;
    for (const auto& cl : clusters) {
        if (std::abs(cl.value - k) < 1e-6 || std::abs(cl.value + k) < 1e-6) continue;
        GodsilEntry e;
        e.theta = cl.value;
        e.multiplicity = cl.multiplicity;
        const long long m = cl.multiplicity;
        e.diameter_ok = dp.diameter <= 3 * m - 4;
        e.degree_ok = 2 * k <= (m - 1) * (m + 2);
        e.size_ok = std::log(static_cast<double>(g.order())) <
                    6.0 * static_cast<double>(m) * std::log(static_cast<double>(m));
        rep.all_ok = rep.all_ok && e.diameter_ok && e.degree_ok && e.size_ok;
        rep.entries.push_back(e);
    }
    return rep;
}

MergedGapReport merged_gap_bound_check(const Graph& g, const std::set<int>& R) {
    if (!g.is_connected()) throw Disconnected("merged bound needs a connected graph");
    if (g.is_bipartite()) throw Bipartite("bipartite input excluded");
    if (is_complete_multipartite(g)) throw Inapplicable("complete multipartite input");
    if (!is_distance_regular(g)) throw Inapplicable("input is not distance-regular");
    if (g.order() < 16) throw ThresholdUndefined("bound needs v >= 16");

    const auto m = merged_graph(g, R);
    if (!m.graph.is_connected()) throw Disconnected("merged graph is disconnected");

    const double v = g.order();
    MergedGapReport rep;
    rep.degree = m.degree;
    rep.lambda2 = second_eigenvalue(m.graph);
    rep.bound = std::sqrt(6.0 * m.degree * v * std::log(std::log(v)) / std::log(v));
    rep.holds = rep.lambda2 < rep.bound;
    const auto clusters = eigen_multiplicities(spectrum(m.graph));
    rep.t_min = m.graph.order();
    for (size_t i = 1; i < clusters.size(); ++i)
        rep.t_min = std::min(rep.t_min, clusters[i].multiplicity);
    rep.mult_lower = std::log(v) / (6.0 * std::log(std::log(v)));
    rep.mult_ok = rep.t_min > rep.mult_lower;
    return rep;
}

bool multiplicity_coarsening(const Graph& g, const Graph& m) {
    const auto cg = eigen_multiplicities(spectrum(g));
    const auto cm = eigen_multiplicities(spectrum(m));
    std::vector<int> gm, mm;
    for (const auto& c : cg) gm.push_back(c.multiplicity);
    for (const auto& c : cm) mm.push_back(c.multiplicity);
    // Assign every g-cluster to an m-cluster so group sums match exactly.
    std::vector<int> remaining = mm;
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
        if (i == gm.size())
            return std::all_of(remaining.begin(), remaining.end(),
                               [](int x) { return x == 0; });
        for (auto& slot : remaining) {
            if (slot < gm[i]) continue;
            slot -= gm[i];
            if (assign(i + 1)) return true;
            slot += gm[i];
        }
        return false;
    };
    return assign(0);
}

}  // namespace srg

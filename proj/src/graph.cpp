#include "srg/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace srg {

Graph::Graph(int v) : v_(v), words_((v + 63) / 64) {
    if (v < 1 || v > kMaxVertices) throw SizeLimit("vertex count out of range");
    bits_.assign(static_cast<size_t>(v_) * words_, 0);
}

void Graph::add_edge(int u, int w) {
    if (u < 0 || w < 0 || u >= v_ || w >= v_) throw GraphFormatError("endpoint out of range");
    if (u == w) throw GraphFormatError("loop rejected");
    if (adjacent(u, w)) throw GraphFormatError("duplicate edge rejected");
    row(u)[static_cast<size_t>(w) >> 6] |= 1ull << (w & 63);
    row(w)[static_cast<size_t>(u) >> 6] |= 1ull << (u & 63);
    ++edges_;
}

int Graph::degree(int u) const {
    int d = 0;
    for (int i = 0; i < words_; ++i) d += std::popcount(row(u)[i]);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    for (int w = 0; w < v_; ++w)
        if (adjacent(u, w)) out.push_back(w);
    return out;
}

int Graph::common_neighbors(int u, int w) const {
    int c = 0;
    const uint64_t* a = row(u);
    const uint64_t* b = row(w);
    for (int i = 0; i < words_; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

bool Graph::is_regular(int* k) const {
    const int d0 = degree(0);
    for (int u = 1; u < v_; ++u)
        if (degree(u) != d0) return false;
    if (k) *k = d0;
    return true;
}

bool Graph::is_connected() const {
    std::vector<char> seen(v_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < v_; ++w)
            if (!seen[w] && adjacent(u, w)) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == v_;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(v_, -1);
    for (int s = 0; s < v_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < v_; ++w) {
                if (!adjacent(u, w)) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph Graph::complement() const {
    Graph g(v_);
    for (int u = 0; u < v_; ++u)
        for (int w = u + 1; w < v_; ++w)
            if (!adjacent(u, w)) g.add_edge(u, w);
    return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edges_));
    for (int u = 0; u < v_; ++u)
        for (int w = u + 1; w < v_; ++w)
            if (adjacent(u, w)) out.emplace_back(u, w);
    return out;
}

Graph read_edge_list(std::istream& in) {
    long long v = 0, e = 0;
    if (!(in >> v >> e)) throw GraphFormatError("missing header");
    if (v < 1 || v > Graph::kMaxVertices || e < 0) throw GraphFormatError("bad header");
    Graph g(static_cast<int>(v));
    for (long long i = 0; i < e; ++i) {
        int u = 0, w = 0;
        if (!(in >> u >> w)) throw GraphFormatError("truncated edge list");
        g.add_edge(u, w);
    }
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, w] : g.edge_list()) out << u << ' ' << w << '\n';
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphFormatError("cannot open " + path);
    return read_edge_list(in);
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GraphFormatError("cannot open " + path);
    write_edge_list(g, out);
}

}  // namespace srg

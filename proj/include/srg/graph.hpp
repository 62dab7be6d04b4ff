#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srg {

struct GraphFormatError : std::runtime_error {
    explicit GraphFormatError(const std::string& m) : std::runtime_error(m) {}
};
struct SizeLimit : std::runtime_error {
    explicit SizeLimit(const std::string& m) : std::runtime_error(m) {}
};
struct Disconnected : std::runtime_error {
    explicit Disconnected(const std::string& m) : std::runtime_error(m) {}
};
struct NotRegular : std::runtime_error {
    explicit NotRegular(const std::string& m) : std::runtime_error(m) {}
};

// Simple undirected graph on vertices 0..v-1, adjacency stored as bitset rows.
class Graph {
public:
    static constexpr int kMaxVertices = 10'000;

    explicit Graph(int v);

    int order() const { return v_; }
    long long edge_count() const { return edges_; }

    void add_edge(int u, int w);
    bool adjacent(int u, int w) const {
        return (row(u)[static_cast<size_t>(w) >> 6] >> (w & 63)) & 1u;
    }

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;
    // Number of common neighbours of u and w.
    int common_neighbors(int u, int w) const;

    bool is_regular(int* k = nullptr) const;
    bool is_connected() const;
    bool is_bipartite() const;

    Graph complement() const;
    std::vector<std::pair<int, int>> edge_list() const;

    const uint64_t* row(int u) const { return bits_.data() + static_cast<size_t>(u) * words_; }
    int row_words() const { return words_; }

private:
    uint64_t* row(int u) { return bits_.data() + static_cast<size_t>(u) * words_; }

    int v_;
    int words_;
    long long edges_{0};
    std::vector<uint64_t> bits_;
};

// Edge-list format: header "v e", then e lines "u w" with 0-based endpoints.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace srg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srg/graph.hpp"
#include "srg/params.hpp"

namespace srg {

struct TooManySquares : std::runtime_error {
    explicit TooManySquares(const std::string& m) : std::runtime_error(m) {}
};
struct NonPrimeOrder : std::runtime_error {
    explicit NonPrimeOrder(const std::string& m) : std::runtime_error(m) {}
};
struct UnsupportedOrder : std::runtime_error {
    explicit UnsupportedOrder(const std::string& m) : std::runtime_error(m) {}
};
struct DegenerateBlockGraph : std::runtime_error {
    explicit DegenerateBlockGraph(const std::string& m) : std::runtime_error(m) {}
};
struct BadModulus : std::runtime_error {
    explicit BadModulus(const std::string& m) : std::runtime_error(m) {}
};
struct DesignInvalid : std::runtime_error {
    explicit DesignInvalid(const std::string& m) : std::runtime_error(m) {}
};

bool is_prime(long long n);

// Mutually orthogonal Latin squares over a prime field.
struct LatinSquareSet {
    int order{0};
    std::vector<std::vector<std::vector<int>>> squares;  // squares[a][x][y]
};

// 2-design S(2, m, n): every point pair lies in exactly one block.
struct SteinerSystem {
    int points{0};
    int block_size{0};
    std::vector<std::vector<int>> blocks;
};

// Verifies the pair-coverage invariant; throws DesignInvalid.
void validate_steiner(const SteinerSystem& s);

// Squares L_a(x, y) = a*x + y mod p for a = 1..count; pairwise orthogonal.
LatinSquareSet mols(int p, int count);
bool mols_orthogonal(const LatinSquareSet& set);

Graph complete_multipartite(int n_parts, int m);

// Graph on the n^2 cells of m-2 MOLS of prime order n; adjacency by shared
// row, column or symbol.  m = 2 gives the rook's graph.
Graph latin_square_graph(int n, int m);

// Bose construction, n == 3 (mod 6) only.
SteinerSystem steiner_triple_system(int n);

// Lines of the affine plane over GF(q), an S(2, q, q^2).
SteinerSystem affine_plane_system(int q);

struct BlockGraphResult {
    Graph graph;
    bool imprimitive{false};  // complete multipartite output, flagged
};

// Blocks as vertices, adjacency iff the blocks intersect.
// Throws DegenerateBlockGraph when the result is complete.
BlockGraphResult steiner_block_graph(const SteinerSystem& s);

// 2-subsets of an n-set, adjacency iff intersecting.
Graph triangular(int n);

// Quadratic-residue adjacency on Z_q, q prime, q == 1 (mod 4).
Graph paley(int q);

// Kneser graph K(5,2).
Graph petersen();

Graph johnson(int n, int k);
Graph hamming(int d, int q);

// Ground-truth parameter oracle: brute-force common-neighbour counting.
// Returns nullopt when counts are not constant.  Throws NotRegular /
// Disconnected for inputs outside the SRG definition's hypotheses.
std::optional<SrgParams> srg_params_of(const Graph& g);

// Fixture loader: header "n m", then one block per line (0-based points).
SteinerSystem load_steiner_system(const std::string& path);

}  // namespace srg

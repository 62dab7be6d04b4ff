#include "srg/families.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace srg {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void validate_steiner(const SteinerSystem& s) {
    const int n = s.points, m = s.block_size;
    if (n < 2 || m < 2) throw DesignInvalid("degenerate design");
    std::vector<char> covered(static_cast<size_t>(n) * n, 0);
    for (const auto& b : s.blocks) {
        if (static_cast<int>(b.size()) != m) throw DesignInvalid("block size mismatch");
        for (size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= n) throw DesignInvalid("point out of range");
            for (size_t j = i + 1; j < b.size(); ++j) {
                auto& c = covered[static_cast<size_t>(b[i]) * n + b[j]];
                if (c) throw DesignInvalid("pair covered twice");
                c = 1;
                covered[static_cast<size_t>(b[j]) * n + b[i]] = 1;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!covered[static_cast<size_t>(i) * n + j])
                throw DesignInvalid("uncovered pair");
}

LatinSquareSet mols(int p, int count) {
    if (!is_prime(p)) throw NonPrimeOrder("order must be prime");
    if (count < 1 || count > p - 1) throw TooManySquares("at most p-1 MOLS over GF(p)");
    LatinSquareSet set;
    set.order = p;
    for (int a = 1; a <= count; ++a) {
        std::vector<std::vector<int>> sq(p, std::vector<int>(p));
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) sq[x][y] = (a * x + y) % p;
        set.squares.push_back(std::move(sq));
    }
    return set;
}

bool mols_orthogonal(const LatinSquareSet& set) {
    const int n = set.order;
    for (size_t i = 0; i < set.squares.size(); ++i)
        for (size_t j = i + 1; j < set.squares.size(); ++j) {
            std::vector<char> seen(static_cast<size_t>(n) * n, 0);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    auto& c = seen[static_cast<size_t>(set.squares[i][x][y]) * n +
                                   set.squares[j][x][y]];
                    if (c) return false;
                    c = 1;
                }
        }
    return true;
}

Graph complete_multipartite(int n_parts, int m) {
    if (n_parts < 2 || m < 1 || n_parts * m < 3)
        throw GraphFormatError("need at least two parts and three vertices");
    Graph g(n_parts * m);
    for (int u = 0; u < g.order(); ++u)
        for (int w = u + 1; w < g.order(); ++w)
            if (u / m != w / m) g.add_edge(u, w);
    return g;
}

Graph latin_square_graph(int n, int m) {
    if (!is_prime(n)) throw NonPrimeOrder("Latin square order must be prime");
    if (m < 2 || m > n + 1) throw TooManySquares("m out of range 2..n+1");
    LatinSquareSet set;
    if (m > 2) set = mols(n, m - 2);
    Graph g(n * n);
    auto cell = [n](int x, int y) { return x * n + y; };
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2) {
                    if (cell(x1, y1) >= cell(x2, y2)) continue;
                    bool adj = x1 == x2 || y1 == y2;
                    for (const auto& sq : set.squares)
                        adj = adj || sq[x1][y1] == sq[x2][y2];
                    if (adj) g.add_edge(cell(x1, y1), cell(x2, y2));
                }
    return g;
}

SteinerSystem steiner_triple_system(int n) {
    if (n < 9 || n % 6 != 3) throw UnsupportedOrder("Bose construction needs n == 3 (mod 6)");
    const int t = (n - 3) / 6;
    const int q = 2 * t + 1;
    // Idempotent commutative quasigroup x*y = (t+1)(x+y) mod q.
    auto star = [t, q](int x, int y) { return (t + 1) * (x + y) % q; };
    auto pt = [q](int x, int i) { return x + q * i; };
    SteinerSystem s;
    s.points = n;
    s.block_size = 3;
    for (int x = 0; x < q; ++x) s.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int i = 0; i < 3; ++i)
                s.blocks.push_back({pt(x, i), pt(y, i), pt(star(x, y), (i + 1) % 3)});
    validate_steiner(s);
    return s;
}

SteinerSystem affine_plane_system(int q) {
    if (!is_prime(q)) throw NonPrimeOrder("affine plane order must be prime");
    SteinerSystem s;
    s.points = q * q;
    s.block_size = q;
    auto pt = [q](int x, int y) { return x * q + y; };
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<int> line;
            for (int x = 0; x < q; ++x) line.push_back(pt(x, (a * x + b) % q));
            s.blocks.push_back(std::move(line));
        }
    for (int c = 0; c < q; ++c) {
        std::vector<int> line;
        for (int y = 0; y < q; ++y) line.push_back(pt(c, y));
        s.blocks.push_back(std::move(line));
    }
    validate_steiner(s);
    return s;
}

BlockGraphResult steiner_block_graph(const SteinerSystem& s) {
    validate_steiner(s);
    const int b = static_cast<int>(s.blocks.size());
    if (b < 2) throw DegenerateBlockGraph("fewer than two blocks");
    std::vector<std::set<int>> sets;
    sets.reserve(b);
    for (const auto& blk : s.blocks) sets.emplace_back(blk.begin(), blk.end());
    Graph g(b);
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
            const bool meet = std::any_of(sets[i].begin(), sets[i].end(),
                                          [&](int p) { return sets[j].count(p) > 0; });
            if (meet) g.add_edge(i, j);
        }
    if (g.edge_count() == static_cast<long long>(b) * (b - 1) / 2)
        throw DegenerateBlockGraph("every pair of blocks intersects");
    BlockGraphResult res{std::move(g), false};
    const auto p = srg_params_of(res.graph);
    res.imprimitive = p && p->mu == p->k;
    return res;
}

Graph triangular(int n) {
    if (n < 4) throw GraphFormatError("triangular graph needs n >= 4");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    Graph g(static_cast<int>(pairs.size()));
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            const auto& [i, j] = pairs[a];
            const auto& [x, y] = pairs[b];
            if (i == x || i == y || j == x || j == y)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

Graph paley(int q) {
    if (!is_prime(q) || q % 4 != 1) throw BadModulus("need a prime q == 1 (mod 4)");
    std::vector<char> residue(q, 0);
    for (long long x = 1; x < q; ++x) residue[x * x % q] = 1;
    Graph g(q);
    for (int u = 0; u < q; ++u)
        for (int w = u + 1; w < q; ++w)
            if (residue[(w - u) % q]) g.add_edge(u, w);
    return g;
}

Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    Graph g(10);
    for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            const auto& [i, j] = pairs[a];
            const auto& [x, y] = pairs[b];
            if (i != x && i != y && j != x && j != y)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

Graph johnson(int n, int k) {
    if (k < 1 || n < 2 * k) throw GraphFormatError("johnson needs n >= 2k >= 2");
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);
    if (subsets.size() > Graph::kMaxVertices) throw SizeLimit("johnson graph too large");
    Graph g(static_cast<int>(subsets.size()));
    for (size_t a = 0; a < subsets.size(); ++a)
        for (size_t b = a + 1; b < subsets.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(subsets[a].begin(), subsets[a].end(),
                                  subsets[b].begin(), subsets[b].end(),
                                  std::back_inserter(inter));
            if (static_cast<int>(inter.size()) == k - 1)
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

Graph hamming(int d, int q) {
    if (d < 1 || q < 2) throw GraphFormatError("hamming needs d >= 1, q >= 2");
    long long v = 1;
    for (int i = 0; i < d; ++i) {
        v *= q;
        if (v > Graph::kMaxVertices) throw SizeLimit("hamming graph too large");
    }
    auto digits = [d, q](long long word, int pos) {
        for (int i = 0; i < pos; ++i) word /= q;
        return static_cast<int>(word % q);
    };
    Graph g(static_cast<int>(v));
    for (long long a = 0; a < v; ++a)
        for (long long b = a + 1; b < v; ++b) {
            int diff = 0;
            for (int i = 0; i < d && diff < 2; ++i)
                if (digits(a, i) != digits(b, i)) ++diff;
            if (diff == 1) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return g;
}

std::optional<SrgParams> srg_params_of(const Graph& g) {
    int k = 0;
    if (!g.is_regular(&k)) throw NotRegular("input is not regular");
    if (!g.is_connected()) throw Disconnected("input is not connected");
    const int v = g.order();
    if (k == 0 || k == v - 1) return std::nullopt;  // empty / complete excluded
    int lambda = -1, mu = -1;
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w) {
            const int c = g.common_neighbors(u, w);
            int& slot = g.adjacent(u, w) ? lambda : mu;
            if (slot == -1)
                slot = c;
            else if (slot != c)
                return std::nullopt;
        }
    if (lambda == -1 || mu == -1) return std::nullopt;
    return SrgParams{v, k, lambda, mu};
}

SteinerSystem load_steiner_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DesignInvalid("cannot open " + path);
    SteinerSystem s;
    if (!(in >> s.points >> s.block_size)) throw DesignInvalid("missing header");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> block;
        int x;
        while (ls >> x) block.push_back(x);
        if (!block.empty()) s.blocks.push_back(std::move(block));
    }
    validate_steiner(s);
    return s;
}

}  // namespace srg

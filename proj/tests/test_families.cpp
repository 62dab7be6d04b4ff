#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "srg/families.hpp"
#include "srg/params.hpp"
#include "srg/spectral.hpp"

using namespace srg;

namespace {

SrgParams params_of(const Graph& g) {
    const auto p = srg_params_of(g);
    REQUIRE(p.has_value());
    return *p;
}

// Trivial S(2,2,n): all 2-subsets in lexicographic order.
SteinerSystem pair_design(int n) {
    SteinerSystem s;
    s.points = n;
    s.block_size = 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.blocks.push_back({i, j});
    return s;
}

}  // namespace

TEST_CASE("mutually orthogonal Latin squares over prime fields") {
    const auto two = mols(3, 2);
    CHECK(two.squares.size() == 2);
    CHECK(mols_orthogonal(two));

    const auto full = mols(5, 4);
    CHECK(full.squares.size() == 4);
    CHECK(mols_orthogonal(full));

    // Each square is Latin: rows and columns are permutations.
    for (const auto& sq : full.squares)
        for (int x = 0; x < 5; ++x) {
            std::set<int> row(sq[x].begin(), sq[x].end());
            std::set<int> col;
            for (int y = 0; y < 5; ++y) col.insert(sq[y][x]);
            CHECK(row.size() == 5);
            CHECK(col.size() == 5);
        }

    CHECK_THROWS_AS(mols(4, 2), NonPrimeOrder);
    CHECK_THROWS_AS(mols(3, 3), TooManySquares);
}

TEST_CASE("complete multipartite graphs") {
    CHECK(params_of(complete_multipartite(3, 2)) == SrgParams{6, 4, 2, 4});
    CHECK(params_of(complete_multipartite(4, 3)) == SrgParams{12, 9, 6, 9});
    // Parts of size one give a complete graph, outside the definition.
    CHECK_FALSE(srg_params_of(complete_multipartite(3, 1)).has_value());
    CHECK_THROWS_AS(complete_multipartite(2, 1), GraphFormatError);
}

TEST_CASE("Latin square graphs") {
    CHECK(params_of(latin_square_graph(2, 2)) == SrgParams{4, 2, 0, 2});
    CHECK(params_of(latin_square_graph(3, 2)) == SrgParams{9, 4, 1, 2});
    CHECK(params_of(latin_square_graph(5, 3)) == SrgParams{25, 12, 5, 6});
    const auto sp = spectrum_from_params({25, 12, 5, 6});
    CHECK(sp.r.as_integer() == 2);
    CHECK(sp.s.as_integer() == -3);
    CHECK(sp.f == 12);
    CHECK_THROWS_AS(latin_square_graph(4, 2), NonPrimeOrder);
}

TEST_CASE("Steiner triple systems via the Bose construction") {
    const auto s9 = steiner_triple_system(9);
    CHECK(s9.blocks.size() == 12);
    const auto s15 = steiner_triple_system(15);
    CHECK(s15.blocks.size() == 35);
    CHECK_THROWS_AS(steiner_triple_system(13), UnsupportedOrder);
    CHECK_THROWS_AS(steiner_triple_system(7), UnsupportedOrder);
}

TEST_CASE("affine plane line systems") {
    const auto a3 = affine_plane_system(3);
    CHECK(a3.points == 9);
    CHECK(a3.blocks.size() == 12);

    const auto a2 = affine_plane_system(2);
    CHECK(a2.blocks.size() == 6);
    const auto bg2 = steiner_block_graph(a2);
    CHECK(params_of(bg2.graph) == SrgParams{6, 4, 2, 4});
    CHECK(bg2.imprimitive);

    CHECK(affine_plane_system(5).blocks.size() == 30);
    CHECK_THROWS_AS(affine_plane_system(4), NonPrimeOrder);
}

TEST_CASE("Steiner block graphs") {
    const auto bg9 = steiner_block_graph(steiner_triple_system(9));
    CHECK(params_of(bg9.graph) == SrgParams{12, 9, 6, 9});
    CHECK(bg9.imprimitive);

    const auto bg15 = steiner_block_graph(steiner_triple_system(15));
    CHECK(params_of(bg15.graph) == SrgParams{35, 18, 9, 9});
    CHECK_FALSE(bg15.imprimitive);

    // Fano plane: any two lines meet, block graph complete.
    SteinerSystem fano;
    fano.points = 7;
    fano.block_size = 3;
    fano.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                   {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
    CHECK_THROWS_AS(steiner_block_graph(fano), DegenerateBlockGraph);
}

TEST_CASE("hand-entered fixture designs load and verify") {
    const auto sts13 = load_steiner_system(std::string(SRG_DATA_DIR) + "/sts13.design");
    CHECK(sts13.points == 13);
    CHECK(sts13.blocks.size() == 26);
    const auto bg = steiner_block_graph(sts13);
    CHECK(params_of(bg.graph) == SrgParams{26, 15, 8, 9});
    const auto clusters = eigen_multiplicities(spectrum(bg.graph));
    REQUIRE(clusters.size() == 3);
    CHECK(clusters[0].value == doctest::Approx(15.0).epsilon(1e-9));
    CHECK(clusters[1].value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(clusters[1].multiplicity == 12);
    CHECK(clusters[2].value == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(clusters[2].multiplicity == 13);
}

TEST_CASE("triangular graphs") {
    CHECK(params_of(triangular(4)) == SrgParams{6, 4, 2, 4});
    CHECK(params_of(triangular(5)) == SrgParams{10, 6, 3, 4});
    CHECK(params_of(triangular(7)) == SrgParams{21, 10, 5, 4});

    // T(n) is the block graph of the trivial pair design, same labeling.
    const auto t6 = triangular(6);
    const auto bg = steiner_block_graph(pair_design(6)).graph;
    CHECK(t6.edge_list() == bg.edge_list());
}

TEST_CASE("Paley graphs") {
    const auto p5 = paley(5);
    CHECK(params_of(p5) == SrgParams{5, 2, 0, 1});
    CHECK(p5.degree(0) == 2);  // the pentagon
    CHECK(params_of(paley(13)) == SrgParams{13, 6, 2, 3});
    CHECK_THROWS_AS(paley(9), BadModulus);
    CHECK_THROWS_AS(paley(7), BadModulus);
}

TEST_CASE("Petersen graph and its relatives") {
    const auto pet = petersen();
    CHECK(params_of(pet) == SrgParams{10, 3, 0, 1});
    CHECK(params_of(pet.complement()) == SrgParams{10, 6, 3, 4});
    CHECK(params_of(johnson(5, 2)) == SrgParams{10, 6, 3, 4});
}

TEST_CASE("Johnson and Hamming fixtures") {
    CHECK(params_of(hamming(2, 3)) == SrgParams{9, 4, 1, 2});
    const auto cube = hamming(3, 2);
    CHECK(cube.order() == 8);
    CHECK(cube.is_bipartite());
    CHECK(cube.is_regular());
    CHECK_THROWS_AS(johnson(3, 2), GraphFormatError);
    CHECK_THROWS_AS(hamming(20, 3), SizeLimit);
}

TEST_CASE("parameter oracle edge cases") {
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    CHECK_FALSE(srg_params_of(c6).has_value());

    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK_THROWS_AS(srg_params_of(p3), NotRegular);

    Graph two(2);
    CHECK_THROWS_AS(srg_params_of(two), Disconnected);
}

TEST_CASE("constructed families match their classification tags") {
    CHECK(classify_params(params_of(latin_square_graph(5, 3))).tag ==
          FamilyTag::LatinSquareType);
    CHECK(classify_params(params_of(triangular(7))).tag == FamilyTag::SteinerType);
    CHECK(classify_params(params_of(complete_multipartite(4, 3))).tag ==
          FamilyTag::CompleteMultipartite);
    CHECK(classify_params(params_of(paley(13))).tag == FamilyTag::Conference);
    CHECK(classify_params(params_of(petersen())).tag == FamilyTag::ExceptionalType);
}

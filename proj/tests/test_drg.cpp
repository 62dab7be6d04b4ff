#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "srg/drg.hpp"
#include "srg/families.hpp"
#include "srg/params.hpp"

using namespace srg;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("distance partitions") {
    const auto dp = distance_partition(petersen());
    CHECK(dp.diameter == 2);
    CHECK(dp.dist[0][0] == 0);

    CHECK(distance_partition(hamming(3, 2)).diameter == 3);
    CHECK(distance_partition(cycle(7)).diameter == 3);
    CHECK_THROWS_AS(distance_partition(Graph(3)), Disconnected);
}

TEST_CASE("distance graphs") {
    const auto pet = petersen();
    const auto d2 = distance_graph(pet, 2);
    CHECK(d2.edge_list() == pet.complement().edge_list());
    CHECK_THROWS_AS(distance_graph(pet, 3), BadIndex);
    CHECK_THROWS_AS(distance_graph(pet, 0), BadIndex);

    // Antipodal pairs of the cube.
    const auto d3 = distance_graph(hamming(3, 2), 3);
    CHECK(d3.edge_count() == 4);
    CHECK(d3.is_regular());
}

TEST_CASE("distance-regularity certificates") {
    const auto cert = is_distance_regular(petersen());
    REQUIRE(cert.has_value());
    CHECK(cert->diameter == 2);
    CHECK(cert->intersection[0][1][1] == 3);   // neighbours of any vertex
    CHECK(cert->intersection[1][1][1] == 0);   // lambda
    CHECK(cert->intersection[2][1][1] == 1);   // mu

    CHECK(is_distance_regular(cycle(6)).has_value());
    CHECK(is_distance_regular(hamming(3, 2)).has_value());
    CHECK(is_distance_regular(johnson(7, 2)).has_value());
    CHECK_FALSE(is_distance_regular(path(3)).has_value());
    CHECK_FALSE(is_distance_regular(path(5)).has_value());
}

TEST_CASE("merged graphs") {
    const auto pet = petersen();
    const auto m2 = merged_graph(pet, {2});
    CHECK(m2.degree == 6);
    CHECK(m2.graph.edge_list() == pet.complement().edge_list());

    const auto m12 = merged_graph(pet, {1, 2});
    CHECK(m12.degree == 9);  // all pairs within diameter 2

    const auto cube = merged_graph(hamming(3, 2), {1, 2});
    CHECK(cube.degree == 6);
    CHECK(is_complete_multipartite(cube.graph));

    CHECK_THROWS_AS(merged_graph(pet, {3}), BadIndex);
    CHECK_THROWS_AS(merged_graph(pet, {}), BadIndex);
}

TEST_CASE("adjacency commutation of distance graphs") {
    const auto pet = petersen();
    CHECK(commutation_merge_check(pet, distance_graph(pet, 2)));
    const auto j72 = johnson(7, 2);
    CHECK(commutation_merge_check(j72, distance_graph(j72, 2)));

    // A path and its distance-2 overlay do not commute.
    const auto p4 = path(4);
    CHECK_FALSE(commutation_merge_check(p4, distance_graph(p4, 2)));
    CHECK_FALSE(commutation_merge_check(pet, Graph(4)));
}

TEST_CASE("complete multipartite recognition") {
    CHECK(is_complete_multipartite(complete_multipartite(3, 2)));
    CHECK(is_complete_multipartite(complete_multipartite(2, 4)));
    CHECK_FALSE(is_complete_multipartite(petersen()));
    CHECK_FALSE(is_complete_multipartite(cycle(6)));
}

TEST_CASE("eigenvalue multiplicity bounds for distance-regular graphs") {
    const auto pet = godsil_bound_check(petersen());
    REQUIRE(pet.entries.size() == 2);
    CHECK(pet.degree == 3);
    CHECK(pet.entries[0].theta == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pet.entries[0].multiplicity == 5);
    CHECK(pet.entries[1].multiplicity == 4);
    CHECK(pet.all_ok);

    const auto j72 = godsil_bound_check(johnson(7, 2));
    REQUIRE(j72.entries.size() == 2);
    CHECK(j72.entries[0].multiplicity == 6);
    CHECK(j72.entries[1].multiplicity == 14);
    CHECK(j72.all_ok);

    // Both +-k eigenvalues of a bipartite graph are excluded from the entries.
    const auto cube = godsil_bound_check(hamming(3, 2));
    REQUIRE(cube.entries.size() == 2);
    CHECK(cube.entries[0].multiplicity == 3);
    CHECK(cube.entries[1].multiplicity == 3);
    CHECK(cube.all_ok);

    CHECK_THROWS_AS(godsil_bound_check(cycle(8)), Inapplicable);
    CHECK_THROWS_AS(godsil_bound_check(triangular(4)), Inapplicable);
    CHECK_THROWS_AS(godsil_bound_check(path(4)), NotRegular);
}

TEST_CASE("second-eigenvalue bound for merged graphs") {
    const auto rep = merged_gap_bound_check(johnson(7, 2), {2});
    CHECK(rep.degree == 10);
    CHECK(rep.lambda2 == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(rep.bound == doctest::Approx(21.465468910322).epsilon(1e-9));
    CHECK(rep.holds);
    CHECK(rep.t_min == 6);
    CHECK(rep.mult_lower == doctest::Approx(0.455762443318779).epsilon(1e-9));
    CHECK(rep.mult_ok);

    const auto self = merged_gap_bound_check(johnson(7, 2), {1});
    CHECK(self.degree == 10);
    CHECK(self.lambda2 == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(self.holds);

    CHECK_THROWS_AS(merged_gap_bound_check(petersen(), {2}), ThresholdUndefined);
    CHECK_THROWS_AS(merged_gap_bound_check(hamming(4, 2), {2}), Bipartite);
    CHECK_THROWS_AS(merged_gap_bound_check(triangular(4), {1}), Inapplicable);
}

TEST_CASE("multiplicity coarsening between a graph and a merged graph") {
    const auto pet = petersen();
    CHECK(multiplicity_coarsening(pet, merged_graph(pet, {1, 2}).graph));
    CHECK(multiplicity_coarsening(pet, pet.complement()));
    const auto j72 = johnson(7, 2);
    CHECK(multiplicity_coarsening(j72, merged_graph(j72, {2}).graph));
    CHECK_FALSE(multiplicity_coarsening(pet, cycle(10)));
}

#pragma once

#include <vector>

#include "srg/graph.hpp"

namespace srg {

struct AmbiguousClustering : std::runtime_error {
    explicit AmbiguousClustering(const std::string& m) : std::runtime_error(m) {}
};

// All adjacency eigenvalues, non-increasing.
struct NumericSpectrum {
    std::vector<double> values;
};

struct EigenCluster {
    double value{0};
    int multiplicity{0};
};

// Dense symmetric eigensolver (cyclic Jacobi rotations).
NumericSpectrum spectrum(const Graph& g);

// max(|lambda_2|, |lambda_v|) for a connected regular graph.
double second_eigenvalue(const Graph& g);

// Groups eigenvalues within tol; throws AmbiguousClustering when two
// resulting clusters are closer than 2*tol.
std::vector<EigenCluster> eigen_multiplicities(const NumericSpectrum& spec, double tol = 1e-6);

// True iff perm is a graph automorphism (exact entrywise pi*A == A*pi).
bool commutation_check(const Graph& g, const std::vector<int>& perm);

struct GapBound {
    int t_min{0};       // minimum multiplicity among non-principal clusters
    double bound{0};    // sqrt(v*k / t_min)
    double lambda2{0};
    bool holds{false};  // lambda2 <= bound
};

// Multiplicity form of the trace bound: t * lambda^2 <= Tr(A^2) = v*k.
GapBound multiplicity_gap_bound(const Graph& g);

}  // namespace srg

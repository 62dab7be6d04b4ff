#include "srg/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace srg {

namespace {

// Cyclic Jacobi eigenvalue iteration on a dense symmetric matrix.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    if (n == 1) return {a[0]};
    double norm2 = 0;
    for (double x : a) norm2 += x * x;
    const double target = 1e-12 * std::sqrt(norm2);
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
        if (std::sqrt(off) < target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = at(p, i) = aip - s * (aiq + tau * aip);
                    at(i, q) = at(q, i) = aiq + s * (aip - tau * aiq);
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace

NumericSpectrum spectrum(const Graph& g) {
    const int n = g.order();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (g.adjacent(u, w)) a[static_cast<size_t>(u) * n + w] = 1.0;
    return {jacobi_eigenvalues(std::move(a), n)};
}

double second_eigenvalue(const Graph& g) {
    if (!g.is_regular()) throw NotRegular("second eigenvalue needs a regular graph");
    if (!g.is_connected()) throw Disconnected("second eigenvalue needs a connected graph");
    const auto sp = spectrum(g);
    if (sp.values.size() < 2) return 0.0;
    return std::max(std::abs(sp.values[1]), std::abs(sp.values.back()));
}

std::vector<EigenCluster> eigen_multiplicities(const NumericSpectrum& spec, double tol) {
    std::vector<EigenCluster> out;
    if (spec.values.empty()) return out;
    double sum = spec.values[0];
    int count = 1;
    double first = spec.values[0];
    for (size_t i = 1; i <= spec.values.size(); ++i) {
        if (i < spec.values.size() && first - spec.values[i] <= tol) {
            sum += spec.values[i];
            ++count;
            continue;
        }
        out.push_back({sum / count, count});
        if (i < spec.values.size()) {
            first = sum = spec.values[i];
            count = 1;
        }
    }
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].value - out[i].value < 2 * tol)
            throw AmbiguousClustering("clusters closer than 2*tol");
    return out;
}

bool commutation_check(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int x : perm) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = 1;
    }
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    // (pi A)[i][j] = A[perm[i]][j];  (A pi)[i][j] = A[i][inv[j]].
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(perm[i], j) != g.adjacent(i, inv[j])) return false;
    return true;
}

GapBound multiplicity_gap_bound(const Graph& g) {
    int k = 0;
    if (!g.is_regular(&k)) throw NotRegular("gap bound needs a regular graph");
    if (!g.is_connected()) throw Disconnected("gap bound needs a connected graph");
    const auto clusters = eigen_multiplicities(spectrum(g));
    GapBound gb;
    gb.t_min = g.order();
    double lam2 = 0;
    for (size_t i = 1; i < clusters.size(); ++i) {  // clusters[0] is the degree k
        gb.t_min = std::min(gb.t_min, clusters[i].multiplicity);
        lam2 = std::max(lam2, std::abs(clusters[i].value));
    }
    gb.lambda2 = lam2;
    gb.bound = std::sqrt(static_cast<double>(g.order()) * k / gb.t_min);
    gb.holds = lam2 <= gb.bound + 1e-9;
    return gb;
}

}  // namespace srg

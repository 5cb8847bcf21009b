#include "spx/kernels.hpp"

namespace spx::kernels::scalar {

void shifted_adjacency_matvec(std::span<const VertexSet> rows, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double sum = 0.0;
        for_each_vertex(rows[i], [&](int j) { sum += x[static_cast<std::size_t>(j)]; });
        y[i] = x[i] + sum;
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace spx::kernels::scalar

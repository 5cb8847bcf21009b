#pragma once

#include <span>

#include "spx/graph.hpp"

/// Dense arithmetic inner loops of the spectral solver. Every kernel has a
/// portable scalar reference and, where the CPU supports it, an AVX2 variant
/// picked at first use. Variants agree up to floating-point reassociation.
namespace spx::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;
Backend active_backend() noexcept;
/// Overrides the runtime choice; throws if `b` is not available here.
void set_backend(Backend b);

/// y[i] = x[i] + sum of x[j] over neighbors j of i, i.e. y = (A + I) x.
void shifted_adjacency_matvec(std::span<const VertexSet> rows, std::span<const double> x, std::span<double> y);

double dot(std::span<const double> a, std::span<const double> b);

namespace scalar {
void shifted_adjacency_matvec(std::span<const VertexSet> rows, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

namespace avx2 {
void shifted_adjacency_matvec(std::span<const VertexSet> rows, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace avx2

}  // namespace spx::kernels

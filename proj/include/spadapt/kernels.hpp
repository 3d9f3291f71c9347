#pragma once

// Dense O(N^2) kernels behind every transform, reconstruction and the
// matrix-free potential product. Two implementations with one contract:
//
//   spadapt::kernels::reference  serial loops, kept as the testing baseline
//   spadapt::kernels             OpenMP over independent output entries
//
// Each output entry is produced by exactly one thread with the same
// summation order as the serial loop, so both paths agree bit-for-bit.

#include <complex>
#include <span>

#include "spadapt/basis.hpp"

namespace spadapt::kernels {

using cplx = std::complex<double>;

/// out(s, i) = B_i(points[s]); out is resized to points.size() x (N+1).
void basis_matrix(const BasisDescriptor& descriptor, std::span<const double> points, RowMatrix& out);

/// values[s] = scale * sum_i B(s, i) coeffs[i]
template <class Scalar>
void synthesize(const RowMatrix& basis, std::span<const Scalar> coeffs, double scale, std::span<Scalar> values);

/// coeffs[i] = scale * sum_s weights[s] B(s, i) values[s]
template <class Scalar>
void analyze(const RowMatrix& basis, std::span<const double> weights, std::span<const Scalar> values,
             double scale, std::span<Scalar> coeffs);

namespace reference {

void basis_matrix(const BasisDescriptor& descriptor, std::span<const double> points, RowMatrix& out);

template <class Scalar>
void synthesize(const RowMatrix& basis, std::span<const Scalar> coeffs, double scale, std::span<Scalar> values);

template <class Scalar>
void analyze(const RowMatrix& basis, std::span<const double> weights, std::span<const Scalar> values,
             double scale, std::span<Scalar> coeffs);

}  // namespace reference

/// Below this many multiply-adds the parallel kernels run serially.
inline constexpr long kParallelThreshold = 4096;

}  // namespace spadapt::kernels

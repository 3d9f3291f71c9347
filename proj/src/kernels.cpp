#include "spadapt/kernels.hpp"

#include <stdexcept>

namespace spadapt::kernels {

namespace {

void check_shape(const RowMatrix& basis, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(basis.rows()) != rows || static_cast<std::size_t>(basis.cols()) != cols) {
    throw std::invalid_argument("kernel operand shape mismatch");
  }
}

template <class Scalar>
inline Scalar row_dot(const RowMatrix& basis, Eigen::Index s, std::span<const Scalar> coeffs) {
  const double* row = basis.data() + s * basis.cols();
  Scalar acc{};
  for (Eigen::Index i = 0; i < basis.cols(); ++i) acc += row[i] * coeffs[i];
  return acc;
}

template <class Scalar>
inline Scalar column_dot(const RowMatrix& basis, Eigen::Index i, std::span<const double> weights,
                         std::span<const Scalar> values) {
  const Eigen::Index cols = basis.cols();
  const double* col = basis.data() + i;
  Scalar acc{};
  for (Eigen::Index s = 0; s < basis.rows(); ++s) acc += (weights[s] * col[s * cols]) * values[s];
  return acc;
}

}  // namespace

namespace reference {

void basis_matrix(const BasisDescriptor& descriptor, std::span<const double> points, RowMatrix& out) {
  out.resize(static_cast<Eigen::Index>(points.size()), descriptor.size());
  for (std::size_t s = 0; s < points.size(); ++s) {
    evaluate_all(descriptor, points[s], std::span<double>(out.data() + s * out.cols(), out.cols()));
  }
}

template <class Scalar>
void synthesize(const RowMatrix& basis, std::span<const Scalar> coeffs, double scale, std::span<Scalar> values) {
  check_shape(basis, values.size(), coeffs.size());
  for (Eigen::Index s = 0; s < basis.rows(); ++s) values[s] = scale * row_dot(basis, s, coeffs);
}

template <class Scalar>
void analyze(const RowMatrix& basis, std::span<const double> weights, std::span<const Scalar> values,
             double scale, std::span<Scalar> coeffs) {
  check_shape(basis, values.size(), coeffs.size());
  if (weights.size() != values.size()) throw std::invalid_argument("weights/values length mismatch");
  for (Eigen::Index i = 0; i < basis.cols(); ++i) coeffs[i] = scale * column_dot(basis, i, weights, values);
}

template void synthesize<double>(const RowMatrix&, std::span<const double>, double, std::span<double>);
template void synthesize<cplx>(const RowMatrix&, std::span<const cplx>, double, std::span<cplx>);
template void analyze<double>(const RowMatrix&, std::span<const double>, std::span<const double>, double,
                              std::span<double>);
template void analyze<cplx>(const RowMatrix&, std::span<const double>, std::span<const cplx>, double,
                            std::span<cplx>);

}  // namespace reference

void basis_matrix(const BasisDescriptor& descriptor, std::span<const double> points, RowMatrix& out) {
  out.resize(static_cast<Eigen::Index>(points.size()), descriptor.size());
  const long n = static_cast<long>(points.size());
  const long work = n * descriptor.size();
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
  for (long s = 0; s < n; ++s) {
    evaluate_all(descriptor, points[s], std::span<double>(out.data() + s * out.cols(), out.cols()));
  }
}

template <class Scalar>
void synthesize(const RowMatrix& basis, std::span<const Scalar> coeffs, double scale, std::span<Scalar> values) {
  check_shape(basis, values.size(), coeffs.size());
  const long rows = basis.rows();
  const long work = rows * basis.cols();
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
  for (long s = 0; s < rows; ++s) values[s] = scale * row_dot(basis, s, coeffs);
}

template <class Scalar>
void analyze(const RowMatrix& basis, std::span<const double> weights, std::span<const Scalar> values,
             double scale, std::span<Scalar> coeffs) {
  check_shape(basis, values.size(), coeffs.size());
  if (weights.size() != values.size()) throw std::invalid_argument("weights/values length mismatch");
  const long cols = basis.cols();
  const long work = cols * basis.rows();
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
  for (long i = 0; i < cols; ++i) coeffs[i] = scale * column_dot(basis, i, weights, values);
}

template void synthesize<double>(const RowMatrix&, std::span<const double>, double, std::span<double>);
template void synthesize<cplx>(const RowMatrix&, std::span<const cplx>, double, std::span<cplx>);
template void analyze<double>(const RowMatrix&, std::span<const double>, std::span<const double>, double,
                              std::span<double>);
template void analyze<cplx>(const RowMatrix&, std::span<const double>, std::span<const cplx>, double,
                            std::span<cplx>);

}  // namespace spadapt::kernels

#pragma once

#include <span>
#include <string>

#include "mcm/matrix.hpp"

namespace mcm {

enum class KernelKind { linear, rbf, polynomial };

const char* kernel_kind_name(KernelKind kind);
KernelKind kernel_kind_from_name(const std::string& name);

// linear:      K(p,q) = p.q
// rbf:         K(p,q) = exp(-gamma * |p-q|^2), gamma > 0
// polynomial:  K(p,q) = (p.q + coef0)^degree, degree >= 1
struct KernelSpec {
  KernelKind kind = KernelKind::rbf;
  double gamma = 1.0;
  int degree = 3;
  double coef0 = 0.0;

  void validate() const;
};

double kernel_eval(const KernelSpec& spec, std::span<const double> p,
                   std::span<const double> q);

// M x M Gram matrix, entry (i,j) = K(x_i, x_j). Each unordered pair is
// evaluated once and mirrored, so the result is exactly symmetric and
// independent of the number of threads. gram() parallelizes over rows;
// gram_serial() is the reference implementation and must match bitwise.
Matrix gram(const KernelSpec& spec, const Matrix& X);
Matrix gram_serial(const KernelSpec& spec, const Matrix& X);

// M x P matrix of K(x_i, z_j), used at prediction time.
Matrix cross_gram(const KernelSpec& spec, const Matrix& X, const Matrix& Z);
Matrix cross_gram_serial(const KernelSpec& spec, const Matrix& X, const Matrix& Z);

}  // namespace mcm

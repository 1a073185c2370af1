#pragma once

#include "cospec/polynomial.hpp"
#include "cospec/tensor.hpp"

#include <complex>
#include <vector>

namespace cospec {

struct NumericEigenpair {
  std::complex<double> lambda;
  std::vector<std::complex<double>> x;
  /// max(||T x - lambda x||_inf, |x^T x - 1|)
  double residual = 0.0;
};

/// Damped Newton on the square system (T x - lambda x, x^T x - 1) in
/// C^{n+1} from num_starts random initializations (components uniform on
/// the complex disk of radius 2, mt19937_64(seed)). Converged solutions
/// are clustered by lambda within tol; the best residual per cluster is
/// kept. Incomplete by nature: may miss eigenvalues. `scaled` divides the
/// tensor entries by (k-1)!.
std::vector<NumericEigenpair> eigenpairs_numeric(const SymTensor& t,
                                                 bool scaled,
                                                 int num_starts = 200,
                                                 double tol = 1e-10,
                                                 unsigned long seed = 1);

struct SpectrumComparison {
  bool equal = false;
  /// Unmatched eigenvalues of either side.
  std::vector<std::complex<double>> only_a, only_b;
};

/// Set comparison of numeric eigenvalue lists within tol.
SpectrumComparison compare_spectra(std::vector<std::complex<double>> a,
                                   std::vector<std::complex<double>> b,
                                   double tol);

/// Exact mode: equality of squarefree parts (the root sets).
bool compare_spectra_exact(const UniPoly& a, const UniPoly& b);

/// Roots of a univariate polynomial by Newton iteration with deflation;
/// helper for checking exact eliminants against numeric clusters.
std::vector<std::complex<double>> poly_roots(const UniPoly& p);

}  // namespace cospec

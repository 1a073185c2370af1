#include "cospec/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace cospec {

namespace {

using cplx = std::complex<double>;

struct Term {
  double c;
  std::vector<int> tail;  // k-1 indices, sorted, repeats allowed
};

// rows[i]: (T x)_i as a sum of c * prod x[tail].
std::vector<std::vector<Term>> build_rows(const SymTensor& t, bool scaled) {
  long fact = 1;
  for (int i = 2; i < t.order(); ++i) fact *= i;
  double s = scaled ? 1.0 / static_cast<double>(fact) : 1.0;
  std::map<std::pair<int, std::vector<int>>, double> acc;
  for (const auto& [key, val] : t.entries()) {
    std::vector<int> perm = key;
    do {
      std::vector<int> tail(perm.begin() + 1, perm.end());
      std::sort(tail.begin(), tail.end());
      acc[{perm[0], tail}] += val.to_double() * s;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::vector<Term>> rows(t.dim());
  for (const auto& [key, c] : acc) rows[key.first].push_back({c, key.second});
  return rows;
}

cplx tail_product(const std::vector<int>& tail, const std::vector<cplx>& x,
                  int skip_one_of = -1) {
  cplx p(1.0, 0.0);
  bool skipped = false;
  for (int v : tail) {
    if (!skipped && v == skip_one_of) {
      skipped = true;
      continue;
    }
    p *= x[v];
  }
  return p;
}

// F and its Jacobian in z = (x_0..x_{n-1}, lambda).
void eval_system(const std::vector<std::vector<Term>>& rows, int n,
                 const std::vector<cplx>& z, std::vector<cplx>& f,
                 std::vector<std::vector<cplx>>* jac) {
  cplx lam = z[n];
  f.assign(n + 1, cplx(0.0));
  if (jac) jac->assign(n + 1, std::vector<cplx>(n + 1, cplx(0.0)));
  for (int i = 0; i < n; ++i) {
    for (const auto& term : rows[i]) {
      f[i] += term.c * tail_product(term.tail, z);
      if (jac) {
        int prev = -1;
        for (size_t p = 0; p < term.tail.size(); ++p) {
          int j = term.tail[p];
          if (j == prev) continue;  // multiplicity handled in one shot
          prev = j;
          double mult = static_cast<double>(
              std::count(term.tail.begin(), term.tail.end(), j));
          (*jac)[i][j] += term.c * mult * tail_product(term.tail, z, j);
        }
      }
    }
    f[i] -= lam * z[i];
    if (jac) {
      (*jac)[i][i] -= lam;
      (*jac)[i][n] = -z[i];
    }
  }
  cplx dot(0.0);
  for (int i = 0; i < n; ++i) dot += z[i] * z[i];
  f[n] = dot - 1.0;
  if (jac)
    for (int i = 0; i < n; ++i) (*jac)[n][i] = 2.0 * z[i];
}

double residual_of(const std::vector<cplx>& f) {
  double r = 0.0;
  for (const auto& v : f) r = std::max(r, std::abs(v));
  return r;
}

// Gaussian elimination with partial pivoting; returns false if singular.
bool solve(std::vector<std::vector<cplx>> a, std::vector<cplx> b,
           std::vector<cplx>& out) {
  int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) < 1e-14) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < n; ++r) {
      cplx f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
      b[r] -= f * b[c];
    }
  }
  out.assign(n, cplx(0.0));
  for (int r = n - 1; r >= 0; --r) {
    cplx s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * out[c];
    out[r] = s / a[r][r];
  }
  return true;
}

}  // namespace

std::vector<NumericEigenpair> eigenpairs_numeric(const SymTensor& t,
                                                 bool scaled, int num_starts,
                                                 double tol,
                                                 unsigned long seed) {
  int n = t.dim();
  auto rows = build_rows(t, scaled);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disk = [&]() {
    double r = 2.0 * std::sqrt(unit(rng)), a = angle(rng);
    return cplx(r * std::cos(a), r * std::sin(a));
  };

  std::vector<NumericEigenpair> found;
  std::vector<cplx> f, step;
  std::vector<std::vector<cplx>> jac;
  for (int s = 0; s < num_starts; ++s) {
    std::vector<cplx> z(n + 1);
    for (auto& v : z) v = disk();
    eval_system(rows, n, z, f, nullptr);
    double res = residual_of(f);
    bool ok = false;
    for (int it = 0; it < 100; ++it) {
      eval_system(rows, n, z, f, &jac);
      if (!solve(jac, f, step)) break;
      double cur = res;
      std::vector<cplx> zn;
      bool improved = false;
      for (int damp = 0; damp < 20; ++damp) {
        zn = z;
        double scale = std::ldexp(1.0, -damp);
        for (int i = 0; i <= n; ++i) zn[i] -= scale * step[i];
        eval_system(rows, n, zn, f, nullptr);
        double rn = residual_of(f);
        if (rn < cur) {
          z = zn;
          res = rn;
          improved = true;
          break;
        }
      }
      if (!improved) break;
      if (res < 1e-13) break;
    }
    ok = res <= tol;
    if (!ok) continue;
    NumericEigenpair pr;
    pr.lambda = z[n];
    pr.x.assign(z.begin(), z.begin() + n);
    pr.residual = res;
    found.push_back(std::move(pr));
  }

  // Cluster by lambda, keeping the best residual representative.
  std::sort(found.begin(), found.end(),
            [](const NumericEigenpair& a, const NumericEigenpair& b) {
              return a.residual < b.residual;
            });
  std::vector<NumericEigenpair> reps;
  double cluster_tol = std::max(tol, 1e-8);
  for (auto& pr : found) {
    bool fresh = true;
    for (const auto& r : reps)
      if (std::abs(r.lambda - pr.lambda) <= cluster_tol) fresh = false;
    if (fresh) reps.push_back(std::move(pr));
  }
  std::sort(reps.begin(), reps.end(),
            [](const NumericEigenpair& a, const NumericEigenpair& b) {
              if (a.lambda.real() != b.lambda.real())
                return a.lambda.real() < b.lambda.real();
              return a.lambda.imag() < b.lambda.imag();
            });
  return reps;
}

SpectrumComparison compare_spectra(std::vector<cplx> a, std::vector<cplx> b,
                                   double tol) {
  SpectrumComparison rep;
  std::vector<bool> used(b.size(), false);
  for (const auto& va : a) {
    int best = -1;
    double bd = tol;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(va - b[j]);
      if (d <= bd) {
        bd = d;
        best = static_cast<int>(j);
      }
    }
    if (best >= 0)
      used[best] = true;
    else
      rep.only_a.push_back(va);
  }
  for (size_t j = 0; j < b.size(); ++j)
    if (!used[j]) rep.only_b.push_back(b[j]);
  rep.equal = rep.only_a.empty() && rep.only_b.empty();
  return rep;
}

bool compare_spectra_exact(const UniPoly& a, const UniPoly& b) {
  return squarefree_part(a) == squarefree_part(b);
}

std::vector<cplx> poly_roots(const UniPoly& p) {
  UniPoly m = squarefree_part(p);
  int d = m.degree();
  if (d <= 0) return {};
  // Durand-Kerner on the squarefree part.
  std::vector<cplx> r(d);
  cplx w(0.4, 0.9), acc(1.0);
  for (int i = 0; i < d; ++i) {
    acc *= w;
    r[i] = acc;
  }
  for (int it = 0; it < 500; ++it) {
    double moved = 0.0;
    for (int i = 0; i < d; ++i) {
      cplx denom(1.0);
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= r[i] - r[j];
      cplx delta = m.eval(r[i]) / denom;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  std::sort(r.begin(), r.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return r;
}

}  // namespace cospec

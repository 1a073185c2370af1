#include "cospec/tensor.hpp"

#include <algorithm>

namespace cospec {

SymTensor adjacency_tensor(const Hypergraph& g) {
  SymTensor t(g.k(), g.n());
  for (const auto& e : g.edges()) t.set(e, Rational(1));
  return t;
}

std::vector<std::vector<int>> sorted_multisets(int dim, int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(order, 0);
  while (true) {
    out.push_back(cur);
    int i = order - 1;
    while (i >= 0 && cur[i] == dim - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < order; ++j) cur[j] = cur[i];
  }
  return out;
}

SymTensor conjugate(const RatMatrix& q, const SymTensor& t) {
  if (q.rows() != t.dim() || q.cols() != t.dim())
    throw std::invalid_argument("conjugate: dimension mismatch");
  SymTensor out(t.order(), t.dim());
  for (const auto& i_key : sorted_multisets(t.dim(), t.order())) {
    Rational sum;
    for (const auto& [j_key, val] : t.entries()) {
      std::vector<int> perm = j_key;
      Rational contribution;
      do {
        Rational prod(1);
        for (int l = 0; l < t.order() && !prod.is_zero(); ++l)
          prod *= q.at(i_key[l], perm[l]);
        contribution += prod;
      } while (std::next_permutation(perm.begin(), perm.end()));
      sum += val * contribution;
    }
    if (!sum.is_zero()) out.set(i_key, sum);
  }
  return out;
}

Rational raw_conjugate_entry(const RatMatrix& q, const SymTensor& t,
                             const std::vector<int>& idx) {
  Rational sum;
  for (const auto& [j_key, val] : t.entries()) {
    std::vector<int> perm = j_key;
    Rational contribution;
    do {
      Rational prod(1);
      for (size_t l = 0; l < idx.size() && !prod.is_zero(); ++l)
        prod *= q.at(idx[l], perm[l]);
      contribution += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    sum += val * contribution;
  }
  return sum;
}

SymTensor conjugate_squarefree(const RatMatrix& q, const SymTensor& t) {
  if (q.rows() != t.dim() || q.cols() != t.dim())
    throw std::invalid_argument("conjugate_squarefree: dimension mismatch");
  if (!t.squarefree_support())
    throw std::invalid_argument(
        "conjugate_squarefree: support has a repeated-index key");
  SymTensor out(t.order(), t.dim());
  for (const auto& i_key : sorted_multisets(t.dim(), t.order())) {
    Rational sum;
    for (const auto& [j_key, val] : t.entries())
      sum += val * permanent(q.submatrix(i_key, j_key));
    if (!sum.is_zero()) out.set(i_key, sum);
  }
  return out;
}

std::optional<Hypergraph> as_adjacency(const SymTensor& t,
                                       const std::vector<std::string>& labels) {
  std::vector<std::vector<int>> edges;
  for (const auto& [key, val] : t.entries()) {
    if (val != Rational(1)) return std::nullopt;
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      return std::nullopt;
    edges.push_back(key);
  }
  return Hypergraph(t.order(), labels, std::move(edges));
}

SimilarityCertificate certify_similarity(const RatMatrix& q, const Hypergraph& g,
                                         const Hypergraph& h) {
  if (g.n() != h.n() || g.n() != q.rows())
    throw std::invalid_argument("certify_similarity: size mismatch");
  SimilarityCertificate cert;
  cert.orthogonal =
      q * q.transpose() == RatMatrix::identity(q.rows());
  if (!cert.orthogonal) return cert;
  SymTensor lhs = conjugate(q.transpose(), adjacency_tensor(g));
  SymTensor rhs = adjacency_tensor(h);
  if (lhs == rhs) {
    cert.conjugation_equal = true;
  } else {
    for (const auto& key : sorted_multisets(g.n(), g.k())) {
      if (lhs.get(key) != rhs.get(key)) {
        cert.first_mismatch = key;
        break;
      }
    }
  }
  return cert;
}

}  // namespace cospec

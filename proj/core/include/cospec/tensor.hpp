#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/quadext.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cospec {

/// Sparse symmetric tensor over exact scalars. Only sorted index tuples
/// are stored; a key represents the common value at all its permutations.
/// Stored zeros are dropped. Indices are 0-based.
template <typename S>
class SymTensorT {
public:
  SymTensorT(int order, int dim) : order_(order), dim_(dim) {}

  int order() const { return order_; }
  int dim() const { return dim_; }
  const std::map<std::vector<int>, S>& entries() const { return entries_; }

  S get(std::vector<int> idx) const {
    std::sort(idx.begin(), idx.end());
    auto it = entries_.find(idx);
    return it == entries_.end() ? S() : it->second;
  }

  void set(std::vector<int> idx, S val) {
    if (static_cast<int>(idx.size()) != order_)
      throw std::invalid_argument("SymTensor::set: wrong arity");
    std::sort(idx.begin(), idx.end());
    if (idx.front() < 0 || idx.back() >= dim_)
      throw std::invalid_argument("SymTensor::set: index out of range");
    if (val == S())
      entries_.erase(idx);
    else
      entries_[idx] = std::move(val);
  }

  void add(std::vector<int> idx, const S& val) {
    std::sort(idx.begin(), idx.end());
    set(idx, get(idx) + val);
  }

  bool squarefree_support() const {
    for (const auto& [key, val] : entries_)
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) return false;
    return true;
  }

  friend bool operator==(const SymTensorT& a, const SymTensorT& b) {
    return a.order_ == b.order_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  int order_, dim_;
  std::map<std::vector<int>, S> entries_;
};

using SymTensor = SymTensorT<Rational>;

/// 0/1 adjacency tensor, unscaled (no 1/(k-1)! factor).
SymTensor adjacency_tensor(const Hypergraph& g);

/// (Tx)_i = sum over all permutations of stored keys of the matching
/// entry times the product of the trailing coordinates.
template <typename S>
std::vector<S> tensor_apply(const SymTensor& t, const std::vector<S>& x) {
  if (static_cast<int>(x.size()) != t.dim())
    throw std::invalid_argument("apply: dimension mismatch");
  std::vector<S> y(t.dim(), S());
  for (const auto& [key, val] : t.entries()) {
    std::vector<int> perm = key;
    do {
      S prod{S(val)};
      for (size_t i = 1; i < perm.size(); ++i) prod *= x[perm[i]];
      y[perm[0]] += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return y;
}

/// All sorted order-tuples (repeats allowed) over {0..dim-1}.
std::vector<std::vector<int>> sorted_multisets(int dim, int order);

/// Q T Q^T by the full conjugation sum, re-symmetrized onto sorted keys.
SymTensor conjugate(const RatMatrix& q, const SymTensor& t);

/// Single raw entry of Q T Q^T at an arbitrary (possibly unsorted) index
/// tuple, straight from the defining sum. Used as a symmetry audit.
Rational raw_conjugate_entry(const RatMatrix& q, const SymTensor& t,
                             const std::vector<int>& idx);

/// Permanent fast path: valid only when T has square-free support; each
/// output entry is a sum of per(Q|_{I x J}) over support subsets J.
SymTensor conjugate_squarefree(const RatMatrix& q, const SymTensor& t);

/// Recovers the hypergraph iff every stored entry is exactly 1 on a
/// square-free key.
std::optional<Hypergraph> as_adjacency(const SymTensor& t,
                                       const std::vector<std::string>& labels);

struct SimilarityCertificate {
  bool orthogonal = false;
  bool conjugation_equal = false;
  /// Sorted key of the first differing entry, when conjugation fails.
  std::optional<std::vector<int>> first_mismatch;
  bool ok() const { return orthogonal && conjugation_equal; }
};

/// The proof obligation for E-cospectrality: Q orthogonal and
/// Q^T A_G Q = A_H, both exact.
SimilarityCertificate certify_similarity(const RatMatrix& q, const Hypergraph& g,
                                         const Hypergraph& h);

}  // namespace cospec

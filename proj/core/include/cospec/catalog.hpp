#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/matrix.hpp"

#include <string>
#include <vector>

namespace cospec {

/// The switching matrix families: the four indecomposable level-2 row-sum-1
/// matrices plus the GM and WQH families of general level.
struct SwitchFamily {
  enum class Tag { GM4, GMn, SG, FANO, CUBE, WQH };
  Tag tag;
  int param = 0;  // GMn: n (even >= 4); SG: n = 2m (odd m >= 3); WQH: p >= 1

  /// Dimension of the built matrix.
  int dim() const;
  std::string name() const;

  /// Parses "gm4", "gm:<n>", "sg:<n>", "fano", "cube", "wqh:<p>".
  static SwitchFamily parse(const std::string& s);
};

/// Exact switching matrix of the family; always passes
/// is_regular_orthogonal with row sum 1.
RatMatrix build(const SwitchFamily& f);

/// The equivalent sun-graph matrix used elsewhere in the literature,
/// (1/2) block-circulant(Y, O, ..., O, J, O); a row/column permutation of
/// build(sg:n).
RatMatrix build_sg_alternative(int n);

/// Q = R ⊕ I_{n-s}.
RatMatrix embed(const RatMatrix& r, int n);

/// One member of V(Q): a 0/1 vector and its 0/1 image under Q^T.
struct VqPair {
  std::vector<int> v;      // 0/1 entries
  std::vector<int> image;  // Q^T v, also 0/1
};

/// All v in {0,1}^s with R^T v again 0/1; equals B^1_R. Dimension <= 20.
std::vector<VqPair> vq(const RatMatrix& r);

/// The Fano plane data: the two line orbits under the 7-cycle, as 3-graphs
/// F1, F2 on vertices v1..v7 (indices 0..6), plus the individual lines and
/// ovals.
struct FanoData {
  Hypergraph f1, f2;
  std::vector<std::vector<int>> lines;  // lines[i] = l_i, sorted indices
  std::vector<std::vector<int>> ovals;  // ovals[i] = O_i
};

FanoData fano_lines_and_ovals();

}  // namespace cospec

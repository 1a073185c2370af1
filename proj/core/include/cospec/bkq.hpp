#pragma once

#include "cospec/catalog.hpp"
#include "cospec/hypergraph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospec {

/// A member of B^k_R together with its image t(G), so that
/// R^T A_G R = A_{t(G)} exactly.
struct BkqPair {
  Hypergraph g, tg;

  friend bool operator==(const BkqPair& a, const BkqPair& b) {
    return a.g == b.g && a.tg == b.tg;
  }
  friend bool operator<(const BkqPair& a, const BkqPair& b) {
    if (a.g < b.g) return true;
    if (b.g < a.g) return false;
    return a.tg < b.tg;
  }
};

struct BkqOptions {
  /// DFS node limit; <= 0 means unlimited.
  long long budget_nodes = 0;
  /// Use cyclic symmetry reduction when R is circulant.
  bool symmetry = true;
};

/// Raised when the node budget runs out; carries whatever was found so the
/// caller can report a partial result explicitly.
struct BkqBudgetExhausted : std::runtime_error {
  explicit BkqBudgetExhausted(std::vector<BkqPair> found)
      : std::runtime_error("bkq enumeration: node budget exhausted"),
        partial(std::move(found)) {}
  std::vector<BkqPair> partial;
};

/// t(G) when R^T A_G R is again an adjacency tensor, nullopt otherwise.
std::optional<Hypergraph> verify_membership(const RatMatrix& r,
                                            const Hypergraph& g);

/// Complete enumeration of B^k_R by pruned DFS over edge indicators
/// (k = 1 is a direct 2^s vector scan). Sorted, deterministic output.
std::vector<BkqPair> enumerate_bkq(const RatMatrix& r, int k,
                                   const BkqOptions& opts = {});

/// Checks the enumeration against the closed-form description of one of
/// the five catalogued cases:
///   1: gm, k=1 (param = s, even)      2: wqh, k=1 (param = p)
///   3: fano, k=1                      4: fano, k=3
///   5: sun, k=1 (param = m, odd)
struct Prop4Report {
  std::vector<BkqPair> found;
  std::vector<BkqPair> missing;     // in the closed form, not found
  std::vector<BkqPair> unexpected;  // found, not in the closed form
  bool ok() const { return missing.empty() && unexpected.empty(); }
};

Prop4Report reproduce_prop4(int part, int param = 0,
                            const BkqOptions& opts = {});

/// The closed-form pair list for reproduce_prop4, exposed for testing.
std::vector<BkqPair> prop4_closed_form(int part, int param = 0);

}  // namespace cospec

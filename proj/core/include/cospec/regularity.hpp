#pragma once

#include "cospec/hypergraph.hpp"
#include "cospec/quadext.hpp"
#include "cospec/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cospec {

using QuadVector = std::vector<QuadExt>;

/// How an irregularity witness was constructed.
enum class WitnessSource {
  /// e_u + i e_v for a pair u, v not covered by any common edge. Covers
  /// isolated pairs, disconnected inputs and every k >= 4 hypergraph on
  /// at least two vertices.
  NonadjacentPair,
  /// Cube-root-of-unity vector 1, w, w^2 supported on a missing triple of
  /// an otherwise densely covered 3-graph (the completion of the K4-minus-
  /// an-edge pattern vector).
  MissingTriple,
  /// k = 2: x = s*y1 + i*y2 from two orthogonal rational null vectors,
  /// with s in Q or Q(sqrt m) matching the norms.
  NullPair,
};

std::string to_string(WitnessSource s);

struct IrregularityWitness {
  QuadVector x;
  WitnessSource source;
  /// The vertices the construction hinged on: the nonadjacent pair, the
  /// missing triple, or empty for the null-pair route.
  std::vector<int> anchor;
};

/// Positive certificate accompanying a "regular" verdict.
struct StructuralProof {
  int k = 0;
  /// k = 2: nullity of the adjacency matrix (0 or 1 when regular).
  int nullity = -1;
  /// k = 3: component census.
  int component_count = -1;
  bool all_components_complete = false;
  /// k >= 4: fewer than two vertices is the only regular shape.
  int n = -1;
};

struct RegularityVerdict {
  bool regular = false;
  std::optional<StructuralProof> proof;        // set when regular
  std::optional<IrregularityWitness> witness;  // set when irregular and a
                                               // constructive route exists
  /// True when the verdict came from the Groebner zero-dimensionality
  /// test on the ideal (A x, x^T x) rather than a combinatorial rule.
  bool algebraic = false;
};

/// Decides whether A_G admits a nonzero x with A_G x = 0 and x^T x = 0
/// ("irregular") and produces a certificate either way.
///
///   k = 2: regular iff nullity(A_G) <= 1 (null pair witness otherwise).
///   k = 3: irregular whenever some pair of vertices shares no edge, or a
///          missing triple carries a cube-root witness; regular when
///          connected and complete (or n <= 1). Anything else falls back
///          to an exact Groebner test of whether the solution variety is
///          {0}; on up to 5 vertices the fallback never reports irregular
///          (the two constructions are exhaustive there), and larger
///          algebraically-irregular inputs get a verdict without an
///          explicit witness vector.
///   k >= 4: regular iff n <= 1.
///
/// Throws std::invalid_argument for k = 1 and GroebnerBudgetExhausted if
/// the fallback runs out of budget.
RegularityVerdict decide_regularity(const Hypergraph& g);

/// The witness-construction half on its own; throws std::logic_error if
/// no construction applies. The result always passes verify_witness.
IrregularityWitness build_witness(const Hypergraph& g);

/// Exact check over Q(i, sqrt m): apply(A_G, x) = 0, sum x_i^2 = 0 (the
/// bilinear square sum, not the Hermitian norm) and x != 0.
bool verify_witness(const Hypergraph& g, const QuadVector& x);

}  // namespace cospec

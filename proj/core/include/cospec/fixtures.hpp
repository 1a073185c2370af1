#pragma once

#include "cospec/catalog.hpp"
#include "cospec/hypergraph.hpp"
#include "cospec/switching.hpp"

#include <string>
#include <vector>

namespace cospec {

/// An embedded worked example: a pair (G, H) together with the matrix
/// family whose block-diagonal extension conjugates A_G onto A_H.
struct Fixture {
  std::string name;
  Hypergraph g, h;
  SwitchFamily family;
  /// Vertices of G carrying the switching matrix, in printed label order;
  /// the row order may still require the mapping search below.
  std::vector<int> c;
};

/// Names: "fano" (10 vertices, k=3), "sun" (12 vertices, k=3),
/// "cube" (11 vertices, k=4).
Fixture fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Standalone named hypergraphs: the three irregularity patterns "g1",
/// "g2", "g3" and the two Fano planes "f1", "f2".
Hypergraph named_hypergraph(const std::string& name);
std::vector<std::string> named_hypergraph_names();

struct FixtureCertificate {
  SimilarityCertificate cert;
  /// mapping[i] = vertex of G matched to row i of R.
  std::vector<int> mapping;
  RatMatrix q;
};

/// Builds Q = R placed on the fixture's switching set and certifies
/// Q^T A_G Q = A_H, searching over label-to-row assignments where the
/// printed order does not work directly.
FixtureCertificate verify_fixture(const std::string& name);

}  // namespace cospec

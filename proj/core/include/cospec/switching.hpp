#pragma once

#include "cospec/bkq.hpp"
#include "cospec/catalog.hpp"
#include "cospec/hypergraph.hpp"
#include "cospec/tensor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cospec {

/// One replaced link: the edges of G meeting C over A are E(link) ⊙ {A}
/// and become E(image) ⊙ {A} in H. link/image live on C positions.
struct LinkRecord {
  std::vector<int> a;  // global vertex indices, sorted
  Hypergraph link, image;
};

struct SwitchPlan {
  SwitchFamily family;
  std::vector<int> c;  // ordered: c[i] is matched to row i of R
  std::vector<LinkRecord> replacements;
};

struct SwitchViolation {
  std::vector<int> a;  // the offending A-set (or edge, for shape checks)
  std::string reason;
};

/// Thrown when the hypotheses fail; lists every violating A-set.
struct SwitchError : std::runtime_error {
  explicit SwitchError(std::vector<SwitchViolation> v)
      : std::runtime_error(v.empty() ? "switch: hypothesis violated"
                                     : "switch: " + v.front().reason),
        violations(std::move(v)) {}
  std::vector<SwitchViolation> violations;
};

struct SwitchResult {
  Hypergraph h;
  SwitchPlan plan;
  RatMatrix q;  // R placed on C, identity elsewhere
  SimilarityCertificate cert;
};

/// n x n matrix acting as R on the listed vertices (row i of R on c[i])
/// and as the identity elsewhere.
RatMatrix place_on(const RatMatrix& r, const std::vector<int>& c, int n);

/// The general construction: every link of G at C must lie in B^r_R; H is
/// assembled from the image links. The certificate always passes when the
/// preconditions hold — a failing certificate indicates a bug.
SwitchResult switch_hypergraph(const Hypergraph& g, const std::vector<int>& c,
                               const SwitchFamily& family);

/// Specialization with R = gm:|C|: every edge meets C at most once, and
/// every (k-1)-tuple of D has 0, |C|/2 or |C| neighbours in C; tuples with
/// |C|/2 neighbours have them complemented.
SwitchResult gm_switch(const Hypergraph& g, const std::vector<int>& c);

/// Specialization with R = wqh:p on C1 ∪ C2: tuples with neighbourhood
/// exactly C1 (resp. C2) have it swapped; balanced tuples are untouched.
SwitchResult wqh_switch(const Hypergraph& g, const std::vector<int>& c1,
                        const std::vector<int>& c2);

/// Specialization with R = sg:2m on the paired blocks C1..Cm: transversal
/// neighbourhoods shift back one block, even neighbourhoods are fixed,
/// rank-2 links must be in B^2.
SwitchResult sun_switch(const Hypergraph& g,
                        const std::vector<std::vector<int>>& blocks);

/// Specialization with R = fano, k = 3: the induced 3-graph on C is empty
/// or the line plane (mapped to the oval plane); pair neighbourhoods are
/// ∅, C, a line or a co-line, mapped per the oval correspondence.
SwitchResult fano_switch(const Hypergraph& g, const std::vector<int>& c);

}  // namespace cospec

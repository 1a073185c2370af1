#pragma once

#include "cospec/fixtures.hpp"
#include "cospec/hypergraph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/quadext.hpp"
#include "cospec/regularity.hpp"
#include "cospec/tensor.hpp"

#include "json.hpp"

#include <string>

namespace cospec {

using nlohmann::json;

/// {"k": int, "labels": [string], "edges": [[label...]]}, edges sorted.
json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const json& j);

/// Accepts the JSON form above or the compact text "k; a,b,c; d,e,f"
/// (vertices appear in order of first mention).
Hypergraph parse_hypergraph(const std::string& text);

/// Array of rows, each an array of "p/q" strings.
json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

/// {"k": int, "n": int, "entries": [{"idx": [int], "val": "p/q"}]}.
json to_json(const SymTensor& t);
SymTensor tensor_from_json(const json& j);

/// Q(i, sqrt m) component form {"a","b","c","d","m"}.
json to_json(const QuadExt& q);

json to_json(const SimilarityCertificate& c);
json to_json(const RegularityVerdict& v);
json to_json(const FixtureCertificate& c, const Fixture& f);

/// Coefficient list, constant term first, "p/q" strings.
json to_json(const UniPoly& p);

}  // namespace cospec

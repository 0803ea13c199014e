// Copyright 2026 The shiftgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Automorphism group orders: exact counts through the twin quotient, an
// independent backtracking oracle, and the closed-form predictions.

#ifndef SHIFTGRAPH_AUTOMORPHISM_HPP_
#define SHIFTGRAPH_AUTOMORPHISM_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftgraph/graph.hpp"
#include "shiftgraph/structure.hpp"
#include "shiftgraph/types.hpp"

namespace shiftgraph {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);

struct SymFactor {
  std::uint64_t degree = 0;
  std::uint64_t multiplicity = 0;
  friend bool operator==(const SymFactor&, const SymFactor&) = default;
};

// 2^z2_multiplicity * prod (degree!)^multiplicity.
struct GroupDescriptor {
  std::vector<SymFactor> sym_factors;
  std::uint64_t z2_multiplicity = 0;
  BigInt order = 1;

  void add_sym(std::uint64_t degree, std::uint64_t multiplicity = 1);
  void add_z2(std::uint64_t count = 1);
  // e.g. "Z2 x S20 x (S3)^2"; "1" for the trivial group.
  std::string to_string() const;
};

// Automorphisms of a vertex-coloured graph (colours must be preserved).
BigInt coloured_aut_order(const Graph& g, const std::vector<std::uint64_t>& colours);

struct AutByClasses {
  BigInt order;
  GroupDescriptor class_part;  // prod over classes of S_|class|
  BigInt quotient_aut_order;   // size-labelled quotient
  std::size_t quotient_nodes = 0;
};

struct AutOptions {
  std::size_t max_quotient_nodes = 20000;
  std::size_t brute_vertex_cap = 60;
};

AutByClasses aut_order_via_classes(const Graph& g, const AutOptions& options = {});

// Plain backtracking over vertex bijections (orbit-stabiliser counting).
// BudgetExceeded above options.brute_vertex_cap vertices.
BigInt brute_aut_order(const Graph& g, const AutOptions& options = {});

struct PredictionOptions {
  // Smallest n at which the sigma(a, 1), a >= 3 formula is applied.
  // Zero means 3a + 4.
  std::uint32_t sigma_a1_min_n = 0;
};

// Closed-form group for G(n, type): sigma(1, b) (order two), 11322 (n >= 5,
// extra Z2 at n = 7), 1113222 (n >= 12) and sigma(a, 1) with a >= 3.
// Unsupported for other types, OutOfStatedRange outside a formula's range.
GroupDescriptor predicted_order(std::uint32_t n, const TypePattern& type,
                                const PredictionOptions& options = {});

enum class Verdict { kMatch, kDiscrepancy, kNoFormula };

std::string_view verdict_name(Verdict v);

struct AutComparison {
  std::uint32_t n = 0;
  TypePattern type = sigma(1, 1);
  AutByClasses computed;
  std::optional<BigInt> brute;
  std::optional<GroupDescriptor> predicted;
  std::string formula;  // which closed form was used
  std::string note;     // why there is no formula, or what differs
  Verdict verdict = Verdict::kNoFormula;
};

AutComparison compare_aut(std::uint32_t n, const TypePattern& type, const AutOptions& options = {},
                          const PredictionOptions& prediction = {});

}  // namespace shiftgraph

#endif  // SHIFTGRAPH_AUTOMORPHISM_HPP_

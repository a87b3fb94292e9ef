#pragma once

#include <json.hpp>

#include "hopfchrom/graph_alg.hpp"
#include "hopfchrom/oracle.hpp"

namespace hopfchrom {

using Json = nlohmann::ordered_json;

// Graphs: {"n": int, "edges": [[i, j], ...]}.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j, int vertex_cap = 0);

// Permutations: image arrays.
Json perm_to_json(const Perm& p);
Perm perm_from_json(const Json& j);

Json rational_to_json(const Rational& r);  // int, or "p/q" string
Json cyclotomic_to_json(const Cyclotomic& c);

// Symmetric functions: [{"partition": [...], "coeff": int}, ...], terms by
// ascending degree then descending-lex partition (deterministic bytes).
Json symfunc_to_json(const SymFunc& f);
Json polynomial_to_json(const IntPolynomial& p);

// Character tables: classes (representative, size, element order) and rows as
// cyclotomic coefficient vectors with conductor.
Json character_table_to_json(const CharacterTable& t);

// Functions F: {"young": name, "n": int, "labels": [{"point": [...], "label": int}]}.
Json function_to_json(const HopfInstance& inst, const FunctionF& f);
FunctionF function_from_json(const HopfInstance& inst, const Json& j);

// Hopf elements: [{"F": {...}, "irrep": int, "coeff": int}, ...].
Json hopf_element_to_json(const HopfInstance& inst, const HopfElement& a);
HopfElement hopf_element_from_json(const HopfInstance& inst, const Json& j);
Json tensor_element_to_json(const HopfInstance& inst, const TensorElement& a);

// Instance selectors: "young=subsets:2,H=Z2".
std::pair<YoungSetPtr, AbelianGroup> parse_instance_selector(const std::string& text);

}  // namespace hopfchrom

// SPDX-FileCopyrightText: (c) 2026 The monoseq authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "monoseq/counting.hpp"
#include "monoseq/decomposition.hpp"
#include "monoseq/lemmas.hpp"
#include "monoseq/perm_core.hpp"
#include "monoseq/permutation.hpp"
#include "monoseq/poset.hpp"
#include "monoseq/search.hpp"
#include "monoseq/structure.hpp"

// JSON views of the core types. Elements, positions and values are 1-based.

namespace monoseq::json_io {

using Json = nlohmann::ordered_json;

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json count(const BigCount& value);
Json rational(const Rational& value);

Permutation permutation_from_json(const Json& j);
Poset poset_from_json(const Json& j);

using Input = std::variant<Permutation, Poset>;
/// JSON with "relation" or "witness" is a poset; JSON with "values" or a
/// bare array is a permutation; anything else is parsed as plain text.
Input parse_input(const std::string& text);

Json to_json(const Permutation& p);
Json to_json(const Poset& p);
Json to_json(const ParamSplit& split);
Json to_json(const CountReport& report);
Json to_json(const LengthProfile& profile);
Json to_json(const Decomposition& dec);
Json to_json(const IndexSets& sets);
Json to_json(const PruneResult& result);
Json to_json(const ChainCover& cover);
Json to_json(const ExampleReport& report);
Json to_json(const SetFamily& family);
Json to_json(const SignatureBoundReport& report);
Json to_json(const SurplusBoundReport& report);
Json to_json(const LargeSurplusReport& report);
Json to_json(const SearchResult& result);
Json to_json(const TheoremReport& report);
Json to_json(const PosetSearchResult& result);

SetFamily set_family_from_json(const Json& j);
FunctionTable function_table_from_json(const Json& j);
LabeledTree tree_from_json(const Json& j);

} // namespace monoseq::json_io

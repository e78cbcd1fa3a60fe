#pragma once

#include <string>

#include "tree.hpp"

namespace dart2 {

/// Tree file format: a JSON document
///   { "m": <int>, "max_children": <int>, "num_layers": <int>,
///     "layers": [ <layer 2>, ..., <layer L> ] }
/// where each layer is a list of nodes and each node is the list of its
/// 1-based child indices into the previous layer. Layer 1 (the m
/// singletons) is implicit.
std::string tree_to_json(const AggregationTree& tree);

/// Parses and validates; throws DomainError on malformed input or
/// invariant violations.
AggregationTree tree_from_json(const std::string& text);

void save_tree(const AggregationTree& tree, const std::string& path);
AggregationTree load_tree(const std::string& path);

}  // namespace dart2

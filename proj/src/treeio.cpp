#include "treeio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace dart2 {

std::string tree_to_json(const AggregationTree& tree) {
  nlohmann::json doc;
  doc["m"] = tree.m;
  doc["max_children"] = tree.max_children;
  doc["num_layers"] = tree.num_layers();
  nlohmann::json layers = nlohmann::json::array();
  for (int layer = 2; layer <= tree.num_layers(); ++layer) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : tree.layers[layer - 1]) {
      nlohmann::json children = nlohmann::json::array();
      for (std::size_t c : node.children) {
        children.push_back(c + 1);
      }
      nodes.push_back(std::move(children));
    }
    layers.push_back(std::move(nodes));
  }
  doc["layers"] = std::move(layers);
  return doc.dump(2) + "\n";
}

AggregationTree tree_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("tree file: JSON parse error: ") + e.what());
  }
  AggregationTree tree;
  try {
    tree.m = doc.at("m").get<std::size_t>();
    tree.max_children = doc.at("max_children").get<int>();
    int num_layers = doc.at("num_layers").get<int>();
    const auto& layers = doc.at("layers");
    if (!layers.is_array() || static_cast<int>(layers.size()) != num_layers - 1) {
      throw DomainError("tree file: expected " + std::to_string(num_layers - 1) +
                        " explicit layers");
    }
    tree.layers.emplace_back();
    for (std::size_t i = 0; i < tree.m; ++i) {
      tree.layers[0].push_back(TreeNode{{}, {i}});
    }
    for (const auto& layer : layers) {
      const auto& prev = tree.layers.back();
      std::vector<TreeNode> nodes;
      for (const auto& children : layer) {
        TreeNode node;
        for (const auto& c : children) {
          std::size_t child = c.get<std::size_t>();
          if (child < 1 || child > prev.size()) {
            throw DomainError("tree file: child index " + std::to_string(child) +
                              " out of range for previous layer of size " +
                              std::to_string(prev.size()));
          }
          node.children.push_back(child - 1);
          node.members.insert(node.members.end(), prev[child - 1].members.begin(),
                              prev[child - 1].members.end());
        }
        std::sort(node.members.begin(), node.members.end());
        nodes.push_back(std::move(node));
      }
      tree.layers.push_back(std::move(nodes));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("tree file: ") + e.what());
  }
  auto violations = validate_tree(tree);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "tree file: invalid tree:";
    for (const auto& v : violations) {
      msg << "\n  - " << v;
    }
    throw DomainError(msg.str());
  }
  return tree;
}

void save_tree(const AggregationTree& tree, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DomainError("save_tree: cannot open " + path + " for writing");
  }
  out << tree_to_json(tree);
  if (!out) {
    throw DomainError("save_tree: write failed for " + path);
  }
}

AggregationTree load_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError("load_tree: cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return tree_from_json(buf.str());
}

}  // namespace dart2

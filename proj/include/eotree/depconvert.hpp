#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eotree/tree.hpp"

namespace eotree {

// Head percolation directive for one category base: scan direction plus an
// ordered priority list of child bases. Categories without a directive use
// rightmost-non-PUNCT.
struct HeadDirective {
  enum class Direction { Leftmost, Rightmost };
  Direction direction = Direction::Rightmost;
  std::vector<std::string> priorities;

  bool operator==(const HeadDirective&) const = default;
};

struct HeadRules {
  std::map<std::string, HeadDirective> directives;

  static HeadRules defaults();
  static HeadRules load_tsv(const std::filesystem::path& path);
  static HeadRules parse_tsv(std::string_view text);

  bool operator==(const HeadRules&) const = default;
};

// Function-tag -> arc-label map. Unmapped tags fall back to the lowercased
// tag name; tagless dependents get `plain`.
struct LabelMap {
  std::map<std::string, std::string> labels;
  std::string plain = "dep";
  std::string punct = "punct";
  std::string root = "root";

  static LabelMap defaults();
  static LabelMap load_tsv(const std::filesystem::path& path);
  static LabelMap parse_tsv(std::string_view text);

  std::string for_tag(const std::string& tag) const;

  bool operator==(const LabelMap&) const = default;
};

struct DepNode {
  int index = 0;  // 1-based
  std::string surface;
  std::string upos;
  std::optional<MorphSeg> morph;

  bool operator==(const DepNode&) const = default;
};

struct DepArc {
  int dependent = 0;
  int head = 0;  // 0 = root
  std::string label;

  bool operator==(const DepArc&) const = default;
};

struct DepGraph {
  std::vector<DepNode> nodes;
  std::vector<DepArc> arcs;  // sorted by dependent; one per node
  int root = 0;

  bool operator==(const DepGraph&) const = default;
};

// Index of the head child of an internal node.
std::size_t find_head(const SyntaxTree& node, const HeadRules& rules);

DepGraph to_dependency(const SyntaxTree& tree, const HeadRules& rules = HeadRules::defaults(),
                       const LabelMap& labels = LabelMap::defaults());

std::string emit_dependencies(const DepGraph& graph, const std::string& sent_id,
                              const std::string& text);

struct ParsedDeps {
  std::string sent_id;
  std::string text;
  DepGraph graph;

  bool operator==(const ParsedDeps&) const = default;
};

std::vector<ParsedDeps> read_dependencies(std::string_view text);

}  // namespace eotree

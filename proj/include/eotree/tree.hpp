#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eotree/diagnostics.hpp"
#include "eotree/morph.hpp"

namespace eotree {

enum class Dialect { Sejong, PennKorean, Kaist, Normalized };

std::string to_string(Dialect d);
std::optional<Dialect> dialect_from_string(std::string_view s);

// Constituent label: base category plus ordered function tags,
// e.g. "NP-SBJ" -> base NP, tags [SBJ].
struct CategoryLabel {
  std::string base;
  std::vector<std::string> function_tags;

  static CategoryLabel parse(std::string_view text);
  std::string str() const;

  bool operator==(const CategoryLabel&) const = default;
};

// Leaf payload. Before morph resolution `surface` holds the verbatim token
// (e.g. 프랑스/NNP+의/JKG); afterwards it holds the eojeol and `morph` the
// segmentation. Null elements (*pro*) keep their marker as surface.
struct Terminal {
  std::string surface;
  std::optional<MorphSeg> morph;
  std::optional<std::string> upos;
  bool is_null = false;

  bool operator==(const Terminal&) const = default;
};

class SyntaxTree {
 public:
  SyntaxTree() = default;

  static SyntaxTree leaf(Terminal term);
  static SyntaxTree leaf(std::string surface);
  static SyntaxTree node(CategoryLabel label, std::vector<SyntaxTree> children);
  static SyntaxTree node(std::string_view label, std::vector<SyntaxTree> children);

  bool is_leaf() const { return leaf_; }
  // Internal node whose single child is a leaf.
  bool is_preterminal() const {
    return !leaf_ && children_.size() == 1 && children_[0].is_leaf();
  }

  const Terminal& terminal() const { return term_; }
  Terminal& terminal() { return term_; }
  const CategoryLabel& label() const { return label_; }
  CategoryLabel& label() { return label_; }
  const std::vector<SyntaxTree>& children() const { return children_; }
  std::vector<SyntaxTree>& children() { return children_; }

  bool operator==(const SyntaxTree&) const = default;

 private:
  bool leaf_ = true;
  CategoryLabel label_;
  Terminal term_;
  std::vector<SyntaxTree> children_;
};

std::vector<Terminal> yield_terminals(const SyntaxTree& tree);

// Structural comparison over labels, arity and leaf surfaces; ignores
// morph/UPOS annotations (bracketed files do not carry them).
bool same_shape(const SyntaxTree& a, const SyntaxTree& b);

std::size_t node_count(const SyntaxTree& tree);
std::size_t tree_depth(const SyntaxTree& tree);

bool is_upos(std::string_view tag);

// Schema check for one dialect; empty result = conformant.
std::vector<Violation> validate_dialect(const SyntaxTree& tree, Dialect dialect);

}  // namespace eotree

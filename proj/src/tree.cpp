#include "eotree/tree.hpp"

#include <algorithm>
#include <array>

namespace eotree {

std::string to_string(Dialect d) {
  switch (d) {
    case Dialect::Sejong: return "sejong";
    case Dialect::PennKorean: return "penn";
    case Dialect::Kaist: return "kaist";
    case Dialect::Normalized: return "normalized";
  }
  return "?";
}

std::optional<Dialect> dialect_from_string(std::string_view s) {
  if (s == "sejong") return Dialect::Sejong;
  if (s == "penn") return Dialect::PennKorean;
  if (s == "kaist") return Dialect::Kaist;
  if (s == "normalized") return Dialect::Normalized;
  return std::nullopt;
}

CategoryLabel CategoryLabel::parse(std::string_view text) {
  CategoryLabel label;
  std::size_t start = 0;
  bool first = true;
  while (start <= text.size()) {
    std::size_t dash = text.find('-', start);
    std::string_view chunk =
        dash == std::string_view::npos ? text.substr(start) : text.substr(start, dash - start);
    if (chunk.empty())
      throw Error("MalformedLabel", "empty component in label \"" + std::string(text) + "\"");
    if (first) {
      label.base = std::string(chunk);
      first = false;
    } else {
      label.function_tags.emplace_back(chunk);
    }
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  if (label.base.empty())
    throw Error("MalformedLabel", "empty label");
  return label;
}

std::string CategoryLabel::str() const {
  std::string out = base;
  for (const std::string& tag : function_tags) {
    out += '-';
    out += tag;
  }
  return out;
}

SyntaxTree SyntaxTree::leaf(Terminal term) {
  SyntaxTree t;
  t.leaf_ = true;
  t.term_ = std::move(term);
  return t;
}

SyntaxTree SyntaxTree::leaf(std::string surface) {
  Terminal term;
  term.surface = std::move(surface);
  return leaf(std::move(term));
}

SyntaxTree SyntaxTree::node(CategoryLabel label, std::vector<SyntaxTree> children) {
  if (children.empty())
    throw Error("EmptyConstituent", "internal node \"" + label.str() + "\" has no children");
  SyntaxTree t;
  t.leaf_ = false;
  t.label_ = std::move(label);
  t.children_ = std::move(children);
  return t;
}

SyntaxTree SyntaxTree::node(std::string_view label, std::vector<SyntaxTree> children) {
  return node(CategoryLabel::parse(label), std::move(children));
}

namespace {

void collect_yield(const SyntaxTree& t, std::vector<Terminal>& out) {
  if (t.is_leaf()) {
    out.push_back(t.terminal());
    return;
  }
  for (const SyntaxTree& c : t.children()) collect_yield(c, out);
}

}  // namespace

std::vector<Terminal> yield_terminals(const SyntaxTree& tree) {
  std::vector<Terminal> out;
  collect_yield(tree, out);
  return out;
}

bool same_shape(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.terminal().surface == b.terminal().surface;
  if (!(a.label() == b.label())) return false;
  if (a.children().size() != b.children().size()) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (!same_shape(a.children()[i], b.children()[i])) return false;
  return true;
}

std::size_t node_count(const SyntaxTree& tree) {
  if (tree.is_leaf()) return 1;
  std::size_t n = 1;
  for (const SyntaxTree& c : tree.children()) n += node_count(c);
  return n;
}

std::size_t tree_depth(const SyntaxTree& tree) {
  if (tree.is_leaf()) return 1;
  std::size_t deepest = 0;
  for (const SyntaxTree& c : tree.children()) deepest = std::max(deepest, tree_depth(c));
  return deepest + 1;
}

bool is_upos(std::string_view tag) {
  static const std::array<std::string_view, 17> kUpos = {
      "ADJ", "ADP", "ADV",   "AUX",  "CCONJ", "DET",  "INTJ", "NOUN", "NUM",
      "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};
  return std::find(kUpos.begin(), kUpos.end(), tag) != kUpos.end();
}

namespace {

void check_sejong(const SyntaxTree& t, const std::string& path, std::vector<Violation>& out) {
  if (t.is_leaf()) return;
  bool unary_leaf = t.children().size() == 1 && t.children()[0].is_leaf();
  bool binary_internal = t.children().size() == 2 && !t.children()[0].is_leaf() &&
                         !t.children()[1].is_leaf();
  if (!unary_leaf && !binary_internal)
    out.push_back({ViolationCode::Arity, path,
                   "node " + t.label().str() +
                       " breaks the two-internal-or-one-leaf shape (arity " +
                       std::to_string(t.children().size()) + ")"});
  for (std::size_t i = 0; i < t.children().size(); ++i)
    check_sejong(t.children()[i], path + "." + std::to_string(i), out);
}

void check_functional_free(const SyntaxTree& t, const std::string& path,
                           std::vector<Violation>& out) {
  if (t.is_leaf()) {
    if (!t.terminal().surface.empty() && t.terminal().surface[0] == '+')
      out.push_back({ViolationCode::FunctionalResidue, path,
                     "functional leaf \"" + t.terminal().surface + "\""});
    return;
  }
  if (!t.label().base.empty() && t.label().base[0] == '+')
    out.push_back({ViolationCode::FunctionalResidue, path,
                   "functional label \"" + t.label().str() + "\""});
  for (std::size_t i = 0; i < t.children().size(); ++i)
    check_functional_free(t.children()[i], path + "." + std::to_string(i), out);
}

void check_normalized_schema(const SyntaxTree& t, const std::string& path,
                             std::vector<Violation>& out) {
  if (t.is_leaf()) {
    // Bare leaf reached without a preterminal parent; flagged by caller.
    return;
  }
  if (t.is_preterminal()) {
    const Terminal& term = t.children()[0].terminal();
    if (!is_upos(t.label().base))
      out.push_back({ViolationCode::NotNormalized, path,
                     "preterminal label \"" + t.label().str() + "\" is not a UPOS tag"});
    if (term.upos && *term.upos != t.label().base)
      out.push_back({ViolationCode::NotNormalized, path,
                     "leaf UPOS " + *term.upos + " disagrees with preterminal " +
                         t.label().base});
    if (term.is_null)
      out.push_back({ViolationCode::NullResidue, path,
                     "null element \"" + term.surface + "\" in normalized tree"});
    return;
  }
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    const SyntaxTree& c = t.children()[i];
    std::string cpath = path + "." + std::to_string(i);
    if (c.is_leaf()) {
      if (c.terminal().is_null)
        out.push_back({ViolationCode::NullResidue, cpath,
                       "null element \"" + c.terminal().surface + "\""});
      else
        out.push_back({ViolationCode::NotNormalized, cpath,
                       "leaf \"" + c.terminal().surface + "\" lacks a preterminal parent"});
    } else {
      check_normalized_schema(c, cpath, out);
    }
  }
}

}  // namespace

std::vector<Violation> validate_dialect(const SyntaxTree& tree, Dialect dialect) {
  std::vector<Violation> out;
  switch (dialect) {
    case Dialect::Sejong:
      check_sejong(tree, "0", out);
      check_functional_free(tree, "0", out);
      break;
    case Dialect::PennKorean:
      // Mixed arities are fine; functional marking is not part of the dialect.
      check_functional_free(tree, "0", out);
      break;
    case Dialect::Kaist:
      // Anything goes: "+" leaves and "+" group labels are the dialect.
      break;
    case Dialect::Normalized:
      if (tree.is_leaf()) {
        out.push_back({ViolationCode::NotNormalized, "0", "root is a bare leaf"});
      } else {
        check_normalized_schema(tree, "0", out);
        check_functional_free(tree, "0", out);
      }
      break;
  }
  return out;
}

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::Arity: return "Arity";
    case ViolationCode::UnbalancedBrackets: return "UnbalancedBrackets";
    case ViolationCode::YieldMismatch: return "YieldMismatch";
    case ViolationCode::NullResidue: return "NullResidue";
    case ViolationCode::FunctionalResidue: return "FunctionalResidue";
    case ViolationCode::NotNormalized: return "NotNormalized";
    case ViolationCode::IdOrder: return "IdOrder";
    case ViolationCode::DetokenizeMismatch: return "DetokenizeMismatch";
  }
  return "?";
}

std::string format_violation(const Violation& v) {
  return std::string(to_string(v.code)) + "\t" + v.location + "\t" + v.message;
}

}  // namespace eotree

#pragma once
// Shared fixtures, deterministic random-tree generators and naive reference
// implementations ("oracles") used by both the unit tests and the acceptance
// binary. The oracles trade efficiency for obviousness so that disagreement
// with the library points at a real bug.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eotree/bracketed.hpp"
#include "eotree/depconvert.hpp"
#include "eotree/normalize.hpp"
#include "eotree/tree.hpp"

namespace testutil {

using namespace eotree;

// ---- fixture loading ----

inline std::filesystem::path data_dir() { return EOTREE_DATA_DIR; }
inline std::filesystem::path testdata_dir() { return EOTREE_TESTDATA_DIR; }
inline std::filesystem::path config_dir() { return EOTREE_CONFIG_DIR; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SentenceRecord load_single(const std::filesystem::path& p, Dialect d) {
  BracketedDocument doc = parse_bracketed(slurp(p), d, {});
  if (doc.sentences.size() != 1)
    throw std::runtime_error("expected exactly one sentence in " + p.string());
  return std::move(doc.sentences.front());
}

inline SentenceRecord sejong_fixture() {
  return load_single(data_dir() / "sejong_sample.brackets", Dialect::Sejong);
}
inline SentenceRecord penn_fixture() {
  return load_single(data_dir() / "penn_sample.brackets", Dialect::PennKorean);
}
inline SentenceRecord kaist_fixture() {
  return load_single(data_dir() / "kaist_sample.brackets", Dialect::Kaist);
}
inline std::string kaist_raw() {
  std::string raw = slurp(data_dir() / "kaist_sample.raw");
  while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.pop_back();
  return raw;
}
inline SyntaxTree expected_normalized_sejong() {
  return load_single(testdata_dir() / "sejong_sample_normalized.brackets", Dialect::Normalized)
      .tree;
}
inline std::string golden_joint() {
  return slurp(testdata_dir() / "sejong_sample_expected.joint");
}

// ---- random trees ----

// Generates schema-conformant normalized trees: phrase nodes over UPOS
// preterminals, leaf UPOS matching the preterminal, morphs present, surfaces
// drawn from an alphabet that survives bracketed/joint serialization.
class RandomTreeGen {
 public:
  explicit RandomTreeGen(std::uint32_t seed) : rng_(seed) {}

  SyntaxTree normalized_tree(std::size_t max_leaves = 12) {
    std::size_t leaves = 1 + bounded(max_leaves);
    std::vector<SyntaxTree> pres;
    pres.reserve(leaves);
    for (std::size_t i = 0; i < leaves; ++i) pres.push_back(preterminal(i == 0));
    return SyntaxTree::node("S", partition(pres, 0, pres.size()));
  }

  // Loose trees for the debinarizer: small label alphabet (many parent/child
  // base collisions), bare leaves, no annotation constraints.
  SyntaxTree loose_tree(std::size_t depth = 0) {
    if (depth >= 4 || (depth > 0 && chance(0.35))) return SyntaxTree::leaf(surface());
    std::size_t n = 1 + bounded(3);
    std::vector<SyntaxTree> kids;
    kids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) kids.push_back(loose_tree(depth + 1));
    return SyntaxTree::node(loose_label(), std::move(kids));
  }

 private:
  std::mt19937 rng_;

  std::size_t bounded(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }

  std::string surface() {
    static const std::vector<std::string> syllables = {"가", "나", "다", "라", "마", "바",
                                                       "사", "아", "자", "하", "구", "름"};
    std::size_t len = 1 + bounded(3);
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += syllables[bounded(syllables.size())];
    return s;
  }

  CategoryLabel phrase_label() {
    static const std::vector<std::string> bases = {"S", "NP", "VP", "NML", "AdjP", "AdvP"};
    static const std::vector<std::string> tags = {"SBJ", "AJT", "MOD", "OBJ"};
    CategoryLabel label;
    label.base = bases[bounded(bases.size())];
    if (chance(0.3)) label.function_tags.push_back(tags[bounded(tags.size())]);
    return label;
  }

  CategoryLabel loose_label() {
    static const std::vector<std::string> bases = {"NP", "VP", "S"};
    static const std::vector<std::string> tags = {"SBJ", "MOD"};
    CategoryLabel label;
    label.base = bases[bounded(bases.size())];
    if (chance(0.4)) label.function_tags.push_back(tags[bounded(tags.size())]);
    return label;
  }

  SyntaxTree preterminal(bool force_content) {
    static const std::vector<std::pair<std::string, std::string>> content = {
        {"NOUN", "NNG"}, {"PROPN", "NNP"}, {"VERB", "VV"},
        {"ADJ", "VA"},   {"ADV", "MAG"},   {"DET", "MMD"},
    };
    Terminal term;
    std::string base;
    if (!force_content && chance(0.12)) {
      base = "PUNCT";
      static const std::vector<std::pair<std::string, std::string>> marks = {
          {".", "SF"}, {"!", "SF"}, {"?", "SF"}, {",", "SP"}};
      const auto& [mark, xpos] = marks[bounded(marks.size())];
      term.surface = mark;
      term.morph = MorphSeg{{{mark, xpos}}};
    } else {
      const auto& [upos, xpos] = content[bounded(content.size())];
      base = upos;
      term.surface = surface();
      MorphSeg seg{{{term.surface, xpos}}};
      if (chance(0.4)) seg.morphs.push_back({surface(), chance(0.5) ? "JKS" : "EF"});
      term.morph = std::move(seg);
    }
    term.upos = base;
    SyntaxTree pre = SyntaxTree::node(CategoryLabel{base, {}}, {SyntaxTree::leaf(std::move(term))});
    if (chance(0.12)) pre = SyntaxTree::node(phrase_label(), {std::move(pre)});
    return pre;
  }

  // Splits pres[lo,hi) into 1-4 groups; multi-element groups get a phrase label.
  std::vector<SyntaxTree> partition(std::vector<SyntaxTree>& pres, std::size_t lo,
                                    std::size_t hi) {
    std::size_t count = hi - lo;
    if (count == 1) {
      std::vector<SyntaxTree> one;
      one.push_back(std::move(pres[lo]));
      return one;
    }
    std::size_t groups = 2 + bounded(std::min<std::size_t>(3, count - 1));
    std::set<std::size_t> cutset;
    while (cutset.size() < groups - 1) cutset.insert(lo + 1 + bounded(count - 1));
    std::vector<std::size_t> bounds(cutset.begin(), cutset.end());
    bounds.push_back(hi);
    std::vector<SyntaxTree> out;
    std::size_t prev = lo;
    for (std::size_t bound : bounds) {
      std::vector<SyntaxTree> part = partition(pres, prev, bound);
      if (part.size() == 1)
        out.push_back(std::move(part.front()));
      else
        out.push_back(SyntaxTree::node(phrase_label(), std::move(part)));
      prev = bound;
    }
    return out;
  }
};

// ---- oracle: debinarize ----

inline bool oracle_splice_once(SyntaxTree& t, bool tag_match) {
  if (t.is_leaf()) return false;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    SyntaxTree& c = t.children()[i];
    bool eligible = !c.is_leaf() && c.label().base == t.label().base &&
                    (!tag_match || c.label().function_tags.empty() ||
                     c.label().function_tags == t.label().function_tags);
    if (eligible) {
      std::vector<SyntaxTree> grand = std::move(c.children());
      t.children().erase(t.children().begin() + static_cast<long>(i));
      t.children().insert(t.children().begin() + static_cast<long>(i),
                          std::make_move_iterator(grand.begin()),
                          std::make_move_iterator(grand.end()));
      return true;
    }
  }
  for (SyntaxTree& c : t.children())
    if (oracle_splice_once(c, tag_match)) return true;
  return false;
}

inline SyntaxTree oracle_debinarize(SyntaxTree t, bool tag_match) {
  while (oracle_splice_once(t, tag_match)) {
  }
  return t;
}

// ---- oracle: null stripping ----

inline std::optional<SyntaxTree> oracle_strip_nulls(const SyntaxTree& t,
                                                    const std::vector<std::string>& patterns) {
  if (t.is_leaf()) {
    if (t.terminal().is_null) return std::nullopt;
    for (const std::string& p : patterns)
      if (std::regex_match(t.terminal().surface, std::regex(p))) return std::nullopt;
    return t;
  }
  std::vector<SyntaxTree> kept;
  for (const SyntaxTree& c : t.children())
    if (auto r = oracle_strip_nulls(c, patterns)) kept.push_back(std::move(*r));
  if (kept.empty()) return std::nullopt;
  return SyntaxTree::node(t.label(), std::move(kept));
}

// ---- oracle: dependency conversion ----

struct OracleArcs {
  // dependent (1-based) -> {head, label}; head 0 is the root arc.
  std::map<int, std::pair<int, std::string>> arcs;
};

inline bool oracle_punct_unit(const SyntaxTree& t) {
  if (t.is_leaf()) return t.terminal().upos && *t.terminal().upos == "PUNCT";
  return t.is_preterminal() && t.label().base == "PUNCT";
}

inline std::size_t oracle_head_child(const SyntaxTree& node, const HeadRules& rules) {
  const std::vector<SyntaxTree>& kids = node.children();
  if (kids.size() == 1) return 0;
  HeadDirective directive;
  if (auto it = rules.directives.find(node.label().base); it != rules.directives.end())
    directive = it->second;
  bool left = directive.direction == HeadDirective::Direction::Leftmost;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < kids.size(); ++i)
    order.push_back(left ? i : kids.size() - 1 - i);
  for (const std::string& priority : directive.priorities)
    for (std::size_t i : order)
      if (!kids[i].is_leaf() && kids[i].label().base == priority) return i;
  for (std::size_t i : order)
    if (!oracle_punct_unit(kids[i])) return i;
  return order.front();
}

inline int oracle_percolate(const SyntaxTree& t, const HeadRules& rules, const LabelMap& labels,
                            int& counter, OracleArcs& out) {
  if (t.is_leaf() || t.is_preterminal()) return ++counter;
  std::size_t head = oracle_head_child(t, rules);
  std::vector<int> kid_heads;
  for (const SyntaxTree& c : t.children())
    kid_heads.push_back(oracle_percolate(c, rules, labels, counter, out));
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i == head) continue;
    const SyntaxTree& c = t.children()[i];
    std::string label;
    if (oracle_punct_unit(c))
      label = labels.punct;
    else if (!c.is_leaf() && !c.label().function_tags.empty())
      label = labels.for_tag(c.label().function_tags.front());
    else
      label = labels.plain;
    out.arcs[kid_heads[i]] = {kid_heads[head], label};
  }
  return kid_heads[head];
}

inline OracleArcs oracle_dependencies(const SyntaxTree& tree, const HeadRules& rules,
                                      const LabelMap& labels) {
  OracleArcs out;
  int counter = 0;
  int root = oracle_percolate(tree, rules, labels, counter, out);
  out.arcs[root] = {0, labels.root};
  return out;
}

inline OracleArcs arcs_of(const DepGraph& graph) {
  OracleArcs out;
  for (const DepArc& arc : graph.arcs) out.arcs[arc.dependent] = {arc.head, arc.label};
  return out;
}

// ---- dependency graph invariants ----

// Returns an empty string when the graph is well-formed, else a description.
inline std::string graph_problems(const DepGraph& graph) {
  std::size_t n = graph.nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    if (graph.nodes[i].index != static_cast<int>(i) + 1)
      return "node indices are not 1..n in order";
  if (graph.arcs.size() != n) return "expected one arc per token";
  std::vector<int> head(n + 1, -1);
  std::vector<std::string> label(n + 1);
  int roots = 0;
  for (const DepArc& arc : graph.arcs) {
    if (arc.dependent < 1 || arc.dependent > static_cast<int>(n)) return "arc dependent out of range";
    if (arc.head < 0 || arc.head > static_cast<int>(n)) return "arc head out of range";
    if (head[arc.dependent] != -1) return "token has two heads";
    if (arc.dependent == arc.head) return "token is its own head";
    head[arc.dependent] = arc.head;
    label[arc.dependent] = arc.label;
    if (arc.head == 0) {
      ++roots;
      if (arc.label != "root") return "root arc label is not \"root\"";
      if (arc.dependent != graph.root) return "graph.root disagrees with the head-0 arc";
    }
    if (arc.label.empty()) return "empty arc label";
  }
  if (roots != 1) return "expected exactly one root arc";
  // Acyclicity: every token reaches 0 in at most n steps.
  for (std::size_t d = 1; d <= n; ++d) {
    int cur = static_cast<int>(d);
    std::size_t steps = 0;
    while (cur != 0) {
      cur = head[cur];
      if (++steps > n) return "cycle reachable from token " + std::to_string(d);
    }
  }
  // Projectivity: everything strictly between a dependent and its head must
  // be dominated by the head.
  for (std::size_t d = 1; d <= n; ++d) {
    int h = head[d];
    if (h == 0) continue;
    int lo = std::min(static_cast<int>(d), h);
    int hi = std::max(static_cast<int>(d), h);
    for (int k = lo + 1; k < hi; ++k) {
      int cur = k;
      bool dominated = false;
      while (cur != 0) {
        if (cur == h) {
          dominated = true;
          break;
        }
        cur = head[cur];
      }
      if (!dominated)
        return "non-projective arc " + std::to_string(d) + "->" + std::to_string(h);
    }
  }
  return "";
}

// ---- misc helpers ----

// Runs f and reports the Error code it throws ("" when nothing is thrown).
template <class F>
inline std::string thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

inline std::size_t count_null_leaves(const SyntaxTree& t) {
  if (t.is_leaf()) return t.terminal().is_null ? 1 : 0;
  std::size_t n = 0;
  for (const SyntaxTree& c : t.children()) n += count_null_leaves(c);
  return n;
}

inline bool contains_base(const SyntaxTree& t, const std::string& base,
                          const std::vector<std::string>& tags = {}) {
  if (!t.is_leaf()) {
    if (t.label().base == base && (tags.empty() || t.label().function_tags == tags)) return true;
    for (const SyntaxTree& c : t.children())
      if (contains_base(c, base, tags)) return true;
  }
  return false;
}

inline std::vector<std::string> yield_surfaces(const SyntaxTree& t) {
  std::vector<std::string> out;
  for (const Terminal& term : yield_terminals(t)) out.push_back(term.surface);
  return out;
}

}  // namespace testutil

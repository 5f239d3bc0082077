#include "eotree/validate.hpp"

#include <algorithm>
#include <regex>

namespace eotree {

namespace {

void count_brackets(const std::string& s, std::size_t& opens, std::size_t& closes) {
  for (char c : s) {
    if (c == '(') ++opens;
    if (c == ')') ++closes;
  }
}

std::vector<const Terminal*> leaf_pointers(const SyntaxTree& t, std::vector<const Terminal*> acc = {}) {
  if (t.is_leaf()) {
    acc.push_back(&t.terminal());
    return acc;
  }
  for (const SyntaxTree& c : t.children()) acc = leaf_pointers(c, std::move(acc));
  return acc;
}

}  // namespace

std::vector<Violation> check_normalized(const JointSentence& sentence, const SyntaxTree& tree,
                                        const std::vector<std::string>& null_patterns) {
  std::vector<Violation> out;

  // Column-level bracket balance: net depth stays positive until the last row.
  long depth = 0;
  for (std::size_t i = 0; i < sentence.rows.size(); ++i) {
    std::size_t opens = 0, closes = 0;
    count_brackets(sentence.rows[i].lhs, opens, closes);
    count_brackets(sentence.rows[i].rhs, opens, closes);
    depth += static_cast<long>(opens) - static_cast<long>(closes);
    if (depth <= 0 && i + 1 < sentence.rows.size()) {
      out.push_back({ViolationCode::UnbalancedBrackets, sentence.rows[i].id,
                     "bracket depth drops to " + std::to_string(depth) + " before the last row"});
      break;
    }
  }
  if (depth != 0)
    out.push_back({ViolationCode::UnbalancedBrackets, sentence.sent_id,
                   "net bracket depth " + std::to_string(depth) + " at end of sentence"});

  // Tree-level schema.
  for (Violation v : validate_dialect(tree, Dialect::Normalized)) out.push_back(std::move(v));

  // Row UPOS vs tree preterminals.
  std::vector<const Terminal*> leaves = leaf_pointers(tree);
  if (leaves.size() != sentence.rows.size()) {
    out.push_back({ViolationCode::NotNormalized, sentence.sent_id,
                   "row count " + std::to_string(sentence.rows.size()) +
                       " differs from leaf count " + std::to_string(leaves.size())});
  } else {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const TokenRow& row = sentence.rows[i];
      if (row.upos != "_" && leaves[i]->upos && *leaves[i]->upos != row.upos)
        out.push_back({ViolationCode::NotNormalized, row.id,
                       "row UPOS " + row.upos + " disagrees with tree UPOS " + *leaves[i]->upos});
      if (row.surface != leaves[i]->surface)
        out.push_back({ViolationCode::YieldMismatch, row.id,
                       "row surface \"" + row.surface + "\" differs from tree leaf \"" +
                           leaves[i]->surface + "\""});
    }
  }

  // Null residue over row surfaces.
  std::vector<std::regex> res;
  res.reserve(null_patterns.size());
  for (const std::string& p : null_patterns) res.emplace_back(p);
  for (const TokenRow& row : sentence.rows)
    for (const std::regex& re : res)
      if (std::regex_match(row.surface, re)) {
        out.push_back({ViolationCode::NullResidue, row.id,
                       "surface \"" + row.surface + "\" looks like a null element"});
        break;
      }

  // Functional residue over row surfaces.
  for (const TokenRow& row : sentence.rows)
    if (!row.surface.empty() && row.surface[0] == '+')
      out.push_back({ViolationCode::FunctionalResidue, row.id,
                     "surface \"" + row.surface + "\" keeps a functional marker"});

  // Text line must be the detokenization of the surfaces.
  std::string detok = detokenize(sentence.rows);
  if (detok != sentence.text)
    out.push_back({ViolationCode::DetokenizeMismatch, sentence.sent_id,
                   "text \"" + sentence.text + "\" vs detokenized \"" + detok + "\""});

  return out;
}

void CorpusStats::add(const SyntaxTree& tree) {
  ++sentences;
  struct Walker {
    CorpusStats& stats;
    void walk(const SyntaxTree& t) {
      if (t.is_leaf()) {
        ++stats.tokens;
        return;
      }
      ++stats.label_freq[t.label().str()];
      ++stats.arity_hist[t.children().size()];
      for (const SyntaxTree& c : t.children()) walk(c);
    }
  } walker{*this};
  walker.walk(tree);
  max_depth = std::max(max_depth, tree_depth(tree));
}

void CorpusStats::merge(const CorpusStats& other) {
  sentences += other.sentences;
  tokens += other.tokens;
  for (const auto& [label, n] : other.label_freq) label_freq[label] += n;
  for (const auto& [arity, n] : other.arity_hist) arity_hist[arity] += n;
  max_depth = std::max(max_depth, other.max_depth);
}

std::string CorpusStats::report() const {
  std::string out;
  out += "sentences\t" + std::to_string(sentences) + "\n";
  out += "tokens\t" + std::to_string(tokens) + "\n";
  out += "max_depth\t" + std::to_string(max_depth) + "\n";
  for (const auto& [label, n] : label_freq)
    out += "label\t" + label + "\t" + std::to_string(n) + "\n";
  for (const auto& [arity, n] : arity_hist)
    out += "arity\t" + std::to_string(arity) + "\t" + std::to_string(n) + "\n";
  return out;
}

}  // namespace eotree

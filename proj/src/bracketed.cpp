#include "eotree/bracketed.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace eotree {

CharSubstitutions CharSubstitutions::defaults() {
  CharSubstitutions subs;
  subs.pairs.emplace_back("\\\\", "");      // line-break artifact inside a token
  subs.pairs.emplace_back("·", ".");   // · middle dot
  subs.pairs.emplace_back("⋅", ".");   // ⋅ dot operator
  return subs;
}

std::string CharSubstitutions::apply(std::string_view text) const {
  std::string out(text);
  for (const auto& [from, to] : pairs) {
    if (from.empty()) continue;
    std::size_t pos = 0;
    while ((pos = out.find(from, pos)) != std::string::npos) {
      out.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return out;
}

namespace {

constexpr std::string_view kSentIdHeader = "# sent id = ";
constexpr std::string_view kTextHeader = "# text = ";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool ends_token(char c) { return is_space(c) || c == '(' || c == ')'; }

struct Frame {
  CategoryLabel label;
  std::vector<SyntaxTree> children;
  std::size_t open_pos;
};

}  // namespace

BracketedDocument parse_bracketed(std::string_view raw, Dialect dialect,
                                  const BracketedOptions& options) {
  std::string text = options.substitutions.apply(raw);

  std::vector<std::regex> null_res;
  null_res.reserve(options.null_patterns.size());
  for (const std::string& p : options.null_patterns) null_res.emplace_back(p);
  auto is_null = [&](const std::string& token) {
    for (const std::regex& re : null_res)
      if (std::regex_match(token, re)) return true;
    return false;
  };

  BracketedDocument doc;
  doc.dialect = dialect;
  std::vector<Frame> stack;
  std::optional<std::string> pending_id;
  std::optional<std::string> pending_text;
  bool at_line_start = true;

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      at_line_start = true;
      ++i;
      continue;
    }
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '#' && at_line_start && stack.empty()) {
      std::size_t eol = text.find('\n', i);
      if (eol == std::string::npos) eol = n;
      std::string line = text.substr(i, eol - i);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.rfind(kSentIdHeader, 0) == 0)
        pending_id = line.substr(kSentIdHeader.size());
      else if (line.rfind(kTextHeader, 0) == 0)
        pending_text = line.substr(kTextHeader.size());
      i = eol;
      continue;
    }
    at_line_start = false;
    if (c == '(') {
      std::size_t open_pos = i;
      ++i;
      while (i < n && is_space(text[i])) ++i;
      if (i >= n || text[i] == ')')
        throw ParseError("EmptyConstituent", "empty pair of brackets", open_pos);
      if (text[i] == '(')
        throw ParseError("MissingLabel", "opening bracket without a label", open_pos);
      std::size_t start = i;
      while (i < n && !ends_token(text[i])) ++i;
      Frame frame;
      frame.label = CategoryLabel::parse(text.substr(start, i - start));
      frame.open_pos = open_pos;
      stack.push_back(std::move(frame));
      continue;
    }
    if (c == ')') {
      if (stack.empty())
        throw ParseError("UnbalancedBrackets", "unmatched closing bracket", i);
      Frame frame = std::move(stack.back());
      stack.pop_back();
      if (frame.children.empty())
        throw ParseError("EmptyConstituent",
                         "constituent \"" + frame.label.str() + "\" has no children",
                         frame.open_pos);
      SyntaxTree node = SyntaxTree::node(std::move(frame.label), std::move(frame.children));
      if (stack.empty()) {
        SentenceRecord record;
        record.id = std::move(pending_id);
        record.text = std::move(pending_text);
        record.tree = std::move(node);
        doc.sentences.push_back(std::move(record));
        pending_id.reset();
        pending_text.reset();
      } else {
        stack.back().children.push_back(std::move(node));
      }
      ++i;
      continue;
    }
    // Leaf token.
    std::size_t start = i;
    while (i < n && !ends_token(text[i])) ++i;
    std::string token = text.substr(start, i - start);
    if (stack.empty())
      throw ParseError("StrayToken", "token \"" + token + "\" outside any tree", start);
    Terminal term;
    term.is_null = is_null(token);
    term.surface = std::move(token);
    stack.back().children.push_back(SyntaxTree::leaf(std::move(term)));
  }
  if (!stack.empty())
    throw ParseError("UnbalancedBrackets", "unclosed bracket", stack.back().open_pos);
  return doc;
}

BracketedDocument load_bracketed(const std::filesystem::path& path, Dialect dialect,
                                 const BracketedOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bracketed(ss.str(), dialect, options);
}

namespace {

void write_tree(const SyntaxTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += t.terminal().surface;
    return;
  }
  out += '(';
  out += t.label().str();
  for (const SyntaxTree& c : t.children()) {
    out += ' ';
    write_tree(c, out);
  }
  out += ')';
}

bool all_leaf_children(const SyntaxTree& t) {
  for (const SyntaxTree& c : t.children())
    if (!c.is_leaf()) return false;
  return true;
}

void write_tree_pretty(const SyntaxTree& t, std::string& out, std::size_t indent) {
  if (t.is_leaf()) {
    out += t.terminal().surface;
    return;
  }
  if (t.is_preterminal() || all_leaf_children(t)) {
    write_tree(t, out);
    return;
  }
  out += '(';
  out += t.label().str();
  std::size_t child_indent = indent + t.label().str().size() + 2;
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    if (i == 0) {
      out += ' ';
    } else {
      out += '\n';
      out.append(child_indent, ' ');
    }
    write_tree_pretty(t.children()[i], out, child_indent);
  }
  out += ')';
}

}  // namespace

std::string serialize_tree(const SyntaxTree& tree) {
  std::string out;
  write_tree(tree, out);
  return out;
}

std::string serialize_tree_pretty(const SyntaxTree& tree) {
  std::string out;
  write_tree_pretty(tree, out, 0);
  return out;
}

std::string serialize_bracketed(const BracketedDocument& doc, bool pretty) {
  std::string out;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const SentenceRecord& record = doc.sentences[i];
    if (i) out += '\n';
    if (record.id) out += std::string(kSentIdHeader) + *record.id + "\n";
    if (record.text) out += std::string(kTextHeader) + *record.text + "\n";
    out += pretty ? serialize_tree_pretty(record.tree) : serialize_tree(record.tree);
    out += '\n';
  }
  return out;
}

}  // namespace eotree

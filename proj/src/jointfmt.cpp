#include "eotree/jointfmt.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eotree {

namespace {

constexpr std::string_view kSentIdHeader = "# sent id = ";
constexpr std::string_view kTextHeader = "# text = ";

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

// Split an id into prefix + numeric tail; tail_width = 0 means no tail.
void split_numeric_tail(const std::string& id, std::string& prefix, long& tail,
                        std::size_t& tail_width) {
  std::size_t end = id.size();
  std::size_t start = end;
  while (start > 0 && std::isdigit(static_cast<unsigned char>(id[start - 1]))) --start;
  if (start == end || end - start > 18) {
    prefix = id;
    tail = 0;
    tail_width = 0;
    return;
  }
  prefix = id.substr(0, start);
  tail = std::stol(id.substr(start));
  tail_width = end - start;
}

}  // namespace

std::string token_id(const std::string& sent_id, std::size_t index) {
  std::string prefix;
  long tail = 0;
  std::size_t width = 0;
  split_numeric_tail(sent_id, prefix, tail, width);
  if (width == 0) return sent_id + "-" + std::to_string(index + 1);
  std::string digits = std::to_string(tail + static_cast<long>(index));
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

std::string detokenize(const std::vector<TokenRow>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].upos != "PUNCT") out += ' ';
    out += rows[i].surface;
  }
  return out;
}

namespace {

void emit_rec(const SyntaxTree& t, std::vector<TokenRow>& rows, std::vector<std::string>& pending) {
  if (t.is_preterminal()) {
    const Terminal& term = t.children()[0].terminal();
    if (!term.morph)
      throw Error("MissingMorph", "leaf \"" + term.surface + "\" has no morph segmentation");
    TokenRow row;
    row.surface = term.surface;
    row.morph = term.morph;
    row.upos = t.label().base;
    pending.push_back("(" + t.label().str());
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (i) row.lhs += ' ';
      row.lhs += pending[i];
    }
    pending.clear();
    row.rhs = ")";
    rows.push_back(std::move(row));
    return;
  }
  pending.push_back("(" + t.label().str());
  for (const SyntaxTree& c : t.children()) emit_rec(c, rows, pending);
  rows.back().rhs += ')';
}

}  // namespace

JointSentence emit_joint(const SyntaxTree& tree, const std::string& sent_id,
                         const std::optional<std::string>& text, WarningList* warnings) {
  std::vector<Violation> violations = validate_dialect(tree, Dialect::Normalized);
  if (!violations.empty())
    throw Error("NotNormalized", violations.front().message + " (node " +
                                     violations.front().location + ")");

  JointSentence sentence;
  sentence.sent_id = sent_id;
  std::vector<std::string> pending;
  emit_rec(tree, sentence.rows, pending);
  for (std::size_t i = 0; i < sentence.rows.size(); ++i)
    sentence.rows[i].id = token_id(sent_id, i);
  sentence.text = detokenize(sentence.rows);
  if (text && *text != sentence.text)
    warn(warnings, "text line \"" + *text + "\" differs from detokenized surfaces \"" +
                       sentence.text + "\"; emitting the latter");
  return sentence;
}

std::string write_joint(const JointSentence& sentence) {
  std::string out;
  out += kSentIdHeader;
  out += sentence.sent_id;
  out += '\n';
  out += kTextHeader;
  out += sentence.text;
  out += '\n';
  for (const TokenRow& row : sentence.rows) {
    out += row.id;
    out += '\t';
    out += row.surface;
    out += '\t';
    out += row.morph ? row.morph->str() : "_";
    out += '\t';
    out += row.upos;
    out += '\t';
    out += row.lhs;
    out += '\t';
    out += row.rhs;
    out += '\n';
  }
  return out;
}

std::string write_joint_file(const std::vector<JointSentence>& sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i) out += '\n';
    out += write_joint(sentences[i]);
  }
  return out;
}

namespace {

struct Frame {
  CategoryLabel label;
  std::vector<SyntaxTree> children;
};

}  // namespace

ParsedJoint parse_joint(std::string_view block) {
  ParsedJoint out;
  bool have_id = false;
  bool have_text = false;

  std::vector<Frame> stack;
  std::vector<SyntaxTree> roots;
  std::optional<long> prev_tail;
  std::size_t lineno = 0;

  for (std::string& line : split(block, '\n')) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind(kSentIdHeader, 0) == 0) {
        out.sentence.sent_id = line.substr(kSentIdHeader.size());
        have_id = true;
      } else if (line.rfind(kTextHeader, 0) == 0) {
        out.sentence.text = line.substr(kTextHeader.size());
        have_text = true;
      }
      continue;
    }
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 6)
      throw Error("ColumnCount", "line " + std::to_string(lineno) + " has " +
                                     std::to_string(cols.size()) + " columns, expected 6");
    TokenRow row;
    row.id = cols[0];
    row.surface = cols[1];
    if (cols[2] != "_") row.morph = MorphSeg::parse(cols[2]);
    row.upos = cols[3];
    row.lhs = cols[4];
    row.rhs = cols[5];

    // Sequential-id check over numeric tails.
    std::string prefix;
    long tail = 0;
    std::size_t width = 0;
    split_numeric_tail(row.id, prefix, tail, width);
    if (width > 0) {
      if (prev_tail && tail != *prev_tail + 1)
        throw Error("IdOrder", "token id \"" + row.id + "\" does not continue " +
                                   std::to_string(*prev_tail));
      prev_tail = tail;
    }

    // Openings.
    if (row.lhs.empty())
      throw Error("UnbalancedColumns",
                  "row \"" + row.id + "\" opens no constituent (missing preterminal)");
    for (const std::string& open : split(row.lhs, ' ')) {
      if (open.size() < 2 || open[0] != '(')
        throw Error("UnbalancedColumns", "bad opening \"" + open + "\" in row \"" + row.id + "\"");
      stack.push_back({CategoryLabel::parse(std::string_view(open).substr(1)), {}});
    }

    // The innermost opening is the preterminal; attach the leaf.
    Terminal term;
    term.surface = row.surface;
    term.morph = row.morph;
    term.upos = row.upos == "_" ? stack.back().label.base : row.upos;
    stack.back().children.push_back(SyntaxTree::leaf(std::move(term)));

    // Closings.
    if (row.rhs.empty())
      throw Error("UnbalancedColumns", "row \"" + row.id + "\" has an empty closing column");
    for (char c : row.rhs) {
      if (c != ')')
        throw Error("UnbalancedColumns",
                    "unexpected character '" + std::string(1, c) + "' in closing column");
      if (stack.empty())
        throw Error("UnbalancedColumns", "too many closings at row \"" + row.id + "\"");
      Frame frame = std::move(stack.back());
      stack.pop_back();
      if (frame.children.empty())
        throw Error("UnbalancedColumns", "constituent " + frame.label.str() + " has no children");
      SyntaxTree node = SyntaxTree::node(std::move(frame.label), std::move(frame.children));
      if (stack.empty())
        roots.push_back(std::move(node));
      else
        stack.back().children.push_back(std::move(node));
    }
    out.sentence.rows.push_back(std::move(row));
  }

  if (out.sentence.rows.empty()) throw Error("ColumnCount", "no token rows in block");
  if (!stack.empty())
    throw Error("UnbalancedColumns", std::to_string(stack.size()) + " constituents left open");
  if (roots.size() != 1)
    throw Error("UnbalancedColumns",
                std::to_string(roots.size()) + " root constituents, expected exactly 1");
  out.tree = std::move(roots.front());

  std::vector<Violation> violations = validate_dialect(out.tree, Dialect::Normalized);
  if (!violations.empty())
    throw Error("NotNormalized", violations.front().message + " (node " +
                                     violations.front().location + ")");

  if (!have_id) {
    // Tolerated for hand-written fragments: fall back to the first token id.
    out.sentence.sent_id = out.sentence.rows.front().id;
  }
  if (!have_text) out.sentence.text = detokenize(out.sentence.rows);
  return out;
}

std::vector<ParsedJoint> parse_joint_file(std::string_view text) {
  std::vector<ParsedJoint> out;
  std::vector<std::string> lines = split(text, '\n');
  std::string block;
  bool block_has_rows = false;
  auto flush = [&]() {
    if (block_has_rows) out.push_back(parse_joint(block));
    block.clear();
    block_has_rows = false;
  };
  for (std::string& line : lines) {
    std::string trimmed = line;
    if (!trimmed.empty() && trimmed.back() == '\r') trimmed.pop_back();
    if (trimmed.empty()) {
      flush();
      continue;
    }
    block += trimmed;
    block += '\n';
    if (trimmed[0] != '#') block_has_rows = true;
  }
  flush();
  return out;
}

}  // namespace eotree

#include <doctest.h>

#include "eotree/jointfmt.hpp"
#include "eotree/normalize.hpp"
#include "testutil.hpp"

using namespace eotree;
using testutil::thrown_code;

namespace {

JointSentence normalized_fixture_sentence() {
  SentenceRecord record = testutil::sejong_fixture();
  std::optional<SyntaxTree> out =
      normalize_pipeline(record.tree, Dialect::Sejong, Pipeline{}, record.text);
  REQUIRE(out.has_value());
  return emit_joint(*out, *record.id, record.text);
}

}  // namespace

TEST_CASE("token ids continue the sentence id's numeric tail") {
  CHECK(token_id("BGAA0001-10012", 0) == "BGAA0001-10012");
  CHECK(token_id("BGAA0001-10012", 11) == "BGAA0001-10023");
  // Width is preserved with leading zeros.
  CHECK(token_id("KAIST-0001", 0) == "KAIST-0001");
  CHECK(token_id("KAIST-0001", 10) == "KAIST-0011");
  CHECK(token_id("KAIST-0099", 1) == "KAIST-0100");
  // Overflowing the original width just widens the number.
  CHECK(token_id("X-999", 1) == "X-1000");
  // No numeric tail: append a 1-based counter.
  CHECK(token_id("abc", 0) == "abc-1");
  CHECK(token_id("abc", 4) == "abc-5");
  // Unreasonably long digit runs are treated as text.
  CHECK(token_id("doc9999999999999999999", 0) == "doc9999999999999999999-1");
}

TEST_CASE("detokenize joins with spaces and attaches punctuation") {
  std::vector<TokenRow> rows(3);
  rows[0].surface = "학생이";
  rows[0].upos = "NOUN";
  rows[1].surface = "간다";
  rows[1].upos = "VERB";
  rows[2].surface = ".";
  rows[2].upos = "PUNCT";
  CHECK(detokenize(rows) == "학생이 간다.");
  // Punctuation attaches backwards only: a leading punctuation row gets no
  // leading space, and the following word is space-separated as usual.
  std::vector<TokenRow> lead(2);
  lead[0].surface = "«";
  lead[0].upos = "PUNCT";
  lead[1].surface = "가";
  lead[1].upos = "NOUN";
  CHECK(detokenize(lead) == "« 가");
  CHECK(detokenize({}) == "");
}

TEST_CASE("emit_joint produces the reference output for the sejong fixture") {
  JointSentence sentence = normalized_fixture_sentence();
  CHECK(write_joint(sentence) == testutil::golden_joint());
}

TEST_CASE("emit_joint refuses non-normalized trees") {
  CHECK(thrown_code([] {
          emit_joint(SyntaxTree::node("S", {SyntaxTree::leaf("가")}), "X-1");
        }) == "NotNormalized");
}

TEST_CASE("emit_joint always emits the detokenized text") {
  SentenceRecord record = testutil::sejong_fixture();
  std::optional<SyntaxTree> out =
      normalize_pipeline(record.tree, Dialect::Sejong, Pipeline{}, record.text);
  REQUIRE(out.has_value());
  WarningList warnings;
  JointSentence sentence = emit_joint(*out, "X-1", "아예 다른 텍스트", &warnings);
  CHECK(sentence.text == "프랑스의 세계적인 의상 디자이너 엠마누엘 웅가로가 실내 장식용 직물 디자이너로 나섰다.");
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("differs from detokenized") != std::string::npos);
}

TEST_CASE("parse_joint reconstructs the tree from the golden file") {
  ParsedJoint parsed = parse_joint(testutil::golden_joint());
  CHECK(parsed.sentence.sent_id == "BGAA0001-10012");
  CHECK(parsed.sentence.rows.size() == 12);
  CHECK(same_shape(parsed.tree, testutil::expected_normalized_sejong()));
  // Writing the parsed sentence back is byte-identical.
  CHECK(write_joint(parsed.sentence) == testutil::golden_joint());
}

TEST_CASE("parse_joint tolerates missing headers") {
  std::string block;
  std::istringstream in(testutil::golden_joint());
  std::string line;
  while (std::getline(in, line))
    if (!line.starts_with("#")) block += line + "\n";
  ParsedJoint parsed = parse_joint(block);
  CHECK(parsed.sentence.sent_id == "BGAA0001-10012");  // falls back to the first token id
  CHECK(parsed.sentence.text == detokenize(parsed.sentence.rows));
}

TEST_CASE("parse_joint reads blanked morph and UPOS columns") {
  std::string block =
      "A-1\t학생이\t_\t_\t(S (NP-SBJ (NOUN\t))\n"
      "A-2\t간다\t_\tVERB\t(VP (VERB\t)))\n";
  ParsedJoint parsed = parse_joint(block);
  std::vector<Terminal> yield = yield_terminals(parsed.tree);
  CHECK_FALSE(yield[0].morph.has_value());
  CHECK(*yield[0].upos == "NOUN");  // backfilled from the preterminal label
  CHECK(*yield[1].upos == "VERB");
  CHECK(parsed.sentence.rows[0].upos == "_");  // the row keeps the placeholder
}

TEST_CASE("parse_joint rejects malformed blocks") {
  CHECK(thrown_code([] { parse_joint("A-1\t가\t가/NNG\tNOUN\t(S (NOUN\n"); }) == "ColumnCount");
  CHECK(thrown_code([] { parse_joint("# sent id = X\n\n"); }) == "ColumnCount");  // no rows
  CHECK(thrown_code([] {
          parse_joint("A-1\t가\t가/NNG\tNOUN\t(S (NOUN\t)\nA-3\t나\t나/VV\tVERB\t(VERB\t))\n");
        }) == "IdOrder");
  CHECK(thrown_code([] { parse_joint("A-1\t가\t가/NNG\tNOUN\t\t))\n"); }) == "UnbalancedColumns");
  CHECK(thrown_code([] { parse_joint("A-1\t가\t가/NNG\tNOUN\tNOUN\t)\n"); }) ==
        "UnbalancedColumns");  // opening without '('
  CHECK(thrown_code([] { parse_joint("A-1\t가\t가/NNG\tNOUN\t(S (NOUN\t)x\n"); }) ==
        "UnbalancedColumns");  // stray character among closings
  CHECK(thrown_code([] { parse_joint("A-1\t가\t가/NNG\tNOUN\t(S (NOUN\t)))\n"); }) ==
        "UnbalancedColumns");  // too many closings
  CHECK(thrown_code([] { parse_joint("A-1\t가\t가/NNG\tNOUN\t(S (NOUN\t)\n"); }) ==
        "UnbalancedColumns");  // left open at end of block
  CHECK(thrown_code([] {
          parse_joint("A-1\t가\t가/NNG\tNOUN\t(NOUN\t)\nA-2\t나\t나/VV\tVERB\t(VERB\t)\n");
        }) == "UnbalancedColumns");  // two roots
  // Structurally sound but not normalized: NP as a preterminal.
  CHECK(thrown_code([] { parse_joint("A-1\t가\t가/NNG\t_\t(S (NP\t))\n"); }) == "NotNormalized");
}

TEST_CASE("joint files hold blank-line separated sentences") {
  JointSentence one = normalized_fixture_sentence();
  JointSentence two = one;
  two.sent_id = "B-77";
  for (std::size_t i = 0; i < two.rows.size(); ++i) two.rows[i].id = token_id("B-77", i);
  std::string file = write_joint_file({one, two});
  CHECK(file.find("\n\n# sent id = B-77\n") != std::string::npos);

  std::vector<ParsedJoint> parsed = parse_joint_file(file);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].sentence.sent_id == "BGAA0001-10012");
  CHECK(parsed[1].sentence.sent_id == "B-77");
  CHECK(parsed[0].tree == parsed[1].tree);
  // Comment-only blocks and stray blank lines are ignored.
  CHECK(parse_joint_file("\n\n# orphan comment\n\n" + file + "\n\n").size() == 2);
  CHECK(parse_joint_file("").empty());
}

TEST_CASE("random normalized trees survive the joint round-trip") {
  testutil::RandomTreeGen gen(42);
  for (int i = 0; i < 300; ++i) {
    SyntaxTree t = gen.normalized_tree();
    JointSentence sentence = emit_joint(t, "T-0100");
    std::string block = write_joint(sentence);
    ParsedJoint parsed = parse_joint(block);
    CHECK(parsed.tree == t);
    CHECK(write_joint(parsed.sentence) == block);
  }
}

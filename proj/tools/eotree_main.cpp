// eotree: eojeol-level Korean treebank normalization toolkit.
//
//   eotree convert   --from sejong --to joint corpus.brackets
//   eotree normalize --from kaist --raw-text raw.txt corpus.brackets
//   eotree validate  corpus.joint
//   eotree stats     --from joint corpus.joint

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "eotree/bracketed.hpp"
#include "eotree/depconvert.hpp"
#include "eotree/jointfmt.hpp"
#include "eotree/normalize.hpp"
#include "eotree/tagmaps.hpp"
#include "eotree/validate.hpp"

namespace {

using namespace eotree;

struct Options {
  std::string from = "joint";
  std::string to = "joint";
  std::vector<std::string> inputs;
  std::string out;
  std::string config_path;
  std::string upos_path;
  std::string tag_map_path;
  std::string head_rules_path;
  std::string label_map_path;
  std::string raw_text_path;
  unsigned jobs = 1;
  bool strict = false;
  bool pretty = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot open " + path + " for writing");
  out << content;
}

// One sentence of work, whatever the input format was.
struct WorkItem {
  std::string id;
  std::optional<std::string> text;
  std::optional<std::string> raw_text;
  SyntaxTree tree;
};

struct WorkResult {
  std::string output;
  std::vector<std::string> log;  // stderr lines, printed in input order
  bool failed = false;
  bool dropped = false;
};

std::vector<std::string> non_empty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string detokenized_text(const SyntaxTree& normalized) {
  std::string out;
  bool first = true;
  struct Walker {
    std::string& out;
    bool& first;
    void walk(const SyntaxTree& t) {
      if (t.is_preterminal()) {
        if (!first && t.label().base != "PUNCT") out += ' ';
        out += t.children()[0].terminal().surface;
        first = false;
        return;
      }
      if (t.is_leaf()) {
        if (!first) out += ' ';
        out += t.terminal().surface;
        first = false;
        return;
      }
      for (const SyntaxTree& c : t.children()) walk(c);
    }
  } walker{out, first};
  walker.walk(normalized);
  return out;
}

int run_convert(const Options& opt, bool normalize_mode) {
  auto dialect = dialect_from_string(opt.from);
  if (!dialect && opt.from != "joint") {
    std::cerr << "error: unknown --from dialect \"" << opt.from << "\"\n";
    return 2;
  }
  std::string to = normalize_mode ? "bracketed" : opt.to;
  if (to != "bracketed" && to != "joint" && to != "deps") {
    std::cerr << "error: unknown --to format \"" << to << "\"\n";
    return 2;
  }

  Pipeline pipeline;
  HeadRules head_rules = HeadRules::defaults();
  LabelMap label_map = LabelMap::defaults();
  std::vector<WorkItem> items;
  try {
    if (!opt.config_path.empty()) pipeline.config = NormalizeConfig::load(opt.config_path);
    if (!opt.upos_path.empty()) pipeline.upos = UposTable::load_tsv(opt.upos_path);
    if (opt.from != "joint")
      pipeline.tag_map = default_tag_map(*dialect);
    if (!opt.tag_map_path.empty()) pipeline.tag_map = TagMap::load_tsv(opt.tag_map_path);
    if (!opt.head_rules_path.empty()) head_rules = HeadRules::load_tsv(opt.head_rules_path);
    if (!opt.label_map_path.empty()) label_map = LabelMap::load_tsv(opt.label_map_path);

    std::vector<std::string> inputs = opt.inputs;
    if (inputs.empty()) inputs.push_back("-");
    BracketedOptions bopt;
    bopt.null_patterns = pipeline.config.null_patterns;
    for (const std::string& path : inputs) {
      std::string content = read_input(path);
      if (opt.from == "joint") {
        for (ParsedJoint& parsed : parse_joint_file(content)) {
          WorkItem item;
          item.id = parsed.sentence.sent_id;
          item.text = parsed.sentence.text;
          item.tree = std::move(parsed.tree);
          items.push_back(std::move(item));
        }
      } else {
        BracketedDocument doc = parse_bracketed(content, *dialect, bopt);
        for (SentenceRecord& record : doc.sentences) {
          WorkItem item;
          item.id = record.id ? *record.id : "s" + std::to_string(items.size() + 1);
          item.text = record.text;
          item.tree = std::move(record.tree);
          items.push_back(std::move(item));
        }
      }
    }
    if (!opt.raw_text_path.empty()) {
      std::vector<std::string> lines = non_empty_lines(read_input(opt.raw_text_path));
      if (lines.size() != items.size())
        throw Error("IoError", "--raw-text has " + std::to_string(lines.size()) +
                                   " lines for " + std::to_string(items.size()) + " sentences");
      for (std::size_t i = 0; i < items.size(); ++i) items[i].raw_text = lines[i];
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  Dialect work_dialect = opt.from == "joint" ? Dialect::Normalized : *dialect;
  std::vector<WorkResult> results(items.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= items.size()) break;
      WorkItem& item = items[i];
      WorkResult& result = results[i];
      try {
        WarningList warnings;
        std::optional<SyntaxTree> normalized = normalize_pipeline(
            item.tree, work_dialect, pipeline, item.text, item.raw_text, &warnings);
        if (!normalized) {
          result.dropped = true;
          result.log.push_back(item.id + ": dropped: EmptyTree: nothing left after null stripping");
          continue;
        }
        for (const std::string& w : warnings) result.log.push_back(item.id + ": warning: " + w);
        if (opt.strict && !warnings.empty()) {
          result.failed = true;
          result.log.push_back(item.id + ": error: warnings treated as errors (--strict)");
          continue;
        }
        if (to == "bracketed") {
          std::string block = "# sent id = " + item.id + "\n";
          block += "# text = " + detokenized_text(*normalized) + "\n";
          block += opt.pretty ? serialize_tree_pretty(*normalized) : serialize_tree(*normalized);
          block += "\n";
          result.output = block;
        } else if (to == "joint") {
          WarningList emit_warnings;
          JointSentence sentence = emit_joint(*normalized, item.id, item.text, &emit_warnings);
          for (const std::string& w : emit_warnings)
            result.log.push_back(item.id + ": warning: " + w);
          result.output = write_joint(sentence);
        } else {  // deps
          DepGraph graph = to_dependency(*normalized, head_rules, label_map);
          result.output = emit_dependencies(graph, item.id, detokenized_text(*normalized));
        }
      } catch (const Error& e) {
        result.failed = true;
        result.log.push_back(item.id + ": error: " + e.what());
      }
    }
  };
  unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::string output;
  bool any_failed = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const std::string& line : results[i].log) std::cerr << line << "\n";
    if (results[i].failed) {
      any_failed = true;
      if (opt.strict) {
        std::cerr << "aborting batch (--strict)\n";
        return 1;
      }
      continue;
    }
    if (results[i].dropped) continue;
    if (!output.empty()) output += "\n";
    output += results[i].output;
  }
  try {
    write_output(opt.out, output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return any_failed ? 1 : 0;
}

int run_validate(const Options& opt) {
  std::vector<std::string> inputs = opt.inputs;
  if (inputs.empty()) inputs.push_back("-");
  NormalizeConfig config;
  if (!opt.config_path.empty()) {
    try {
      config = NormalizeConfig::load(opt.config_path);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  std::size_t total_sentences = 0;
  std::size_t total_violations = 0;
  std::string report;
  for (const std::string& path : inputs) {
    std::string content;
    try {
      content = read_input(path);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    try {
      for (const ParsedJoint& parsed : parse_joint_file(content)) {
        ++total_sentences;
        for (const Violation& v :
             check_normalized(parsed.sentence, parsed.tree, config.null_patterns)) {
          ++total_violations;
          report += parsed.sentence.sent_id + "\t" + format_violation(v) + "\n";
        }
      }
    } catch (const Error& e) {
      ++total_violations;
      report += path + "\t" + e.what() + "\n";
    }
  }
  try {
    write_output(opt.out, report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "checked " << total_sentences << " sentences, " << total_violations
            << " violations\n";
  return total_violations == 0 ? 0 : 1;
}

int run_stats(const Options& opt) {
  auto dialect = dialect_from_string(opt.from);
  if (!dialect && opt.from != "joint") {
    std::cerr << "error: unknown --from dialect \"" << opt.from << "\"\n";
    return 2;
  }
  std::vector<std::string> inputs = opt.inputs;
  if (inputs.empty()) inputs.push_back("-");
  CorpusStats stats;
  try {
    for (const std::string& path : inputs) {
      std::string content = read_input(path);
      if (opt.from == "joint") {
        for (const ParsedJoint& parsed : parse_joint_file(content)) stats.add(parsed.tree);
      } else {
        for (const SentenceRecord& record :
             parse_bracketed(content, *dialect, BracketedOptions{}).sentences)
          stats.add(record.tree);
      }
    }
    write_output(opt.out, stats.report());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_pipeline) {
  cmd->add_option("inputs", opt.inputs, "input files ('-' for stdin)");
  cmd->add_option("--out", opt.out, "output file (default stdout)");
  if (with_pipeline) {
    cmd->add_option("--config", opt.config_path, "normalization config (key=value)");
    cmd->add_option("--upos-table", opt.upos_path, "UPOS rule TSV");
    cmd->add_option("--tag-map", opt.tag_map_path, "XPOS tag map TSV");
    cmd->add_option("--head-rules", opt.head_rules_path, "head percolation TSV");
    cmd->add_option("--label-map", opt.label_map_path, "arc label TSV");
    cmd->add_option("--raw-text", opt.raw_text_path, "raw sentence sidecar (one per line)");
    cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--strict", opt.strict, "treat warnings as errors, abort on failure");
    cmd->add_flag("--pretty", opt.pretty, "indent bracketed output");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eojeol-level Korean treebank normalization toolkit"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* convert = app.add_subcommand("convert", "convert between representations");
  convert->add_option("--from", opt.from, "input dialect: sejong|penn|kaist|joint")->required();
  convert->add_option("--to", opt.to, "output format: bracketed|joint|deps");
  add_common_flags(convert, opt, true);

  CLI::App* normalize = app.add_subcommand("normalize", "emit normalized bracketed trees");
  normalize->add_option("--from", opt.from, "input dialect: sejong|penn|kaist|joint")->required();
  add_common_flags(normalize, opt, true);

  CLI::App* validate = app.add_subcommand("validate", "check joint-format files");
  add_common_flags(validate, opt, false);
  validate->add_option("--config", opt.config_path, "normalization config (for null patterns)");

  CLI::App* stats = app.add_subcommand("stats", "corpus statistics");
  stats->add_option("--from", opt.from, "input dialect: sejong|penn|kaist|joint");
  add_common_flags(stats, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (convert->parsed()) return run_convert(opt, false);
  if (normalize->parsed()) return run_convert(opt, true);
  if (validate->parsed()) return run_validate(opt);
  if (stats->parsed()) return run_stats(opt);
  return 2;
}

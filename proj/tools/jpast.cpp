// jpast: command-line front end for the past-tense evaluation toolkit.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jpast/ablation.hpp"
#include "jpast/classifier.hpp"
#include "jpast/conjugator.hpp"
#include "jpast/dataset.hpp"
#include "jpast/metrics.hpp"
#include "jpast/runner.hpp"
#include "jpast/taxonomy.hpp"

namespace {

using namespace jpast;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  write_file(path, bytes);
}

bool wants_json(const std::string& path) { return fs::path(path).extension() == ".json"; }

/// "table1" or a list such as "T1=100,T2=50,T4_2=5".
TypeCounts parse_counts_arg(const std::string& spec) {
  if (spec == "table1") return kTable1Counts;
  TypeCounts counts{};
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("bad count entry: " + item);
    const auto t = parse_verb_type(item.substr(0, eq));
    if (!t) throw ConfigError("unknown verb type: " + item.substr(0, eq));
    counts[index_of(*t)] = std::stoul(item.substr(eq + 1));
  }
  return counts;
}

Dataset load_dataset(const std::string& path) {
  return parse_tsv(read_input(path), fs::path(path).filename().string());
}

int cmd_classify(const std::string& in_path, const std::string& out_path) {
  std::vector<std::pair<KanaWord, KanaWord>> rows;
  std::vector<std::size_t> line_of_row;
  std::istringstream in(read_input(in_path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 2) throw ParseError(lineno, "expected lemma<TAB>past[<TAB>_]");
    try {
      rows.emplace_back(segment_moras(fields[0]), segment_moras(fields[1]));
    } catch (const RejectedInput& e) {
      throw ParseError(lineno, e.what());
    }
    line_of_row.push_back(lineno);
  }
  const auto result = classify_dataset(rows);
  std::string out;
  for (const auto& p : result.pairs)
    out += p.lemma.str() + "\t" + p.past.str() + "\t_\t" + to_string(p.vtype) + "\n";
  write_output(out_path, out);
  for (const auto& e : result.errors)
    std::cerr << "line " << line_of_row[e.row] << ": " << e.message << "\n";
  return result.errors.empty() ? 0 : 1;
}

int cmd_evaluate(const std::string& gold_path, const std::string& pred_path,
                 const std::string& report) {
  const auto gold = load_dataset(gold_path);
  const auto records = parse_predictions(read_input(pred_path), gold);
  const auto rep = subgroup_report(records);
  write_output(report, wants_json(report) ? to_json(rep).dump(2) + "\n" : to_markdown(rep));
  return 0;
}

int cmd_errors(const std::string& gold_path, const std::string& pred_path, const std::string& out,
               const std::string& unk) {
  const auto gold = load_dataset(gold_path);
  const auto records = parse_predictions(read_input(pred_path), gold);
  const auto errors = classify_errors(records, TaxonomyOptions{unk});
  const auto rep = taxonomy_report(errors);
  write_output(out, wants_json(out) ? to_json(rep).dump(2) + "\n" : to_markdown(rep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Japanese past-tense inflection: conjugation oracle, datasets, ablations, "
               "subgroup metrics and error taxonomy"};
  app.require_subcommand(1);

  // conjugate
  std::string lemma, type_name;
  auto* conj = app.add_subcommand("conjugate", "Past tense of a hiragana lemma");
  conj->add_option("lemma", lemma, "Hiragana lemma")->required();
  conj->add_option("type", type_name, "Verb type: T1, T2, T3, T4_1, T4_2, T4_3")->required();

  // classify
  std::string classify_in = "-", classify_out = "-";
  auto* cls = app.add_subcommand("classify", "Append the verb type column to a TSV");
  cls->add_option("input", classify_in, "TSV file, or - for stdin");
  cls->add_option("-o,--out", classify_out, "Output TSV (default stdout)");

  // gen
  std::string counts_spec = "table1", gen_out = "-";
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic lexicon");
  gen->add_option("--counts", counts_spec, "table1 or T1=N,T2=N,...")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output TSV (default stdout)");

  // split
  std::string split_in = "-", split_kind = "lemma", train_out = "train.tsv", test_out = "test.tsv";
  double fraction = 0.1;
  std::uint64_t split_seed = 1;
  auto* spl = app.add_subcommand("split", "Seeded train/test split");
  spl->add_option("input", split_in, "TSV file, or - for stdin");
  spl->add_option("--in", split_in, "TSV file");
  spl->add_option("--kind", split_kind, "lemma or form")
      ->check(CLI::IsMember({"lemma", "form"}))
      ->capture_default_str();
  spl->add_option("--fraction", fraction, "Test fraction in (0,1)")->capture_default_str();
  spl->add_option("--seed", split_seed, "Random seed")->capture_default_str();
  spl->add_option("--train-out", train_out)->capture_default_str();
  spl->add_option("--test-out", test_out)->capture_default_str();

  // stats
  std::string stats_in;
  auto* sts = app.add_subcommand("stats", "Per-type counts and proportions");
  sts->add_option("file", stats_in, "TSV file")->required();

  // ablate
  std::string cond_name, abl_train, abl_test, abl_out;
  auto* abl = app.add_subcommand("ablate", "Apply an ablation condition to train and test");
  abl->add_option("--condition", cond_name, "Preset name (see `conditions`)")->required();
  abl->add_option("--train", abl_train)->required();
  abl->add_option("--test", abl_test)->required();
  abl->add_option("--out-dir", abl_out)->required();

  app.add_subcommand("conditions", "List ablation presets");

  // evaluate / errors
  std::string gold_path, pred_path, report_path = "-", unk{kDefaultUnkSentinel};
  auto* evl = app.add_subcommand("evaluate", "Subgroup accuracy and disparity report");
  evl->add_option("--gold", gold_path)->required();
  evl->add_option("--pred", pred_path)->required();
  evl->add_option("--report", report_path, "out.json or out.md (default markdown to stdout)");

  auto* err = app.add_subcommand("errors", "Error taxonomy report");
  err->add_option("--gold", gold_path)->required();
  err->add_option("--pred", pred_path)->required();
  err->add_option("--out", report_path, "taxonomy.json or taxonomy.md (default markdown to stdout)");
  err->add_option("--unk", unk, "UNK sentinel")->capture_default_str();

  // predict-oracle
  std::string oracle_test, oracle_mode = "perfect", oracle_out = "-";
  auto* orc = app.add_subcommand("predict-oracle", "Built-in rule-based predictions");
  orc->add_option("--test", oracle_test)->required();
  orc->add_option("--mode", oracle_mode, "perfect or over_regularize")
      ->check(CLI::IsMember({"perfect", "over_regularize"}))
      ->capture_default_str();
  orc->add_option("--out", oracle_out);

  // run
  std::string config_path;
  auto* rn = app.add_subcommand("run", "Run an experiment from a JSON config");
  rn->add_option("--config", config_path)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*conj) {
      const auto t = parse_verb_type(type_name);
      if (!t) throw ConfigError("unknown verb type: " + type_name);
      std::cout << conjugate_past(segment_moras(lemma), *t).str() << "\n";
      return 0;
    }
    if (*cls) return cmd_classify(classify_in, classify_out);
    if (*gen) {
      write_output(gen_out, emit_tsv(generate_synthetic(parse_counts_arg(counts_spec), gen_seed)));
      return 0;
    }
    if (*spl) {
      const auto data = load_dataset(split_in);
      SplitSpec spec{split_kind == "lemma" ? SplitKind::Lemma : SplitKind::Form, fraction, split_seed};
      const auto [train, test] = split(data, spec);
      write_file(train_out, emit_tsv(train));
      write_file(test_out, emit_tsv(test));
      std::cerr << "train " << train.size() << ", test " << test.size() << "\n";
      return 0;
    }
    if (*sts) {
      std::cout << render_stats(stats(load_dataset(stats_in)));
      return 0;
    }
    if (*abl) {
      const auto [train, test] =
          apply(condition(cond_name), load_dataset(abl_train), load_dataset(abl_test));
      write_file(fs::path(abl_out) / "train.tsv", emit_tsv(train));
      write_file(fs::path(abl_out) / "test.tsv", emit_tsv(test));
      std::cerr << cond_name << ": train " << train.size() << ", test " << test.size() << "\n";
      return 0;
    }
    if (app.got_subcommand("conditions")) {
      for (const auto& c : enumerate_conditions()) {
        std::cout << c.name << "\t";
        bool first = true;
        for (auto t : c.included_types) {
          std::cout << (first ? "" : ",") << to_string(t);
          first = false;
        }
        std::cout << "\n";
      }
      return 0;
    }
    if (*evl) return cmd_evaluate(gold_path, pred_path, report_path);
    if (*err) return cmd_errors(gold_path, pred_path, report_path, unk);
    if (*orc) {
      write_output(oracle_out, oracle_predict(load_dataset(oracle_test), *parse_oracle_mode(oracle_mode)));
      return 0;
    }
    if (*rn) {
      const auto manifest = run(load_config_file(config_path));
      for (const auto& n : manifest.notices) std::cerr << "notice: " << n << "\n";
      return manifest.complete ? 0 : 1;
    }
  } catch (const jpast::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

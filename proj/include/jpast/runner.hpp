#ifndef JPAST_RUNNER_HPP
#define JPAST_RUNNER_HPP

// Experiment orchestration: dataset -> split -> ablation conditions ->
// prediction files -> subgroup and taxonomy reports, plus a JSON manifest.
//
// Output layout under output_dir:
//   dataset.tsv
//   <condition>/train.tsv, <condition>/test.tsv
//   <condition>/<model>/{predictions.tsv, report.json, report.md,
//                        taxonomy.json, taxonomy.md}
//   manifest.json            (written last)

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "jpast/ablation.hpp"
#include "jpast/conjugator.hpp"
#include "jpast/dataset.hpp"
#include "jpast/error.hpp"
#include "jpast/metrics.hpp"
#include "jpast/taxonomy.hpp"

namespace jpast {

namespace fs = std::filesystem;

inline std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

// ---------------------------------------------------------------------------
// Built-in baselines

enum class OracleMode { Perfect, OverRegularize };

inline std::optional<OracleMode> parse_oracle_mode(std::string_view s) {
  if (s == "perfect") return OracleMode::Perfect;
  if (s == "over_regularize" || s == "over-regularize") return OracleMode::OverRegularize;
  return std::nullopt;
}

inline const char* to_string(OracleMode m) {
  return m == OracleMode::Perfect ? "perfect" : "over_regularize";
}

/// Deterministic predictions: gold forms, or the over-regularized form for
/// every Type 4 item and gold elsewhere.
inline std::vector<PredictionRecord> oracle_records(const Dataset& test, OracleMode mode) {
  std::vector<PredictionRecord> out;
  out.reserve(test.size());
  for (const auto& p : test.pairs) {
    std::string predicted = p.past.str();
    if (mode == OracleMode::OverRegularize)
      if (auto form = over_regularized_form(p.lemma, p.vtype)) predicted = form->str();
    out.push_back({p.lemma, p.past, std::move(predicted), p.vtype});
  }
  return out;
}

/// The same, as a lemma<TAB>predicted file.
inline std::string oracle_predict(const Dataset& test, OracleMode mode) {
  return emit_predictions(oracle_records(test, mode));
}

// ---------------------------------------------------------------------------
// Configuration

struct PredictionSource {
  std::string condition;  // "*" applies to every condition in the run
  std::string model;
  std::optional<fs::path> file;
  std::optional<OracleMode> oracle;
};

struct ExperimentConfig {
  std::variant<fs::path, TypeCounts> dataset = kTable1Counts;
  SplitSpec split;
  std::vector<std::string> conditions;
  std::vector<PredictionSource> predictions;
  fs::path output_dir = "out";
  std::uint64_t seed = 1;
  std::string unk_sentinel{kDefaultUnkSentinel};
};

inline TypeCounts parse_counts(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "table1") return kTable1Counts;
    throw ConfigError("unknown count preset " + j.get<std::string>());
  }
  if (!j.is_object()) throw ConfigError("synthetic counts must be \"table1\" or an object");
  TypeCounts counts{};
  for (const auto& [key, value] : j.items()) {
    const auto t = parse_verb_type(key);
    if (!t) throw ConfigError("unknown verb type " + key);
    counts[index_of(*t)] = value.get<std::size_t>();
  }
  return counts;
}

/// Parses a config document. Relative paths resolve against base_dir.
inline ExperimentConfig load_config(const nlohmann::json& j, const fs::path& base_dir = {}) {
  ExperimentConfig cfg;
  auto resolve = [&](const std::string& p) {
    fs::path path(p);
    return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
  };
  try {
    cfg.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("dataset")) {
      const auto& d = j.at("dataset");
      if (d.contains("file"))
        cfg.dataset = resolve(d.at("file").get<std::string>());
      else
        cfg.dataset = parse_counts(d.value("synthetic", nlohmann::json("table1")));
    }
    cfg.split.seed = cfg.seed;
    if (j.contains("split")) {
      const auto& s = j.at("split");
      const auto kind = s.value("kind", std::string("lemma"));
      if (kind == "lemma") cfg.split.kind = SplitKind::Lemma;
      else if (kind == "form") cfg.split.kind = SplitKind::Form;
      else throw ConfigError("split kind must be lemma or form");
      cfg.split.test_fraction = s.value("test_fraction", 0.1);
      cfg.split.seed = s.value("seed", cfg.seed);
    }
    if (j.contains("conditions")) {
      cfg.conditions = j.at("conditions").get<std::vector<std::string>>();
    } else {
      for (const auto& c : enumerate_conditions()) cfg.conditions.push_back(c.name);
    }
    for (const auto& p : j.value("predictions", nlohmann::json::array())) {
      PredictionSource src;
      src.condition = p.value("condition", std::string("*"));
      src.model = p.at("model").get<std::string>();
      if (p.contains("file")) src.file = resolve(p.at("file").get<std::string>());
      if (p.contains("oracle")) {
        src.oracle = parse_oracle_mode(p.at("oracle").get<std::string>());
        if (!src.oracle) throw ConfigError("unknown oracle mode " + p.at("oracle").dump());
      }
      if (src.file.has_value() == src.oracle.has_value())
        throw ConfigError("prediction entry for " + src.model + " needs exactly one of file/oracle");
      cfg.predictions.push_back(std::move(src));
    }
    cfg.output_dir = resolve(j.value("output_dir", std::string("out")));
    cfg.unk_sentinel = j.value("unk_sentinel", std::string(kDefaultUnkSentinel));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  }

  for (const auto& name : cfg.conditions)
    if (!find_condition(name)) throw ConfigError("unknown ablation condition: " + name);
  for (const auto& p : cfg.predictions)
    if (p.condition != "*" && !find_condition(p.condition))
      throw ConfigError("unknown ablation condition in predictions: " + p.condition);
  return cfg;
}

inline ExperimentConfig load_config_file(const fs::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse " + path.string() + ": " + e.what());
  }
  return load_config(j, path.parent_path());
}

// ---------------------------------------------------------------------------
// Running

struct Evaluation {
  SubgroupReport subgroups;
  TaxonomyReport taxonomy;
};

inline Evaluation evaluate(std::span<const PredictionRecord> records,
                           const TaxonomyOptions& options = {}) {
  const auto errors = classify_errors(records, options);
  return {subgroup_report(records), taxonomy_report(errors)};
}

/// Ablated minus Full accuracy in percentage points, e.g. "+2.00".
inline std::string accuracy_delta_points(const Ratio& full, const Ratio& ablated) {
  const Ratio delta = ablated - full;
  const std::string body = render_percent(delta);
  return delta >= 0 ? "+" + body : body;
}

struct ExperimentManifest {
  nlohmann::json json;
  bool complete = true;  // every requested evaluation finished
  std::vector<std::string> notices;
};

inline ExperimentManifest run(const ExperimentConfig& cfg) {
  ExperimentManifest result;
  auto& m = result.json;
  auto notice = [&](std::string msg) {
    result.notices.push_back(msg);
    m["notices"].push_back(std::move(msg));
  };
  m["notices"] = nlohmann::json::array();
  m["seed"] = cfg.seed;
  m["split"] = {{"kind", cfg.split.kind == SplitKind::Lemma ? "lemma" : "form"},
                {"test_fraction", cfg.split.test_fraction},
                {"seed", cfg.split.seed}};

  Dataset data;
  if (const auto* path = std::get_if<fs::path>(&cfg.dataset)) {
    data = parse_tsv(read_file(*path), path->filename().string());
    m["dataset"]["source"] = "file:" + path->filename().string();
  } else {
    const auto& counts = std::get<TypeCounts>(cfg.dataset);
    data = generate_synthetic(counts, cfg.seed);
    nlohmann::json c = nlohmann::json::object();
    for (auto t : kDatasetVerbTypes) c[to_string(t)] = counts[index_of(t)];
    m["dataset"]["source"] = "synthetic";
    m["dataset"]["counts"] = c;
  }
  const std::string data_tsv = emit_tsv(data);
  write_file(cfg.output_dir / "dataset.tsv", data_tsv);
  m["dataset"]["size"] = data.size();
  m["dataset"]["sha256"] = sha256_hex(data_tsv);

  auto [train, test] = split(data, cfg.split);
  m["split"]["train_sha256"] = sha256_hex(emit_tsv(train));
  m["split"]["test_sha256"] = sha256_hex(emit_tsv(test));
  m["split"]["train_size"] = train.size();
  m["split"]["test_size"] = test.size();

  const TaxonomyOptions tax_options{cfg.unk_sentinel};
  std::map<std::string, Ratio> full_accuracy;  // per model
  struct Pending {
    std::string condition, model;
    Ratio accuracy;
  };
  std::vector<Pending> evaluated;
  m["conditions"] = nlohmann::json::object();

  if (cfg.predictions.empty()) notice("no prediction sources configured; evaluation skipped");

  for (const auto& name : cfg.conditions) {
    const auto cond = condition(name);
    auto& cm = m["conditions"][name];
    Dataset cond_train, cond_test;
    try {
      std::tie(cond_train, cond_test) = apply(cond, train, test);
    } catch (const ConfigError& e) {
      cm["status"] = "failed";
      cm["message"] = e.what();
      notice(name + ": " + e.what());
      result.complete = false;
      continue;
    }
    const auto dir = cfg.output_dir / name;
    const auto train_tsv = emit_tsv(cond_train);
    const auto test_tsv = emit_tsv(cond_test);
    write_file(dir / "train.tsv", train_tsv);
    write_file(dir / "test.tsv", test_tsv);
    cm["status"] = "ok";
    cm["train_size"] = cond_train.size();
    cm["test_size"] = cond_test.size();
    cm["train_sha256"] = sha256_hex(train_tsv);
    cm["test_sha256"] = sha256_hex(test_tsv);
    cm["evaluations"] = nlohmann::json::object();

    for (const auto& src : cfg.predictions) {
      if (src.condition != "*" && src.condition != name) continue;
      auto& em = cm["evaluations"][src.model];
      std::string pred_text;
      if (src.oracle) {
        pred_text = oracle_predict(cond_test, *src.oracle);
        write_file(dir / src.model / "predictions.tsv", pred_text);
        em["source"] = std::string("oracle:") + to_string(*src.oracle);
      } else {
        em["source"] = "file:" + src.file->filename().string();
        if (!fs::exists(*src.file)) {
          em["status"] = "missing_predictions";
          notice(name + "/" + src.model + ": prediction file " + src.file->string() + " not found");
          result.complete = false;
          continue;
        }
        pred_text = read_file(*src.file);
      }
      std::vector<PredictionRecord> records;
      try {
        records = parse_predictions(pred_text, cond_test);
      } catch (const Error& e) {
        em["status"] = "join_error";
        em["message"] = e.what();
        notice(name + "/" + src.model + ": " + e.what());
        result.complete = false;
        continue;
      }
      const auto ev = evaluate(records, tax_options);
      const auto out = dir / src.model;
      write_file(out / "report.json", to_json(ev.subgroups).dump(2) + "\n");
      write_file(out / "report.md", to_markdown(ev.subgroups));
      write_file(out / "taxonomy.json", to_json(ev.taxonomy).dump(2) + "\n");
      write_file(out / "taxonomy.md", to_markdown(ev.taxonomy));
      em["status"] = "ok";
      em["accuracy"] = to_double(ev.subgroups.accuracy);
      em["accuracy_pct"] = render_percent(ev.subgroups.accuracy);
      em["errors"] = ev.subgroups.total_errors;
      em["sha256"] = sha256_hex(pred_text);
      nlohmann::json disparity = nlohmann::json::object();
      for (const auto& row : ev.subgroups.rows)
        disparity[row.name] = render_ratio(row.disparity_ratio);
      em["disparity_ratio"] = disparity;
      if (name == "Full") full_accuracy[src.model] = ev.subgroups.accuracy;
      evaluated.push_back({name, src.model, ev.subgroups.accuracy});
    }
  }

  for (const auto& e : evaluated) {
    auto& em = m["conditions"][e.condition]["evaluations"][e.model];
    const auto full = full_accuracy.find(e.model);
    if (full == full_accuracy.end()) {
      em["delta_vs_full_points"] = nullptr;
      continue;
    }
    em["delta_vs_full_points"] = accuracy_delta_points(full->second, e.accuracy);
    const auto reduction = error_reduction(full->second, e.accuracy);
    em["error_reduction_vs_full"] = reduction ? nlohmann::json(to_double(*reduction)) : nlohmann::json(nullptr);
  }

  m["complete"] = result.complete;
  write_file(cfg.output_dir / "manifest.json", m.dump(2) + "\n");
  return result;
}

}  // namespace jpast

#endif  // JPAST_RUNNER_HPP

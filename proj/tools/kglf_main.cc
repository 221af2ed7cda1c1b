// Copyright 2026 The KGLF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: graph checking, silver generation, logical form
// evaluation, QA reports, augmentation and model-input construction.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kglf/context_builder.h"
#include "kglf/errors.h"
#include "kglf/evaluator.h"
#include "kglf/harness.h"
#include "kglf/json_io.h"
#include "kglf/kg_store.h"
#include "kglf/lf_text.h"
#include "kglf/type_check.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

// Bad flag values discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphFlags {
  std::string triples;
  std::string labels;
  std::string membership = "P31";
};

struct Flags {
  GraphFlags graph;
  std::string dataset;
  std::string output;
  std::string report;
  std::string annotations;
  std::string silver;
  std::string predictions;
  std::string lf;
  int max_depth = 7;
  double timeout_seconds = 1200;
  double min_f1 = 0.3;
  uint64_t seed = 0;
  size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::string nel_policy = "previous-turn";
  std::string operators;
  std::string property_source = "adjacent";
  size_t beam_cap = kglf::BfsConfig{}.beam_cap;
  double weight = 0;
  size_t n_entities = 0;
  size_t max_chars = 256;
  uint32_t entity_vocabulary = 1000;
  uint32_t value_vocabulary = 100;
};

void AddGraphOptions(CLI::App *cmd, GraphFlags &f) {
  cmd->add_option("--triples", f.triples, "Triples file (JSON Lines)")->required();
  cmd->add_option("--labels", f.labels, "Labels file (JSON Lines)")->required();
  cmd->add_option("--membership-property", f.membership,
                  "Property linking entities to their classes")
      ->capture_default_str();
}

void AddSearchOptions(CLI::App *cmd, Flags &f) {
  cmd->add_option("--max-depth", f.max_depth, "Maximum logical form depth")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  cmd->add_option("--timeout-seconds", f.timeout_seconds, "Search time per question")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--min-f1", f.min_f1, "Lowest F1 accepted for a silver form")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--operators", f.operators,
                  "Comma-separated operator names (default: all but clarification)");
  cmd->add_option("--beam-cap", f.beam_cap, "Forms kept per depth and result type")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--property-source", f.property_source,
                  "Property arguments of graph operators")
      ->check(CLI::IsMember({"adjacent", "annotated"}))
      ->capture_default_str();
}

void AddLinkingOptions(CLI::App *cmd, Flags &f) {
  cmd->add_option("--nel-policy", f.nel_policy, "Dialog history linking policy")
      ->check(CLI::IsMember({"previous-turn", "all-preceding"}))
      ->capture_default_str();
  cmd->add_option("--annotations", f.annotations,
                  "Precomputed annotations (JSON Lines) used instead of string matching");
}

kglf::KnowledgeGraph LoadGraph(const GraphFlags &f) {
  auto membership = kglf::ParsePropertyId(f.membership);
  if (!membership) throw UsageError("bad --membership-property " + f.membership);
  std::vector<std::string> warnings;
  kglf::KnowledgeGraph g = kglf::KnowledgeGraph::Load(f.triples, f.labels,
                                                      *membership, &warnings);
  for (const std::string &w : warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

kglf::BfsConfig MakeBfsConfig(const Flags &f) {
  kglf::BfsConfig cfg;
  cfg.max_depth = f.max_depth;
  cfg.timeout_seconds = f.timeout_seconds;
  cfg.min_f1 = f.min_f1;
  cfg.beam_cap = f.beam_cap;
  cfg.property_source = f.property_source == "annotated"
                            ? kglf::PropertySource::kAnnotated
                            : kglf::PropertySource::kAdjacent;
  if (!f.operators.empty()) {
    cfg.operators.clear();
    std::stringstream in(f.operators);
    std::string name;
    while (std::getline(in, name, ',')) {
      auto op = kglf::OpFromName(name);
      if (!op) throw UsageError("unknown operator \"" + name + "\"");
      cfg.operators.push_back(*op);
    }
  }
  cfg.Validate();
  return cfg;
}

// Writes to `path`, or to standard output when it is empty.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw kglf::LoadError(path, 0, "cannot open for writing");
    }
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int LoadCheck(const Flags &f) {
  kglf::KnowledgeGraph g = LoadGraph(f.graph);
  const kglf::GraphStats &s = g.stats();
  std::cout << "entities=" << s.entities << " classes=" << s.classes
            << " entity_triples=" << s.entity_triples
            << " value_triples=" << s.value_triples << "\n";
  std::cout << "properties=" << s.properties
            << " membership_edges=" << s.membership_edges << "\n";
  bool ok = g.VerifyIndexes();
  std::cout << "index_transpose=" << (ok ? "ok" : "FAILED") << "\n";
  return ok ? kExitOk : kExitIo;
}

int Generate(const Flags &f) {
  kglf::KnowledgeGraph g = LoadGraph(f.graph);
  std::vector<kglf::Dialog> dataset = kglf::LoadDataset(f.dataset);
  kglf::GenerationOptions options;
  options.bfs = MakeBfsConfig(f);
  options.policy = *kglf::HistoryPolicyFromName(f.nel_policy);
  options.workers = f.workers;
  kglf::ExternalAnnotations external;
  if (!f.annotations.empty()) {
    external = kglf::LoadAnnotations(f.annotations);
    options.external = &external;
  }
  kglf::GenerationRun run = kglf::RunGeneration(dataset, g, options);

  Output out(f.output);
  std::optional<double> weight;
  if (f.weight > 0) weight = f.weight;
  for (const kglf::TurnOutcome &t : run.turns) {
    if (t.error) {
      std::cerr << "error: " << t.dialog_id << " turn " << t.turn << ": "
                << *t.error << "\n";
    }
    if (t.silver) out.stream() << kglf::SilverToJson(*t.silver, weight).dump() << "\n";
  }
  std::cout << kglf::FormatCoverage(run.report);
  if (!f.report.empty()) {
    Output report(f.report);
    report.stream() << kglf::CoverageToJson(run.report).dump(2) << "\n";
  }
  return kExitOk;
}

int EvalLf(const Flags &f) {
  kglf::KnowledgeGraph g = LoadGraph(f.graph);
  try {
    kglf::LogicalForm lf = kglf::ParseLfText(
        f.lf, [&g](kglf::EntityId e) { return g.IsClass(e); });
    kglf::TypeCheck(lf);
    std::cout << kglf::EvalResultToJson(kglf::Evaluate(lf, g)).dump() << "\n";
  } catch (const kglf::LoadError &) {
    throw;
  } catch (const kglf::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int Report(const Flags &f) {
  kglf::KnowledgeGraph g = LoadGraph(f.graph);
  std::vector<kglf::Dialog> dataset = kglf::LoadDataset(f.dataset);
  kglf::Predictions predictions;
  for (kglf::SilverExample &s : kglf::LoadSilver(f.predictions)) {
    predictions[{s.dialog_id, s.turn}] = std::move(s.tokens);
  }
  kglf::QaReport report = kglf::EvaluatePredictions(predictions, dataset, g);
  std::cout << kglf::FormatQa(report);
  if (!f.output.empty()) {
    Output out(f.output);
    out.stream() << kglf::QaToJson(report).dump(2) << "\n";
  }
  return kExitOk;
}

int Augment(const Flags &f) {
  kglf::KnowledgeGraph g = LoadGraph(f.graph);
  if (f.n_entities > g.entities().size()) {
    throw UsageError("--n exceeds the " + std::to_string(g.entities().size()) +
                     " entities of the graph");
  }
  std::vector<kglf::Dialog> dialogs =
      kglf::GenerateAugmentation(g, f.n_entities, f.seed, f.max_chars);
  Output out(f.output);
  for (const kglf::Dialog &d : dialogs) {
    out.stream() << kglf::DialogToJson(d).dump() << "\n";
  }
  std::cerr << dialogs.size() << " augmentation dialogs\n";
  return kExitOk;
}

int Context(const Flags &f) {
  kglf::KnowledgeGraph g = LoadGraph(f.graph);
  std::vector<kglf::Dialog> dataset = kglf::LoadDataset(f.dataset);
  std::map<std::pair<std::string, size_t>, kglf::TokenList> silver;
  if (!f.silver.empty()) {
    for (kglf::SilverExample &s : kglf::LoadSilver(f.silver)) {
      silver[{s.dialog_id, s.turn}] = std::move(s.tokens);
    }
  }
  kglf::ExternalAnnotations external;
  if (!f.annotations.empty()) external = kglf::LoadAnnotations(f.annotations);
  const kglf::HistoryPolicy policy = *kglf::HistoryPolicyFromName(f.nel_policy);
  kglf::RandomizationConfig vocab{f.entity_vocabulary, f.value_vocabulary};

  Output out(f.output);
  uint64_t example = 0;
  for (const kglf::Dialog &d : dataset) {
    for (size_t i = 0; i < d.turns.size(); ++i, ++example) {
      std::vector<kglf::Annotation> annotations = kglf::ResolveHistory(
          d, i, policy, g, f.annotations.empty() ? nullptr : &external);
      std::string prev_q = i > 0 ? d.turns[i - 1].question : "";
      std::string prev_a = i > 0 ? kglf::AnswerText(d.turns[i - 1].answer, g) : "";
      kglf::StructuredInput input =
          kglf::BuildContext(d.turns[i].question, prev_q, prev_a, annotations, g);
      kglf::IdMapping mapping = kglf::Randomize(input, f.seed + example, vocab);

      kglf::Json line = kglf::Json::object();
      line["dialog_id"] = d.id;
      line["turn"] = i;
      line["input"] = kglf::Json::parse(kglf::SerializeContext(input, mapping));
      kglf::Json entities = kglf::Json::object();
      for (const auto &[e, r] : mapping.entities()) entities[kglf::ToString(e)] = r;
      kglf::Json values = kglf::Json::object();
      for (const auto &[v, r] : mapping.values()) values[v.ToCanonical()] = r;
      line["id_map"] = {{"seed", mapping.seed()},
                        {"entities", std::move(entities)},
                        {"values", std::move(values)}};
      if (auto it = silver.find({d.id, i}); it != silver.end()) {
        line["tokens"] = kglf::TokensToJson(kglf::RewriteTokens(it->second, mapping));
      }
      out.stream() << line.dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Silver logical form generation over a knowledge graph"};
  app.require_subcommand(1);
  Flags f;

  CLI::App *load_check = app.add_subcommand("load-check", "Load a graph and verify its indexes");
  AddGraphOptions(load_check, f.graph);

  CLI::App *generate = app.add_subcommand("generate", "Generate silver logical forms");
  AddGraphOptions(generate, f.graph);
  AddSearchOptions(generate, f);
  AddLinkingOptions(generate, f);
  generate->add_option("--dataset", f.dataset, "Dialogs (JSON Lines)")->required();
  generate->add_option("--output", f.output, "Silver examples (default: stdout)");
  generate->add_option("--report", f.report, "Coverage report (JSON)");
  generate->add_option("--workers", f.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  generate->add_option("--weight", f.weight,
                       "Sampling weight recorded on every silver example")
      ->check(CLI::PositiveNumber);

  CLI::App *eval_lf = app.add_subcommand("eval-lf", "Evaluate a textual logical form");
  AddGraphOptions(eval_lf, f.graph);
  eval_lf->add_option("lf", f.lf, "Logical form, e.g. follow_property(Q3, P25)")->required();

  CLI::App *report = app.add_subcommand("report", "Score predicted logical forms");
  AddGraphOptions(report, f.graph);
  report->add_option("--dataset", f.dataset, "Dialogs (JSON Lines)")->required();
  report->add_option("--predictions", f.predictions,
                     "Predictions in the silver format (JSON Lines)")
      ->required();
  report->add_option("--output", f.output, "QA report (JSON)");

  CLI::App *augment = app.add_subcommand("augment", "Generate augmentation dialogs");
  AddGraphOptions(augment, f.graph);
  augment->add_option("--n", f.n_entities, "Entities to sample")->required();
  augment->add_option("--seed", f.seed, "Sampling seed")->capture_default_str();
  augment->add_option("--max-chars", f.max_chars, "Longest question or answer kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  augment->add_option("--output", f.output, "Dialogs (default: stdout)");

  CLI::App *context = app.add_subcommand("context", "Build randomized model inputs");
  AddGraphOptions(context, f.graph);
  AddLinkingOptions(context, f);
  context->add_option("--dataset", f.dataset, "Dialogs (JSON Lines)")->required();
  context->add_option("--silver", f.silver, "Silver examples whose tokens are rewritten");
  context->add_option("--seed", f.seed, "Randomization seed of the first turn")
      ->capture_default_str();
  context->add_option("--entity-vocabulary", f.entity_vocabulary)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  context->add_option("--value-vocabulary", f.value_vocabulary)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  context->add_option("--output", f.output, "Model inputs (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (load_check->parsed()) return LoadCheck(f);
    if (generate->parsed()) return Generate(f);
    if (eval_lf->parsed()) return EvalLf(f);
    if (report->parsed()) return Report(f);
    if (augment->parsed()) return Augment(f);
    if (context->parsed()) return Context(f);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

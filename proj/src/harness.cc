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

#include "kglf/harness.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

#include "kglf/evaluator.h"
#include "kglf/random.h"
#include "kglf/text.h"
#include "kglf/type_check.h"

namespace kglf {
namespace {

std::string TypeLabel(const std::optional<std::string> &question_type) {
  return question_type ? *question_type : std::string(kUntypedQuestion);
}

size_t DepthBucket(int depth) {
  if (depth <= 1) return 0;
  return static_cast<size_t>(std::min(depth, 4) - 1);
}

std::string Percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * fraction);
  return buf;
}

std::string Fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string Pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string PadLeft(const std::string &s, size_t width) {
  return s.size() < width ? std::string(width - s.size(), ' ') + s : s;
}

TurnOutcome ProcessTurn(const Dialog &dialog, size_t turn,
                        const KnowledgeGraph &g,
                        const GenerationOptions &options) {
  const Turn &t = dialog.turns[turn];
  TurnOutcome out;
  out.dialog_id = dialog.id;
  out.turn = turn;
  out.question_type = t.question_type;
  try {
    SilverExample silver;
    silver.dialog_id = dialog.id;
    silver.turn = turn;
    silver.question = t.question;
    silver.question_type = t.question_type;
    silver.answer = t.answer;
    if (IsClarificationType(t.question_type)) {
      LogicalForm lf = LogicalForm::Apply(Op::kClarification, {});
      silver.tokens = Linearize(lf);
      silver.f1 = 1.0;
      silver.depth = lf.depth();
      silver.scores =
          ScoreLogicalForm(lf, options.bfs.max_depth, t.question, {}, g);
      out.best_f1 = 1.0;
      out.silver = std::move(silver);
      return out;
    }
    std::vector<Annotation> annotations =
        ResolveHistory(dialog, turn, options.policy, g, options.external);
    GenerationResult result =
        Generate(t.question, annotations, t.answer, g, options.bfs);
    out.best_f1 = result.best_f1;
    out.truncated = result.truncated;
    out.timed_out = result.timed_out;
    out.enumerated = result.enumerated;
    if (auto best = SelectBest(result.candidates)) {
      const Candidate &c = result.candidates[*best];
      silver.tokens = Linearize(c.lf);
      silver.f1 = c.f1;
      silver.depth = c.depth;
      silver.scores = c.scores;
      silver.truncated = result.truncated;
      out.silver = std::move(silver);
    }
  } catch (const std::exception &e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

bool IsClarificationType(const std::optional<std::string> &question_type) {
  return question_type && NormalizeName(*question_type) == "clarification";
}

double CoverageRow::coverage() const {
  return num_questions == 0 ? 0.0
                            : static_cast<double>(num_covered) / num_questions;
}

double CoverageReport::DepthFraction(size_t bucket) const {
  return overall.num_covered == 0
             ? 0.0
             : static_cast<double>(depth_counts[bucket]) / overall.num_covered;
}

GenerationRun RunGeneration(const std::vector<Dialog> &dataset,
                            const KnowledgeGraph &g,
                            const GenerationOptions &options) {
  options.bfs.Validate();
  std::vector<std::pair<size_t, size_t>> jobs;
  for (size_t d = 0; d < dataset.size(); ++d) {
    for (size_t t = 0; t < dataset[d].turns.size(); ++t) jobs.emplace_back(d, t);
  }
  GenerationRun run;
  run.turns.resize(jobs.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      auto [d, t] = jobs[i];
      run.turns[i] = ProcessTurn(dataset[d], t, g, options);
    }
  };
  size_t workers = std::clamp<size_t>(options.workers, 1, std::max<size_t>(jobs.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread &th : pool) th.join();
  }
  run.report = SummarizeCoverage(run.turns);
  return run;
}

CoverageReport SummarizeCoverage(const std::vector<TurnOutcome> &turns) {
  CoverageReport report;
  std::map<std::string, CoverageRow> rows;
  for (const TurnOutcome &t : turns) {
    std::string label = TypeLabel(t.question_type);
    CoverageRow &row = rows.try_emplace(label, CoverageRow{label}).first->second;
    ++row.num_questions;
    ++report.overall.num_questions;
    if (t.silver) {
      ++row.num_covered;
      ++report.overall.num_covered;
      ++report.depth_counts[DepthBucket(t.silver->depth)];
    } else if (!t.error && t.best_f1 > 0) {
      ++report.near_misses;
    }
    if (t.truncated) ++report.truncated;
    if (t.error) ++report.errors;
  }
  for (auto &[label, row] : rows) report.rows.push_back(row);
  return report;
}

std::string FormatCoverage(const CoverageReport &report) {
  std::string out = Pad("question type", 32) + PadLeft("questions", 10) +
                    PadLeft("covered", 10) + PadLeft("coverage", 10) + "\n";
  auto line = [&](const CoverageRow &row) {
    out += Pad(row.question_type, 32) + PadLeft(std::to_string(row.num_questions), 10) +
           PadLeft(std::to_string(row.num_covered), 10) +
           PadLeft(Percent(row.coverage()), 10) + "\n";
  };
  for (const CoverageRow &row : report.rows) line(row);
  line(report.overall);
  out += "depth";
  for (size_t b = 0; b < kDepthBuckets.size(); ++b) {
    out += "  " + std::string(kDepthBuckets[b]) + ": " + Percent(report.DepthFraction(b));
  }
  out += "\nnear_misses=" + std::to_string(report.near_misses) +
         " truncated=" + std::to_string(report.truncated) +
         " errors=" + std::to_string(report.errors) + "\n";
  return out;
}

Json CoverageToJson(const CoverageReport &report) {
  auto row_json = [](const CoverageRow &row) {
    return Json{{"question_type", row.question_type},
                {"num_questions", row.num_questions},
                {"num_covered", row.num_covered},
                {"coverage", row.coverage()}};
  };
  Json rows = Json::array();
  for (const CoverageRow &row : report.rows) rows.push_back(row_json(row));
  Json depth = Json::object();
  for (size_t b = 0; b < kDepthBuckets.size(); ++b) {
    depth[std::string(kDepthBuckets[b])] = {{"count", report.depth_counts[b]},
                                            {"fraction", report.DepthFraction(b)}};
  }
  return Json{{"rows", std::move(rows)},
              {"overall", row_json(report.overall)},
              {"depth", std::move(depth)},
              {"near_misses", report.near_misses},
              {"truncated", report.truncated},
              {"errors", report.errors}};
}

QaReport EvaluatePredictions(const Predictions &predictions,
                             const std::vector<Dialog> &dataset,
                             const KnowledgeGraph &g) {
  QaReport report;
  for (const Dialog &dialog : dataset) {
    for (size_t i = 0; i < dialog.turns.size(); ++i) {
      const Turn &t = dialog.turns[i];
      const bool clarification = IsClarificationType(t.question_type);
      TurnScore s;
      s.dialog_id = dialog.id;
      s.turn = i;
      s.question_type = TypeLabel(t.question_type);
      s.metric = !clarification && t.answer.kind == AnswerSpec::Kind::kEntities
                     ? "f1"
                     : "accuracy";
      auto it = predictions.find({dialog.id, i});
      if (it == predictions.end()) {
        s.error = "missing prediction";
      } else {
        try {
          LogicalForm lf = ParseTokens(it->second);
          TypeCheck(lf);
          if (clarification) {
            s.score = !lf.is_leaf() && lf.op() == Op::kClarification ? 1.0 : 0.0;
          } else {
            s.score = AnswerF1(Evaluate(lf, g), t.answer);
          }
        } catch (const std::exception &e) {
          s.score = 0;
          s.error = e.what();
        }
      }
      report.turns.push_back(std::move(s));
    }
  }

  std::map<std::string, QaRow> rows;
  double sum = 0;
  for (const TurnScore &s : report.turns) {
    auto [it, inserted] = rows.try_emplace(s.question_type, QaRow{s.question_type, s.metric});
    QaRow &row = it->second;
    if (row.metric != s.metric) row.metric = "mixed";
    ++row.count;
    row.score += s.score;
    sum += s.score;
  }
  double row_sum = 0;
  size_t row_count = 0;
  for (auto &[label, row] : rows) {
    row.score /= row.count;
    if (!IsClarificationType(label)) {
      row_sum += row.score;
      ++row_count;
    }
    report.rows.push_back(row);
  }
  report.total_average = row_count == 0 ? 0.0 : row_sum / row_count;
  report.overall = report.turns.empty() ? 0.0 : sum / report.turns.size();
  return report;
}

std::string FormatQa(const QaReport &report) {
  std::string out = Pad("question type", 32) + PadLeft("metric", 10) +
                    PadLeft("turns", 8) + PadLeft("score", 10) + "\n";
  for (const QaRow &row : report.rows) {
    out += Pad(row.question_type, 32) + PadLeft(row.metric, 10) +
           PadLeft(std::to_string(row.count), 8) + PadLeft(Fixed(row.score), 10) + "\n";
  }
  out += Pad("total average", 50) + PadLeft(Fixed(report.total_average), 10) + "\n";
  out += Pad("overall", 50) + PadLeft(Fixed(report.overall), 10) + "\n";
  return out;
}

Json QaToJson(const QaReport &report) {
  Json rows = Json::array();
  for (const QaRow &row : report.rows) {
    rows.push_back({{"question_type", row.question_type},
                    {"metric", row.metric},
                    {"count", row.count},
                    {"score", row.score}});
  }
  Json turns = Json::array();
  for (const TurnScore &s : report.turns) {
    Json t = {{"dialog_id", s.dialog_id},
              {"turn", s.turn},
              {"question_type", s.question_type},
              {"metric", s.metric},
              {"score", s.score}};
    if (s.error) t["error"] = *s.error;
    turns.push_back(std::move(t));
  }
  return Json{{"rows", std::move(rows)},
              {"total_average", report.total_average},
              {"overall", report.overall},
              {"turns", std::move(turns)}};
}

std::string AnswerText(const AnswerSpec &answer, const KnowledgeGraph &g) {
  if (answer.kind != AnswerSpec::Kind::kEntities) {
    return answer.value ? answer.value->ToDisplay() : std::string();
  }
  std::string out;
  for (EntityId e : answer.entities) {
    if (!out.empty()) out += ", ";
    out += g.Name(e);
  }
  return out;
}

std::vector<Dialog> GenerateAugmentation(const KnowledgeGraph &g,
                                         size_t n_entities, uint64_t seed,
                                         size_t max_chars) {
  const std::vector<EntityId> &entities = g.entities();
  if (n_entities > entities.size()) {
    throw std::invalid_argument("cannot sample " + std::to_string(n_entities) +
                                " of " + std::to_string(entities.size()) +
                                " entities");
  }
  std::mt19937_64 rng(seed);
  std::vector<uint32_t> sample =
      SampleDistinct(rng, static_cast<uint32_t>(entities.size()), n_entities);

  const PropertyId membership = g.membership_property();
  std::vector<Dialog> out;
  for (uint32_t index : sample) {
    const EntityId e = entities[index];
    const std::string name = g.Name(e);
    std::span<const PropertyId> out_props = g.OutProperties(e);
    std::vector<PropertyId> props(out_props.begin(), out_props.end());
    if (!g.ClassesOf(e).empty()) {
      props.insert(std::upper_bound(props.begin(), props.end(), membership),
                   membership);
    }
    for (PropertyId p : props) {
      std::vector<EntityId> objects;
      if (p == membership) {
        for (ClassId c : g.ClassesOf(e)) objects.push_back(c.entity());
      } else {
        std::span<const EntityId> f = g.Forward(e, p);
        objects.assign(f.begin(), f.end());
      }
      AnswerSpec answer = AnswerSpec::Entities(std::move(objects));
      if (Utf8Length(AnswerText(answer, g)) > max_chars) continue;

      std::vector<std::string> phrases = {g.PropertyName(p)};
      for (const std::string &alias : g.PropertyAliases(p)) phrases.push_back(alias);
      for (size_t k = 0; k < phrases.size(); ++k) {
        std::string question = name + " " + phrases[k] + "?";
        if (Utf8Length(question) > max_chars) continue;
        Dialog d;
        d.id = "aug-" + ToString(e) + "-" + ToString(p) + "-" + std::to_string(k);
        Turn t;
        t.question = std::move(question);
        t.answer = answer;
        t.annotations = std::vector<Annotation>{
            {e, TextSpan{0, name.size()}, AnnotationSource::kGold}};
        t.question_type = "augmentation";
        d.turns.push_back(std::move(t));
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

}  // namespace kglf

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

#include "fixtures.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "kglf/json_io.h"

namespace kglf::testing {

std::string DataPath(std::string_view file) {
  return std::string(KGLF_TEST_DATA_DIR) + "/" + std::string(file);
}

std::string MiniKgTriplesPath() { return DataPath("minikg_triples.jsonl"); }
std::string MiniKgLabelsPath() { return DataPath("minikg_labels.jsonl"); }

const KnowledgeGraph &MiniKg() {
  static const KnowledgeGraph g = KnowledgeGraph::Load(
      MiniKgTriplesPath(), MiniKgLabelsPath(), PropertyId{31});
  return g;
}

std::vector<Dialog> MicroDataset() {
  return LoadDataset(DataPath("micro_dataset.jsonl"));
}

KnowledgeGraph HubGraph(size_t neighbors) {
  KnowledgeGraph::Builder b(PropertyId{31});
  const EntityId hub{1};
  b.AddEntityLabel(hub, "hub");
  b.AddPropertyLabel(PropertyId{1}, "neighbor");
  b.AddPropertyLabel(PropertyId{2}, "related");
  b.AddPropertyLabel(PropertyId{3}, "size");
  for (size_t i = 0; i < neighbors; ++i) {
    EntityId n{100 + i};
    b.AddEntityTriple(hub, PropertyId{1}, n);
    b.AddEntityTriple(n, PropertyId{2}, EntityId{10 + i % 90});
    b.AddValueTriple(n, PropertyId{3}, Value::OfQuantity(static_cast<double>(i % 1000)));
  }
  return std::move(b).Build();
}

size_t PeakRssBytes() {
  std::ifstream in("/proc/self/status");
  std::string key;
  while (in >> key) {
    if (key == "VmHWM:") {
      size_t kb = 0;
      in >> kb;
      return kb * 1024;
    }
    std::string rest;
    std::getline(in, rest);
  }
  return 0;
}

std::string CliPath() { return KGLF_CLI_PATH; }

int RunCommand(const std::string &command, std::string *output) {
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    if (output) output->append(buf, n);
  }
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string MakeTempDir(std::string_view prefix) {
  std::random_device rd;
  std::filesystem::path base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::filesystem::path p = base / (std::string(prefix) + "-" + std::to_string(rd()));
    if (std::filesystem::create_directory(p)) return p.string();
  }
  throw std::runtime_error("cannot create a temporary directory");
}

}  // namespace kglf::testing

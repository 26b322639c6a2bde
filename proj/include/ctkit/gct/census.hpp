// Copyright 2026 The ctkit Authors.
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


#ifndef CTKIT_GCT_CENSUS_HPP_
#define CTKIT_GCT_CENSUS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ctkit/gct/diagram.hpp"
#include "ctkit/symcalc/ratfun.hpp"

namespace ctkit::gct {

struct CensusOptions {
  // Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
  bool frame_zero = true;
  bool drop_loose_clasps = false;
  bool hard_only = false;
};

struct CensusRow {
  Diagram diagram;
  std::optional<symcalc::LaurentNormal> value;
  std::string error;  // set when value is empty
  int group = 0;      // 0 for failed rows
};

struct CensusGroup {
  int id = 0;
  std::string key;  // canonical text of the normalized value
  std::vector<std::size_t> members;  // indices into Census::rows
};

// Rows are ordered by group and, within a group, by enumeration order.
// Failed rows come last.
struct Census {
  int n = 0;
  std::vector<CensusRow> rows;
  std::vector<CensusGroup> groups;
};

// Enumerates, compiles and evaluates every diagram with n contacts, then
// groups equal values. Groups are sorted by (total degree, text) of the
// value. The result does not depend on the number of jobs.
Census tabulate(int n, const CensusOptions& opts = {});
// Same for an explicit list of diagrams.
Census tabulate(const std::vector<Diagram>& diagrams, const CensusOptions& opts = {});

enum class CensusFormat { kMarkdown, kCsv, kJson, kLatex };

std::string format_census(const Census& c, CensusFormat f);

// Subscript notation {{1,3}_{1},{2,4}_{-1}} used in tables.
std::string latex_notation(const Diagram& d);

}  // namespace ctkit::gct

#endif  // CTKIT_GCT_CENSUS_HPP_

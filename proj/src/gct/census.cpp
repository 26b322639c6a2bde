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


#include "ctkit/gct/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "ctkit/dgamma/dgamma.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/symcalc/format.hpp"

namespace ctkit::gct {
namespace {

int total_degree(const symcalc::MultiPoly& p) {
  int best = 0;
  for (const auto& term : p.terms()) {
    int d = 0;
    for (int e : term.exps) d += e;
    best = std::max(best, d);
  }
  return best;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Census tabulate(int n, const CensusOptions& opts) {
  std::vector<Diagram> ds = enumerate(n, opts.drop_loose_clasps);
  if (opts.hard_only) {
    std::erase_if(ds, [](const Diagram& d) {
      return std::any_of(d.contacts.begin(), d.contacts.end(),
                         [](const Contact& c) { return c.sigma != 0; });
    });
  }
  Census c = tabulate(ds, opts);
  c.n = n;
  return c;
}

Census tabulate(const std::vector<Diagram>& diagrams, const CensusOptions& opts) {
  std::vector<CensusRow> rows(diagrams.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < diagrams.size(); i = next++) {
      CensusRow& r = rows[i];
      r.diagram = diagrams[i];
      try {
        const tangle::Expr e = compile(diagrams[i], CompileOptions{opts.frame_zero});
        r.value = dgamma::dgamma1(e).dgamma1;
      } catch (const Error& ex) {
        r.error = ex.what();
      }
    }
  };
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, diagrams.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Group by value, then order groups by (total degree, text).
  std::map<std::string, std::vector<std::size_t>> by_key;
  std::map<std::string, int> degree;
  std::vector<std::size_t> failed;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].value) {
      failed.push_back(i);
      continue;
    }
    const std::string key = symcalc::to_text(rows[i].value->poly);
    by_key[key].push_back(i);
    degree[key] = total_degree(rows[i].value->poly);
  }
  std::vector<std::string> keys;
  for (const auto& [k, v] : by_key) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), [&](const std::string& a, const std::string& b) {
    return std::tie(degree[a], a) < std::tie(degree[b], b);
  });

  Census out;
  for (const std::string& k : keys) {
    CensusGroup g;
    g.id = static_cast<int>(out.groups.size() + 1);
    g.key = k;
    for (std::size_t i : by_key[k]) {
      rows[i].group = g.id;
      g.members.push_back(out.rows.size());
      out.rows.push_back(std::move(rows[i]));
    }
    out.groups.push_back(std::move(g));
  }
  for (std::size_t i : failed) out.rows.push_back(std::move(rows[i]));
  return out;
}

std::string latex_notation(const Diagram& d) {
  std::string out = "\\{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Contact& c = d.contacts[i];
    if (i) out += ",";
    out += "\\{" + std::to_string(c.a) + "," + std::to_string(c.b) + "\\}_{" +
           std::to_string(c.sigma) + "}";
  }
  return out + "\\}";
}

std::string format_census(const Census& c, CensusFormat f) {
  std::string out;
  switch (f) {
    case CensusFormat::kMarkdown:
      out += "| notation | dgamma1 | unit exponent | group |\n";
      out += "|---|---|---|---|\n";
      for (const CensusRow& r : c.rows) {
        if (r.value) {
          out += "| `" + print(r.diagram) + "` | `" + symcalc::to_text(r.value->poly) +
                 "` | " + std::to_string(r.value->unit_exponent) + " | " +
                 std::to_string(r.group) + " |\n";
        } else {
          out += "| `" + print(r.diagram) + "` | error: " + r.error + " | | |\n";
        }
      }
      break;
    case CensusFormat::kCsv:
      out += "notation,dgamma1,unit_exponent,group\n";
      for (const CensusRow& r : c.rows) {
        out += csv_field(print(r.diagram)) + ",";
        if (r.value) {
          out += csv_field(symcalc::to_text(r.value->poly)) + "," +
                 std::to_string(r.value->unit_exponent) + "," + std::to_string(r.group);
        } else {
          out += csv_field("error: " + r.error) + ",,";
        }
        out += "\n";
      }
      break;
    case CensusFormat::kJson: {
      nlohmann::ordered_json j;
      j["n"] = c.n;
      j["diagrams"] = c.rows.size();
      j["groups"] = c.groups.size();
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const CensusRow& r : c.rows) {
        nlohmann::ordered_json row;
        row["notation"] = print(r.diagram);
        if (r.value) {
          row["dgamma1"] = symcalc::to_text(r.value->poly);
          row["unit_exponent"] = r.value->unit_exponent;
          row["unit_sign"] = r.value->unit_sign;
          row["group"] = r.group;
        } else {
          row["error"] = r.error;
        }
        rows.push_back(std::move(row));
      }
      j["rows"] = std::move(rows);
      out = j.dump(2) + "\n";
      break;
    }
    case CensusFormat::kLatex:
      out += "\\begin{tabular}{lll}\n";
      out += "group & diagram & $\\Delta\\Gamma_1$ \\\\\n\\hline\n";
      for (const CensusRow& r : c.rows) {
        out += std::to_string(r.group) + " & $" + latex_notation(r.diagram) + "$ & ";
        out += r.value ? "$" + symcalc::to_latex(r.value->poly) + "$" : "error";
        out += " \\\\\n";
      }
      out += "\\end{tabular}\n";
      break;
  }
  return out;
}

}  // namespace ctkit::gct

// Copyright 2026 The dsfuse Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsfuse/report.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include "dsfuse/scenario_io.hpp"
#include "json.hpp"

namespace dsfuse {

namespace {

using nlohmann::ordered_json;

std::size_t DisplayWidth(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string Pad(const std::string& s, std::size_t width) {
  const std::size_t w = DisplayWidth(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string Cell(const Subset& s, double value, int precision) {
  return ToString(s) + " " + FormatFixed(value, precision);
}

// Θ is keyed by all of its labels; ∅ never appears.
std::string MassKey(const Subset& s) { return LabelKey(s); }

ordered_json MassJson(const MassFunction& m) {
  ordered_json out = ordered_json::object();
  for (const auto& f : m.FocalElements()) out[MassKey(f.subset)] = f.mass;
  return out;
}

ordered_json WinnerJson(const Prediction& p) {
  return {{"labels", p.winner.Labels()},
          {"mass", p.winner_mass},
          {"belief", p.winner_belief},
          {"plausibility", p.winner_plausibility}};
}

std::string ConditionLabel(std::size_t condition) {
  return "condition " + std::to_string(condition);
}

}  // namespace

RunReport MakeRunReport(const Scenario& s, std::size_t condition) {
  const std::vector<MassFunction> evidence = EvidenceFor(s, condition);
  FusionReport fusion = FuseAll(evidence);
  Prediction prediction = Decide(fusion, condition);
  std::vector<std::string> names;
  names.reserve(s.motions().size());
  for (const auto& m : s.motions()) names.push_back(m.name);
  return RunReport{s.name().empty() ? "scenario" : s.name(),
                   ScenarioHash(s),
                   std::move(names),
                   s.descriptions(),
                   std::move(fusion),
                   std::move(prediction)};
}

std::string FormatFixed(double value, int precision) {
  if (precision < kMinPrecision || precision > kMaxPrecision) {
    throw Error(ErrorCode::kValidationError,
                "precision must be within 1..12, got " + std::to_string(precision));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

std::string FormatCsvNumber(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string DescribeSubset(const Subset& s,
                           const std::vector<std::string>& descriptions) {
  std::string key = s.empty() ? "∅" : LabelKey(s);
  if (descriptions.size() != s.frame().size() || s.empty()) return key;
  std::string words;
  for (std::size_t i = 0; i < s.frame().size(); ++i) {
    if (!s.Contains(i)) continue;
    if (!words.empty()) words += '/';
    words += descriptions[i];
  }
  return key + " (" + words + ")";
}

std::string RenderTrace(const CombinationTrace& trace, int precision) {
  // Rows and columns in first-appearance order of the canonical cells.
  std::vector<std::pair<Subset, double>> rows;
  std::vector<std::pair<Subset, double>> cols;
  std::vector<std::string> cells;
  auto has = [](const auto& v, const Subset& s) {
    return std::any_of(v.begin(), v.end(),
                       [&](const auto& e) { return e.first == s; });
  };
  for (const auto& c : trace.cells) {
    if (!has(rows, c.left)) rows.emplace_back(c.left, c.left_mass);
    if (!has(cols, c.right)) cols.emplace_back(c.right, c.right_mass);
    cells.push_back(Cell(c.intersection, c.product, precision));
  }

  std::vector<std::string> row_heads;
  std::vector<std::string> col_heads;
  for (const auto& [s, m] : rows) row_heads.push_back(Cell(s, m, precision));
  for (const auto& [s, m] : cols) col_heads.push_back(Cell(s, m, precision));

  std::size_t head_w = 0;
  for (const auto& h : row_heads) head_w = std::max(head_w, DisplayWidth(h));
  std::vector<std::size_t> col_w(cols.size(), 0);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    col_w[c] = DisplayWidth(col_heads[c]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      col_w[c] = std::max(col_w[c], DisplayWidth(cells[r * cols.size() + c]));
    }
  }

  std::ostringstream os;
  // The last column is never padded so lines carry no trailing blanks.
  auto column = [&](const std::string& text, std::size_t c) {
    return c + 1 == cols.size() ? text : Pad(text, col_w[c]);
  };
  os << Pad("", head_w);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    os << " | " << column(col_heads[c], c);
  }
  os << "\n" << std::string(head_w, '-');
  for (std::size_t c = 0; c < cols.size(); ++c) {
    os << "-+-" << std::string(col_w[c], '-');
  }
  os << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << Pad(row_heads[r], head_w);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      os << " | " << column(cells[r * cols.size() + c], c);
    }
    os << "\n";
  }
  os << "k = " << FormatFixed(trace.conflict_k, precision) << "\n";
  os << "result:";
  for (const auto& f : trace.result.FocalElements()) {
    os << "  " << Cell(f.subset, f.mass, precision);
  }
  os << "\n";
  return os.str();
}

std::string RenderRunTable(const RunReport& report, bool with_trace,
                           int precision) {
  const Prediction& p = report.prediction;
  std::ostringstream os;
  os << "scenario: " << report.scenario_name << " (" << report.scenario_hash
     << ")\n";
  os << ConditionLabel(p.condition) << ", " << report.source_names.size()
     << " sources\n";
  if (with_trace) {
    for (std::size_t i = 0; i < report.fusion.steps.size(); ++i) {
      os << "\ncombination " << (i + 1) << ": sources 1.." << (i + 1)
         << " with source " << (i + 2) << " (" << report.source_names[i + 1]
         << ")\n";
      os << RenderTrace(report.fusion.steps[i], precision);
    }
  }
  os << "\nfinal masses:\n";
  const MassFunction& m = report.fusion.final_mass;
  std::size_t key_w = 0;
  for (const auto& f : m.FocalElements()) {
    key_w = std::max(key_w, DisplayWidth(ToString(f.subset)));
  }
  for (const auto& f : m.FocalElements()) {
    os << "  " << Pad(ToString(f.subset), key_w) << "  "
       << FormatFixed(f.mass, precision) << "  bel "
       << FormatFixed(Belief(m, f.subset), precision) << "  pl "
       << FormatFixed(Plausibility(m, f.subset), precision) << "\n";
  }
  os << "winner: " << DescribeSubset(p.winner, report.descriptions)
     << "  mass " << FormatFixed(p.winner_mass, precision) << "  belief "
     << FormatFixed(p.winner_belief, precision) << "  plausibility "
     << FormatFixed(p.winner_plausibility, precision) << "\n";
  return os.str();
}

std::string RenderRunJson(const RunReport& report) {
  ordered_json steps = ordered_json::array();
  for (const auto& step : report.fusion.steps) {
    ordered_json cells = ordered_json::array();
    for (const auto& c : step.cells) {
      cells.push_back({{"left", c.left.Labels()},
                       {"right", c.right.Labels()},
                       {"intersection", c.intersection.Labels()},
                       {"product", c.product}});
    }
    steps.push_back({{"k", step.conflict_k},
                     {"cells", std::move(cells)},
                     {"result", MassJson(step.result)}});
  }
  ordered_json doc = {
      {"scenario", {{"name", report.scenario_name}, {"hash", report.scenario_hash}}},
      {"condition", report.prediction.condition},
      {"steps", std::move(steps)},
      {"final", MassJson(report.fusion.final_mass)},
      {"winner", WinnerJson(report.prediction)},
  };
  return doc.dump(2) + "\n";
}

std::string RenderRunCsv(const RunReport& report, bool with_trace) {
  std::ostringstream os;
  if (with_trace) {
    os << "step,left,right,intersection,product,k\n";
    for (std::size_t i = 0; i < report.fusion.steps.size(); ++i) {
      const auto& step = report.fusion.steps[i];
      for (const auto& c : step.cells) {
        os << (i + 1) << ',' << LabelKey(c.left) << ',' << LabelKey(c.right)
           << ',' << LabelKey(c.intersection) << ','
           << FormatCsvNumber(c.product) << ','
           << FormatCsvNumber(step.conflict_k) << '\n';
      }
    }
    os << '\n';
  }
  const Prediction& p = report.prediction;
  const MassFunction& m = report.fusion.final_mass;
  os << "condition,focal,mass,belief,plausibility,winner\n";
  for (const auto& f : m.FocalElements()) {
    os << p.condition << ',' << LabelKey(f.subset) << ','
       << FormatCsvNumber(f.mass) << ','
       << FormatCsvNumber(Belief(m, f.subset)) << ','
       << FormatCsvNumber(Plausibility(m, f.subset)) << ','
       << (f.subset == p.winner ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string RenderSweepTable(const Scenario& s,
                             const std::vector<ConditionOutcome>& outcomes,
                             int precision) {
  const std::size_t num_w = static_cast<std::size_t>(precision) + 4;
  std::size_t winner_w = 6;
  for (const auto& o : outcomes) {
    if (o.ok()) {
      winner_w = std::max(
          winner_w, DisplayWidth(DescribeSubset(o.prediction->winner, s.descriptions())));
    }
  }
  std::ostringstream os;
  os << "scenario: " << (s.name().empty() ? "scenario" : s.name()) << " ("
     << ScenarioHash(s) << ")\n\n";
  os << "condition  " << Pad("winner", winner_w) << "  " << Pad("mass", num_w)
     << "  " << Pad("belief", num_w) << "  plausibility\n";
  for (const auto& o : outcomes) {
    os << Pad(std::to_string(o.condition), 9) << "  ";
    if (!o.ok()) {
      os << "error: " << o.failure->message << "\n";
      continue;
    }
    const Prediction& p = *o.prediction;
    os << Pad(DescribeSubset(p.winner, s.descriptions()), winner_w) << "  "
       << Pad(FormatFixed(p.winner_mass, precision), num_w) << "  "
       << Pad(FormatFixed(p.winner_belief, precision), num_w) << "  "
       << FormatFixed(p.winner_plausibility, precision) << "\n";
  }
  os << "\nplot data:\n" << RenderPlotData(s);
  return os.str();
}

std::string RenderSweepCsv(const std::vector<ConditionOutcome>& outcomes) {
  std::ostringstream os;
  os << "condition,winner,winner_mass,winner_belief,winner_plausibility\n";
  for (const auto& o : outcomes) {
    if (!o.ok()) continue;
    const Prediction& p = *o.prediction;
    os << p.condition << ',' << LabelKey(p.winner) << ','
       << FormatCsvNumber(p.winner_mass) << ','
       << FormatCsvNumber(p.winner_belief) << ','
       << FormatCsvNumber(p.winner_plausibility) << '\n';
  }
  return os.str();
}

std::string RenderSweepJson(const Scenario& s,
                            const std::vector<ConditionOutcome>& outcomes) {
  ordered_json conditions = ordered_json::array();
  for (const auto& o : outcomes) {
    if (!o.ok()) {
      conditions.push_back({{"condition", o.condition},
                            {"error", {{"code", ErrorCodeName(o.failure->code)},
                                       {"message", o.failure->message}}}});
      continue;
    }
    const Prediction& p = *o.prediction;
    conditions.push_back({{"condition", p.condition},
                          {"steps_k", p.steps_conflict},
                          {"final", MassJson(p.final_mass)},
                          {"winner", WinnerJson(p)}});
  }
  ordered_json doc = {
      {"scenario", {{"name", s.name().empty() ? "scenario" : s.name()},
                    {"hash", ScenarioHash(s)}}},
      {"conditions", std::move(conditions)},
  };
  return doc.dump(2) + "\n";
}

std::string RenderPlotData(const Scenario& s) {
  std::ostringstream os;
  os << "condition,motions,focal,mass\n";
  for (std::size_t c = 1; c <= s.condition_count(); ++c) {
    std::optional<FusionReport> report;
    try {
      report = FuseAll(EvidenceFor(s, c));
    } catch (const Error&) {
      continue;
    }
    auto emit = [&](std::size_t motions, const MassFunction& m) {
      for (const auto& f : m.FocalElements()) {
        os << c << ',' << motions << ',' << LabelKey(f.subset) << ','
           << FormatCsvNumber(f.mass) << '\n';
      }
    };
    emit(1, SimpleSupport(s.motions().front().direction, s.weight(c, 0)));
    for (std::size_t i = 0; i < report->steps.size(); ++i) {
      emit(i + 2, report->steps[i].result);
    }
  }
  return os.str();
}

}  // namespace dsfuse

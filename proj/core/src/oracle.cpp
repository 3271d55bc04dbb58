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

#include "dsfuse/oracle.hpp"

#include <array>
#include <charconv>
#include <map>
#include <string>
#include <system_error>

#include "dsfuse/error.hpp"
#include "dsfuse/fusion.hpp"

namespace dsfuse {

namespace {

using boost::multiprecision::cpp_int;

cpp_int Pow10(unsigned exponent) {
  return boost::multiprecision::pow(cpp_int(10), exponent);
}

Error BadDecimal(std::string_view text) {
  return Error(ErrorCode::kValidationError,
               "not a decimal number: '" + std::string(text) + "'");
}

}  // namespace

Rational ParseDecimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  cpp_int digits = 0;
  long long scale = 0;  // value = digits * 10^scale
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw BadDecimal(text);
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw BadDecimal(text);
    int exponent = 0;
    const char* first = text.data() + pos + 1;
    const char* last = text.data() + text.size();
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) throw BadDecimal(text);
    scale += exponent;
  }
  Rational value = scale >= 0
                       ? Rational(digits * Pow10(static_cast<unsigned>(scale)))
                       : Rational(digits, Pow10(static_cast<unsigned>(-scale)));
  return negative ? Rational(-value) : value;
}

Rational ExactDecimal(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) {
    throw Error(ErrorCode::kNonFiniteMass, "cannot represent mass exactly");
  }
  return ParseDecimal(std::string_view(buf.data(), ptr - buf.data()));
}

ExactMass ToExact(const MassFunction& m) {
  ExactMass out{m.frame(), {}};
  out.focals.reserve(m.focal_count());
  for (const auto& e : m.entries()) {
    out.focals.push_back({e.mask, ExactDecimal(e.mass)});
  }
  return out;
}

ExactMass ExactSimpleSupport(const Subset& focal, const Rational& weight) {
  if (focal.empty()) {
    throw Error(ErrorCode::kEmptyFocal, "simple support needs a non-empty focal set");
  }
  if (focal.full()) {
    throw Error(ErrorCode::kFocalIsFullFrame, "simple support on Θ is ambiguous");
  }
  if (weight <= 0 || weight > 1) {
    throw Error(ErrorCode::kWeightOutOfRange, "support weight is outside (0, 1]");
  }
  ExactMass out{focal.frame(), {{focal.mask(), weight}}};
  if (weight < 1) out.focals.push_back({focal.frame().full_mask(), 1 - weight});
  return out;
}

MassFunction ToMassFunction(const ExactMass& m) {
  std::vector<MaskedMass> entries;
  entries.reserve(m.focals.size());
  for (const auto& f : m.focals) {
    entries.push_back({f.mask, f.mass.convert_to<double>()});
  }
  return MassFunction::FromMasks(m.frame, std::move(entries));
}

ExactFusion OracleFuseAllExact(std::span<const ExactMass> sources) {
  if (sources.empty()) {
    throw Error(ErrorCode::kEmptyInput, "fusion needs at least one source");
  }
  const Frame& frame = sources.front().frame;
  std::uint64_t tuples = 1;
  for (const auto& s : sources) {
    RequireSameFrame(frame, s.frame);
    if (s.focals.empty()) {
      throw Error(ErrorCode::kEmptyInput, "source without focal elements");
    }
    if (tuples > kOracleTupleCap / s.focals.size()) {
      throw Error(ErrorCode::kExplosionGuard,
                  "focal tuple count exceeds the oracle cap of 10^7");
    }
    tuples *= s.focals.size();
  }

  // Odometer over focal indices with per-depth prefix intersections and
  // prefix products, so each tuple costs one step at the changed depth.
  const std::size_t n = sources.size();
  std::vector<std::size_t> index(n, 0);
  std::vector<Mask> prefix_mask(n + 1);
  std::vector<Rational> prefix_weight(n + 1);
  prefix_mask[0] = frame.full_mask();
  prefix_weight[0] = 1;
  auto refresh = [&](std::size_t from) {
    for (std::size_t d = from; d < n; ++d) {
      const ExactFocal& f = sources[d].focals[index[d]];
      prefix_mask[d + 1] = prefix_mask[d] & f.mask;
      prefix_weight[d + 1] = prefix_weight[d] * f.mass;
    }
  };

  std::map<Mask, Rational> sums;
  Rational conflict = 0;
  Rational total = 0;
  refresh(0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    const Rational& w = prefix_weight[n];
    total += w;
    if (prefix_mask[n] == 0) {
      conflict += w;
    } else {
      sums[prefix_mask[n]] += w;
    }
    // Advance the odometer, last source fastest.
    std::size_t d = n;
    while (d > 0) {
      --d;
      if (++index[d] < sources[d].focals.size()) break;
      index[d] = 0;
    }
    refresh(d);
  }

  const Rational kept = total - conflict;
  if (kept <= 0) {
    throw TotalConflictError(1.0, 0);
  }
  ExactFusion out{ExactMass{frame, {}}, conflict / total, tuples};
  for (auto& [mask, sum] : sums) {
    if (sum != 0) out.result.focals.push_back({mask, sum / kept});
  }
  return out;
}

MassFunction OracleFuseAll(std::span<const MassFunction> sources) {
  std::vector<ExactMass> exact;
  exact.reserve(sources.size());
  for (const auto& s : sources) exact.push_back(ToExact(s));
  ExactFusion fused = OracleFuseAllExact(exact);
  if (fused.conflict.convert_to<double>() >= kTotalConflictThreshold) {
    throw TotalConflictError(fused.conflict.convert_to<double>(), 0);
  }
  return ToMassFunction(fused.result);
}

}  // namespace dsfuse

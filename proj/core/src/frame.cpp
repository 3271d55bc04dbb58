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

#include "dsfuse/frame.hpp"

#include <bit>
#include <string>
#include <unordered_map>
#include <utility>

#include "dsfuse/error.hpp"

namespace dsfuse {

struct Frame::Impl {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  Mask full;
};

Frame::Frame(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Frame MakeFrame(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::kEmptyFrame, "a frame needs at least one label");
  }
  if (labels.size() > kMaxFrameSize) {
    throw Error(ErrorCode::kFrameTooLarge,
                "a frame holds at most 64 labels, got " +
                    std::to_string(labels.size()));
  }
  auto impl = std::make_shared<Frame::Impl>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw Error(ErrorCode::kEmptyLabel,
                  "label at position " + std::to_string(i) + " is empty");
    }
    if (!impl->index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "duplicate label '" + labels[i] + "'");
    }
  }
  impl->full = labels.size() == 64 ? ~Mask{0}
                                   : (Mask{1} << labels.size()) - 1;
  impl->labels = std::move(labels);
  return Frame(std::move(impl));
}

std::size_t Frame::size() const noexcept { return impl_->labels.size(); }

std::span<const std::string> Frame::labels() const noexcept {
  return impl_->labels;
}

const std::string& Frame::label(std::size_t index) const {
  return impl_->labels.at(index);
}

std::optional<std::size_t> Frame::IndexOf(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Mask Frame::full_mask() const noexcept { return impl_->full; }

Subset Frame::Full() const { return Subset(*this, impl_->full); }

Subset Frame::Empty() const { return Subset(*this, 0); }

namespace {

template <typename Range>
Mask MaskOf(const Frame& frame, const Range& labels) {
  Mask mask = 0;
  for (const auto& label : labels) {
    auto index = frame.IndexOf(label);
    if (!index) {
      throw Error(ErrorCode::kUnknownLabel,
                  "unknown label '" + std::string(label) + "'");
    }
    mask |= Mask{1} << *index;
  }
  return mask;
}

}  // namespace

Subset Frame::SubsetOf(std::span<const std::string> labels) const {
  return Subset(*this, MaskOf(*this, labels));
}

Subset Frame::SubsetOf(std::initializer_list<std::string_view> labels) const {
  return Subset(*this, MaskOf(*this, labels));
}

Subset Frame::FromMask(Mask mask) const {
  if ((mask & ~impl_->full) != 0) {
    throw Error(ErrorCode::kUnknownLabel,
                "mask has members outside the frame");
  }
  return Subset(*this, mask);
}

bool Frame::SameLabels(const Frame& other) const noexcept {
  return impl_->labels == other.impl_->labels;
}

std::size_t Subset::size() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::string> Subset::Labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (Contains(i)) out.push_back(frame_.label(i));
  }
  return out;
}

void RequireSameFrame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kFrameMismatch,
                "operands belong to different frames");
  }
}

Subset Intersect(const Subset& a, const Subset& b) {
  RequireSameFrame(a.frame(), b.frame());
  return Subset(a.frame(), a.mask() & b.mask());
}

Subset Union(const Subset& a, const Subset& b) {
  RequireSameFrame(a.frame(), b.frame());
  return Subset(a.frame(), a.mask() | b.mask());
}

Subset Complement(const Subset& a) {
  return Subset(a.frame(), ~a.mask() & a.frame().full_mask());
}

bool IsEmpty(const Subset& a) noexcept { return a.empty(); }

bool IsSubset(const Subset& a, const Subset& b) {
  RequireSameFrame(a.frame(), b.frame());
  return (a.mask() & ~b.mask()) == 0;
}

std::string ToString(const Subset& s) {
  if (s.empty()) return "∅";
  if (s.full()) return "Θ";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.frame().size(); ++i) {
    if (!s.Contains(i)) continue;
    if (!first) out += ',';
    out += s.frame().label(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string LabelKey(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.frame().size(); ++i) {
    if (!s.Contains(i)) continue;
    if (!out.empty()) out += '+';
    out += s.frame().label(i);
  }
  return out;
}

}  // namespace dsfuse

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

#ifndef DSFUSE_FRAME_HPP_
#define DSFUSE_FRAME_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsfuse {

class Subset;

// Bit i of a mask stands for the i-th label of the frame.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxFrameSize = 64;

// An ordered frame of discernment. Frames are cheap immutable handles;
// copies share identity, while two MakeFrame calls with equal labels
// produce distinct (incompatible) frames.
class Frame {
 public:
  std::size_t size() const noexcept;
  std::span<const std::string> labels() const noexcept;
  const std::string& label(std::size_t index) const;
  std::optional<std::size_t> IndexOf(std::string_view label) const;

  Mask full_mask() const noexcept;

  Subset Full() const;
  Subset Empty() const;
  // Throws kUnknownLabel if any label is absent.
  Subset SubsetOf(std::span<const std::string> labels) const;
  Subset SubsetOf(std::initializer_list<std::string_view> labels) const;
  // Throws kUnknownLabel if the mask has bits outside the frame.
  Subset FromMask(Mask mask) const;

  // Identity comparison.
  friend bool operator==(const Frame& a, const Frame& b) noexcept {
    return a.impl_ == b.impl_;
  }
  bool SameLabels(const Frame& other) const noexcept;

 private:
  struct Impl;
  explicit Frame(std::shared_ptr<const Impl> impl);
  friend Frame MakeFrame(std::vector<std::string> labels);

  std::shared_ptr<const Impl> impl_;
};

// Errors: kEmptyFrame, kFrameTooLarge, kEmptyLabel, kDuplicateLabel.
Frame MakeFrame(std::vector<std::string> labels);

class Subset {
 public:
  Subset(Frame frame, Mask mask) noexcept
      : frame_(std::move(frame)), mask_(mask) {}

  const Frame& frame() const noexcept { return frame_; }
  Mask mask() const noexcept { return mask_; }

  bool empty() const noexcept { return mask_ == 0; }
  bool full() const noexcept { return mask_ == frame_.full_mask(); }
  std::size_t size() const noexcept;
  bool Contains(std::size_t index) const noexcept {
    return index < 64 && ((mask_ >> index) & 1u) != 0;
  }
  // Member labels in frame order.
  std::vector<std::string> Labels() const;

  friend bool operator==(const Subset& a, const Subset& b) noexcept {
    return a.frame_ == b.frame_ && a.mask_ == b.mask_;
  }

 private:
  Frame frame_;
  Mask mask_;
};

Subset Intersect(const Subset& a, const Subset& b);
Subset Union(const Subset& a, const Subset& b);
Subset Complement(const Subset& a);
bool IsEmpty(const Subset& a) noexcept;
// True when a ⊆ b.
bool IsSubset(const Subset& a, const Subset& b);

// Throws kFrameMismatch unless both frames are the same frame.
void RequireSameFrame(const Frame& a, const Frame& b);

// "{L,B}", with "Θ" for the full set and "∅" for the empty set.
std::string ToString(const Subset& s);
// Labels in frame order joined by '+', e.g. "L+B". Empty for ∅.
std::string LabelKey(const Subset& s);

}  // namespace dsfuse

#endif  // DSFUSE_FRAME_HPP_

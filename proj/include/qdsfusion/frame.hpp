#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qds {

// A subset of a frame of discernment, bit i set <=> hypothesis i is a member.
struct FocalSet {
  std::uint64_t bits = 0;

  constexpr bool empty() const noexcept { return bits == 0; }
  constexpr int cardinality() const noexcept { return std::popcount(bits); }
  constexpr bool contains(std::size_t index) const noexcept {
    return (bits >> index) & 1U;
  }

  friend constexpr FocalSet operator&(FocalSet a, FocalSet b) noexcept {
    return {a.bits & b.bits};
  }
  friend constexpr FocalSet operator|(FocalSet a, FocalSet b) noexcept {
    return {a.bits | b.bits};
  }
  friend constexpr bool operator==(FocalSet, FocalSet) = default;
  friend constexpr auto operator<=>(FocalSet, FocalSet) = default;
};

// Ordered set of mutually exclusive hypotheses. Copies share the label
// storage, so passing frames around by value is cheap.
class Frame {
 public:
  static constexpr std::size_t kMaxSize = 64;

  // Throws InvalidFrame on empty, duplicate, or too many labels.
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  std::span<const std::string> labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t index) const { return labels_->at(index); }

  std::optional<std::size_t> index_of(std::string_view label) const noexcept;

  // The whole frame, Theta.
  FocalSet universe() const noexcept;
  FocalSet singleton(std::size_t index) const;

  // Throws UnknownLabel for labels outside the frame.
  FocalSet subset(std::span<const std::string> labels) const;

  // Parses "A,C" style subset strings; surrounding whitespace is ignored.
  FocalSet parse_subset(std::string_view text) const;

  // Members joined with ',' in frame order, e.g. "A,C".
  std::string format(FocalSet set) const;

  bool same_as(const Frame& other) const noexcept;

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

inline bool operator==(const Frame& a, const Frame& b) noexcept { return a.same_as(b); }

}  // namespace qds

#include "qdsfusion/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "qdsfusion/error.hpp"

namespace qds {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorKind::InvalidFrame, "frame must contain at least one hypothesis");
  }
  if (labels.size() > kMaxSize) {
    throw Error(ErrorKind::InvalidFrame,
                fmt::format("frame has {} hypotheses, at most {} are supported",
                            labels.size(), kMaxSize));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw Error(ErrorKind::InvalidFrame, "hypothesis labels must be nonempty");
    }
    if (label.find(',') != std::string::npos || trim(label) != label) {
      throw Error(ErrorKind::InvalidFrame,
                  fmt::format("label '{}' contains a comma or surrounding whitespace", label));
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::InvalidFrame, fmt::format("duplicate label '{}'", label));
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const noexcept {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

FocalSet Frame::universe() const noexcept {
  return {size() == kMaxSize ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1};
}

FocalSet Frame::singleton(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("hypothesis index {} outside frame of size {}", index, size()));
  }
  return {std::uint64_t{1} << index};
}

FocalSet Frame::subset(std::span<const std::string> labels) const {
  FocalSet out;
  for (const auto& label : labels) {
    const auto index = index_of(label);
    if (!index) {
      throw Error(ErrorKind::UnknownLabel, fmt::format("unknown label '{}'", label));
    }
    out = out | FocalSet{std::uint64_t{1} << *index};
  }
  return out;
}

FocalSet Frame::parse_subset(std::string_view text) const {
  FocalSet out;
  while (true) {
    const auto comma = text.find(',');
    const auto part = trim(text.substr(0, comma));
    if (!part.empty()) {
      const auto index = index_of(part);
      if (!index) {
        throw Error(ErrorKind::UnknownLabel, fmt::format("unknown label '{}'", part));
      }
      out = out | FocalSet{std::uint64_t{1} << *index};
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string Frame::format(FocalSet set) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!set.contains(i)) continue;
    if (!out.empty()) out += ',';
    out += (*labels_)[i];
  }
  return out;
}

bool Frame::same_as(const Frame& other) const noexcept {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

}  // namespace qds

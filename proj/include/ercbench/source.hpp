// ercbench: ERC-compliance fault injection and auditing benchmark toolkit
// Copyright 2026 The ercbench Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ercbench {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Half-open byte range [start, end) into one source file, with 1-based line numbers.
struct SourceSpan {
  std::string file_id;
  std::size_t start = 0;
  std::size_t end = 0;
  int start_line = 1;
  int end_line = 1;

  std::size_t length() const { return end - start; }
  bool contains(const SourceSpan& other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const SourceSpan& other) const {
    return start < other.end && other.start < end;
  }
};

inline std::string_view slice(std::string_view text, const SourceSpan& span) {
  if (span.start > text.size()) return {};
  return text.substr(span.start, std::min(span.end, text.size()) - span.start);
}

/// Physical line count: newline-delimited, counting a trailing partial line.
inline std::size_t count_lines(std::string_view text) {
  if (text.empty()) return 0;
  std::size_t n = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  if (text.back() != '\n') ++n;
  return n;
}

/// 1-based line number of a byte offset.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') starts_.push_back(i + 1);
    }
  }

  int line_of(std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    return static_cast<int>(it - starts_.begin());
  }

  int column_of(std::size_t offset) const {
    int line = line_of(offset);
    return static_cast<int>(offset - starts_[static_cast<std::size_t>(line - 1)]) + 1;
  }

 private:
  std::vector<std::size_t> starts_;
};

}  // namespace ercbench

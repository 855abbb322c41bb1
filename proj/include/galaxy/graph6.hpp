// Copyright 2026 The Galaxy Authors.
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

// graph6 reader and writer. Handles the one-byte (n <= 62) and four-byte
// (n <= 258047) size headers; the eight-byte form is rejected.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "galaxy/errors.hpp"
#include "galaxy/graph.hpp"

namespace galaxy {

namespace graph6_detail {

inline constexpr int kBias = 63;
inline constexpr std::uint64_t kShortLimit = 62;
inline constexpr std::uint64_t kMediumLimit = 258047;

}  // namespace graph6_detail

inline std::string write_graph6(const Graph& g) {
  using namespace graph6_detail;
  const std::uint64_t n = g.vertex_count();
  if (n > kMediumLimit) throw CapacityError("graph6 writer supports n <= 258047");
  std::string out;
  if (n <= kShortLimit) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  // Edges sorted by (u, v) are not in that order, so mark a bitmap first.
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::uint8_t> field((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::uint64_t pos = std::uint64_t{e.v} * (e.v - 1) / 2 + e.u;
    field[pos / 6] |= static_cast<std::uint8_t>(0x20 >> (pos % 6));
  }
  for (std::uint8_t chunk : field) out.push_back(static_cast<char>(chunk + kBias));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  using namespace graph6_detail;
  // Optional header and trailing newline are tolerated.
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }

  auto read_byte = [&](const char* what) -> int {
    if (pos >= text.size()) throw ParseError(std::string("truncated ") + what, pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("byte outside graph6 range", pos);
    ++pos;
    return c - kBias;
  };

  std::uint64_t n = 0;
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
  if (text[pos] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      throw ParseError("eight-byte size header not supported", pos);
    }
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(read_byte("size header"));
    if (n <= kShortLimit) throw ParseError("non-canonical size header", pos - 1);
  } else {
    n = static_cast<std::uint64_t>(read_byte("size header"));
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < need) {
    throw ParseError("truncated bit field: expected " + std::to_string(need) + " bytes",
                     text.size());
  }
  if (text.size() - pos > need) throw ParseError("trailing bytes after bit field", pos + need);

  EdgeList edges;
  std::uint64_t index = 0;
  Vertex u = 0;
  Vertex v = 1;
  for (std::size_t b = 0; b < need; ++b) {
    const std::size_t at = pos;
    const int chunk = read_byte("bit field");
    for (int k = 0; k < 6; ++k, ++index) {
      const bool set = (chunk & (0x20 >> k)) != 0;
      if (index >= bits) {
        if (set) throw ParseError("nonzero padding bits", at);
        continue;
      }
      if (set) edges.push_back({u, v});
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace galaxy

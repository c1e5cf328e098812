// Copyright 2026 The kronkit Authors
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

#include "kronkit/graph6.hpp"

#include "kronkit/errors.hpp"

namespace kronkit {
namespace {

constexpr int kBias = 63;
constexpr char kMaxChar = 126;
constexpr std::size_t kSmallMax = 62;
constexpr std::size_t kMediumMax = 258047;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos, std::size_t offset_base) {
  const char c = text[pos];
  if (c < kBias || c > kMaxChar) {
    throw ParseError("graph6 character out of range", offset_base + pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::size_t order = 0;
  std::size_t pos = 0;
  if (text[0] != kMaxChar) {
    order = static_cast<std::size_t>(sextet(text, 0, base));
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("truncated graph6 size header", base + text.size());
    if (text[1] == kMaxChar) {
      throw ParseError("graph6 orders above 258047 are not supported", base + 1);
    }
    for (std::size_t i = 1; i < 4; ++i) {
      order = (order << 6) | static_cast<std::size_t>(sextet(text, i, base));
    }
    if (order <= kSmallMax) throw ParseError("non-canonical graph6 size header", base);
    pos = 4;
  }
  if (order > kMaxOrder) {
    throw ParseError("graph order " + std::to_string(order) + " exceeds supported maximum", base);
  }

  const std::size_t bits = order * (order - (order > 0 ? 1 : 0)) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() - pos < payload) {
    throw ParseError("truncated graph6 payload: expected " + std::to_string(payload) +
                         " bytes after the header",
                     base + text.size());
  }
  if (text.size() - pos > payload) throw ParseError("trailing bytes after graph6 payload", base + pos + payload);

  Graph g(order);
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + k / 6, base);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + k / 6;
    const int chunk = sextet(text, last, base);
    if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw ParseError("nonzero padding bits in graph6 payload", base + last);
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxOrder || n > kMediumMax) {
    throw SizeLimitError("graph6 encoding supports orders up to " + std::to_string(kMaxOrder), n);
  }
  std::string out;
  if (n <= kSmallMax) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kMaxChar);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::optional<CorpusEntry> Graph6Reader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      return CorpusEntry{line_, parse_graph6(line)};
    } catch (const ParseError& e) {
      return CorpusEntry{line_, CorpusError{line_, e.what()}};
    } catch (const SizeLimitError& e) {
      return CorpusEntry{line_, CorpusError{line_, e.what()}};
    }
  }
  return std::nullopt;
}

}  // namespace kronkit

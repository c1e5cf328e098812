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

#ifndef KRONKIT_GRAPH6_HPP_
#define KRONKIT_GRAPH6_HPP_

// graph6 text encoding (McKay's nauty format).
//
// A graph6 string is N(n) followed by the upper triangle of the adjacency
// matrix, column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six
// bits per byte, most significant bit first, zero padded, each byte offset
// by 63. N(n) is the single byte n+63 for n <= 62 and '~' followed by three
// 6-bit bytes for 63 <= n <= 258047. The optional ">>graph6<<" prefix is
// accepted on input and never written.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "kronkit/graph.hpp"

namespace kronkit {

// Throws ParseError naming the byte offset on a bad header, a character
// outside '?'..'~', a truncated or overlong payload, or nonzero padding.
Graph parse_graph6(std::string_view text);

// Throws SizeLimitError if g.order() exceeds kMaxOrder.
std::string encode_graph6(const Graph& g);

// One line of a graph6 stream: either a graph or a parse failure.
struct CorpusError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct CorpusEntry {
  std::size_t line = 0;  // 1-based
  std::variant<Graph, CorpusError> value;

  bool ok() const { return std::holds_alternative<Graph>(value); }
  const Graph& graph() const { return std::get<Graph>(value); }
  const CorpusError& error() const { return std::get<CorpusError>(value); }
};

// Lazily decodes newline-delimited graph6 from a stream. Blank lines are
// skipped; CR before LF is stripped. Malformed lines come back as
// CorpusError entries and reading continues.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(&in) {}

  // nullopt at end of stream.
  std::optional<CorpusEntry> next();

 private:
  std::istream* in_;
  std::size_t line_ = 0;
};

}  // namespace kronkit

#endif  // KRONKIT_GRAPH6_HPP_

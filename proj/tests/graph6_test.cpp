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

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "kronkit/errors.hpp"

namespace kronkit {
namespace {

TEST(Graph6Test, KnownStrings) {
  EXPECT_EQ(encode_graph6(make_complete(1)), "@");
  EXPECT_EQ(encode_graph6(make_complete(2)), "A_");
  EXPECT_EQ(parse_graph6("A_"), make_complete(2));
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), make_complete(2));
}

TEST(Graph6Test, RoundTripFiveVertexExample) {
  const Graph g = parse_graph6("D?{");
  g.validate();
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(encode_graph6(g), "D?{");
}

TEST(Graph6Test, MalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  try {
    parse_graph6("D?");
    FAIL() << "truncated payload accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    parse_graph6("A\x7f");
    FAIL() << "bad character accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_graph6("A_?"), ParseError);   // trailing byte
  EXPECT_THROW(parse_graph6("A`"), ParseError);    // padding bit set
  EXPECT_THROW(parse_graph6("~??"), ParseError);   // short size header
  EXPECT_THROW(parse_graph6(" A_"), ParseError);
}

TEST(Graph6Test, ExtendedSizeHeader) {
  const Graph c = make_cycle(100);
  const std::string text = encode_graph6(c);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph6(text), c);
}

TEST(Graph6Test, RandomRoundTrip) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(rng() % 11, 0.5, rng());
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
  }
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(rng() % 63, 0.3, rng());
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6Test, StreamingReader) {
  std::istringstream in("A_\r\n\nD?{\nnot graph6\n@\n");
  Graph6Reader reader(in);
  std::vector<CorpusEntry> entries;
  while (auto e = reader.next()) entries.push_back(std::move(*e));
  ASSERT_EQ(entries.size(), 4u);
  EXPECT_TRUE(entries[0].ok());
  EXPECT_EQ(entries[0].line, 1u);
  EXPECT_EQ(entries[1].line, 3u);
  EXPECT_FALSE(entries[2].ok());
  EXPECT_EQ(entries[2].error().line, 4u);
  EXPECT_EQ(entries[3].graph(), make_complete(1));

  std::istringstream empty("");
  EXPECT_FALSE(Graph6Reader(empty).next().has_value());
}

}  // namespace
}  // namespace kronkit

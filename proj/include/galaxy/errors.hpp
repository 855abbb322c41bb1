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

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace galaxy {

using Vertex = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested size exceeds what the toolkit is willing to materialize.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Input graph does not have the structure an operation requires.
class StructureError : public Error {
 public:
  StructureError(const std::string& what, Vertex vertex)
      : Error(what + " (vertex " + std::to_string(vertex) + ")"),
        vertex_(vertex) {}

  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

// A tripartite witness violates one of its three conditions.
class WitnessError : public Error {
 public:
  WitnessError(int condition, Vertex vertex, const std::string& what)
      : Error("witness condition " + std::to_string(condition) +
              " violated at vertex " + std::to_string(vertex) + ": " + what),
        condition_(condition),
        vertex_(vertex) {}

  int condition() const { return condition_; }
  Vertex vertex() const { return vertex_; }

 private:
  int condition_;
  Vertex vertex_;
};

class ColoringError : public Error {
 public:
  ColoringError(Vertex u, Vertex v)
      : Error("coloring is not proper on the square: vertices " +
              std::to_string(u) + " and " + std::to_string(v) +
              " are within distance 2 and share a color"),
        u_(u),
        v_(v) {}

  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

 private:
  Vertex u_;
  Vertex v_;
};

// A construction produced something the verifier rejects. Always a bug.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// The exact search ran out of node budget before reaching a verdict.
class InconclusiveError : public Error {
 public:
  explicit InconclusiveError(std::uint64_t nodes)
      : Error("search budget exhausted after " + std::to_string(nodes) +
              " nodes"),
        nodes_(nodes) {}

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

}  // namespace galaxy

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral_gate {

// Base of every error raised by the library. Each subclass corresponds to one
// documented failure mode of a public operation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LoopEdge : public Error {
 public:
  explicit LoopEdge(int vertex)
      : Error("loop edge at vertex " + std::to_string(vertex)), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(int vertex, int order)
      : Error("vertex " + std::to_string(vertex) + " out of range for order " +
              std::to_string(order)) {}
};

class OverlappingSets : public Error {
 public:
  OverlappingSets() : Error("vertex sets overlap") {}
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class EdgeNotPresent : public Error {
 public:
  EdgeNotPresent(int u, int v)
      : Error("edge multiset exceeds stored multiplicity of {" + std::to_string(u) +
              "," + std::to_string(v) + "}") {}
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class SingleVertex : public Error {
 public:
  SingleVertex() : Error("graph has fewer than two vertices") {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class TooSmall : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is disconnected") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class UndecidedClass : public Error {
 public:
  UndecidedClass() : Error("class membership undecided: exhaustive stage needs n <= 24") {}
};

class MalformedEncoding : public Error {
 public:
  MalformedEncoding(const std::string& what, std::size_t offset)
      : Error("malformed encoding at byte " + std::to_string(offset) + ": " + what),
        reason_(what),
        offset_(offset) {}
  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

}  // namespace spectral_gate

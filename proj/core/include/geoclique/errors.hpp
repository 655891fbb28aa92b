#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace geoclique {

using VertexId = std::size_t;

// Malformed input: bad JSON, wrong field type, out-of-range index.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive routine was asked to run above its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : std::runtime_error(what + " (size " + std::to_string(size) + " > cap " +
                           std::to_string(cap) + ")"),
        size_(size),
        cap_(cap) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

// A graph that had to be bipartite was not. Carries an odd cycle.
class NotBipartite : public std::runtime_error {
 public:
  explicit NotBipartite(std::vector<VertexId> odd_cycle)
      : std::runtime_error("graph is not bipartite"), odd_cycle_(std::move(odd_cycle)) {}
  const std::vector<VertexId>& odd_cycle() const { return odd_cycle_; }

 private:
  std::vector<VertexId> odd_cycle_;
};

// Evidence that the input has two anticomplete odd cycles, so it cannot be a
// disk graph complement. Both cycles are given in the caller's vertex ids.
class IocpViolation : public std::runtime_error {
 public:
  IocpViolation(std::vector<VertexId> first, std::vector<VertexId> second,
                const std::string& what = "input has two anticomplete odd cycles")
      : std::runtime_error(what),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::vector<VertexId>& first() const { return first_; }
  const std::vector<VertexId>& second() const { return second_; }

 private:
  std::vector<VertexId> first_;
  std::vector<VertexId> second_;
};

// The explicit block 2-colouring of a long-cycle trial was improper on an
// input that passed the anticomplete check. Should never fire.
class ColoringClaimViolation : public std::logic_error {
 public:
  ColoringClaimViolation(std::vector<VertexId> edge)
      : std::logic_error("explicit 2-colouring of the reduced graph is improper"),
        edge_(std::move(edge)) {}
  const std::vector<VertexId>& edge() const { return edge_; }

 private:
  std::vector<VertexId> edge_;
};

}  // namespace geoclique

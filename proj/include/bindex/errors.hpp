#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bindex {

// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Graph construction would exceed the vertex cap.
class size_error : public error {
public:
  using error::error;
};

// Input exceeds the practical limit of an exhaustive routine.
class limit_error : public error {
public:
  using error::error;
};

// Parameters outside the documented domain of an operation.
class domain_error : public error {
public:
  using error::error;
};

class equitability_error : public error {
public:
  equitability_error(std::size_t vertex, std::size_t block, std::size_t other_block,
                     const std::string& what)
      : error(what), vertex_(vertex), block_(block), other_block_(other_block) {}

  std::size_t vertex() const noexcept { return vertex_; }
  std::size_t block() const noexcept { return block_; }
  std::size_t other_block() const noexcept { return other_block_; }

private:
  std::size_t vertex_;
  std::size_t block_;
  std::size_t other_block_;
};

class convergence_error : public error {
public:
  convergence_error(double last_estimate, const std::string& what)
      : error(what), estimate_(last_estimate) {}

  double last_estimate() const noexcept { return estimate_; }

private:
  double estimate_;
};

class parse_error : public error {
public:
  parse_error(std::size_t offset, const std::string& what)
      : error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

} // namespace bindex

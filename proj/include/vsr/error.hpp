#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vsr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad vertex ids, invalid instances, wrong rule.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that does not follow one of the documented file formats.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

/// A documented precondition of an operation does not hold.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A configured exploration cap was exceeded. Never means "NO".
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A graph block failed series-parallel reduction.
class NotSeriesParallel : public Error {
 public:
  NotSeriesParallel(std::size_t block_index, std::vector<int> block_vertices);

  std::size_t block_index() const noexcept { return block_index_; }
  const std::vector<int>& block_vertices() const noexcept { return block_vertices_; }

 private:
  std::size_t block_index_;
  std::vector<int> block_vertices_;
};

/// The graph lies outside the class a specialised solver handles.
class NotInScope : public Error {
 public:
  using Error::Error;
};

}  // namespace vsr

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greymap {

// Every failure raised by the library derives from Error, so callers that
// only care about "something went wrong" can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// Raised by w_star when an interval weight straddles zero. Indices are 1-based.
class MixedSignWeight : public Error {
 public:
  MixedSignWeight(std::size_t row, std::size_t col)
      : Error("weight (" + std::to_string(row) + "," + std::to_string(col) +
              ") spans both signs; W* is undefined"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

// A row whose |w_ij * a_j| terms all vanish. Index is 1-based.
class DegenerateRow : public Error {
 public:
  explicit DegenerateRow(std::size_t row)
      : Error("row " + std::to_string(row) + " has zero absolute weighted sum"),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace greymap

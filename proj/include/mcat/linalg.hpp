// Exact dense linear algebra over a coefficient field, used for span
// computations (hom-space quotients, image closures, unit solving).
#pragma once

#include <optional>
#include <vector>

#include "mcat/field.hpp"

namespace mcat {

// Incrementally maintained reduced row echelon form. Row vectors are dense
// over FieldValue; the accumulated rows form a canonical basis of the span
// (each row monic at its pivot, pivots strictly increasing, pivot columns
// eliminated from all other rows), so two spans are equal iff their rows()
// are equal.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  // Adds the vector to the span. Returns true if it enlarged the span.
  bool add(std::vector<FieldValue> v);

  // Reduces v against the span; the remainder is zero iff v lies in the span.
  std::vector<FieldValue> reduce(std::vector<FieldValue> v) const;
  bool contains(const std::vector<FieldValue>& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  // Canonical RREF rows ordered by pivot column.
  const std::vector<std::vector<FieldValue>>& rows() const { return rows_; }

 private:
  std::size_t pivot_of(const std::vector<FieldValue>& row) const;
  std::size_t width_;
  std::vector<std::vector<FieldValue>> rows_;  // sorted by pivot column
};

// Solves A x = b exactly (A given by rows). Returns std::nullopt if
// inconsistent; if underdetermined, returns one solution (free variables 0).
std::optional<std::vector<FieldValue>> solve_linear(
    const std::vector<std::vector<FieldValue>>& rows_A,
    const std::vector<FieldValue>& b, FieldTag tag);

}  // namespace mcat

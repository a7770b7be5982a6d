#include "mcat/linalg.hpp"

#include <algorithm>

namespace mcat {

std::size_t RowSpace::pivot_of(const std::vector<FieldValue>& row) const {
  std::size_t p = 0;
  while (p < row.size() && field_is_zero(row[p])) ++p;
  return p;
}

std::vector<FieldValue> RowSpace::reduce(std::vector<FieldValue> v) const {
  for (const auto& r : rows_) {
    std::size_t p = pivot_of(r);
    if (p < width_ && !field_is_zero(v[p])) {
      FieldValue c = v[p];
      for (std::size_t k = p; k < width_; ++k)
        v[k] = field_sub(v[k], field_mul(c, r[k]));
    }
  }
  return v;
}

bool RowSpace::contains(const std::vector<FieldValue>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const FieldValue& x) { return field_is_zero(x); });
}

bool RowSpace::add(std::vector<FieldValue> v) {
  v = reduce(std::move(v));
  std::size_t p = pivot_of(v);
  if (p == width_) return false;
  FieldValue inv = field_inv(v[p]);
  for (std::size_t k = p; k < width_; ++k) v[k] = field_mul(v[k], inv);
  // Eliminate the new pivot column from existing rows to keep canonical RREF.
  for (auto& r : rows_) {
    if (!field_is_zero(r[p])) {
      FieldValue c = r[p];
      for (std::size_t k = p; k < width_; ++k)
        r[k] = field_sub(r[k], field_mul(c, v[k]));
    }
  }
  auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                             [this](const std::vector<FieldValue>& row, std::size_t piv) {
                               return pivot_of(row) < piv;
                             });
  rows_.insert(it, std::move(v));
  return true;
}

std::optional<std::vector<FieldValue>> solve_linear(
    const std::vector<std::vector<FieldValue>>& rows_A,
    const std::vector<FieldValue>& b, FieldTag tag) {
  // Row-reduce the augmented system [A | b] and read off one solution.
  std::size_t n_unknowns = rows_A.empty() ? 0 : rows_A[0].size();
  RowSpace space(n_unknowns + 1);
  for (std::size_t i = 0; i < rows_A.size(); ++i) {
    std::vector<FieldValue> row = rows_A[i];
    row.push_back(b[i]);
    space.add(std::move(row));
  }
  std::vector<FieldValue> x(n_unknowns, FieldValue::zero(tag));
  for (const auto& r : space.rows()) {
    std::size_t p = 0;
    while (p < r.size() && field_is_zero(r[p])) ++p;
    if (p == n_unknowns) return std::nullopt;  // 0 = nonzero: inconsistent
    // Free variables are zero, so the pivot variable equals the rhs entry.
    x[p] = r[n_unknowns];
  }
  // Verify (guards against free-variable interactions).
  for (std::size_t i = 0; i < rows_A.size(); ++i) {
    FieldValue acc = FieldValue::zero(tag);
    for (std::size_t j = 0; j < n_unknowns; ++j)
      acc = field_add(acc, field_mul(rows_A[i][j], x[j]));
    if (!(acc == b[i])) return std::nullopt;
  }
  return x;
}

}  // namespace mcat

#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<Perm> permutations(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

int coxeter_length(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

Perm transposition(int d, int pos) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[pos], p[pos + 1]);
  return p;
}

std::size_t perm_index(const std::vector<Perm>& all, const Perm& p) {
  auto it = std::find(all.begin(), all.end(), p);
  if (it == all.end()) throw std::logic_error("oracle: permutation not found");
  return static_cast<std::size_t>(it - all.begin());
}

std::vector<std::vector<std::size_t>> symmetric_group_table(int d) {
  auto all = permutations(d);
  std::vector<std::vector<std::size_t>> t(all.size(), std::vector<std::size_t>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      t[i][j] = perm_index(all, compose(all[i], all[j]));
  return t;
}

std::vector<WreathElem> wreath_z2_elements(int d) {
  auto perms = permutations(d);
  std::vector<WreathElem> out;
  for (int mask = 0; mask < (1 << d); ++mask) {
    std::vector<int> bits(d);
    for (int i = 0; i < d; ++i) bits[i] = (mask >> i) & 1;
    for (const auto& p : perms) out.push_back({bits, p});
  }
  return out;
}

WreathElem wreath_mul(const WreathElem& a, const WreathElem& b) {
  int d = static_cast<int>(a.bits.size());
  // p.y permutes the strand entries: (p.y)[i] = y[p^{-1}(i)].
  Perm pinv(d);
  for (int i = 0; i < d; ++i) pinv[a.perm[i]] = i;
  std::vector<int> bits(d);
  for (int i = 0; i < d; ++i) bits[i] = (a.bits[i] + b.bits[pinv[i]]) % 2;
  return {bits, compose(a.perm, b.perm)};
}

std::size_t wreath_index(const std::vector<WreathElem>& all, const WreathElem& e) {
  auto it = std::find(all.begin(), all.end(), e);
  if (it == all.end()) throw std::logic_error("oracle: wreath element not found");
  return static_cast<std::size_t>(it - all.begin());
}

std::vector<std::vector<std::size_t>> wreath_z2_table(int d) {
  auto all = wreath_z2_elements(d);
  std::vector<std::vector<std::size_t>> t(all.size(), std::vector<std::size_t>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      t[i][j] = wreath_index(all, wreath_mul(all[i], all[j]));
  return t;
}

std::size_t daha_d2_cumulative(int L) {
  std::size_t n = 0;
  for (int len : {0, 1})  // Coxeter lengths of the two elements of S_2
    for (int l1 = 0; l1 <= L; ++l1)
      for (int l2 = 0; l2 <= L; ++l2)
        if (l1 + l2 + len <= L) ++n;
  return n;
}

std::size_t awreath_z2_d2_cumulative(int L) {
  std::size_t n = 0;
  for (int len : {0, 1})
    for (int b1 : {0, 1})
      for (int b2 : {0, 1})
        for (int l1 = 0; l1 <= L; ++l1)
          for (int l2 = 0; l2 <= L; ++l2)
            if (l1 + l2 + b1 + b2 + len <= L) ++n;
  return n;
}

std::size_t braid_d2_cumulative(int L) {
  // Freely reduced words over {+1,-1} of length k>=1 are constant runs, so
  // exactly two per length; enumerate to make the closed form 2L+1 honest.
  std::size_t n = 1;  // the empty word
  for (int k = 1; k <= L; ++k) {
    std::size_t runs = 0;
    for (int sign : {+1, -1}) {
      (void)sign;
      ++runs;  // sigma^k and sigma^{-k}
    }
    n += runs;
  }
  return n;
}

std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows) {
  std::vector<std::vector<Rat>> out;
  for (auto& row : rows) {
    // Reduce against existing pivots.
    for (const auto& r : out) {
      std::size_t piv = 0;
      while (piv < r.size() && r[piv] == 0) ++piv;
      if (piv < r.size() && row[piv] != 0) {
        Rat c = row[piv];
        for (std::size_t k = 0; k < row.size(); ++k) row[k] -= c * r[k];
      }
    }
    std::size_t piv = 0;
    while (piv < row.size() && row[piv] == 0) ++piv;
    if (piv == row.size()) continue;
    Rat c = row[piv];
    for (auto& x : row) x /= c;
    // Back-eliminate the new pivot from earlier rows.
    for (auto& r : out) {
      if (r[piv] != 0) {
        Rat f = r[piv];
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= f * row[k];
      }
    }
    out.push_back(row);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    std::size_t pa = 0, pb = 0;
    while (pa < a.size() && a[pa] == 0) ++pa;
    while (pb < b.size() && b[pb] == 0) ++pb;
    return pa < pb;
  });
  return out;
}

}  // namespace oracle

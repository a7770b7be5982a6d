#include "mcat/ncalg.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "mcat/error.hpp"

namespace mcat {

bool deglex_less(const GenWord& a, const GenWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const GenWord& NCPolynomial::leading_word() const {
  if (terms.empty()) throw Error("zero polynomial has no leading word");
  return terms.front().first;
}

const FieldValue& NCPolynomial::leading_coeff() const {
  if (terms.empty()) throw Error("zero polynomial has no leading coefficient");
  return terms.front().second;
}

int NCPolynomial::degree() const {
  return terms.empty() ? -1 : static_cast<int>(terms.front().first.size());
}

NCPolynomial nc_make(std::vector<std::pair<GenWord, FieldValue>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return deglex_less(b.first, a.first); });
  std::vector<std::pair<GenWord, FieldValue>> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second = field_add(merged.back().second, t.second);
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const auto& t) { return field_is_zero(t.second); });
  return NCPolynomial{std::move(merged)};
}

NCPolynomial nc_monomial(GenWord w, FieldValue c) {
  if (field_is_zero(c)) return {};
  return NCPolynomial{{{std::move(w), std::move(c)}}};
}

NCPolynomial nc_add(const NCPolynomial& f, const NCPolynomial& g) {
  auto terms = f.terms;
  terms.insert(terms.end(), g.terms.begin(), g.terms.end());
  return nc_make(std::move(terms));
}

NCPolynomial nc_sub(const NCPolynomial& f, const NCPolynomial& g) {
  auto terms = f.terms;
  for (const auto& t : g.terms) terms.emplace_back(t.first, field_neg(t.second));
  return nc_make(std::move(terms));
}

NCPolynomial nc_scale(const FieldValue& c, const NCPolynomial& f) {
  if (field_is_zero(c)) return {};
  NCPolynomial out = f;
  for (auto& t : out.terms) t.second = field_mul(c, t.second);
  return out;
}

NCPolynomial nc_mul_word(const GenWord& u, const NCPolynomial& f, const GenWord& v) {
  NCPolynomial out = f;
  for (auto& t : out.terms) t.first = u + t.first + v;
  // Multiplying by a fixed word preserves the deglex order of the terms.
  return out;
}

NCPolynomial nc_mul(const NCPolynomial& f, const NCPolynomial& g) {
  std::vector<std::pair<GenWord, FieldValue>> terms;
  terms.reserve(f.terms.size() * g.terms.size());
  for (const auto& [uw, uc] : f.terms)
    for (const auto& [vw, vc] : g.terms) terms.emplace_back(uw + vw, field_mul(uc, vc));
  return nc_make(std::move(terms));
}

NCPolynomial nc_monic(const NCPolynomial& f) {
  if (f.is_zero()) return f;
  return nc_scale(field_inv(f.leading_coeff()), f);
}

namespace {

// Basis entry pool used during completion; dead entries were dislodged by
// inter-reduction and re-enter through the work list.
struct Entry {
  NCPolynomial poly;  // monic
  bool alive = false;
};

NCPolynomial reduce_pool(const NCPolynomial& f, const std::vector<Entry>& pool) {
  std::vector<std::pair<GenWord, FieldValue>> normal;
  NCPolynomial work = f;
  while (!work.is_zero()) {
    const GenWord& w = work.terms.front().first;
    const Entry* hit = nullptr;
    std::size_t pos = 0;
    for (const Entry& e : pool) {
      if (!e.alive) continue;
      std::size_t at = w.find(e.poly.leading_word());
      if (at != GenWord::npos) {
        hit = &e;
        pos = at;
        break;
      }
    }
    if (!hit) {
      normal.push_back(work.terms.front());
      work.terms.erase(work.terms.begin());
      continue;
    }
    const GenWord& lw = hit->poly.leading_word();
    NCPolynomial rewrite = nc_scale(
        work.terms.front().second,
        nc_mul_word(w.substr(0, pos), hit->poly, w.substr(pos + lw.size())));
    work = nc_sub(work, rewrite);
  }
  // Leading terms were peeled off in strictly decreasing order.
  return NCPolynomial{std::move(normal)};
}

// (overlap length, overlap word, first id, second id, overlap size k).
using Ambiguity = std::tuple<int, GenWord, int, int, int>;

class Completion {
 public:
  explicit Completion(int max_degree) : max_degree_(max_degree) {}

  void insert(const NCPolynomial& f) {
    std::vector<NCPolynomial> work{f};
    while (!work.empty()) {
      NCPolynomial g = reduce_pool(work.front(), pool_);
      work.erase(work.begin());
      if (g.is_zero()) continue;
      g = nc_monic(g);
      if (++inserted_ > 100000) throw Error("completion work budget exceeded");
      const GenWord& lw = g.leading_word();
      // Full inter-reduction: dislodge entries that now contain lw anywhere.
      for (Entry& e : pool_) {
        if (!e.alive) continue;
        bool contains = std::any_of(e.poly.terms.begin(), e.poly.terms.end(), [&](const auto& t) {
          return t.first.find(lw) != GenWord::npos;
        });
        if (contains) {
          e.alive = false;
          work.push_back(std::move(e.poly));
          e.poly = {};
        }
      }
      int id = static_cast<int>(pool_.size());
      pool_.push_back({std::move(g), true});
      for (int other = 0; other <= id; ++other) {
        if (!pool_[other].alive) continue;
        queue_overlaps(other, id);
        if (other != id) queue_overlaps(id, other);
      }
    }
  }

  void run() {
    while (!queue_.empty()) {
      auto [len, word, i, j, k] = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!pool_[i].alive || !pool_[j].alive) continue;
      NCPolynomial r = reduce_pool(spoly(i, j, k), pool_);
      if (!r.is_zero()) insert(r);
    }
  }

  // Re-checks every in-bound overlap of the final basis; any nonzero
  // remainder means the bookkeeping above missed an ambiguity.
  void verify() const {
    for (int i = 0; i < static_cast<int>(pool_.size()); ++i) {
      if (!pool_[i].alive) continue;
      for (int j = 0; j < static_cast<int>(pool_.size()); ++j) {
        if (!pool_[j].alive) continue;
        const GenWord& u = pool_[i].poly.leading_word();
        const GenWord& v = pool_[j].poly.leading_word();
        int kmax = static_cast<int>(std::min(u.size(), v.size())) - 1;
        for (int k = 1; k <= kmax; ++k) {
          if (u.compare(u.size() - k, k, v, 0, k) != 0) continue;
          if (static_cast<int>(u.size() + v.size()) - k > max_degree_) continue;
          if (!reduce_pool(spoly(i, j, k), pool_).is_zero())
            throw Error("internal: completion left an unresolved overlap in bound");
        }
      }
    }
  }

  GroebnerResult result() const {
    GroebnerResult out;
    for (const Entry& e : pool_)
      if (e.alive) out.basis.push_back(e.poly);
    std::sort(out.basis.begin(), out.basis.end(), [](const auto& a, const auto& b) {
      return deglex_less(a.leading_word(), b.leading_word());
    });
    out.max_degree = max_degree_;
    out.verified_degree = max_degree_;
    out.truncated = truncated_;
    return out;
  }

 private:
  NCPolynomial spoly(int i, int j, int k) const {
    const GenWord& u = pool_[i].poly.leading_word();
    const GenWord& v = pool_[j].poly.leading_word();
    return nc_sub(nc_mul_word({}, pool_[i].poly, v.substr(k)),
                  nc_mul_word(u.substr(0, u.size() - k), pool_[j].poly, {}));
  }

  void queue_overlaps(int i, int j) {
    const GenWord& u = pool_[i].poly.leading_word();
    const GenWord& v = pool_[j].poly.leading_word();
    int kmax = static_cast<int>(std::min(u.size(), v.size())) - 1;
    for (int k = 1; k <= kmax; ++k) {
      if (u.compare(u.size() - k, k, v, 0, k) != 0) continue;
      GenWord word = u + v.substr(k);
      if (static_cast<int>(word.size()) > max_degree_) {
        truncated_ = true;
        continue;
      }
      queue_.insert({static_cast<int>(word.size()), std::move(word), i, j, k});
    }
  }

  int max_degree_;
  std::vector<Entry> pool_;
  std::set<Ambiguity> queue_;
  bool truncated_ = false;
  long inserted_ = 0;
};

}  // namespace

NCPolynomial nc_reduce(const NCPolynomial& f, const std::vector<NCPolynomial>& basis) {
  std::vector<Entry> pool;
  pool.reserve(basis.size());
  for (const NCPolynomial& g : basis) {
    if (g.is_zero()) throw Error("cannot reduce modulo the zero polynomial");
    pool.push_back({nc_monic(g), true});
  }
  return reduce_pool(f, pool);
}

GroebnerResult nc_complete(const std::vector<NCPolynomial>& input, int max_degree) {
  if (max_degree < 1) throw Error("completion degree bound must be at least 1");
  Completion c(max_degree);
  for (const NCPolynomial& f : input) c.insert(f);
  c.run();
  c.verify();
  return c.result();
}

std::vector<std::size_t> normal_word_counts(const GroebnerResult& gb, int n_generators,
                                            int max_degree) {
  std::vector<GenWord> leading;
  leading.reserve(gb.basis.size());
  for (const auto& g : gb.basis) leading.push_back(g.leading_word());

  std::vector<std::size_t> counts(max_degree + 1, 0);
  std::vector<GenWord> frontier{GenWord{}};
  counts[0] = leading.end() == std::find(leading.begin(), leading.end(), GenWord{}) ? 1 : 0;
  for (int len = 1; len <= max_degree && !frontier.empty(); ++len) {
    std::vector<GenWord> next;
    for (const GenWord& w : frontier) {
      for (int g = 0; g < n_generators; ++g) {
        GenWord wa = w + static_cast<char>(g);
        // w is normal, so any forbidden subword of wa must be a suffix.
        bool blocked = std::any_of(leading.begin(), leading.end(), [&](const GenWord& l) {
          return l.size() <= wa.size() &&
                 wa.compare(wa.size() - l.size(), l.size(), l) == 0;
        });
        if (!blocked) next.push_back(std::move(wa));
      }
    }
    counts[len] = next.size();
    frontier = std::move(next);
  }
  return counts;
}

DimensionResult quotient_dimension(const GroebnerResult& gb, int n_generators) {
  DimensionResult out;
  out.counts = normal_word_counts(gb, n_generators, gb.max_degree);
  out.cumulative.resize(out.counts.size());
  std::size_t total = 0;
  for (std::size_t k = 0; k < out.counts.size(); ++k) {
    total += out.counts[k];
    out.cumulative[k] = total;
    if (out.counts[k] == 0 && out.zero_at < 0) out.zero_at = static_cast<int>(k);
  }
  if (out.zero_at >= 0) {
    out.finite = true;
    out.dimension = out.cumulative[out.zero_at];
  }
  return out;
}

NCPolynomial quotient_mul(const GroebnerResult& gb, const NCPolynomial& f,
                          const NCPolynomial& g) {
  NCPolynomial raw = nc_mul(f, g);
  if (raw.degree() > gb.max_degree)
    throw Error("product degree " + std::to_string(raw.degree()) +
                " exceeds the verified bound " + std::to_string(gb.max_degree));
  return nc_reduce(raw, gb.basis);
}

}  // namespace mcat

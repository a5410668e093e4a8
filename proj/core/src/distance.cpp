#include "bchlab/distance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bchlab/parallel.hpp"

namespace bchlab {

std::string_view to_string(DistanceMethod m) {
  switch (m) {
    case DistanceMethod::ColumnSearch: return "column-search";
    case DistanceMethod::RootCount: return "root-count";
    case DistanceMethod::DualEnum: return "dual-enum";
    case DistanceMethod::Exhaustive: return "exhaustive";
  }
  return "unknown";
}

DistanceMethod parse_method(std::string_view name) {
  for (auto m : {DistanceMethod::ColumnSearch, DistanceMethod::RootCount, DistanceMethod::DualEnum,
                 DistanceMethod::Exhaustive})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown distance method '" + std::string(name) + "'");
}

namespace {

// ---------------------------------------------------------------------------
// Column search

constexpr std::size_t kMaxRows = 16;
using Column = std::array<Elem, kMaxRows>;

class ColumnSearcher {
 public:
  ColumnSearcher(const FieldContext& f, const Matrix& h) : f_(f), rows_(h.rows()), n_(static_cast<std::uint32_t>(h.cols())) {
    if (rows_ > kMaxRows) throw std::invalid_argument("min_distance_by_columns: too many parity rows");
    cols_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      cols_[i].fill(kZero);
      for (std::size_t r = 0; r < rows_; ++r) cols_[i][r] = h(r, i);
    }
  }

  struct Hit {
    std::vector<std::uint32_t> support;
    std::vector<Elem> coeffs;
  };

  // Echelon basis of the columns chosen so far; comb[j] expresses vecs[j]
  // in terms of the chosen columns 0..j.
  struct State {
    std::vector<Column> vecs;
    std::vector<std::size_t> pivot;
    std::vector<std::vector<Elem>> comb;
    std::vector<std::uint32_t> chosen;
  };

  // Reduces column i against st; returns true if it vanishes.
  bool reduce(const State& st, std::uint32_t i, Column& v, std::vector<Elem>& c) const {
    v = cols_[i];
    const std::size_t d = st.vecs.size();
    c.assign(d + 1, kZero);
    c[d] = kOne;
    for (std::size_t j = 0; j < d; ++j) {
      const Elem factor = v[st.pivot[j]];
      if (factor.is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) v[r] = f_.sub(v[r], f_.mul(factor, st.vecs[j][r]));
      for (std::size_t t = 0; t <= j; ++t) c[t] = f_.sub(c[t], f_.mul(factor, st.comb[j][t]));
    }
    for (std::size_t r = 0; r < rows_; ++r)
      if (!v[r].is_zero()) return false;
    return true;
  }

  void push(State& st, std::uint32_t i, Column& v, std::vector<Elem>& c) const {
    std::size_t r0 = 0;
    while (v[r0].is_zero()) ++r0;
    const Elem scale = f_.inv(v[r0]);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = f_.mul(v[r], scale);
    for (auto& x : c) x = f_.mul(x, scale);
    st.vecs.push_back(v);
    st.pivot.push_back(r0);
    st.comb.push_back(c);
    st.chosen.push_back(i);
  }

  void pop(State& st) const {
    st.vecs.pop_back();
    st.pivot.pop_back();
    st.comb.pop_back();
    st.chosen.pop_back();
  }

  // Lexicographic DFS over supersets of st.chosen of total size w.
  bool dfs(State& st, std::uint32_t start, std::uint32_t w, Hit& hit) const {
    const std::size_t depth = st.chosen.size();
    Column v;
    std::vector<Elem> c;
    for (std::uint32_t i = start; i + (w - depth) <= n_; ++i) {
      const bool vanished = reduce(st, i, v, c);
      if (depth + 1 == w) {
        if (vanished) {
          hit.support = st.chosen;
          hit.support.push_back(i);
          hit.coeffs = c;
          return true;
        }
        continue;
      }
      if (vanished) continue;  // a smaller dependent set; excluded by the level order
      push(st, i, v, c);
      if (dfs(st, i + 1, w, hit)) return true;
      pop(st);
    }
    return false;
  }

  // Sets containing column 0 suffice: the code is cyclic, so any dependent
  // set has a shift through 0, and those come first lexicographically.
  std::optional<Hit> search_level(std::uint32_t w, unsigned threads) const {
    State base;
    Column v;
    std::vector<Elem> c;
    const bool zero_col = reduce(base, 0, v, c);
    if (w == 1) {
      if (zero_col) return Hit{{0}, {kOne}};
      return std::nullopt;
    }
    if (zero_col) return std::nullopt;
    push(base, 0, v, c);
    if (w == 2 || threads <= 1) {
      Hit hit;
      if (dfs(base, 1, w, hit)) return hit;
      return std::nullopt;
    }
    // Split on the second support element; keep the smallest one that hits.
    std::vector<std::optional<Hit>> hits(n_);
    std::atomic<std::uint32_t> best{n_};
    parallel_for(n_ - 1, threads, [&](std::size_t idx) {
      const auto i1 = static_cast<std::uint32_t>(idx + 1);
      if (i1 >= best.load(std::memory_order_relaxed)) return;
      State st = base;
      Column vv;
      std::vector<Elem> cc;
      if (reduce(st, i1, vv, cc)) return;
      push(st, i1, vv, cc);
      Hit hit;
      if (dfs(st, i1 + 1, w, hit)) {
        hits[i1] = std::move(hit);
        std::uint32_t cur = best.load();
        while (i1 < cur && !best.compare_exchange_weak(cur, i1)) {
        }
      }
    });
    for (std::uint32_t i1 = 1; i1 < n_; ++i1)
      if (hits[i1]) return hits[i1];
    return std::nullopt;
  }

 private:
  const FieldContext& f_;
  std::size_t rows_;
  std::uint32_t n_;
  std::vector<Column> cols_;
};

// ---------------------------------------------------------------------------
// Span enumeration. Words are visited projectively: the first nonzero
// coefficient is 1, scalar multiples share a weight. Coefficients come from
// ctx.subfield() in order, the last basis row varying fastest.

class SpanEnumerator {
 public:
  SpanEnumerator(const FieldContext& f, const Matrix& basis) : f_(f), k_(basis.rows()), n_(basis.cols()), q_(f.q()) {
    const auto& sub = f.subfield();
    scaled_.resize(k_ * q_ * n_);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::uint32_t c = 0; c < q_; ++c)
        for (std::size_t x = 0; x < n_; ++x) scaled_[(i * q_ + c) * n_ + x] = f.mul(sub[c], basis(i, x));
    // A unit fixes the leading row L and every digit but the last.
    for (std::size_t lead = 0; lead < k_; ++lead) {
      const std::size_t free = k_ - 1 - lead;
      std::uint64_t outer = 1;
      for (std::size_t t = 1; t < free; ++t) outer *= q_;
      const std::uint64_t per_unit = free == 0 ? 1 : q_;
      groups_.push_back({lead, units_, outer, per_unit, words_});
      units_ += outer;
      words_ += outer * per_unit;
    }
  }

  std::uint64_t unit_count() const { return units_; }
  std::uint64_t word_count() const { return words_; }
  std::size_t n() const { return n_; }

  // Calls visit(word_index, word) for each word of unit u.
  template <class Visit>
  void visit_unit(std::uint64_t u, std::vector<Elem>& partial, std::vector<Elem>& word, Visit&& visit) const {
    const Group& g = group_of(u);
    const std::uint64_t local = u - g.first_unit;
    const std::size_t free = k_ - 1 - g.lead;
    partial.assign(row(g.lead, 1), row(g.lead, 1) + n_);
    // Middle digits: rows lead+1 .. k-2, most significant first.
    std::uint64_t rest = local;
    for (std::size_t i = k_ - 1; free >= 2 && i-- > g.lead + 1;) {
      const auto c = static_cast<std::uint32_t>(rest % q_);
      rest /= q_;
      if (c == 0) continue;
      const Elem* r = row(i, c);
      for (std::size_t x = 0; x < n_; ++x) partial[x] = f_.add(partial[x], r[x]);
    }
    const std::uint64_t base_index = g.first_word + local * g.per_unit;
    if (free == 0) {
      visit(base_index, static_cast<const std::vector<Elem>&>(partial));
      return;
    }
    word.resize(n_);
    for (std::uint32_t c = 0; c < q_; ++c) {
      const Elem* r = row(k_ - 1, c);
      for (std::size_t x = 0; x < n_; ++x) word[x] = f_.add(partial[x], r[x]);
      visit(base_index + c, static_cast<const std::vector<Elem>&>(word));
    }
  }

  std::vector<Elem> word_at(std::uint64_t index) const {
    std::vector<Elem> partial, word, out;
    for (const Group& g : groups_) {
      const std::uint64_t count = g.units * g.per_unit;
      if (index < g.first_word || index >= g.first_word + count) continue;
      const std::uint64_t u = g.first_unit + (index - g.first_word) / g.per_unit;
      visit_unit(u, partial, word, [&](std::uint64_t i, const std::vector<Elem>& w) {
        if (i == index) out = w;
      });
    }
    return out;
  }

 private:
  struct Group {
    std::size_t lead;
    std::uint64_t first_unit, units, per_unit, first_word;
  };

  const Group& group_of(std::uint64_t u) const {
    auto it = std::upper_bound(groups_.begin(), groups_.end(), u,
                               [](std::uint64_t v, const Group& g) { return v < g.first_unit; });
    return *std::prev(it);
  }

  const Elem* row(std::size_t i, std::uint32_t c) const { return &scaled_[(i * q_ + c) * n_]; }

  const FieldContext& f_;
  std::size_t k_, n_;
  std::uint32_t q_;
  std::vector<Elem> scaled_;
  std::vector<Group> groups_;
  std::uint64_t units_ = 0, words_ = 0;
};

struct MinWord {
  std::uint32_t weight = std::numeric_limits<std::uint32_t>::max();
  std::uint64_t index = 0;
  bool better_than(const MinWord& o) const { return weight < o.weight || (weight == o.weight && index < o.index); }
};

constexpr std::uint64_t kUnitsPerBlock = 64;

MinWord span_min_weight(const SpanEnumerator& e, unsigned threads) {
  const std::uint64_t blocks = (e.unit_count() + kUnitsPerBlock - 1) / kUnitsPerBlock;
  MinWord best;
  std::mutex m;
  parallel_for(blocks, threads, [&](std::size_t b) {
    MinWord local;
    std::vector<Elem> partial, word;
    const std::uint64_t end = std::min<std::uint64_t>(e.unit_count(), (b + 1) * kUnitsPerBlock);
    for (std::uint64_t u = b * kUnitsPerBlock; u < end; ++u) {
      e.visit_unit(u, partial, word, [&](std::uint64_t idx, const std::vector<Elem>& w) {
        const auto wt = static_cast<std::uint32_t>(hamming_weight(w));
        const MinWord cand{wt, idx};
        if (wt > 0 && cand.better_than(local)) local = cand;
      });
    }
    std::lock_guard lock(m);
    if (local.better_than(best)) best = local;
  });
  return best;
}

void check_word_cap(std::uint32_t q, std::size_t k, std::uint64_t cap, const char* who) {
  const std::uint64_t total = checked_pow(q, static_cast<std::uint32_t>(k));
  if (total == 0 || total > cap)
    throw CapExceeded(std::string(who) + ": q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                      " words exceed the enumeration cap " + std::to_string(cap));
}

DistanceResult min_over_span(const FieldContext& f, const Matrix& basis, unsigned threads, DistanceMethod method,
                             Subject subject) {
  SpanEnumerator e(f, basis);
  const MinWord best = span_min_weight(e, threads);
  DistanceResult r;
  r.method = method;
  r.subject = subject;
  r.searched_up_to = static_cast<std::uint32_t>(basis.cols());
  if (best.weight == std::numeric_limits<std::uint32_t>::max()) return r;
  r.value = best.weight;
  r.witness = e.word_at(best.index);
  for (std::uint32_t i = 0; i < r.witness.size(); ++i)
    if (!r.witness[i].is_zero()) r.support.push_back(i);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

DistanceResult min_distance_by_columns(const BchCode& code, std::uint32_t w_max, const EngineOptions& options) {
  if (w_max < 1) throw std::invalid_argument("min_distance_by_columns: w_max must be positive");
  if (code.q() > options.column_search_max_q)
    throw CapExceeded("min_distance_by_columns: q = " + std::to_string(code.q()) + " exceeds cap " +
                      std::to_string(options.column_search_max_q));
  const FieldContext& f = code.field();
  const Matrix h = expanded_parity_matrix(code);
  ColumnSearcher searcher(f, h);

  DistanceResult r;
  r.method = DistanceMethod::ColumnSearch;
  r.subject = Subject::Code;
  const std::uint32_t limit = std::min(w_max, code.n());
  r.searched_up_to = limit;
  for (std::uint32_t w = 1; w <= limit; ++w) {
    auto hit = searcher.search_level(w, options.threads);
    if (!hit) continue;
    r.value = w;
    r.support = hit->support;
    r.witness.assign(code.n(), kZero);
    for (std::size_t t = 0; t < hit->support.size(); ++t) r.witness[hit->support[t]] = hit->coeffs[t];
    return r;
  }
  return r;
}

std::uint32_t root_count_weight(const FieldContext& f, std::uint32_t h, Elem a, Elem b) {
  const std::uint64_t N = f.group_order();
  const std::uint64_t q = f.q();
  const auto s1 = static_cast<std::uint32_t>((2 * std::uint64_t(h) + 2) * (q - 1) % N);
  const auto s2 = static_cast<std::uint32_t>((2 * std::uint64_t(h) + 1) * (q - 1) % N);
  const auto s3 = static_cast<std::uint32_t>((q - 1) % N);
  const auto n32 = static_cast<std::uint32_t>(N);
  const bool has_a = !a.is_zero(), has_b = !b.is_zero();
  std::uint32_t e1 = has_b ? f.log_unchecked(b) : 0;
  std::uint32_t e2 = has_a ? f.log_unchecked(a) : 0;
  std::uint32_t e3 = has_a ? static_cast<std::uint32_t>(q * e2 % N) : 0;
  const Elem c4 = has_b ? f.frobenius(b) : kZero;
  std::uint32_t roots = 0;
  auto step = [n32](std::uint32_t& e, std::uint32_t s) {
    e += s;
    if (e >= n32) e -= n32;
  };
  if (has_a && has_b) {
    for (std::uint64_t j = 0; j <= q; ++j) {
      Elem v = f.add(f.add(f.exp_unchecked(e1), f.exp_unchecked(e2)), f.add(f.exp_unchecked(e3), c4));
      roots += v.is_zero();
      step(e1, s1), step(e2, s2), step(e3, s3);
    }
  } else if (has_a) {
    for (std::uint64_t j = 0; j <= q; ++j) {
      roots += f.add(f.exp_unchecked(e2), f.exp_unchecked(e3)).is_zero();
      step(e2, s2), step(e3, s3);
    }
  } else if (has_b) {
    for (std::uint64_t j = 0; j <= q; ++j) {
      roots += f.add(f.exp_unchecked(e1), c4).is_zero();
      step(e1, s1);
    }
  } else {
    roots = static_cast<std::uint32_t>(q + 1);
  }
  return static_cast<std::uint32_t>(q + 1) - roots;
}

std::vector<std::pair<Elem, Elem>> trace_pair_representatives(const FieldContext& f, std::uint32_t h) {
  const std::uint64_t N = f.group_order();
  const std::uint64_t q = f.q();
  // The action is translation of (log a, log b) by the subgroup generated by
  // (q+1, q+1) (scalars) and (h(q-1), (h+1)(q-1)) (cyclic shift).
  std::uint64_t g_a = N, g_b_alone = N, g_b = N;
  for (std::uint64_t j = 0; j + 1 < q; ++j) {
    for (std::uint64_t t = 0; t <= q; ++t) {
      const std::uint64_t sa = ((q + 1) * j + std::uint64_t(h) * (q - 1) * t) % N;
      const std::uint64_t sb = ((q + 1) * j + (std::uint64_t(h) + 1) * (q - 1) * t) % N;
      g_a = std::gcd(g_a, sa);
      g_b_alone = std::gcd(g_b_alone, sb);
      if (sa == 0) g_b = std::gcd(g_b, sb);
    }
  }
  std::vector<std::pair<Elem, Elem>> reps;
  reps.reserve(g_b_alone + g_a * (g_b + 1));
  for (std::uint64_t b = 0; b < g_b_alone; ++b) reps.emplace_back(kZero, f.exp(b));
  for (std::uint64_t a = 0; a < g_a; ++a) {
    reps.emplace_back(f.exp(a), kZero);
    for (std::uint64_t b = 0; b < g_b; ++b) reps.emplace_back(f.exp(a), f.exp(b));
  }
  return reps;
}

DistanceResult dual_min_distance(const BchCode& code, DistanceMethod method, const EngineOptions& options) {
  const FieldContext& f = code.field();
  if (method == DistanceMethod::RootCount) {
    if (code.delta() != 3) throw std::invalid_argument("dual_min_distance: root count needs delta = 3");
    if (code.q() > options.root_count_max_q)
      throw CapExceeded("dual_min_distance: q = " + std::to_string(code.q()) + " exceeds root-count cap " +
                        std::to_string(options.root_count_max_q));
    const auto reps = trace_pair_representatives(f, code.h());
    constexpr std::size_t kBlock = 256;
    const std::size_t blocks = (reps.size() + kBlock - 1) / kBlock;
    MinWord best;
    std::mutex m;
    parallel_for(blocks, options.threads, [&](std::size_t b) {
      MinWord local;
      const std::size_t end = std::min(reps.size(), (b + 1) * kBlock);
      for (std::size_t i = b * kBlock; i < end; ++i) {
        const std::uint32_t wt = root_count_weight(f, code.h(), reps[i].first, reps[i].second);
        const MinWord cand{wt, i};
        if (wt > 0 && cand.better_than(local)) local = cand;
      }
      std::lock_guard lock(m);
      if (local.better_than(best)) best = local;
    });
    DistanceResult r;
    r.method = method;
    r.subject = Subject::Dual;
    r.searched_up_to = code.n();
    if (best.weight == std::numeric_limits<std::uint32_t>::max()) return r;
    const auto [a, b] = reps[best.index];
    r.value = best.weight;
    r.trace_pair = reps[best.index];
    r.witness = dual_codeword(code, a, b).word;
    for (std::uint32_t i = 0; i < r.witness.size(); ++i)
      if (!r.witness[i].is_zero()) r.support.push_back(i);
    return r;
  }
  if (method == DistanceMethod::DualEnum) {
    if (code.q() > options.dual_enum_max_q)
      throw CapExceeded("dual_min_distance: q = " + std::to_string(code.q()) + " exceeds dual-enum cap " +
                        std::to_string(options.dual_enum_max_q));
    const Matrix basis = nullspace(f, generator_matrix(code));
    check_word_cap(code.q(), basis.rows(), options.exhaustive_cap, "dual_min_distance");
    return min_over_span(f, basis, options.threads, DistanceMethod::DualEnum, Subject::Dual);
  }
  throw std::invalid_argument("dual_min_distance: method must be root-count or dual-enum");
}

DistanceResult exhaustive_min_distance(const FieldContext& f, const Matrix& generator, std::uint64_t cap,
                                       unsigned threads) {
  if (generator.rows() == 0) throw std::domain_error("exhaustive_min_distance: zero-dimensional code");
  check_word_cap(f.q(), generator.rows(), cap, "exhaustive_min_distance");
  return min_over_span(f, generator, threads, DistanceMethod::Exhaustive, Subject::Code);
}

bool verify_witness(const BchCode& code, const DistanceResult& r) {
  if (!r.value || r.witness.size() != code.n()) return false;
  const std::size_t wt = hamming_weight(r.witness);
  if (wt == 0 || wt != *r.value) return false;
  if (!r.support.empty()) {
    std::vector<std::uint32_t> nz;
    for (std::uint32_t i = 0; i < r.witness.size(); ++i)
      if (!r.witness[i].is_zero()) nz.push_back(i);
    if (nz != r.support) return false;
  }
  if (r.trace_pair && dual_codeword(code, r.trace_pair->first, r.trace_pair->second).word != r.witness) return false;
  return r.subject == Subject::Code ? code.contains(r.witness) : code.dual_contains(r.witness);
}

std::vector<std::uint64_t> weight_distribution(const FieldContext& f, const Matrix& basis, std::uint64_t cap) {
  std::vector<std::uint64_t> dist(basis.cols() + 1, 0);
  dist[0] = 1;
  if (basis.rows() == 0) return dist;
  check_word_cap(f.q(), basis.rows(), cap, "weight_distribution");
  SpanEnumerator e(f, basis);
  std::vector<Elem> partial, word;
  for (std::uint64_t u = 0; u < e.unit_count(); ++u)
    e.visit_unit(u, partial, word, [&](std::uint64_t, const std::vector<Elem>& w) { ++dist[hamming_weight(w)]; });
  for (std::size_t w = 1; w < dist.size(); ++w) dist[w] *= (f.q() - 1);
  return dist;
}

std::optional<std::uint32_t> min_distance_via_macwilliams(const BchCode& code, const EngineOptions& options) {
  using boost::multiprecision::cpp_int;
  if (code.k() == 0) return std::nullopt;
  const FieldContext& f = code.field();
  const Matrix dual_basis = nullspace(f, generator_matrix(code));
  const auto b = weight_distribution(f, dual_basis, options.exhaustive_cap);
  const std::uint32_t n = code.n();
  const cpp_int q = f.q();

  std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
  for (std::uint32_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (std::uint32_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : cpp_int(0));
  }
  std::vector<cpp_int> qm1_pow(n + 1, 1);
  for (std::uint32_t i = 1; i <= n; ++i) qm1_pow[i] = qm1_pow[i - 1] * (q - 1);
  cpp_int dual_size = 0;
  for (auto x : b) dual_size += x;

  for (std::uint32_t w = 1; w <= n; ++w) {
    cpp_int acc = 0;
    for (std::uint32_t j = 0; j <= n; ++j) {
      if (b[j] == 0) continue;
      cpp_int kraw = 0;  // Krawtchouk K_w(j)
      for (std::uint32_t i = 0; i <= std::min(w, j); ++i) {
        if (w - i > n - j) continue;
        cpp_int term = qm1_pow[w - i] * binom[j][i] * binom[n - j][w - i];
        if (i % 2) kraw -= term;
        else kraw += term;
      }
      acc += kraw * b[j];
    }
    if (acc % dual_size != 0) throw std::logic_error("MacWilliams transform is not integral");
    if (acc != 0) return w;
  }
  return std::nullopt;
}

}  // namespace bchlab

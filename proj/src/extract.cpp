#include "zetaforms/extract.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace zetaforms {

void ExtractionInstance::validate() const {
  if (k < 1 || N < 1 || M < 1) throw InvalidInput("ExtractionInstance: k, N, M must be >= 1");
  if (lambda.size() != static_cast<size_t>(k)) throw InvalidInput("ExtractionInstance: lambda must be k x N");
  for (const auto& row : lambda)
    if (row.size() != static_cast<size_t>(N)) throw InvalidInput("ExtractionInstance: lambda must be k x N");
  if (xi.size() != static_cast<size_t>(N + k - 1))
    throw InvalidInput("ExtractionInstance: xi must have N+k-1 entries");
  for (const auto& v : xi)
    if (v.size() != static_cast<size_t>(M)) throw InvalidInput("ExtractionInstance: xi entries live in Q^M");
}

std::vector<std::vector<Rat>> build_vectors(const ExtractionInstance& inst) {
  inst.validate();
  std::vector<std::vector<Rat>> out;
  out.reserve(inst.N);
  for (int j = 1; j <= inst.N; ++j) {
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(inst.k) * inst.M);
    for (int i = 1; i <= inst.k; ++i) {
      const Rat& l = inst.lambda[i - 1][j - 1];
      const auto& x = inst.xi_at(j + i - 1);
      for (int c = 0; c < inst.M; ++c) v.push_back(l * x[c]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

int rank_Q(const std::vector<std::vector<Rat>>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<std::vector<Rat>> m = vectors;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t row = 0; row < rows; ++row) {
      if (row == rank || m[row][col] == 0) continue;
      Rat f = m[row][col] / m[rank][col];
      for (size_t c2 = col; c2 < cols; ++c2) m[row][c2] -= f * m[rank][c2];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

// Row space over Q with exact membership tests.
class SpanBasis {
 public:
  explicit SpanBasis(size_t dim) : dim_(dim) {}

  size_t size() const { return rows_.size(); }

  bool contains(const std::vector<Rat>& v) const {
    std::vector<Rat> w = reduce(v);
    for (const auto& x : w)
      if (x != 0) return false;
    return true;
  }

  // returns false when v was already in the span
  bool add(const std::vector<Rat>& v) {
    std::vector<Rat> w = reduce(v);
    size_t lead = 0;
    while (lead < dim_ && w[lead] == 0) ++lead;
    if (lead == dim_) return false;
    Rat inv = Rat(1) / w[lead];
    for (auto& x : w) x *= inv;
    rows_.push_back(std::move(w));
    leads_.push_back(lead);
    return true;
  }

 private:
  std::vector<Rat> reduce(const std::vector<Rat>& v) const {
    std::vector<Rat> w = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
      size_t l = leads_[i];
      if (w[l] == 0) continue;
      Rat f = w[l];  // rows are normalized to leading 1
      for (size_t c = l; c < dim_; ++c) w[c] -= f * rows_[i][c];
    }
    return w;
  }
  size_t dim_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<size_t> leads_;
};

struct Block {
  Rat lo, hi;  // blocks integers n with lo <= n <= hi
};

struct Ctx {
  const ExtractionInstance* inst;
  Rat delta;
  long top;   // N + k - 1
  long cap;   // recursion budget
  long used = 0;
  ExtractStats* stats = nullptr;
};

bool in_blocks(const std::vector<Block>& blocks, long n) {
  Rat q(n);
  for (const auto& b : blocks)
    if (b.lo <= q && q <= b.hi) return true;
  return false;
}

// window-safe: the whole column window [n, n+k-1] stays clear of the blocks
bool column_clear(const Ctx& ctx, const std::vector<Block>& blocks, long n) {
  Rat q(n);
  for (const auto& b : blocks)
    if (b.lo - (ctx.inst->k - 1) <= q && q <= b.hi) return false;
  return true;
}

bool far_from_all(const Rat& delta, const std::vector<long>& cur, long n) {
  for (long c : cur)
    if (!(Rat(std::labs(n - c)) > delta)) return false;
  return true;
}

SpanBasis span_of(const Ctx& ctx, const std::vector<long>& idx) {
  SpanBasis s(ctx.inst->M);
  for (long i : idx) s.add(ctx.inst->xi_at(i));
  return s;
}

bool xi_zero(const ExtractionInstance& inst, long n) {
  for (const auto& x : inst.xi_at(n))
    if (x != 0) return false;
  return true;
}

// One application of the span-growing step: given p independent,
// delta-separated indices clear of the blocks, returns p+1 of them whose
// span contains the old one.
std::vector<long> grow(Ctx& ctx, std::vector<long> cur, std::vector<Block> blocks) {
  if (++ctx.used > ctx.cap)
    throw CheckFailure("extract: recursion budget exceeded; instance flagged for study");
  const ExtractionInstance& inst = *ctx.inst;
  const long p = static_cast<long>(cur.size());

  if (p == 0) {
    if (ctx.stats) ++ctx.stats->base_case;
    for (long n = 1; n <= inst.N; ++n) {
      if (!column_clear(ctx, blocks, n)) continue;
      for (int i = 1; i <= inst.k; ++i) {
        if (inst.lambda[i - 1][n - 1] == 0) continue;
        long s = n + i - 1;
        if (!xi_zero(inst, s)) return {s};
      }
    }
    throw InternalError("extract: no nonzero column outside the blocked windows");
  }

  SpanBasis span = span_of(ctx, cur);

  // direct extension: some far xi value already leaves the span
  for (long n = 1; n <= ctx.top; ++n) {
    if (in_blocks(blocks, n) || !far_from_all(ctx.delta, cur, n)) continue;
    if (!span.contains(inst.xi_at(n))) {
      if (ctx.stats) ++ctx.stats->direct_extension;
      cur.push_back(n);
      return cur;
    }
  }

  // otherwise find a column escaping span(cur)^k and its witness entry
  long s = -1;
  for (long n = 1; n <= inst.N && s < 0; ++n) {
    if (!column_clear(ctx, blocks, n)) continue;
    for (int i = 1; i <= inst.k; ++i) {
      if (inst.lambda[i - 1][n - 1] == 0) continue;
      if (!span.contains(inst.xi_at(n + i - 1))) { s = n + i - 1; break; }
    }
  }
  if (s < 0) throw InternalError("extract: rank hypothesis broke inside the recursion");

  std::vector<long> near;
  for (long c : cur)
    if (!(Rat(std::labs(s - c)) > ctx.delta)) near.push_back(c);
  if (near.empty() || near.size() > 2)
    throw InternalError("extract: witness proximity structure violated");

  if (near.size() == 1) {
    if (ctx.stats) ++ctx.stats->first_main_case;
    long n1 = near[0];
    std::vector<long> rest;
    for (long c : cur)
      if (c != n1) rest.push_back(c);
    std::vector<Block> nb = blocks;
    nb.push_back({Rat(std::min(s, n1)) - ctx.delta, Rat(std::max(s, n1)) + ctx.delta});
    std::vector<long> sub = grow(ctx, rest, nb);  // p indices
    SpanBasis sub_span = span_of(ctx, sub);
    long extra;
    if (!sub_span.contains(inst.xi_at(n1))) {
      extra = n1;  // keep n1 when possible
    } else if (!sub_span.contains(inst.xi_at(s))) {
      extra = s;
    } else {
      throw InternalError("extract: neither n1 nor s escapes the recursive span");
    }
    sub.push_back(extra);
    std::sort(sub.begin(), sub.end());
    return sub;
  }

  // second main case: s sits within delta of two current indices
  if (p < 2) throw InternalError("extract: two near indices with p < 2");
  long n1 = std::min(near[0], near[1]);
  long n2 = std::max(near[0], near[1]);
  std::vector<long> rest;
  for (long c : cur)
    if (c != n1 && c != n2) rest.push_back(c);
  std::vector<Block> nb = blocks;
  nb.push_back({Rat(n1) - ctx.delta, Rat(n2) + ctx.delta});
  std::vector<long> sub1 = grow(ctx, rest, nb);   // p-1 indices
  std::vector<long> sub2 = grow(ctx, sub1, nb);   // p indices

  // d = dim(span(xi(n1), xi(n2)) cap span(xi(sub2)))
  SpanBasis w = span_of(ctx, sub2);
  std::vector<long> uni = sub2;
  uni.push_back(n1);
  uni.push_back(n2);
  SpanBasis full = span_of(ctx, uni);
  long d = 2 + static_cast<long>(w.size()) - static_cast<long>(full.size());

  std::vector<long> out;
  if (d == 0) {
    if (ctx.stats) ++ctx.stats->second_main_d0;
    out = sub1;
    out.push_back(n1);
    out.push_back(n2);
  } else if (d == 1) {
    if (ctx.stats) ++ctx.stats->second_main_d1;
    if (!w.contains(inst.xi_at(n2))) {
      out = sub2;
      out.push_back(n2);
    } else {
      if (w.contains(inst.xi_at(n1)))
        throw InternalError("extract: d = 1 but both pivots lie in the recursive span");
      out = sub2;
      out.push_back(n1);
    }
  } else {
    if (ctx.stats) ++ctx.stats->second_main_d2;
    out = sub2;
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<long> extract(const ExtractionInstance& inst, const SpreadRequest& req,
                          ExtractStats* stats) {
  inst.validate();
  if (req.delta < 0) throw InvalidInput("extract: delta must be >= 0");
  if (req.p < 0) throw InvalidInput("extract: p must be >= 0");
  long top = inst.N + inst.k - 1;
  for (long mj : req.m)
    if (mj < 1 || mj > top) throw InvalidInput("extract: m_j out of range");

  auto vectors = build_vectors(inst);
  int rank = rank_Q(vectors);
  Rat threshold = (Rat(inst.k) + 4 * req.delta) * Rat(req.p + req.q() - 1);
  if (!(Rat(rank) > threshold))
    throw CheckFailure("extract: rank precondition rk > (k+4delta)(p+q-1) fails");
  if (req.p == 0) return {};

  Ctx ctx;
  ctx.inst = &inst;
  ctx.delta = req.delta;
  ctx.top = top;
  ctx.cap = static_cast<long>(req.p + req.q() + 1) * (inst.N + inst.k);
  ctx.stats = stats;

  std::vector<Block> blocks;
  for (long mj : req.m)
    blocks.push_back({std::max(Rat(1), Rat(Rat(mj) - req.delta)), std::min(Rat(top), Rat(Rat(mj) + req.delta))});

  std::vector<long> cur;
  for (int step = 0; step < req.p; ++step) cur = grow(ctx, std::move(cur), blocks);
  std::sort(cur.begin(), cur.end());
  if (!certify(inst, req, cur)) throw InternalError("extract: output failed certification");
  return cur;
}

std::optional<std::vector<long>> brute_force(const ExtractionInstance& inst,
                                             const SpreadRequest& req) {
  inst.validate();
  long top = inst.N + inst.k - 1;
  if (top > 18) throw InvalidInput("brute_force: N+k-1 must be <= 18");
  if (req.p == 0) return std::vector<long>{};
  std::vector<long> pick(req.p);
  // lexicographically first admissible combination
  std::function<std::optional<std::vector<long>>(int, long)> rec =
      [&](int pos, long start) -> std::optional<std::vector<long>> {
    if (pos == req.p) {
      std::vector<long> cand(pick.begin(), pick.end());
      if (certify(inst, req, cand)) return cand;
      return std::nullopt;
    }
    for (long n = start; n <= top; ++n) {
      bool ok = true;
      for (int i = 0; i < pos && ok; ++i)
        if (!(Rat(std::labs(n - pick[i])) > req.delta)) ok = false;
      for (long mj : req.m)
        if (!(Rat(std::labs(n - mj)) > req.delta)) ok = false;
      if (!ok) continue;
      pick[pos] = n;
      if (auto r = rec(pos + 1, n + 1)) return r;
    }
    return std::nullopt;
  };
  return rec(0, 1);
}

bool certify(const ExtractionInstance& inst, const SpreadRequest& req,
             const std::vector<long>& result) {
  inst.validate();
  long top = inst.N + inst.k - 1;
  if (result.size() != static_cast<size_t>(req.p)) return false;
  for (long n : result)
    if (n < 1 || n > top) return false;
  for (size_t i = 0; i < result.size(); ++i)
    for (size_t j = i + 1; j < result.size(); ++j)
      if (!(Rat(std::labs(result[i] - result[j])) > req.delta)) return false;
  for (long n : result)
    for (long mj : req.m)
      if (!(Rat(std::labs(n - mj)) > req.delta)) return false;
  std::vector<std::vector<Rat>> xs;
  for (long n : result) xs.push_back(inst.xi_at(n));
  return rank_Q(xs) == req.p;
}

}  // namespace zetaforms

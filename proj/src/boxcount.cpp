// Copyright 2026 The fracdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fracdim/boxcount.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "fracdim/errors.hpp"
#include "fracdim/expansions.hpp"

namespace fracdim {

namespace {

using Digits = std::vector<BigInt>;

// Interval of the extended half-line: hi == nullopt means unbounded above.
// The searches below move cells through the digit maps x -> 1/x, x -> x - t
// and x -> e x - 1, which need the unbounded form.
struct Span {
  Rational lo;
  bool lo_closed = true;
  std::optional<Rational> hi;
  bool hi_closed = false;
};

Span to_span(const Interval& iv) {
  return {iv.lo(), iv.lo_closed(), iv.hi(), iv.hi_closed()};
}

bool is_empty(const Span& s) {
  if (!s.hi) return false;
  const auto c = s.lo <=> *s.hi;
  return c > 0 || (c == 0 && !(s.lo_closed && s.hi_closed));
}

bool contains(const Span& s, const Rational& x) {
  const auto c_lo = x <=> s.lo;
  if (c_lo < 0 || (c_lo == 0 && !s.lo_closed)) return false;
  if (!s.hi) return true;
  const auto c_hi = x <=> *s.hi;
  return c_hi < 0 || (c_hi == 0 && s.hi_closed);
}

// s ∩ [bound, inf) when closed, s ∩ (bound, inf) otherwise.
Span above(Span s, const Rational& bound, bool closed) {
  const auto c = s.lo <=> bound;
  if (c < 0) {
    s.lo = bound;
    s.lo_closed = closed;
  } else if (c == 0) {
    s.lo_closed = s.lo_closed && closed;
  }
  return s;
}

Span below(Span s, const Rational& bound, bool closed) {
  if (!s.hi) {
    s.hi = bound;
    s.hi_closed = closed;
    return s;
  }
  const auto c = *s.hi <=> bound;
  if (c > 0) {
    s.hi = bound;
    s.hi_closed = closed;
  } else if (c == 0) {
    s.hi_closed = s.hi_closed && closed;
  }
  return s;
}

Span shifted(Span s, const Rational& d) {
  s.lo -= d;
  if (s.hi) *s.hi -= d;
  return s;
}

Span scaled(Span s, const Rational& f) {
  s.lo *= f;
  if (s.hi) *s.hi *= f;
  return s;
}

// {1/x : x in s, x > 0}.
std::optional<Span> reciprocal(Span s) {
  s = above(s, 0, false);
  if (is_empty(s)) return std::nullopt;
  Span out;
  if (s.hi) {
    out.lo = s.hi->reciprocal();
    out.lo_closed = s.hi_closed;
  } else {
    out.lo = 0;
    out.lo_closed = false;
  }
  if (!s.lo.is_zero()) {
    out.hi = s.lo.reciprocal();
    out.hi_closed = s.lo_closed;
  }
  return out;
}

struct IntRange {
  BigInt first;
  std::optional<BigInt> last;  // nullopt: unbounded

  bool empty() const { return last && *last < first; }
};

// Positive integers e >= at_least with e^(p/q) in s. Since x -> x^q is
// increasing on [0, inf), e^(p/q) >= lo  <=>  e^p >= lo^q.
IntRange powers_in(const Span& s, unsigned long p, unsigned long q,
                   const BigInt& at_least) {
  IntRange r;
  r.first = at_least < 1 ? BigInt(1) : at_least;
  if (s.lo.sign() > 0) {
    const Rational bound = pow(s.lo, q);
    const BigInt need = s.lo_closed ? bound.ceil() : bound.floor() + 1;
    r.first = std::max(r.first, ceil_root(need, p));
  }
  if (s.hi) {
    if (s.hi->sign() < 0 || (s.hi->is_zero() && !s.hi_closed)) {
      r.last = 0;
    } else {
      const Rational bound = pow(*s.hi, q);
      const BigInt cap = s.hi_closed ? bound.floor() : bound.ceil() - 1;
      r.last = cap < 0 ? BigInt(0) : floor_root(cap, p);
    }
  }
  return r;
}

IntRange integers_in(const Span& s, const BigInt& at_least) {
  return powers_in(s, 1, 1, at_least);
}

// Span of e with lo <= 1/e < hi, i.e. (1/hi, 1/lo]; s must lie in (0, inf)
// with a finite upper end.
Span unit_boundaries(const Span& s) {
  Span out;
  out.lo = s.hi->reciprocal();
  out.lo_closed = false;
  if (!s.lo.is_zero()) {
    out.hi = s.lo.reciprocal();
    out.hi_closed = true;
  }
  return out;
}

void prepend(Digits& d, BigInt head) { d.insert(d.begin(), std::move(head)); }

// Continued fractions. A length-R tail [t1, ..., tR] (last digit >= 2) has
// value s = t1 + 1/[t2; ...] in (t1, t1 + 1), and x = 1/s. `s_span` is the
// preimage of the cell in s-coordinates.
std::optional<Digits> cf_search(const Span& s_span, unsigned remaining) {
  if (remaining == 1) {
    const IntRange r = integers_in(s_span, 2);
    if (r.empty()) return std::nullopt;
    return Digits{r.first};
  }
  const Span p = above(s_span, 1, false);
  if (is_empty(p)) return std::nullopt;
  // Tails t0 + 1/v accumulate at every integer t0 >= 1 from above.
  const BigInt t0 = p.lo.ceil();
  if (!p.hi || Rational(t0) < *p.hi) {
    BigInt fill = 2;
    if (p.hi) fill = std::max(fill, BigInt((*p.hi - Rational(t0)).reciprocal().floor() + 1));
    Digits d{t0};
    d.insert(d.end(), remaining - 1, fill);
    return d;
  }
  const BigInt t = p.lo.floor();
  const auto child = reciprocal(shifted(p, Rational(t)));
  if (!child) return std::nullopt;
  auto tail = cf_search(*child, remaining - 1);
  if (tail) prepend(*tail, t);
  return tail;
}

// Greedy Egyptian. A greedy word with first digit e has value in
// [1/e, 1/(e-1)), and its tail is any greedy word below 1/(e(e-1)).
std::optional<Digits> egy_search(Span j, unsigned remaining, bool leq) {
  if ((leq || remaining == 0) && contains(j, 0)) return Digits{};
  if (remaining == 0) return std::nullopt;
  j = below(above(j, 0, false), 1, true);
  if (is_empty(j)) return std::nullopt;
  if (remaining == 1 || leq) {
    const IntRange r = integers_in(*reciprocal(j), 1);
    if (!r.empty()) return Digits{r.first};
  }
  if (remaining == 1) return std::nullopt;

  const IntRange acc = integers_in(unit_boundaries(j), 2);
  if (!acc.empty()) {
    // 1/e plus a tiny greedy tail: digits N, N^3, N^9, ... sum below 2/N.
    const BigInt& e = acc.first;
    const Rational room = std::min(*j.hi - Rational(1, e), Rational(1, e * (e - 1)));
    BigInt next = (Rational(2) / room).floor() + 1;
    Digits d{e};
    for (unsigned i = 1; i < remaining; ++i) {
      d.push_back(next);
      next = pow(next, 3);
    }
    return d;
  }
  const BigInt e = j.lo.reciprocal().ceil();
  if (e < 2) return std::nullopt;
  Span child = shifted(j, Rational(1, e));
  child = above(below(child, Rational(1, e * (e - 1)), false), 0, true);
  if (is_empty(child)) return std::nullopt;
  auto tail = egy_search(child, remaining - 1, leq);
  if (tail) prepend(*tail, e);
  return tail;
}

// Engel. x = (1 + y)/e where y is the value of the tail, whose digits are all
// >= e; x lies in [1/e, 1/(e-1)).
std::optional<Digits> engel_search(Span j, unsigned remaining,
                                   const BigInt& min_digit, bool leq) {
  j = above(j, 0, false);
  j = min_digit <= 1 ? below(j, 1, true)
                     : below(j, Rational(1, min_digit - 1), false);
  if (is_empty(j)) return std::nullopt;
  if (remaining == 1 || leq) {
    const IntRange r = integers_in(*reciprocal(j), min_digit);
    if (!r.empty()) return Digits{r.first};
  }
  if (remaining == 1) return std::nullopt;

  const BigInt floor_digit = std::max(min_digit, BigInt(2));
  const IntRange acc = integers_in(unit_boundaries(j), floor_digit);
  if (!acc.empty()) {
    // e followed by R-1 copies of N: y < 1/(N-1) <= e*hi - 1.
    const BigInt& e = acc.first;
    const Rational room = Rational(e) * *j.hi - 1;
    const BigInt fill = std::max(e, BigInt(room.reciprocal().floor() + 2));
    Digits d{e};
    d.insert(d.end(), remaining - 1, fill);
    return d;
  }
  const BigInt e = j.lo.reciprocal().ceil();
  if (e < floor_digit) return std::nullopt;
  auto tail = engel_search(shifted(scaled(j, Rational(e)), 1), remaining - 1, e, leq);
  if (tail) prepend(*tail, e);
  return tail;
}

// Sums of at most `remaining` terms 1/e^(p/q) with e >= min_den.
std::optional<Digits> sumset_search(Span j, unsigned remaining,
                                    const BigInt& min_den, unsigned long p,
                                    unsigned long q) {
  if (contains(j, 0)) return Digits{};
  j = above(j, 0, false);
  // q != 1 only reaches here with min_den == 1 (single-term sets).
  const Rational most = q == 1 ? Rational(BigInt(remaining), pow(min_den, p))
                               : Rational(remaining);
  j = below(j, most, true);
  if (is_empty(j)) return std::nullopt;
  const IntRange single = powers_in(*reciprocal(j), p, q, min_den);
  if (!single.empty()) return Digits{single.first};
  if (remaining == 1) return std::nullopt;

  // The largest remaining term 1/e^p lies in [lo/remaining, hi).
  Span largest;
  largest.lo = j.hi->reciprocal();
  largest.lo_closed = false;
  largest.hi = Rational(remaining) / j.lo;
  largest.hi_closed = true;
  const IntRange cand = powers_in(largest, p, q, min_den);
  if (cand.empty()) return std::nullopt;
  for (BigInt e = cand.first; e <= *cand.last; ++e) {
    auto tail = sumset_search(shifted(j, Rational(1, pow(e, p))),
                              remaining - 1, e, p, q);
    if (tail) {
      prepend(*tail, e);
      return tail;
    }
  }
  return std::nullopt;
}

struct AlphaParts {
  unsigned long p;
  unsigned long q;
};

AlphaParts alpha_parts(const SetDescriptor& set) {
  const Rational& a = set.alpha();
  if (!fits_u64(a.numerator()) || !fits_u64(a.denominator())) {
    throw DomainError("alpha " + a.to_string() + " is too large");
  }
  AlphaParts parts{static_cast<unsigned long>(to_u64(a.numerator())),
                   static_cast<unsigned long>(to_u64(a.denominator()))};
  if (parts.q != 1 && set.m() > 1) {
    throw DomainError("sumset with non-integer alpha is only supported for m = 1");
  }
  return parts;
}

Rational sumset_value(const Word& w, unsigned long p) {
  Rational s;
  for (const auto& e : w.digits()) s += Rational(1, pow(e, p));
  return s;
}

// Ordering of e^(-p/q) against c: e^(-p/q) < c  <=>  1 < c^q e^p for c > 0.
std::strong_ordering compare_inverse_power(const BigInt& e, unsigned long p,
                                           unsigned long q, const Rational& c) {
  if (c.sign() <= 0) return std::strong_ordering::greater;
  return Rational(1) <=> pow(c, q) * Rational(pow(e, p));
}

bool cell_contains_inverse_power(const Interval& cell, const BigInt& e,
                                 unsigned long p, unsigned long q) {
  const auto c_lo = compare_inverse_power(e, p, q, cell.lo());
  const auto c_hi = compare_inverse_power(e, p, q, cell.hi());
  return (c_lo > 0 || (c_lo == 0 && cell.lo_closed())) &&
         (c_hi < 0 || (c_hi == 0 && cell.hi_closed()));
}

}  // namespace

Grid::Grid(Rational width, std::optional<unsigned> scale_log2, Interval domain)
    : width_(std::move(width)),
      scale_log2_(scale_log2),
      domain_(std::move(domain)) {
  if (width_.sign() <= 0) throw DomainError("grid width must be positive");
  if (domain_.is_point()) throw DomainError("grid domain must have positive length");
  cells_ = (domain_.length() / width_).ceil();
}

Grid Grid::dyadic(unsigned scale_log2, const Interval& domain) {
  return Grid(Rational(BigInt(1), pow(BigInt(2), scale_log2)), scale_log2, domain);
}

Grid Grid::with_width(const Rational& width, const Interval& domain) {
  return Grid(width, std::nullopt, domain);
}

Interval Grid::cells(std::uint64_t begin, std::uint64_t end) const {
  Rational lo = domain_.lo() + Rational(begin) * width_;
  if (BigInt(static_cast<unsigned long>(end)) >= cells_) {
    return Interval(std::move(lo), domain_.hi(), true, true);
  }
  return Interval::half_open(std::move(lo), domain_.lo() + Rational(end) * width_);
}

std::optional<Witness> find_member(const SetDescriptor& set,
                                   const Interval& cell) {
  const unsigned m = set.m();
  std::optional<Digits> digits;
  WordKind kind = WordKind::kEngel;
  switch (set.family()) {
    case Family::kContinuedFraction: {
      kind = WordKind::kContinuedFraction;
      Span j = below(above(to_span(cell), 0, false), 1, false);
      if (is_empty(j)) return std::nullopt;
      digits = cf_search(*reciprocal(j), m);
      break;
    }
    case Family::kEgyGreedy:
    case Family::kEgyLeq:
      kind = WordKind::kEgyptian;
      digits = egy_search(to_span(cell), m, set.family() == Family::kEgyLeq);
      break;
    case Family::kEngel:
    case Family::kEngelLeq:
      digits = engel_search(to_span(cell), m, 1, set.family() == Family::kEngelLeq);
      break;
    case Family::kSumset: {
      const AlphaParts a = alpha_parts(set);
      digits = sumset_search(to_span(cell), m, 1, a.p, a.q);
      if (!digits) return std::nullopt;
      Word w(WordKind::kEngel, std::move(*digits));
      std::optional<Rational> value;
      if (a.q == 1 || w.empty()) value = sumset_value(w, a.p);
      return Witness{std::move(w), std::move(value)};
    }
  }
  if (!digits) return std::nullopt;
  Word w(kind, std::move(*digits));
  Rational value = evaluate(w);
  return Witness{std::move(w), std::move(value)};
}

bool verify_witness(const SetDescriptor& set, const Interval& cell,
                    const Witness& witness) {
  const Word& w = witness.word;
  const unsigned m = set.m();
  const bool leq = set.family() == Family::kEgyLeq ||
                   set.family() == Family::kEngelLeq;
  const auto value_ok = [&](const Rational& v) {
    return (!witness.value || *witness.value == v) && cell.contains(v);
  };
  switch (set.family()) {
    case Family::kContinuedFraction: {
      if (w.size() != m) return false;
      const Rational v = cf_eval(w);
      if (!value_ok(v) || v.sign() <= 0 || v >= 1) return false;
      return cf_expand(v).digits() == w.digits();
    }
    case Family::kEgyGreedy:
    case Family::kEgyLeq: {
      if (leq ? w.size() > m : w.size() != m) return false;
      const Rational v = egy_eval(w);
      if (!value_ok(v)) return false;
      if (w.empty()) return true;
      if (v > 1) return false;
      const auto re = egy_expand_within(v, m);
      return re && re->digits() == w.digits();
    }
    case Family::kEngel:
    case Family::kEngelLeq: {
      if (w.empty() || (leq ? w.size() > m : w.size() != m)) return false;
      const Rational v = engel_eval(w);
      if (!value_ok(v) || v > 1) return false;
      const auto re = engel_expand_within(v, m);
      return re && re->digits() == w.digits();
    }
    case Family::kSumset: {
      if (w.size() > m) return false;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < w[i - 1]) return false;
      }
      const AlphaParts a = alpha_parts(set);
      if (a.q == 1 || w.empty()) return value_ok(sumset_value(w, a.p));
      return cell_contains_inverse_power(cell, w[0], a.p, a.q);
    }
  }
  return false;
}

bool cell_contains(const SetDescriptor& set, const Interval& cell) {
  const auto witness = find_member(set, cell);
  if (!witness) return false;
  if (!verify_witness(set, cell, *witness)) {
    throw std::logic_error("witness " + witness->word.to_string() + " for " +
                           set.to_string() + " failed verification in " +
                           cell.to_string());
  }
  return true;
}

MeshReport mesh_count(const SetDescriptor& set, const Grid& grid,
                      const MeshOptions& options) {
  if (grid.cell_count() > BigInt(static_cast<unsigned long>(kMaxCells))) {
    throw ResourceError("grid has " + grid.cell_count().get_str() +
                        " cells, above the limit of " + std::to_string(kMaxCells));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total_cells = to_u64(grid.cell_count());

  // Bisection over index ranges: a range whose union misses the set is
  // skipped whole, so only ancestors of occupied cells are visited.
  const auto count = [&](auto&& self, std::uint64_t b, std::uint64_t e) -> std::uint64_t {
    if (!cell_contains(set, grid.cells(b, e))) return 0;
    if (e - b == 1) return 1;
    const std::uint64_t mid = b + (e - b) / 2;
    return self(self, b, mid) + self(self, mid, e);
  };

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t occupied = 0;
  if (threads == 1 || total_cells < 2) {
    occupied = count(count, 0, total_cells);
  } else {
    const std::uint64_t chunks = std::min<std::uint64_t>(total_cells, threads * 8ULL);
    std::vector<std::uint64_t> partial(chunks, 0);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
            try {
              const std::uint64_t b = total_cells * c / chunks;
              const std::uint64_t e = total_cells * (c + 1) / chunks;
              partial[c] = count(count, b, e);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
    occupied = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  }
  return {set, grid.width(), occupied,
          std::chrono::duration_cast<std::chrono::nanoseconds>(
              std::chrono::steady_clock::now() - start)};
}

SlopeFit fit_slope(const std::vector<unsigned>& scale_log2,
                   const std::vector<std::uint64_t>& counts) {
  if (scale_log2.size() != counts.size() || counts.size() < 2) {
    throw DomainError("slope fit needs at least two (scale, count) pairs");
  }
  SlopeFit fit;
  fit.scale_log2 = scale_log2;
  fit.counts = counts;
  const auto n = static_cast<double>(counts.size());
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) throw DomainError("slope fit needs positive counts");
    fit.scales.emplace_back(BigInt(1), pow(BigInt(2), scale_log2[i]));
    xs.push_back(scale_log2[i]);
    ys.push_back(std::log2(static_cast<double>(counts[i])));
  }
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0) throw DomainError("slope fit needs distinct scales");
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double sq = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    sq += r * r;
  }
  fit.residual = std::sqrt(sq / n);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    fit.per_step_slopes.push_back((ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
  }
  return fit;
}

SlopeFit dim_estimate(const SetDescriptor& set, unsigned j_lo, unsigned j_hi,
                      const MeshOptions& options) {
  if (j_lo >= j_hi) throw DomainError("scale ladder needs j_lo < j_hi");
  std::vector<unsigned> js;
  std::vector<std::uint64_t> counts;
  const Interval domain = set.default_domain();
  for (unsigned j = j_lo; j <= j_hi; ++j) {
    js.push_back(j);
    counts.push_back(mesh_count(set, Grid::dyadic(j, domain), options).occupied_cells);
  }
  return fit_slope(js, counts);
}

bool verify_cover(const std::vector<Rational>& points,
                  const std::vector<CoverElement>& cover) {
  return std::all_of(points.begin(), points.end(), [&](const Rational& x) {
    return std::any_of(cover.begin(), cover.end(), [&](const CoverElement& c) {
      return c.interval.contains(x);
    });
  });
}

bool neighborhood_covers(unsigned m, unsigned long n, const Rational& grid_step) {
  if (n < 2) throw DomainError("neighborhood check needs n >= 2");
  const Rational radius(BigInt(1), pow(BigInt(n), 1UL << m));
  if (grid_step.sign() <= 0 || grid_step > radius) {
    throw DomainError("grid step must lie in (0, n^(-2^m)]");
  }
  const Rational top(BigInt(1), BigInt(n));
  if ((top / grid_step).ceil() > BigInt(static_cast<unsigned long>(kMaxCells))) {
    throw ResourceError("too many neighborhood samples");
  }
  for (Rational x = grid_step; x < top; x += grid_step) {
    const Approximation a = egy_approximate(x, n, m);
    if ((x - a.value).abs() > radius) return false;
    if (a.value.sign() <= 0 || a.value > 1) return false;
    if (egy_expand(a.value).size() != m) return false;
  }
  return true;
}

Rational measure_union(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
  Rational total;
  std::optional<Rational> run_lo, run_hi;
  for (const auto& iv : intervals) {
    if (run_hi && iv.lo() <= *run_hi) {
      if (iv.hi() > *run_hi) run_hi = iv.hi();
      continue;
    }
    if (run_hi) total += *run_hi - *run_lo;
    run_lo = iv.lo();
    run_hi = iv.hi();
  }
  if (run_hi) total += *run_hi - *run_lo;
  return total;
}

std::string_view to_string(BoundFamily family) {
  switch (family) {
    case BoundFamily::kCf:
      return "cf";
    case BoundFamily::kSumset:
      return "sumset";
    case BoundFamily::kEngel:
      return "engel";
  }
  return "?";
}

BoundReport verify_bounds(BoundFamily family, unsigned m, unsigned long n,
                          const MeshOptions& options) {
  if (m < 1 || n < 2) throw DomainError("bound check needs m >= 1 and n >= 2");
  const BigInt base(n);
  BoundReport report{family, m, n, {}, 0, {}, false};
  std::optional<SetDescriptor> set;
  switch (family) {
    case BoundFamily::kCf:
      set = SetDescriptor::cf(m);
      report.scale = Rational(BigInt(1), pow(base, 2UL * m));
      report.bound = bound_cf(m, n);
      break;
    case BoundFamily::kSumset:
      set = SetDescriptor::sumset(m);
      report.scale = Rational(BigInt(1), pow(base, 1UL << m));
      report.bound = Rational(bound_sumset(m, n));
      break;
    case BoundFamily::kEngel:
      set = SetDescriptor::engel_leq(m);
      report.scale = Rational(BigInt(1), pow(base, m + 1UL));
      report.bound = Rational(bound_engel(m, n));
      break;
  }
  const Grid grid = Grid::with_width(report.scale, set->default_domain());
  report.mesh_count = mesh_count(*set, grid, options).occupied_cells;
  report.pass = Rational(report.mesh_count) <= Rational(2) * report.bound;
  return report;
}

}  // namespace fracdim

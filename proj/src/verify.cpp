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

#include "fracdim/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <random>

#include "fracdim/boxcount.hpp"
#include "fracdim/brute_force.hpp"
#include "fracdim/constructions.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/expansions.hpp"

namespace fracdim {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  // Runs one case; exceptions count as failures.
  void check(const std::function<bool()>& body,
             const std::function<std::string()>& describe) {
    ++result_.cases;
    std::string why;
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    if (ok) return;
    if (result_.failures++ == 0) result_.detail = describe() + why;
  }

  CheckResult finish(std::string summary) {
    if (result_.failures == 0) result_.detail = std::move(summary);
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

using Digits = std::vector<BigInt>;

// Calls fn on every digit vector of the given length with digits in
// [1, max_digit]; when last_at_least_two, the final digit is >= 2.
void for_each_word(std::size_t length, unsigned long max_digit,
                   bool last_at_least_two,
                   const std::function<void(const Digits&)>& fn) {
  Digits d(length);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == length) {
      fn(d);
      return;
    }
    const unsigned long first = (i + 1 == length && last_at_least_two) ? 2 : 1;
    for (unsigned long v = first; v <= max_digit; ++v) {
      d[i] = v;
      go(i + 1);
    }
  };
  go(0);
}

std::vector<CheckResult> roundtrip_suite(std::uint64_t max_denom) {
  Tally cf("cf round trip"), egy("egy round trip"), engel("engel round trip");
  for (std::uint64_t q = 1; q <= max_denom; ++q) {
    for (std::uint64_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational x(BigInt(static_cast<unsigned long>(p)),
                       BigInt(static_cast<unsigned long>(q)));
      const auto label = [&] { return "x = " + x.to_string(); };
      if (p < q) {
        cf.check([&] {
          const Word w = cf_expand(x);
          return cf_eval(w) == x && w.back() >= 2;
        }, label);
      }
      egy.check([&] {
        const Word w = egy_expand(x);
        return egy_eval(w) == x && is_greedy_admissible(w);
      }, label);
      engel.check([&] {
        const Word w = engel_expand(x);
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (w[i] < w[i - 1]) return false;
        }
        return engel_eval(w) == x;
      }, label);
    }
  }
  const std::string summary = "reduced p/q with q <= " + std::to_string(max_denom);
  return {cf.finish(summary), egy.finish(summary), engel.finish(summary)};
}

// 0 < |g(a) - g(parent)| <= 1/(pi(a) pi(parent)).
std::vector<CheckResult> gaps_suite() {
  Tally t("cf parent gap");
  for (std::size_t len = 1; len <= 4; ++len) {
    for_each_word(len, 6, true, [&](const Digits& d) {
      const Word a(WordKind::kContinuedFraction, d);
      t.check([&] {
        const Word parent = word_parent(a);
        const Rational gap = (cf_eval(a) - cf_eval(parent)).abs();
        const Rational limit(BigInt(1), word_product(a) * word_product(parent));
        return gap.sign() > 0 && gap <= limit;
      }, [&] { return "a = " + a.to_string(); });
    });
  }
  return {t.finish("length <= 4, digits <= 6, last digit >= 2")};
}

// g(parent) < g(ab) < g(a) < g(a decremented) for odd |a|, reversed for even.
std::vector<CheckResult> ordering_suite() {
  Tally t("cf cylinder ordering");
  for (std::size_t len = 1; len <= 3; ++len) {
    for_each_word(len, 5, true, [&](const Digits& ad) {
      const Word a(WordKind::kContinuedFraction, ad);
      const Rational ga = cf_eval(a);
      const Rational g_parent = cf_eval(word_parent(a));
      const Rational g_minus = cf_eval(word_decrement_last(a));
      for (std::size_t blen = 1; blen <= 2; ++blen) {
        for_each_word(blen, 5, false, [&](const Digits& bd) {
          Digits ab = ad;
          ab.insert(ab.end(), bd.begin(), bd.end());
          const Word w(WordKind::kContinuedFraction, ab);
          t.check([&] {
            const Rational g = cf_eval(w);
            if (len % 2 == 1) return g_parent < g && g < ga && ga < g_minus;
            return g_parent > g && g > ga && ga > g_minus;
          }, [&] { return "ab = " + w.to_string(); });
        });
      }
    });
  }
  return {t.finish("|a| <= 3, digits <= 5, |b| <= 2")};
}

std::string nm(unsigned long n, unsigned m) {
  return " n=" + std::to_string(n) + " m=" + std::to_string(m);
}

std::vector<CheckResult> egy_approx_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (unsigned long n = 2; n <= 5; ++n) {
    for (unsigned m = 1; m <= 3; ++m) {
      Tally t("egy_approximate" + nm(n, m));
      const Rational radius(BigInt(1), pow(BigInt(n), 1UL << m));
      for (int i = 0; i < 200; ++i) {
        const Rational x = sample_below_unit_fraction(rng, n);
        t.check([&] {
          const Approximation a = egy_approximate(x, n, m);
          if (a.value.sign() <= 0 || a.value > 1) return false;
          const Word re = egy_expand(a.value);
          return re.size() == m && re == a.word && (x - a.value).abs() <= radius;
        }, [&] { return "x = " + x.to_string(); });
      }
      out.push_back(t.finish("200 samples, |x - y| <= " + radius.to_string()));
    }
  }
  return out;
}

std::vector<CheckResult> engel_approx_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (unsigned long n = 2; n <= 8; ++n) {
    for (unsigned m = 1; m <= 4; ++m) {
      Tally t("engel_approximate" + nm(n, m));
      const Rational radius(BigInt(1), pow(BigInt(n), m + 1UL));
      for (int i = 0; i < 200; ++i) {
        const Rational x = sample_below_unit_fraction(rng, n);
        t.check([&] {
          const Approximation a = engel_approximate(x, n, m);
          if (a.value.sign() <= 0 || a.value > 1) return false;
          const Word re = engel_expand(a.value);
          return re.size() == m && re == a.word && (x - a.value).abs() <= radius;
        }, [&] { return "x = " + x.to_string(); });
      }
      out.push_back(t.finish("200 samples, |x - y| <= " + radius.to_string()));
    }
  }
  return out;
}

std::vector<CheckResult> covers_suite(std::uint64_t max_denom) {
  std::vector<CheckResult> out;
  for (unsigned long n = 2; n <= 3; ++n) {
    for (unsigned k = 0; k <= 3; ++k) {
      Tally t("egf good word count k=" + std::to_string(k) + " n=" + std::to_string(n));
      const BigInt cap = pow(BigInt(n), (1UL << k) - 1);
      std::size_t count = 0;
      t.check([&] {
        count = enumerate_egf_good(k, n).size();
        return BigInt(static_cast<unsigned long>(count)) <= cap;
      }, [&] { return std::to_string(count) + " > " + cap.get_str(); });
      out.push_back(t.finish(std::to_string(count) + " <= " + cap.get_str()));
    }
  }
  for (unsigned m = 1; m <= 2; ++m) {
    std::vector<Rational> points{Rational(0)};
    for (std::uint64_t a = 1; a <= max_denom; ++a) {
      const Rational ua(1, BigInt(static_cast<unsigned long>(a)));
      points.push_back(ua);
      if (m == 2) {
        for (std::uint64_t b = a; b <= max_denom; ++b) {
          points.push_back(ua + Rational(1, BigInt(static_cast<unsigned long>(b))));
        }
      }
    }
    for (unsigned long n = 2; n <= 3; ++n) {
      Tally t("egf cover" + nm(n, m));
      const auto cover = egf_cover(m, n);
      for (const auto& x : points) {
        t.check([&] { return verify_cover({x}, cover); },
                [&] { return "x = " + x.to_string(); });
      }
      out.push_back(t.finish(std::to_string(points.size()) + " sums with denominators <= " +
                             std::to_string(max_denom) + ", " +
                             std::to_string(cover.size()) + " cover intervals"));
    }
  }
  return out;
}

std::vector<CheckResult> bounds_suite(unsigned threads) {
  std::vector<CheckResult> out;
  const auto run = [&](BoundFamily family, unsigned m, unsigned long n) {
    Tally t(std::string(to_string(family)) + " bound" + nm(n, m));
    std::optional<BoundReport> report;
    t.check([&] {
      report = verify_bounds(family, m, n, MeshOptions{threads});
      return report->pass;
    }, [&] {
      return report ? "M = " + std::to_string(report->mesh_count) + " > 2 * " +
                          report->bound.to_string()
                    : std::string("no report");
    });
    std::string summary;
    if (report) {
      summary = "M = " + std::to_string(report->mesh_count) + " <= 2 * " +
                std::to_string(report->bound.to_double()) + " at r = " +
                report->scale.to_string();
    }
    out.push_back(t.finish(summary));
  };
  for (unsigned m = 1; m <= 2; ++m) {
    for (unsigned long n = 2; n <= 6; ++n) run(BoundFamily::kCf, m, n);
  }
  for (unsigned m = 1; m <= 2; ++m) {
    for (unsigned long n = 2; n <= 5; ++n) run(BoundFamily::kSumset, m, n);
  }
  for (unsigned m = 1; m <= 3; ++m) {
    for (unsigned long n = 2; n <= 8; ++n) run(BoundFamily::kEngel, m, n);
  }
  return out;
}

// Largest digit of a witness word, against the enumeration bound it must
// exceed when brute force found nothing in the cell.
bool beyond_bounds(const SetDescriptor& set, const Word& w,
                   const EnumerationBounds& bounds) {
  const BigInt limit(static_cast<unsigned long>(
      set.family() == Family::kContinuedFraction ? bounds.cf_digit : bounds.denominator));
  return std::any_of(w.digits().begin(), w.digits().end(),
                     [&](const BigInt& d) { return d > limit; });
}

std::vector<CheckResult> oracle_suite() {
  constexpr unsigned kMaxScale = 10;
  std::vector<CheckResult> out;
  const Family families[] = {Family::kContinuedFraction, Family::kEgyGreedy,
                             Family::kEgyLeq, Family::kEngel,
                             Family::kEngelLeq, Family::kSumset};
  for (const Family f : families) {
    for (unsigned m = 1; m <= 2; ++m) {
      const SetDescriptor set(f, m);
      Tally t("oracle " + set.to_string());
      const EnumerationBounds bounds;
      const BruteForceOccupancy brute = brute_force_occupancy(set, kMaxScale, bounds);
      std::uint64_t occupied = 0;
      for (unsigned j = 0; j <= kMaxScale; ++j) {
        const Grid grid = Grid::dyadic(j, set.default_domain());
        const auto& row = brute.occupied[j];
        for (std::uint64_t k = 0; k < row.size(); ++k) {
          const Interval cell = grid.cell(k);
          std::optional<Witness> w;
          t.check([&] {
            w = find_member(set, cell);
            if (row[k] && !w) return false;
            if (!w) return true;
            ++occupied;
            return verify_witness(set, cell, *w) && (row[k] || beyond_bounds(set, w->word, bounds));
          }, [&] {
            return "j=" + std::to_string(j) + " cell " + cell.to_string() +
                   (w ? " witness " + w->word.to_string() : " no witness") +
                   (row[k] ? ", brute force found a member" : ", brute force found none");
          });
        }
      }
      out.push_back(t.finish(std::to_string(occupied) + " occupied cells over j <= 10 agree"));
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "roundtrip", "gaps", "ordering", "lemma31", "lemma41", "covers", "bounds", "oracle"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "roundtrip") return roundtrip_suite(options.max_denom.value_or(500));
  if (name == "gaps") return gaps_suite();
  if (name == "ordering") return ordering_suite();
  if (name == "lemma31") return egy_approx_suite(options.seed);
  if (name == "lemma41") return engel_approx_suite(options.seed);
  if (name == "covers") return covers_suite(options.max_denom.value_or(100));
  if (name == "bounds") return bounds_suite(options.threads);
  if (name == "oracle") return oracle_suite();
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace fracdim

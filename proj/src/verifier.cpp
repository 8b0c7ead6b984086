#include "indlab/verifier.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

#include "indlab/error.hpp"

namespace indlab {

namespace mp = boost::multiprecision;

Integer p_exact(std::size_t q, std::size_t t) {
  if (t == 0) throw ValidationError("p(q, t) needs t >= 1");
  const std::size_t low = q / t;
  const std::size_t high_parts = q % t;
  return ipow(Integer(low + 1), high_parts) * ipow(Integer(low), t - high_parts);
}

Integer p_dp(std::size_t q, std::size_t t) {
  if (t == 0) throw ValidationError("p(q, t) needs t >= 1");
  // best[s] = p(s, parts) for the current number of parts
  std::vector<Integer> best(q + 1);
  for (std::size_t s = 0; s <= q; ++s) best[s] = s;
  for (std::size_t parts = 2; parts <= t; ++parts) {
    std::vector<Integer> next(q + 1, 0);
    for (std::size_t s = 0; s <= q; ++s)
      for (std::size_t last = 0; last <= s; ++last) {
        Integer candidate = best[s - last] * last;
        if (candidate > next[s]) next[s] = candidate;
      }
    best = std::move(next);
  }
  return best[q];
}

PropertiesReport p_properties(std::size_t qmax, std::size_t tmax) {
  if (qmax > 60 || tmax > 60 || tmax == 0) throw ValidationError("p_properties grid must satisfy qmax <= 60, 1 <= tmax <= 60");
  PropertiesReport r;
  r.qmax = qmax;
  r.tmax = tmax;
  auto fail = [&](std::string what) {
    if (r.failures.size() < 32) r.failures.push_back(std::move(what));
  };
  auto at = [&](std::size_t q, std::size_t t) -> std::size_t { return q * (tmax + 1) + t; };

  std::vector<Integer> table((qmax + 1) * (tmax + 1));
  for (std::size_t q = 0; q <= qmax; ++q)
    for (std::size_t t = 1; t <= tmax; ++t) table[at(q, t)] = p_exact(q, t);

  // the oracle: one DP sweep over the number of parts
  std::vector<Integer> best(qmax + 1);
  for (std::size_t s = 0; s <= qmax; ++s) best[s] = s;
  for (std::size_t t = 1; t <= tmax; ++t) {
    if (t > 1) {
      std::vector<Integer> next(qmax + 1, 0);
      for (std::size_t s = 0; s <= qmax; ++s)
        for (std::size_t last = 0; last <= s; ++last) {
          Integer candidate = best[s - last] * last;
          if (candidate > next[s]) next[s] = candidate;
        }
      best = std::move(next);
    }
    for (std::size_t q = 0; q <= qmax; ++q) {
      ++r.oracle_checked;
      if (best[q] != table[at(q, t)]) fail("p(" + std::to_string(q) + "," + std::to_string(t) + ") differs from the DP");
    }
  }

  for (std::size_t q = 0; q <= qmax; ++q)
    for (std::size_t t = 1; t <= tmax; ++t) {
      const Integer& v = table[at(q, t)];
      ++r.amgm_checked;
      if (v * ipow(Integer(t), t) > ipow(Integer(q), t))
        fail("p(" + std::to_string(q) + "," + std::to_string(t) + ") exceeds (q/t)^t");
      ++r.boundary_checked;
      if ((v == 0) != (q < t)) fail("p(" + std::to_string(q) + "," + std::to_string(t) + ") zero pattern");
      if (t == 1 && v != q) fail("p(" + std::to_string(q) + ",1) != q");
      for (std::size_t q2 = 0; q + q2 <= qmax; ++q2)
        for (std::size_t t2 = 1; t + t2 <= tmax; ++t2) {
          ++r.product_checked;
          if (v * table[at(q2, t2)] > table[at(q + q2, t + t2)])
            fail("p(" + std::to_string(q) + "," + std::to_string(t) + ") p(" + std::to_string(q2) + "," +
                 std::to_string(t2) + ") is not below p of the sums");
        }
    }
  return r;
}

std::string to_string(CheckVerdict v) {
  switch (v) {
    case CheckVerdict::Pass: return "PASS";
    case CheckVerdict::Fail: return "FAIL";
    case CheckVerdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

std::string to_string(Relation r) { return r == Relation::Less ? "<" : "<="; }

std::string to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Enclosure: return "enclosure";
    case Method::Sampling: return "sampling";
  }
  return "?";
}

CheckVerdict decide(const Interval& lhs, const Interval& rhs, Relation relation) {
  if (relation == Relation::Less) {
    if (lhs.hi < rhs.lo) return CheckVerdict::Pass;
    if (lhs.lo >= rhs.hi) return CheckVerdict::Fail;
  } else {
    if (lhs.hi <= rhs.lo) return CheckVerdict::Pass;
    if (lhs.lo > rhs.hi) return CheckVerdict::Fail;
  }
  return CheckVerdict::Indeterminate;
}

std::size_t BatteryReport::count(CheckVerdict v) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.verdict == v; }));
}

namespace {

constexpr unsigned kPrecisionCap = 8192;

Interval pt(const Rational& q) { return Interval::point(q); }
Rational rk(std::size_t k) { return Rational(Integer(k)); }

Interval ilog(const Interval& x, unsigned bits) { return {enclose_log(x.lo, bits).lo, enclose_log(x.hi, bits).hi}; }
Interval inv_e(unsigned bits) { return pt(1) / enclose_e(bits); }
Interval hull_max(const Interval& a, const Interval& b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Rational ceil_to(const Rational& q, std::int64_t den) {
  const Rational scaled = q * den;
  Integer whole = mp::numerator(scaled) / mp::denominator(scaled);
  if (Rational(whole) < scaled) ++whole;
  return Rational(whole, Integer(den));
}

struct Eval {
  Interval lhs;
  Interval rhs;
  Parameters extra;
};

struct Task {
  std::string item;
  std::string name;
  std::string statement;
  Parameters parameters;
  Relation relation = Relation::Less;
  Method method = Method::Exact;
  std::function<Eval(unsigned)> eval;
};

InequalityCheck run(const Task& t, unsigned bits) {
  InequalityCheck c;
  c.item = t.item;
  c.name = t.name;
  c.statement = t.statement;
  c.parameters = t.parameters;
  c.relation = t.relation;
  c.method = t.method;
  c.precision = bits;
  Eval e = t.eval(bits);
  c.parameters.insert(c.parameters.end(), e.extra.begin(), e.extra.end());
  c.lhs = e.lhs;
  c.rhs = e.rhs;
  c.verdict = decide(c.lhs, c.rhs, c.relation);
  c.margin = c.rhs.lo - c.lhs.hi;
  if (c.verdict == CheckVerdict::Indeterminate && t.method != Method::Exact)
    for (unsigned b = 2 * bits; b <= kPrecisionCap; b *= 2) {
      const Eval finer = t.eval(b);
      if (decide(finer.lhs, finer.rhs, t.relation) != CheckVerdict::Indeterminate) {
        c.required_precision = b;
        break;
      }
    }
  return c;
}

Parameters k_param(std::size_t k) { return {{"k", std::to_string(k)}}; }

/// A parameterized claim in log form: the contradiction needs lhs(L) (<) rhs(C, L), L = log k.
struct Claim {
  std::string name;
  std::string statement;
  std::string stated;
  Relation relation;
  std::function<Interval(const Interval& L, unsigned bits)> lhs;
  std::function<Interval(const Interval& L, unsigned bits)> slope;  // rhs = C * slope
  std::function<Interval(unsigned bits)> limit;
  std::vector<Task> threshold_checks;
};

class Battery {
 public:
  explicit Battery(const BatteryConfig& c) : c_(c) {}

  BatteryReport build() {
    if (c_.kmin < 4 || c_.kmin > c_.kmax || c_.kmax > 1000)
      throw ValidationError("battery needs 4 <= kmin <= kmax <= 1000");
    if (c_.grid < 4 || c_.grid > 400) throw ValidationError("battery grid must lie in [4, 400]");
    if (c_.precision < 32 || c_.precision > kPrecisionCap) throw ValidationError("precision must lie in [32, 8192] bits");
    BatteryReport report;
    report.config = c_;
    inverse_e();
    max_degree();
    large_part();
    second_neighbourhood();
    power_sum();
    absurd_case();
    simplex();
    parameterized(report);
    sampling();

    std::vector<InequalityCheck> out(tasks_.size());
    const std::size_t threads = std::clamp<std::size_t>(c_.threads, 1, tasks_.size());
    if (threads == 1) {
      for (std::size_t i = 0; i < tasks_.size(); ++i) out[i] = run(tasks_[i], c_.precision);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(threads);
      for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = t; i < tasks_.size(); i += threads) out[i] = run(tasks_[i], c_.precision);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    static const std::vector<std::string> order{"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    auto rank = [&](const std::string& item) { return std::find(order.begin(), order.end(), item) - order.begin(); };
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      if (rank(a.item) != rank(b.item)) return rank(a.item) < rank(b.item);
      return a.name < b.name;
    });
    report.checks = std::move(out);
    return report;
  }

 private:
  void add(Task t) { tasks_.push_back(std::move(t)); }

  void per_k(std::size_t from, const std::function<void(std::size_t)>& f) {
    for (std::size_t k = std::max(from, c_.kmin); k <= c_.kmax; ++k) f(k);
  }

  void inverse_e() {
    per_k(0, [&](std::size_t k) {
      const Rational base = rpow(1 - Rational(1) / rk(k), k - 1);
      add({"i", "eInverse", "1/e < (1-1/k)^(k-1)", k_param(k), Relation::Less, Method::Enclosure,
           [=](unsigned bits) { return Eval{inv_e(bits), pt(base), {}}; }});
      const Rational upper = Rational(ipow(Integer(k - 1), k - 1), ipow(Integer(k), k - 1) - 1);
      add({"i", "eInverseRatio", "(1-1/k)^(k-1) <= (k-1)^(k-1)/(k^(k-1)-1)", k_param(k), Relation::LessEqual,
           Method::Exact, [=](unsigned) { return Eval{pt(base), pt(upper), {}}; }});
    });
  }

  static Rational max_degree_rhs(std::size_t k) {
    return decimal("1.4") * rpow(decimal("0.6") / rk(k - 2), k - 2);
  }

  static Rational growth(std::size_t k) {
    return Rational(ipow(Integer(k - 2), 2 * k - 4), ipow(Integer(k - 1), k - 1) * ipow(Integer(k - 3), k - 3));
  }

  void max_degree() {
    per_k(0, [&](std::size_t k) {
      const Rational small = max_degree_rhs(k);
      const Rational big = Rational(Integer(1), ipow(Integer(k), k - 1) - 1);
      add({"ii", "maxDegree", "1.4 (0.6/(k-2))^(k-2) < 1/(k^(k-1)-1)", k_param(k), Relation::Less, Method::Exact,
           [=](unsigned) { return Eval{pt(small), pt(big), {{"ratio", decimal_string(big / small, 6)}}}; }});
      const Rational g = growth(k);
      add({"ii", "maxDegreeGrowth", "0.6 < f(k) = (k-2)^(2k-4) / ((k-1)^(k-1) (k-3)^(k-3))", k_param(k),
           Relation::Less, Method::Exact, [=](unsigned) { return Eval{pt(decimal("0.6")), pt(g), {}}; }});
      const Rational next = growth(k + 1);
      add({"ii", "maxDegreeGrowthMonotone", "f(k) <= f(k+1)", k_param(k), Relation::LessEqual, Method::Exact,
           [=](unsigned) { return Eval{pt(g), pt(next), {}}; }});
    });
    per_k(12, [&](std::size_t k) {
      const Rational scaled = max_degree_rhs(k) * Rational(ipow(Integer(k - 1), k - 1));
      add({"ii", "maxDegreeInduction", "1.4 (0.6/(k-2))^(k-2) < 1/(e (k-1)^(k-1))", k_param(k), Relation::Less,
           Method::Enclosure, [=](unsigned bits) { return Eval{pt(scaled), inv_e(bits), {}}; }});
    });
  }

  void large_part() {
    per_k(0, [&](std::size_t k) {
      const Rational z = rpow(Rational(1, 2), k - 1);
      const Rational ratio = Rational(ipow(Integer(k - 1), k - 1), ipow(Integer(k), k) - k);
      const Rational rhs = Rational(100, 101) * ratio - Rational(Integer(1), Integer(3 * k));
      add({"iii", "largePart", "(1/2)^(k-1) <= (100/101) (k-1)^(k-1)/(k^k-k) - 1/(3k)", k_param(k),
           Relation::LessEqual, Method::Exact, [=](unsigned) { return Eval{pt(z), pt(rhs), {}}; }});
    });
    per_k(12, [&](std::size_t k) {
      const Rational lhs = rk(k) * rpow(Rational(1, 2), k - 1);
      add({"iii", "largePartInduction", "(1/2)^(k-1) <= (100/101)/(e k) - 1/(3k)", k_param(k), Relation::LessEqual,
           Method::Enclosure, [=](unsigned bits) {
             return Eval{pt(lhs), pt(Rational(100, 101)) * inv_e(bits) - pt(Rational(1, 3)), {}};
           }});
    });
  }

  /// max of (1.4-z)^(k-1) + z^(k-1) + 0.6 z^(k-2) over z in [a, b], refined by bisection
  static Interval second_bound(std::size_t k, const Rational& a, const Rational& b, const Interval& target,
                               unsigned bits, int depth) {
    const Interval z{a, b};
    const Interval f = widen_to_bits(ipow(pt(decimal("1.4")) - z, k - 1), bits) + widen_to_bits(ipow(z, k - 1), bits) +
                       widen_to_bits(pt(decimal("0.6")) * ipow(z, k - 2), bits);
    if (f.hi < target.lo || depth == 0) return f;
    const Rational m = (a + b) / 2;
    return hull_max(second_bound(k, a, m, target, bits, depth - 1), second_bound(k, m, b, target, bits, depth - 1));
  }

  void second_neighbourhood() {
    const std::size_t cells = c_.grid;
    per_k(0, [&](std::size_t k) {
      add({"iv", "secondNeighbourhood", "(1.4-z)^(k-1) + z^(k-1) + 0.6 z^(k-2) < 1/e for z in [0.5, 0.7]",
           Parameters{{"k", std::to_string(k)}, {"cells", std::to_string(cells)}}, Relation::Less, Method::Enclosure,
           [=](unsigned bits) {
             const Interval target = inv_e(bits);
             Interval worst{Rational(-1), Rational(-1)};
             std::size_t where = 0;
             for (std::size_t j = 0; j < cells; ++j) {
               const Rational a = Rational(1, 2) + Rational(Integer(j), Integer(5 * cells));
               const Rational b = Rational(1, 2) + Rational(Integer(j + 1), Integer(5 * cells));
               const Interval f = second_bound(k, a, b, target, bits, 12);
               if (f.hi > worst.hi) where = j;
               worst = hull_max(worst, f);
             }
             return Eval{worst, target, {{"worstCell", std::to_string(where)}}};
           }});
    });
  }

  void power_sum() {
    auto constant = [](unsigned bits) {
      return enclose_exp(Rational(-1, 3), bits) + pt(Rational(Integer(1), ipow(Integer(33), 11)));
    };
    per_k(0, [&](std::size_t k) {
      const Rational x = Rational(Integer(1), Integer(3 * k));
      const Rational lhs = rpow(1 - x, k) + rpow(x, k);
      add({"v", "powerSum", "(1-1/(3k))^k + (1/(3k))^k <= e^(-1/3) + 33^(-11)", k_param(k), Relation::LessEqual,
           Method::Enclosure, [=](unsigned bits) { return Eval{pt(lhs), constant(bits), {}}; }});
    });
    add({"v", "powerSumConstant", "e^(-1/3) + 33^(-11) < 0.72", {}, Relation::Less, Method::Enclosure,
         [=](unsigned bits) { return Eval{constant(bits), pt(decimal("0.72")), {}}; }});
  }

  static Rational absurd_ratio(std::size_t k) {
    return Rational(ipow(Integer(k), k - 1) - 1, ipow(Integer(k - 2), k - 1));
  }

  void absurd_case() {
    per_k(0, [&](std::size_t k) {
      const Rational ratio = Rational(ipow(Integer(k), k) - k, ipow(Integer(k - 2), k - 1));
      add({"vi", "absurdRatio", "(k^k-k)/(k-2)^(k-1) <= 7.5k", k_param(k), Relation::LessEqual, Method::Exact,
           [=](unsigned) { return Eval{pt(ratio), pt(decimal("7.5") * rk(k)), {}}; }});
      const Rational r = absurd_ratio(k);
      const Rational r_next = absurd_ratio(k + 1);
      add({"vi", "absurdRatioDecreasing", "(k^k-1)/(k-1)^k <= (k^(k-1)-1)/(k-2)^(k-1)", k_param(k),
           Relation::LessEqual, Method::Exact, [=](unsigned) { return Eval{pt(r_next), pt(r), {}}; }});
      add({"vi", "absurdRatioLimit", "e^2 < (k^(k-1)-1)/(k-2)^(k-1)", k_param(k), Relation::Less, Method::Enclosure,
           [=](unsigned bits) { return Eval{enclose_exp(2, bits), pt(r), {}}; }});
      const Rational tail = rk(k - 1) * rpow(Rational(1, 2), k - 2);
      add({"vi", "absurdTail", "(k-1) (1/2)^(k-2) <= 10 * 2^(-9)", k_param(k), Relation::LessEqual, Method::Exact,
           [=](unsigned) { return Eval{pt(tail), pt(Rational(10, 512)), {}}; }});
      add({"vi", "absurdSecondTerm", "7.5 * 1.01 * (k-1) (1/2)^(k-2) < 0.25", k_param(k), Relation::Less,
           Method::Exact,
           [=](unsigned) { return Eval{pt(decimal("7.5") * decimal("1.01") * tail), pt(Rational(1, 4)), {}}; }});
    });
    add({"vi", "absurdTailConstant", "10 * 2^(-9) < 1/50", {}, Relation::Less, Method::Exact,
         [](unsigned) { return Eval{pt(Rational(10, 512)), pt(Rational(1, 50)), {}}; }});
  }

  /// sum m_i^k + (k^k - k) prod m_i against (sum m_i)^k, as the rational lhs of the simplex bound
  static Rational simplex_value(std::size_t k, const std::vector<std::size_t>& m) {
    Integer powers = 0;
    Integer product = 1;
    std::size_t total = 0;
    for (std::size_t x : m) {
      powers += ipow(Integer(x), k);
      product *= x;
      total += x;
    }
    product *= ipow(Integer(k), k) - k;
    return Rational(powers + product, ipow(Integer(total), k));
  }

  static std::string point_string(const std::vector<std::size_t>& m) {
    std::string s;
    for (std::size_t x : m) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  }

  void simplex() {
    const std::size_t grid = c_.grid;
    const std::size_t top = std::min<std::size_t>(8, c_.kmax);
    for (std::size_t k = 2; k <= top; ++k)
      add({"vii", "simplexGrid", "sum p_i^k + (k^k-k) prod p_i <= 1 on the simplex grid",
           Parameters{{"k", std::to_string(k)}, {"resolution", "1/" + std::to_string(grid)}}, Relation::LessEqual,
           Method::Exact, [=](unsigned) {
             // symmetric in the p_i: enumerate non-increasing grid points only
             std::vector<std::size_t> m(k, 0);
             Rational worst = -1;
             std::string where;
             std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left,
                                                                                  std::size_t cap) {
               if (i + 1 == k) {
                 if (left > cap) return;
                 m[i] = left;
                 const Rational v = simplex_value(k, m);
                 if (v > worst) {
                   worst = v;
                   where = point_string(m);
                 }
                 return;
               }
               for (std::size_t x = std::min(cap, left);; --x) {
                 if (x * (k - i) < left) break;  // remaining parts cannot absorb the rest
                 m[i] = x;
                 rec(i + 1, left - x, x);
                 if (x == 0) break;
               }
             };
             rec(0, grid, grid);
             return Eval{pt(worst), pt(1), {{"worstPoint", where}}};
           }});

    std::vector<std::size_t> ks;
    for (std::size_t k = 2; k <= top; ++k) ks.push_back(k);
    for (std::size_t k = std::max<std::size_t>(c_.kmin, 9); k <= c_.kmax; ++k) ks.push_back(k);
    for (std::size_t k : ks) {
      add({"vii", "simplexUniform", "k (1/k)^k + (k^k-k) (1/k)^k <= 1", k_param(k), Relation::LessEqual, Method::Exact,
           [=](unsigned) { return Eval{pt(simplex_value(k, std::vector<std::size_t>(k, 1))), pt(1), {}}; }});
      const std::uint64_t seed = c_.seed;
      const std::size_t points = c_.random_points;
      add({"vii", "simplexRandom", "sum p_i^k + (k^k-k) prod p_i <= 1 at random interior points",
           Parameters{{"k", std::to_string(k)}, {"points", std::to_string(points)}}, Relation::LessEqual,
           Method::Exact, [=](unsigned) {
             Rng rng = Rng::stream(seed, "simplex", k);
             Rational worst = -1;
             std::string where;
             for (std::size_t s = 0; s < points; ++s) {
               std::vector<std::size_t> m(k);
               for (auto& x : m) x = 1 + rng.below(1000);
               const Rational v = simplex_value(k, m);
               if (v > worst) {
                 worst = v;
                 where = point_string(m);
               }
             }
             return Eval{pt(worst), pt(1), {{"worstPoint", where}}};
           }});
    }
  }

  void parameterized(BatteryReport& report) {
    const unsigned bits = c_.precision;
    std::vector<Claim> claims;
    auto log_interval = [](const Interval& x, unsigned b) { return ilog(x, b); };

    // alpha: 1/(e^2 k^2) < k^(-0.9C/4) fails once 2 + 2 log k <= (0.9C/4) log k
    claims.push_back({"alphaClaim", "2 + 2 log k <= (0.9 C/4) log k", "10", Relation::LessEqual,
                      [](const Interval& L, unsigned) { return pt(2) + pt(2) * L; },
                      [](const Interval& L, unsigned) { return pt(Rational(9, 40)) * L; },
                      [](unsigned) { return pt(Rational(80, 9)); },
                      {}});
    claims.back().threshold_checks.push_back({"viii", "alphaClaim.threshold", "80/9 < 10", {}, Relation::Less,
                                              Method::Exact, [](unsigned) {
                                                return Eval{pt(Rational(80, 9)), pt(10), {}};
                                              }});

    // beta: 1/(e k) <= k^(-C (log 2 - 1/2)) fails once 1 + log k < C (log 2 - 1/2) log k
    auto kappa = [](unsigned b) { return enclose_log(2, b) - pt(Rational(1, 2)); };
    claims.push_back({"betaClaim", "1 + log k < C (log 2 - 1/2) log k", "1/(log 2 - 1/2) ~ 5.18", Relation::Less,
                      [](const Interval& L, unsigned) { return pt(1) + L; },
                      [=](const Interval& L, unsigned b) { return kappa(b) * L; },
                      [=](unsigned b) { return pt(1) / kappa(b); },
                      {}});
    claims.back().threshold_checks.push_back({"viii", "betaClaim.thresholdLower", "5.175 < 1/(log 2 - 1/2)", {},
                                              Relation::Less, Method::Enclosure, [=](unsigned b) {
                                                return Eval{pt(decimal("5.175")), pt(1) / kappa(b), {}};
                                              }});
    claims.back().threshold_checks.push_back({"viii", "betaClaim.thresholdUpper", "1/(log 2 - 1/2) < 5.185", {},
                                              Relation::Less, Method::Enclosure, [=](unsigned b) {
                                                return Eval{pt(1) / kappa(b), pt(decimal("5.185")), {}};
                                              }});

    // large part: (1/(1.01e) - 1/3)/k < k^(-C/8) fails once log k - log c <= (C/8) log k
    auto c_const = [](unsigned b) {
      return pt(1) / (pt(decimal("1.01")) * enclose_e(b)) - pt(Rational(1, 3));
    };
    claims.push_back({"largePartClaim", "log k - log(1/(1.01e) - 1/3) <= (C/8) log k", "8", Relation::LessEqual,
                      [=](const Interval& L, unsigned b) { return L - log_interval(c_const(b), b); },
                      [](const Interval& L, unsigned) { return pt(Rational(1, 8)) * L; },
                      [](unsigned) { return pt(8); },
                      {}});
    claims.back().threshold_checks.push_back({"viii", "largePartClaim.constant", "0 < 1/(1.01e) - 1/3", {},
                                              Relation::Less, Method::Enclosure, [=](unsigned b) {
                                                return Eval{pt(0), c_const(b), {}};
                                              }});

    // absurd case: 1.01 e^2 k^3 k^(-0.9C/8) < 1/4 once log 4.04 + 2 + 3 log k < (0.9C/8) log k
    claims.push_back({"absurdClaim", "log 4.04 + 2 + 3 log k < (0.9 C/8) log k", "24/0.9 ~ 26.67", Relation::Less,
                      [](const Interval& L, unsigned b) {
                        return enclose_log(decimal("4.04"), b) + pt(2) + pt(3) * L;
                      },
                      [](const Interval& L, unsigned) { return pt(Rational(9, 80)) * L; },
                      [](unsigned) { return pt(Rational(80, 3)); },
                      {}});
    claims.back().threshold_checks.push_back({"viii", "absurdClaim.thresholdLower", "26.665 < 24/0.9", {},
                                              Relation::Less, Method::Exact, [](unsigned) {
                                                return Eval{pt(decimal("26.665")), pt(Rational(80, 3)), {}};
                                              }});
    claims.back().threshold_checks.push_back({"viii", "absurdClaim.thresholdUpper", "24/0.9 < 26.67", {},
                                              Relation::Less, Method::Exact, [](unsigned) {
                                                return Eval{pt(Rational(80, 3)), pt(decimal("26.67")), {}};
                                              }});

    Rational overall = 0;
    for (auto& claim : claims) {
      Rational needed = 0;
      for (std::size_t k = c_.kmin; k <= c_.kmax; ++k) {
        const Interval L = enclose_log(rk(k), bits);
        const Interval cstar = claim.lhs(L, bits) / claim.slope(L, bits);
        needed = std::max(needed, cstar.hi);
      }
      // strict claims need C strictly above the threshold
      const Rational minimal = ceil_to(needed, 1000) + (claim.relation == Relation::Less ? Rational(1, 1000) : 0);
      report.minimal_c.push_back({claim.name, minimal, claim.limit(bits), claim.stated});
      overall = std::max(overall, minimal);
      for (auto& t : claim.threshold_checks) add(t);
      per_k(0, [&](std::size_t k) {
        add({"viii", claim.name, claim.statement,
             Parameters{{"k", std::to_string(k)}, {"C", decimal_string(minimal, 8)}}, claim.relation,
             Method::Enclosure, [=, lhs = claim.lhs, slope = claim.slope](unsigned b) {
               const Interval L = enclose_log(rk(k), b);
               return Eval{lhs(L, b), pt(minimal) * slope(L, b), {}};
             }});
      });
    }
    report.overall_minimal_c = overall;

    per_k(0, [&](std::size_t k) {
      const Rational ninety = 1 - Rational(Integer(1), Integer(k - 1));
      add({"viii", "ninetyPercent", "0.9 <= 1 - 1/(k-1)", k_param(k), Relation::LessEqual, Method::Exact,
           [=](unsigned) { return Eval{pt(decimal("0.9")), pt(ninety), {}}; }});
      const Rational cube = Rational(ipow(Integer(k), k - 2), ipow(Integer(k - 2), k - 2));
      add({"viii", "cubeRatio", "k^(k-2)/(k-2)^(k-2) <= e^2", k_param(k), Relation::LessEqual, Method::Enclosure,
           [=](unsigned b) { return Eval{pt(cube), enclose_exp(2, b), {}}; }});
      const Integer relaxed = Integer(k - 1) * (ipow(Integer(k), k) - k);
      const Integer power = ipow(Integer(k), k + 1);
      add({"viii", "cubeRelax", "(k-1)(k^k-k) < k^(k+1)", k_param(k), Relation::Less, Method::Exact,
           [=](unsigned) { return Eval{pt(Rational(relaxed)), pt(Rational(power)), {}}; }});
    });
  }

  void sampling() {
    const std::size_t g = c_.grid;
    const Parameters density{{"samples", std::to_string(g)}};
    // beta -> (1-beta)^q beta^(1-q) is decreasing for beta > 1-q; compared in log form
    add({"viii", "betaMonotone", "(1-beta)^q beta^(1-q) decreases in beta on (1-q, 1)", density, Relation::Less,
         Method::Sampling, [=](unsigned bits) {
           Interval worst{Rational(-1000), Rational(-1000)};
           std::string where;
           for (std::size_t i = 1; i <= g; ++i) {
             const Rational q{Integer(i), Integer(g)};
             auto value = [&](const Rational& beta) {
               Interval v = pt(q) * enclose_log(1 - beta, bits);
               if (q != 1) v = v + pt(1 - q) * enclose_log(beta, bits);
               return v;
             };
             Interval prev = value(1 - q + q / rk(g));
             for (std::size_t j = 2; j < g; ++j) {
               const Rational beta = 1 - q + q * rk(j) / rk(g);
               const Interval cur = value(beta);
               const Interval diff = cur - prev;
               if (diff.hi > worst.hi) where = "q=" + exact_string(q) + " beta=" + exact_string(beta);
               worst = hull_max(worst, diff);
               prev = cur;
             }
           }
           return Eval{worst, pt(0), {{"worstSample", where}}};
         }});

    // q -> (eta/2)^q (1-eta/2)^(1-q) / (q^q (1-q)^(1-q)) is decreasing for q > eta/2
    add({"viii", "qMonotone", "(eta/2)^q (1-eta/2)^(1-q) / (q^q (1-q)^(1-q)) decreases in q on (eta/2, 1]", density,
         Relation::Less, Method::Sampling, [=](unsigned bits) {
           Interval worst{Rational(-1000), Rational(-1000)};
           std::string where;
           for (std::size_t i = 1; i < g; ++i) {
             const Rational eta{Integer(i), Integer(g)};
             const Interval la = enclose_log(eta / 2, bits);
             const Interval lb = enclose_log(1 - eta / 2, bits);
             auto value = [&](const Rational& q) {
               Interval v = pt(q) * la - pt(q) * enclose_log(q, bits);
               if (q != 1) v = v + pt(1 - q) * lb - pt(1 - q) * enclose_log(1 - q, bits);
               return v;
             };
             Interval prev = value(eta / 2 + (1 - eta / 2) / rk(g));
             for (std::size_t j = 2; j <= g; ++j) {
               const Rational q = eta / 2 + (1 - eta / 2) * rk(j) / rk(g);
               const Interval cur = value(q);
               const Interval diff = cur - prev;
               if (diff.hi > worst.hi) where = "eta=" + exact_string(eta) + " q=" + exact_string(q);
               worst = hull_max(worst, diff);
               prev = cur;
             }
           }
           return Eval{worst, pt(0), {{"worstSample", where}}};
         }});

    // 2^(-eta) (1 + eta/(2(1-eta)))^(1-eta) <= exp(-(log 2 - 1/2) eta), after taking logs
    add({"viii", "etaBound", "2^(-eta) (1 + eta/(2(1-eta)))^(1-eta) <= exp(-(log 2 - 1/2) eta)", density,
         Relation::LessEqual, Method::Sampling, [=](unsigned bits) {
           Interval worst{Rational(-1000), Rational(-1000)};
           std::string where;
           for (std::size_t i = 1; i < g; ++i) {
             const Rational eta{Integer(i), Integer(g)};
             const Interval lhs = pt(1 - eta) * enclose_log(1 + eta / (2 * (1 - eta)), bits);
             const Interval diff = lhs - pt(eta / 2);
             if (diff.hi > worst.hi) where = "eta=" + exact_string(eta);
             worst = hull_max(worst, diff);
           }
           return Eval{worst, pt(0), {{"worstSample", where}}};
         }});
  }

  BatteryConfig c_;
  std::vector<Task> tasks_;
};

}  // namespace

BatteryReport inequality_battery(const BatteryConfig& config) { return Battery(config).build(); }

}  // namespace indlab

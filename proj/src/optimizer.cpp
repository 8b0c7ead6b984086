#include "indlab/optimizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "indlab/constructions.hpp"
#include "indlab/counting.hpp"
#include "indlab/error.hpp"

namespace indlab {

ColoredGraph duplicate_vertex(const ColoredGraph& h, std::size_t x, std::size_t y) {
  if (x == y || x >= h.order() || y >= h.order()) throw ValidationError("duplicate_vertex needs distinct vertices");
  ColoredGraph out = h;
  for (std::size_t v = 0; v < h.order(); ++v)
    if (v != x && v != y) out.set_color(y, v, h.color(x, v));
  out.set_color(x, y, kEmpty);
  return out;
}

std::optional<ZykovStep> zykov_step(const Pattern& p, const ColoredGraph& h) {
  const std::size_t n = h.order();
  if (n < 2) return std::nullopt;
  const RoleStats s = role_stats(p, h);
  std::optional<ZykovStep> best;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto dx = static_cast<std::int64_t>(s.degrees[x] / s.automorphisms);
      const auto dy = static_cast<std::int64_t>(s.degrees[y] / s.automorphisms);
      const auto bound = dx - dy - static_cast<std::int64_t>(s.pair(x, y));
      if (bound > 0 && (!best || bound > best->bound)) {
        best = ZykovStep{};
        best->x = x;
        best->y = y;
        best->bound = bound;
      }
    }
  if (!best) return std::nullopt;
  best->before = s.copies;
  best->graph = duplicate_vertex(h, best->x, best->y);
  best->after = count_induced(p, best->graph);
  if (best->gain() < best->bound)
    throw InvariantViolation("Zykov step gained " + std::to_string(best->gain()) + " < bound " +
                             std::to_string(best->bound));
  return best;
}

std::string to_string(StartKind kind) {
  switch (kind) {
    case StartKind::Random: return "random";
    case StartKind::PatternBlowup: return "pattern-blowup";
    case StartKind::AlternativeBase: return "alternative-base";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Beaten ? "BEATEN" : "NOT_BEATEN_WITHIN_BUDGET"; }

namespace {

ColoredGraph random_coloring(std::size_t n, std::size_t palette, Rng& rng) {
  ColoredGraph g(n, palette);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.set_color(u, v, make_color(rng.below(palette)));
  return g;
}

void perturb(ColoredGraph& g, std::size_t flips, Rng& rng) {
  const std::size_t n = g.order();
  if (n < 2) return;
  for (std::size_t f = 0; f < flips; ++f) {
    const std::size_t u = rng.below(n);
    std::size_t v = rng.below(n - 1);
    if (v >= u) ++v;
    g.set_color(u, v, make_color(rng.below(g.palette())));
  }
}

struct Climb {
  ColoredGraph g;
  std::uint64_t count = 0;
  std::vector<MoveRecord> log;
};

struct Recolor {
  std::size_t u = 0;
  std::size_t v = 0;
  Color c = kEmpty;
  std::int64_t gain = 0;
};

/// Best (or first) improving single-pair recoloring.
std::optional<Recolor> find_recolor(const Pattern& p, const ColoredGraph& g, bool steepest) {
  std::optional<Recolor> best;
  const std::size_t n = g.order();
  ColoredGraph trial = g;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const Color current = g.color(u, v);
      const auto base = static_cast<std::int64_t>(pair_degree(p, g, u, v));
      for (std::size_t c = 0; c < g.palette(); ++c) {
        if (make_color(c) == current) continue;
        trial.set_color(u, v, make_color(c));
        const auto gain = static_cast<std::int64_t>(pair_degree(p, trial, u, v)) - base;
        if (gain > 0 && (!best || gain > best->gain)) {
          best = Recolor{u, v, make_color(c), gain};
          if (!steepest) {
            trial.set_color(u, v, current);
            return best;
          }
        }
      }
      trial.set_color(u, v, current);
    }
  return best;
}

void verify(const Pattern& p, const Climb& c) {
  const auto recount = count_induced(p, c.g);
  if (recount != c.count)
    throw InvariantViolation("search bookkeeping drifted: " + std::to_string(c.count) + " vs recount " +
                             std::to_string(recount));
}

void climb(const Pattern& p, Climb& c, const SearchConfig& config) {
  while (true) {
    const auto recolor = find_recolor(p, c.g, config.steepest);
    std::optional<ZykovStep> zykov;
    if (config.zykov_moves && (config.steepest || !recolor)) zykov = zykov_step(p, c.g);
    const bool take_zykov = zykov && (!recolor || zykov->gain() > recolor->gain);
    if (take_zykov) {
      c.g = std::move(zykov->graph);
      c.count = zykov->after;
      c.log.push_back({MoveRecord::Kind::Zykov, zykov->x, zykov->y, kEmpty, c.count});
    } else if (recolor) {
      c.g.set_color(recolor->u, recolor->v, recolor->c);
      c.count += static_cast<std::uint64_t>(recolor->gain);
      c.log.push_back({MoveRecord::Kind::Recolor, recolor->u, recolor->v, recolor->c, c.count});
    } else {
      return;
    }
    verify(p, c);
  }
}

struct Outcome {
  RestartSummary summary;
  Climb climb;
};

Outcome run_restart(const Pattern& p, std::size_t n, const SearchConfig& config, std::size_t r) {
  Rng rng = Rng::stream(config.seed, "restart", r);
  const std::size_t palette = p.palette();
  const std::size_t k = p.order();
  Outcome out;
  out.summary.index = r;
  Climb& c = out.climb;
  switch (r % 4) {
    case 2:
      out.summary.start = StartKind::PatternBlowup;
      c.g = realize(p, plan_blowup(p, n));
      if (r >= 4) perturb(c.g, 1 + r / 4, rng);
      break;
    case 3:
      if (k + 1 <= n) {
        out.summary.start = StartKind::AlternativeBase;
        // a K_{k+1} host colored at random, climbed, then blown up
        Climb base{random_coloring(k + 1, palette, rng), 0, {}};
        base.count = count_induced(p, base.g);
        SearchConfig inner = config;
        inner.zykov_moves = false;
        climb(p, base, inner);
        c.g = realize(base.g, plan_blowup(k + 1, n));
        break;
      }
      [[fallthrough]];
    default:
      out.summary.start = StartKind::Random;
      c.g = random_coloring(n, palette, rng);
      break;
  }
  c.count = count_induced(p, c.g);
  out.summary.initial = c.count;
  climb(p, c, config);
  out.summary.final = c.count;
  out.summary.moves = c.log.size();
  return out;
}

}  // namespace

SearchReport hillclimb(const Pattern& p, std::size_t n, const SearchConfig& config) {
  if (config.restarts == 0) throw ValidationError("search budget must be positive");
  const std::size_t total = config.restarts;
  std::vector<Outcome> outcomes(total);
  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, total);
  if (threads == 1) {
    for (std::size_t r = 0; r < total; ++r) outcomes[r] = run_restart(p, n, config, r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t r = t; r < total; r += threads) outcomes[r] = run_restart(p, n, config, r);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SearchReport report;
  report.n = n;
  report.seed = config.seed;
  report.comparator = count_induced(p, realize(p, plan_blowup(p, n)));
  std::size_t best = 0;
  for (std::size_t r = 0; r < total; ++r) {
    report.restarts.push_back(outcomes[r].summary);
    report.iterations += outcomes[r].summary.moves;
    if (outcomes[r].climb.count > outcomes[best].climb.count) best = r;
  }
  report.best_restart = best;
  report.best = outcomes[best].climb.g;
  report.best_count = outcomes[best].climb.count;
  report.moves = outcomes[best].climb.log;
  report.best_rho = p.order() <= n ? Rational(Integer(report.best_count), binomial(n, p.order())) : Rational(0);
  return report;
}

BeatReport beat_blowup(const Pattern& p, std::size_t n, const SearchConfig& config) {
  BeatReport out;
  out.search = hillclimb(p, n, config);
  const auto recount = count_induced(p, out.search.best);
  if (recount != out.search.best_count) throw InvariantViolation("best host recount differs from search count");
  out.verdict = recount > out.search.comparator ? Verdict::Beaten : Verdict::NotBeatenWithinBudget;
  return out;
}

namespace {

class ExactSearch {
 public:
  ExactSearch(const Pattern& p, std::size_t n, std::uint64_t budget, std::uint64_t incumbent)
      : p_(p), n_(n), k_(p.order()), palette_(p.palette()), budget_(budget), g_(n, p.palette()), best_(incumbent) {
    for (std::size_t v = 1; v < n; ++v)
      for (std::size_t u = 0; u < v; ++u) pairs_.push_back({u, v});
    pair_index_.assign(n * n, 0);
    for (std::size_t e = 0; e < pairs_.size(); ++e) pair_index_[pairs_[e].u * n + pairs_[e].v] = e;
    assigned_.assign(pairs_.size(), false);

    if (k_ <= n) {
      std::vector<std::size_t> s(k_);
      std::iota(s.begin(), s.end(), 0);
      while (true) {
        subsets_.push_back(s);
        std::size_t i = k_;
        while (i > 0 && s[i - 1] == n - k_ + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k_; ++j) s[j] = s[j - 1] + 1;
      }
    }
    containing_.assign(pairs_.size(), {});
    for (std::size_t s = 0; s < subsets_.size(); ++s)
      for (std::size_t a = 0; a < k_; ++a)
        for (std::size_t b = a + 1; b < k_; ++b)
          containing_[pair_index_[subsets_[s][a] * n + subsets_[s][b]]].push_back(s);
    alive_.assign(subsets_.size(), true);
    bound_ = subsets_.size();

    std::vector<std::size_t> perm(k_);
    std::iota(perm.begin(), perm.end(), 0);
    do perms_.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t pair_count() const { return pairs_.size(); }

  /// Explores the subtree where the first pair has color `first` (or the
  /// whole tree when there are no pairs).
  void run(std::optional<std::size_t> first) {
    if (!first) {
      descend(0);
      return;
    }
    ++nodes_;
    assign(0, *first);
    if (bound_ >= best_) descend(1);
    unassign(0);
  }

  bool stopped() const { return stopped_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }
  std::uint64_t best() const { return best_; }
  const std::map<CanonicalCode, ColoredGraph>& witnesses() const { return witnesses_; }

 private:
  bool consistent(std::size_t s) const {
    const auto& vs = subsets_[s];
    for (const auto& perm : perms_) {
      bool ok = true;
      for (std::size_t a = 0; a < k_ && ok; ++a)
        for (std::size_t b = a + 1; b < k_ && ok; ++b) {
          if (!assigned_[pair_index_[vs[a] * n_ + vs[b]]]) continue;
          ok = g_.color(vs[a], vs[b]) == p_.color(perm[a], perm[b]);
        }
      if (ok) return true;
    }
    return false;
  }

  void assign(std::size_t e, std::size_t c) {
    g_.set_color(pairs_[e].u, pairs_[e].v, make_color(c));
    assigned_[e] = true;
    killed_.push_back(kMark);
    for (std::size_t s : containing_[e]) {
      if (!alive_[s] || consistent(s)) continue;
      alive_[s] = false;
      --bound_;
      killed_.push_back(s);
    }
  }

  void unassign(std::size_t e) {
    while (killed_.back() != kMark) {
      alive_[killed_.back()] = true;
      ++bound_;
      killed_.pop_back();
    }
    killed_.pop_back();
    assigned_[e] = false;
    g_.set_color(pairs_[e].u, pairs_[e].v, kEmpty);
  }

  void descend(std::size_t depth) {
    if (stopped_) return;
    if (depth == pairs_.size()) {
      ++leaves_;
      const std::uint64_t count = bound_;
      if (count > best_) {
        best_ = count;
        witnesses_.clear();
      }
      if (count == best_) witnesses_.try_emplace(canonical_form(g_), g_);
      return;
    }
    for (std::size_t c = 0; c < palette_; ++c) {
      if (++nodes_ > budget_) {
        stopped_ = true;
        return;
      }
      assign(depth, c);
      if (bound_ >= best_) descend(depth + 1);
      unassign(depth);
      if (stopped_) return;
    }
  }

  static constexpr std::size_t kMark = static_cast<std::size_t>(-1);

  const Pattern& p_;
  std::size_t n_;
  std::size_t k_;
  std::size_t palette_;
  std::uint64_t budget_;
  ColoredGraph g_;
  std::vector<Edge> pairs_;  // ordered by larger endpoint
  std::vector<std::size_t> pair_index_;
  std::vector<bool> assigned_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::vector<std::size_t>> perms_;
  std::vector<bool> alive_;
  std::vector<std::size_t> killed_;
  std::uint64_t bound_ = 0;  // complete copies plus still-completable subsets
  std::uint64_t best_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  bool stopped_ = false;
  std::map<CanonicalCode, ColoredGraph> witnesses_;
};

}  // namespace

ExactResult exact_search(const Pattern& p, std::size_t n, const ExactConfig& config) {
  if (n > kCanonicalLimit) throw ValidationError("exact search is limited to n <= " + std::to_string(kCanonicalLimit));
  ExactResult result;
  result.n = n;
  result.comparator = count_induced(p, realize(p, plan_blowup(p, n)));

  // The budget is split evenly over the first pair's colors, so results do not
  // depend on the thread count.
  const std::size_t branches = n >= 2 ? p.palette() : 1;
  const std::uint64_t share = std::max<std::uint64_t>(1, config.node_budget / branches);
  std::vector<std::unique_ptr<ExactSearch>> searches;
  for (std::size_t b = 0; b < branches; ++b)
    searches.push_back(std::make_unique<ExactSearch>(p, n, share, result.comparator));
  auto work = [&](std::size_t b) {
    if (n >= 2)
      searches[b]->run(b);
    else
      searches[b]->run(std::nullopt);
  };
  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, branches);
  if (threads == 1) {
    for (std::size_t b = 0; b < branches; ++b) work(b);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t b = t; b < branches; b += threads) work(b);
      });
    for (auto& th : pool) th.join();
  }

  std::map<CanonicalCode, ColoredGraph> merged;
  result.complete = true;
  for (const auto& s : searches) {
    result.nodes += s->nodes();
    result.leaves += s->leaves();
    if (s->stopped()) result.complete = false;
    result.optimum = std::max(result.optimum, s->best());
  }
  for (const auto& s : searches)
    if (s->best() == result.optimum)
      for (const auto& [code, g] : s->witnesses()) merged.try_emplace(code, g);
  for (auto& [code, g] : merged) result.witnesses.push_back(std::move(g));
  result.rho = p.order() <= n ? Rational(Integer(result.optimum), binomial(n, p.order())) : Rational(0);
  return result;
}

}  // namespace indlab

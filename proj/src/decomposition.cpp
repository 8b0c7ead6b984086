#include "indlab/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "indlab/error.hpp"
#include "indlab/verifier.hpp"

namespace indlab {

namespace {

std::string at(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  // 1-indexed, as in reports
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, value] : items) {
    if (!first) out << ' ';
    out << key << '=' << value + 1;
    first = false;
  }
  return out.str();
}

/// (num / den)^e with 0^0 = (q/0)^0 = 1.
Rational ratio_power(const Integer& num, std::size_t den, std::size_t e) {
  if (e == 0) return 1;
  return rpow(Rational(num, Integer(den)), e);
}

/// p(q - 1, t), zero when q == 0.
Integer p_minus_one(std::size_t q, std::size_t t) { return q == 0 ? Integer(0) : p_exact(q - 1, t); }

}  // namespace

std::vector<std::vector<std::size_t>> RolePartition::parts() const {
  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t x = 0; x < role.size(); ++x) out[role[x]].push_back(x);
  return out;
}

RolePartition RolePartition::from_roles(std::size_t k, std::vector<std::size_t> role) {
  RolePartition rp;
  rp.k = k;
  rp.sizes.assign(k, 0);
  for (std::size_t r : role) {
    if (r >= k) throw ValidationError("partition role out of range");
    ++rp.sizes[r];
  }
  rp.role = std::move(role);
  return rp;
}

RolePartition partition_roles(const Pattern& p, const ColoredGraph& h, const RoleStats& stats) {
  const std::size_t k = p.order();
  std::vector<std::size_t> role(h.order(), 0);
  for (std::size_t x = 0; x < h.order(); ++x) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < k; ++i)
      if (stats.N(x, i).size() > stats.N(x, best).size()) best = i;
    role[x] = best;
  }
  return RolePartition::from_roles(k, std::move(role));
}

CopySplit split_copies(const Pattern& p, const ColoredGraph& h, const RolePartition& rp) {
  const std::size_t k = p.order();
  CopySplit out;
  std::set<std::vector<std::size_t>> seen;
  for_each_embedding(p, h, [&](std::span<const std::size_t> phi) {
    ClassifiedCopy copy;
    copy.phi.assign(phi.begin(), phi.end());
    copy.vertices = copy.phi;
    std::sort(copy.vertices.begin(), copy.vertices.end());
    if (!seen.insert(copy.vertices).second) return;

    std::vector<std::size_t> in_part(k, 0);
    std::vector<std::size_t> natural(k, 0);
    for (std::size_t v : copy.vertices) {
      ++in_part[rp.role[v]];
      natural[rp.role[v]] = v;
    }
    const bool inside = std::any_of(in_part.begin(), in_part.end(), [&](std::size_t c) { return c == k; });
    const bool transversal = std::all_of(in_part.begin(), in_part.end(), [](std::size_t c) { return c == 1; });
    bool aligned = transversal;
    for (std::size_t i = 0; i < k && aligned; ++i)
      for (std::size_t j = i + 1; j < k && aligned; ++j) aligned = h.color(natural[i], natural[j]) == p.color(i, j);

    if (inside) {
      copy.cls = CopyClass::Inside;
      ++out.hm;
    } else if (aligned) {
      copy.cls = CopyClass::Aligned;
      ++out.hg;
    } else {
      copy.cls = CopyClass::Bad;
      ++out.hb;
    }
    out.copies.push_back(std::move(copy));
  });
  return out;
}

std::vector<std::size_t> color_roles(const Pattern& p, Color c) {
  if (c == kEmpty) return {};
  const auto e = p.endpoints(c);
  if (!e) return {};
  return {e->u, e->v};
}

MisalignedPairs misaligned(const Pattern& p, const ColoredGraph& h, const RolePartition& rp) {
  const std::size_t n = h.order();
  const std::size_t k = p.order();
  MisalignedPairs mp;
  mp.n = n;
  mp.k = k;
  mp.per_part_pair.assign(k * k, 0);
  mp.member.assign(n * n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w) {
      const std::size_t i = rp.role[v];
      const std::size_t j = rp.role[w];
      if (i == j) continue;
      const Color c = h.color(v, w);
      if (c == p.color(i, j)) continue;
      const auto roles = color_roles(p, c);
      const auto holds = [&](std::size_t r) { return std::find(roles.begin(), roles.end(), r) != roles.end(); };
      MisalignedPair e{v, w, !holds(i), !holds(j)};
      switch (e.wrong()) {
        case 0: ++mp.d0; break;
        case 1: ++mp.d1; break;
        default: ++mp.d2; break;
      }
      ++mp.per_part_pair[std::min(i, j) * k + std::max(i, j)];
      mp.member[v * n + w] = mp.member[w * n + v] = 1;
      mp.pairs.push_back(e);
    }
  const Integer pairs = binomial(n, 2);
  Integer inside = 0;
  for (std::size_t s : rp.sizes) inside += binomial(s, 2);
  if (pairs > 0) {
    mp.delta = Rational(Integer(mp.pairs.size()), pairs);
    mp.delta_max = 1 - Rational(inside, pairs);
  }
  return mp;
}

SidedWeight sided_audit(const Pattern& p, const ColoredGraph& h, const RolePartition& rp, const CopySplit& split,
                        const MisalignedPairs& mp, AuditMode mode) {
  const std::size_t k = p.order();
  if (k < 3) throw ValidationError("sided audit needs k >= 3");
  if (mode == AuditMode::Clique && !p.is_clique()) throw ValidationError("clique-mode audit needs a complete pattern");
  if (mode == AuditMode::Connected && !p.is_connected())
    throw ValidationError("connected-mode audit needs a connected pattern");

  SidedWeight sw;
  sw.mode = mode;
  sw.required = mode == AuditMode::Clique ? k - 2 : 1;
  for (const auto& copy : split.copies) {
    if (copy.cls != CopyClass::Bad) continue;
    std::size_t found = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        const std::size_t v = copy.vertices[a];
        const std::size_t w = copy.vertices[b];
        if (!mp.contains(v, w)) continue;
        ++found;
        if (mode != AuditMode::Clique) continue;
        const auto roles = color_roles(p, h.color(v, w));
        const std::size_t i = rp.role[v];
        const std::size_t j = rp.role[w];
        const auto hits = std::count_if(roles.begin(), roles.end(), [&](std::size_t r) { return r == i || r == j; });
        if (hits == 1) ++sw.j1;
        if (hits == 0) sw.j2 += 2;
      }
    sw.j += found;
    sw.fewest = sw.fewest ? std::min(*sw.fewest, found) : found;
    if (found < sw.required) sw.violations.push_back({copy.vertices, found, sw.required});
  }
  sw.s = 2 * sw.j1 + sw.j2;
  return sw;
}

void BoundCheck::record(const Rational& lhs, const Rational& rhs, const std::string& where) {
  ++evaluated;
  const Rational margin = rhs - lhs;
  if (!min_margin || margin < *min_margin) {
    min_margin = margin;
    tightest = where;
  }
  if (margin < 0) {
    if (violated == 0) witness = where + ": " + exact_string(lhs) + " > " + exact_string(rhs);
    ++violated;
  }
}

bool BoundReport::ok() const { return violations() == 0; }

std::uint64_t BoundReport::violations() const {
  std::uint64_t total = 0;
  for (const auto& c : checks) total += c.violated;
  return total;
}

const BoundCheck* BoundReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

class Auditor {
 public:
  // The zn-based checks rely on |N_l(v)| <= zn for l other than v's part,
  // which holds for the role partition only.
  Auditor(const Pattern& p, const ColoredGraph& h, Decomposition& d, bool role_partition)
      : p_(p), h_(h), d_(d), k_(p.order()), n_(h.order()), role_partition_(role_partition) {}

  void run() {
    identities();
    if (p_.is_connected()) {
      degree_bounds();
      if (p_.is_clique()) neighbourhood_products();
    }
    aligned_upper();
    if (k_ >= 3 && p_.is_connected()) {
      d_.sided = sided_audit(p_, h_, d_.partition, d_.split, d_.pairs,
                             p_.is_clique() ? AuditMode::Clique : AuditMode::Connected);
      bad_copies();
    }
  }

 private:
  BoundCheck& check(const std::string& name) {
    for (auto& c : d_.bounds.checks)
      if (c.name == name) return c;
    BoundCheck fresh;
    fresh.name = name;
    d_.bounds.checks.push_back(std::move(fresh));
    return d_.bounds.checks.back();
  }

  void equal(const std::string& name, const Integer& lhs, const Integer& rhs, const std::string& where) {
    // recorded as two inequalities so the margin is exactly 0 on success
    auto& c = check(name);
    c.record(Rational(lhs), Rational(rhs), where);
    c.record(Rational(rhs), Rational(lhs), where);
  }

  void identities() {
    const auto& s = d_.split;
    equal("copySplit", Integer(s.hm) + s.hg + s.hb, Integer(d_.stats.copies), "h_m + h_g + h_b vs I");
    Integer inside = 0;
    for (const auto& part : d_.partition.parts()) inside += count_induced(p_, h_.induced(part));
    equal("insideCopies", Integer(s.hm), inside, "h_m vs sum of counts inside parts");
    check("deltaRange").record(d_.pairs.delta, d_.pairs.delta_max, "delta vs 1 - sum binom(n_i,2)/binom(n,2)");
  }

  void degree_bounds() {
    const auto& st = d_.stats;
    auto& a = check("partitionNeighbours");
    auto& b = check("partitionRole");
    auto& c = check("partitionColor");
    auto& two = check("twoVertex");
    auto& sum = check("degreeSum");
    for (std::size_t x = 0; x < n_; ++x) {
      const std::size_t bx = st.neighbours[x].size();
      Integer psum = 0;
      for (std::size_t i = 0; i < k_; ++i) {
        const Rational di(Integer(st.d(x, i)));
        const std::size_t k1 = p_.degree(i);
        const std::size_t rest = k_ - k1 - 1;
        a.record(di, ratio_power(bx, k1, k1) * ratio_power(Integer(n_ - bx), rest, rest), at({{"x", x}, {"i", i}}));
        const std::size_t ni = st.N(x, i).size();
        b.record(di, ratio_power(ni, k_ - 1, k_ - 1), at({{"x", x}, {"i", i}}));
        for (std::size_t j = 0; j < k_; ++j) {
          if (j == i || p_.color(i, j) == kEmpty) continue;
          const std::size_t dc = st.color_degree(x, p_.color(i, j));
          c.record(di, Rational(Integer(dc)) * ratio_power(Integer(n_ - dc), k_ - 2, k_ - 2),
                   at({{"x", x}, {"i", i}, {"j", j}}));
        }
        std::uint64_t most = 0;
        std::size_t argmost = x;
        for (std::size_t y = 0; y < n_; ++y) {
          if (y == x) continue;
          const auto e = st.role_pair_embeddings[(x * k_ + i) * n_ + y];
          if (e > most || argmost == x) {
            most = e;
            argmost = y;
          }
        }
        if (argmost != x)
          two.record(Rational(Integer(most)), ratio_power(ni, k_ - 2, k_ - 2), at({{"x", x}, {"i", i}, {"y", argmost}}));
        psum += p_exact(ni, k_ - 1);
      }
      sum.record(Rational(Integer(st.degrees[x])), Rational(psum), at({{"x", x}}));
    }
  }

  void neighbourhood_products() {
    const auto& st = d_.stats;
    auto& prod = check("degreeProduct");
    for (std::size_t x = 0; x < n_; ++x) {
      Integer total = 0;
      for (std::size_t i = 0; i < k_; ++i) {
        Integer term = 1;
        for (std::size_t j = 0; j < k_; ++j)
          if (j != i) term *= st.N(x, i, j).size();
        total += term;
      }
      prod.record(Rational(Integer(st.degrees[x])), Rational(total), at({{"x", x}}));
    }
  }

  Rational aligned_rhs() const {
    Integer product = 1;
    for (std::size_t s : d_.partition.sizes) product *= s;
    const Integer cross = binomial(n_, 2) - [&] {
      Integer inside = 0;
      for (std::size_t s : d_.partition.sizes) inside += binomial(s, 2);
      return inside;
    }();
    if (cross == 0) return Rational(product);
    return Rational(product) * (1 - Rational(Integer(d_.pairs.pairs.size()), cross));
  }

  void aligned_upper() { check("alignedUpper").record(Rational(Integer(d_.split.hg)), aligned_rhs(), "h_g"); }

  void bad_copies() {
    const auto& st = d_.stats;
    const auto& sw = *d_.sided;
    const auto& rp = d_.partition;
    const Integer dsize(d_.pairs.pairs.size());
    std::size_t zn = 0;
    for (std::size_t x = 0; x < n_; ++x) zn = std::max(zn, st.second_size(x));
    const Rational zpow = ratio_power(Integer(zn), k_ - 2, k_ - 2);
    const Rational hb(Integer(d_.split.hb));
    Rational hb_upper;

    auto& perCopy = check("badCopyPairs");
    if (sw.fewest) perCopy.record(Rational(Integer(sw.required)), Rational(Integer(*sw.fewest)), "fewest misaligned pairs in a bad copy");

    if (sw.mode == AuditMode::Clique) {
      check("sidedLower").record(Rational(Integer(2 * (k_ - 2)) * Integer(d_.split.hb)), Rational(Integer(sw.s)), "2(k-2) h_b vs S");
      Integer sides = 0;
      for (const auto& e : d_.pairs.pairs) {
        const auto roles = color_roles(p_, h_.color(e.v, e.w));
        Integer term = 0;
        for (std::size_t u : {e.v, e.w}) {
          const bool wrong = u == e.v ? e.v_wrong : e.w_wrong;
          if (!wrong) continue;
          for (std::size_t r : roles) term += p_minus_one(st.N(u, r).size(), k_ - 2);
        }
        sides += e.wrong() == 1 ? 2 * term : term;
      }
      const Integer pz = p_exact(zn, k_ - 2);
      check("sidedNeighbourhoods").record(Rational(Integer(sw.s)), Rational(sides), "S vs neighbourhood sums");
      if (role_partition_) {
      check("sidedProduct").record(Rational(sides), Rational(4 * dsize * pz), "neighbourhood sums vs 4|D| p(zn,k-2)");
      check("sidedPower").record(Rational(4 * dsize * pz), Rational(4 * dsize) * zpow, "4|D| p(zn,k-2) vs 4|D| (zn/(k-2))^(k-2)");
      hb_upper = Rational(2 * dsize, Integer(k_ - 2)) * zpow;
      check("badUpperSided").record(hb, hb_upper, "h_b vs 2|D|/(k-2) (zn/(k-2))^(k-2)");
      check("copyTotalSided").record(Rational(Integer(st.copies)),
                                     Rational(Integer(d_.split.hm)) + aligned_rhs() + hb_upper, "I vs computable bound");
      }
    }

    check("badPairs").record(hb, Rational(Integer(sw.j)), "h_b vs |J|");
    Rational pair_sum = 0;
    for (const auto& e : d_.pairs.pairs)
      for (std::size_t u : {e.v, e.w})
        for (std::size_t l = 0; l < k_; ++l)
          if (l != rp.role[u]) pair_sum += ratio_power(st.N(u, l).size(), k_ - 2, k_ - 2);
    check("pairNeighbourhoods").record(Rational(Integer(sw.j)), pair_sum, "|J| vs two-vertex sums");
    if (!role_partition_) return;
    const Rational connected_upper = Rational(2 * dsize * Integer(k_ - 1)) * zpow;
    check("pairPower").record(pair_sum, connected_upper, "two-vertex sums vs 2|D|(k-1)(zn/(k-2))^(k-2)");
    check("copyTotal").record(Rational(Integer(st.copies)),
                              Rational(Integer(d_.split.hm)) + aligned_rhs() + connected_upper, "I vs computable bound");
  }

  const Pattern& p_;
  const ColoredGraph& h_;
  Decomposition& d_;
  std::size_t k_;
  std::size_t n_;
  bool role_partition_;
};

}  // namespace

Decomposition bound_audit(const Pattern& p, const ColoredGraph& h, const std::optional<RolePartition>& rp) {
  Decomposition d;
  d.stats = role_stats(p, h);
  d.global = global_stats(p, h, d.stats);
  d.partition = rp ? *rp : partition_roles(p, h, d.stats);
  if (d.partition.role.size() != h.order() || d.partition.k != p.order())
    throw ValidationError("partition does not match pattern and host");
  d.split = split_copies(p, h, d.partition);
  d.pairs = misaligned(p, h, d.partition);
  Auditor(p, h, d, !rp).run();
  return d;
}

}  // namespace indlab

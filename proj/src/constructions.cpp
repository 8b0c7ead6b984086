#include "indlab/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "indlab/error.hpp"

namespace indlab {

std::vector<std::size_t> BlowupTree::part_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.size);
  return out;
}

BlowupTree plan_blowup(std::size_t base_order, std::size_t n) {
  BlowupTree t;
  t.size = n;
  if (base_order < 2 || n < base_order) return t;
  const std::size_t q = n / base_order;
  const std::size_t r = n % base_order;
  t.parts.reserve(base_order);
  for (std::size_t i = 0; i < base_order; ++i) t.parts.push_back(plan_blowup(base_order, q + (i < r ? 1 : 0)));
  return t;
}

BlowupTree plan_blowup(const Pattern& p, std::size_t n) { return plan_blowup(p.order(), n); }

namespace {

void paint(const ColoredGraph& base, const BlowupTree& t, std::size_t offset, ColoredGraph& g) {
  if (t.leaf()) return;
  std::vector<std::size_t> start(t.parts.size() + 1, offset);
  for (std::size_t i = 0; i < t.parts.size(); ++i) start[i + 1] = start[i] + t.parts[i].size;
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < t.parts.size(); ++j) {
      const Color c = base.color(i, j);
      if (c == kEmpty) continue;
      for (std::size_t u = start[i]; u < start[i + 1]; ++u)
        for (std::size_t v = start[j]; v < start[j + 1]; ++v) g.set_color(u, v, c);
    }
    paint(base, t.parts[i], start[i], g);
  }
}

}  // namespace

ColoredGraph realize(const ColoredGraph& base, const BlowupTree& tree) {
  if (!tree.leaf() && tree.parts.size() != base.order())
    throw ValidationError("blow-up tree does not match the base order");
  ColoredGraph g(tree.size, base.palette());
  paint(base, tree, 0, g);
  return g;
}

ColoredGraph realize(const Pattern& p, const BlowupTree& tree) { return realize(p.complete_view(), tree); }

Integer recursive_lower_bound(const BlowupTree& tree) {
  if (tree.leaf()) return 0;
  Integer product = 1;
  Integer inner = 0;
  for (const auto& part : tree.parts) {
    product *= part.size;
    inner += recursive_lower_bound(part);
  }
  return inner + product;
}

namespace {

void require_no_isolated(const Pattern& p) {
  for (std::size_t i = 0; i < p.order(); ++i)
    if (p.degree(i) == 0) throw ValidationError("unsupported: pattern has an isolated vertex");
}

}  // namespace

SeparatePlan plan_separate(const Pattern& p, std::size_t n) {
  require_no_isolated(p);
  SeparatePlan plan;
  plan.size = n;
  plan.components = p.components();
  const std::size_t l = plan.components.size();
  if (l < 2) throw ValidationError("separate blow-up needs a disconnected pattern");
  const std::size_t k = p.order();

  std::vector<std::size_t> sizes(l);
  std::vector<std::size_t> remainder(l);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t scaled = plan.components[i].size() * n;
    sizes[i] = scaled / k;
    remainder[i] = scaled % k;
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(l);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t r = 0; assigned < n; ++r, ++assigned) ++sizes[order[r]];

  for (std::size_t i = 0; i < l; ++i) {
    plan.sides.push_back(p.sub_pattern(plan.components[i]));
    plan.trees.push_back(plan_blowup(plan.components[i].size(), sizes[i]));
  }
  return plan;
}

ColoredGraph realize(const Pattern& p, const SeparatePlan& plan) {
  ColoredGraph g(plan.size, p.palette());
  std::size_t offset = 0;
  for (std::size_t s = 0; s < plan.sides.size(); ++s) {
    const ColoredGraph side = realize(plan.sides[s], plan.trees[s]);
    for (std::size_t u = 0; u < side.order(); ++u)
      for (std::size_t v = u + 1; v < side.order(); ++v) g.set_color(offset + u, offset + v, side.color(u, v));
    offset += side.order();
  }
  return g;
}

DensityFormula limit_density(const Pattern& p) {
  require_no_isolated(p);
  DensityFormula f;
  const std::size_t k = p.order();
  f.k = k;
  for (const auto& c : p.components()) f.component_sizes.push_back(c.size());
  Integer factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) factorial *= i;
  const Integer kk(k);
  f.a = Rational(factorial, ipow(kk, k) - kk);
  f.one_blowup_coefficient = 1;
  f.separate_coefficient = 1;
  for (std::size_t c : f.component_sizes) {
    const Rational one(ipow(kk, c) - kk);
    const Rational sep = Rational(ipow(kk, c)) - Rational(kk) * rpow(Rational(kk, Integer(c)), c - 1);
    f.one_blowup_denoms.push_back(one);
    f.separate_denoms.push_back(sep);
    f.one_blowup_coefficient /= one;
    f.separate_coefficient /= sep;
  }
  return f;
}

}  // namespace indlab

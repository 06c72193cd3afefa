#include <algorithm>
#include <optional>
#include <string>

#include "detail.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/scalable.hpp"

namespace qcalc::scalable {

std::vector<Orbitoid> orbitoids(const FiniteScalableMonoid& x) {
  std::vector<Orbitoid> out;
  for (auto& members : commensurability_classes(x).classes()) out.push_back(Orbitoid{std::move(members)});
  return out;
}

Orbitoid orbitoid_of(const FiniteScalableMonoid& x, Element e) {
  const auto orbits = detail::scaling_orbits(x);
  Orbitoid c;
  for (Element z = 0; z < x.size(); ++z)
    if (orbits[z].intersects(orbits[e])) c.members.push_back(z);
  return c;
}

namespace {

// lambda with lambda.u == target, if any.
std::optional<Scalar> coefficient(const FiniteScalableMonoid& x, Element u, Element target) {
  for (Scalar l = 0; l < x.modulus(); ++l)
    if (x.scale(l, u) == target) return l;
  return std::nullopt;
}

bool generates(const FiniteScalableMonoid& x, Element u, const Orbitoid& c) {
  return std::all_of(c.members.begin(), c.members.end(),
                     [&](Element z) { return coefficient(x, u, z).has_value(); });
}

bool scaling_injective(const FiniteScalableMonoid& x, Element u) {
  std::vector<char> seen(x.size(), 0);
  for (Scalar l = 0; l < x.modulus(); ++l) {
    const Element s = x.scale(l, u);
    if (seen[s]) return false;
    seen[s] = 1;
  }
  return true;
}

}  // namespace

OrbitoidStructure orbitoid_structure(const FiniteScalableMonoid& x, const Orbitoid& c) {
  if (c.members.empty()) throw InvalidArgument("empty orbitoid");
  OrbitoidStructure s;
  s.zero = x.scale(0, c.members.front());
  for (Element z : c.members)
    if (x.scale(0, z) != s.zero) throw WellDefinednessError("orbitoid has more than one zero element");
  for (Element u : c.members) {
    if (!generates(x, u, c)) continue;
    s.generators.push_back(u);
    if (scaling_injective(x, u)) s.units.push_back(u);
  }
  return s;
}

bool is_unit_element(const FiniteScalableMonoid& x, Element u) {
  return scaling_injective(x, u) && generates(x, u, orbitoid_of(x, u));
}

Element orbitoid_add(const FiniteScalableMonoid& x, Element a, Element b, Element u) {
  if (!is_unit_element(x, u)) throw InvalidArgument(x.label(u) + " is not a unit element");
  const auto rho = coefficient(x, u, a);
  const auto sigma = coefficient(x, u, b);
  if (!rho || !sigma) throw InvalidArgument("summands are not in the orbitoid of the unit element");
  return x.scale(x.ring_add(*rho, *sigma), u);
}

bool is_dense(const FiniteScalableMonoid& x, std::span<const Element> set) {
  const Partition p = commensurability_classes(x);
  std::vector<char> hit(p.count, 0);
  for (Element u : set) hit[p.class_of[u]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool is_sparse(const FiniteScalableMonoid& x, std::span<const Element> set) {
  const Partition p = commensurability_classes(x);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] != set[j] && p.same(set[i], set[j])) return false;
  return true;
}

bool is_closed(const FiniteScalableMonoid& x, std::span<const Element> set) {
  std::vector<char> in(x.size(), 0);
  for (Element u : set) in[u] = 1;
  for (Element u : set)
    for (Element v : set)
      if (!in[x.mul(u, v)]) return false;
  return true;
}

bool is_coherent_unit_system(const FiniteScalableMonoid& x, std::span<const Element> set) {
  const bool has_identity = std::find(set.begin(), set.end(), x.identity()) != set.end();
  return has_identity && is_closed(x, set) && is_dense(x, set) && is_sparse(x, set) &&
         std::all_of(set.begin(), set.end(), [&](Element u) { return is_unit_element(x, u); });
}

std::optional<std::string> distributivity_counterexample(const FiniteScalableMonoid& x,
                                                         std::span<const Element> units) {
  const Partition p = commensurability_classes(x);
  constexpr Element none = ~Element{0};
  std::vector<Element> unit_of(p.count, none);
  for (Element u : units) {
    if (!is_unit_element(x, u)) throw InvalidArgument(x.label(u) + " is not a unit element");
    if (unit_of[p.class_of[u]] == none) unit_of[p.class_of[u]] = u;
  }
  for (Element u : unit_of)
    if (u == none) throw InvalidArgument("unit set is not dense");

  // Units were validated above; resolve coefficients directly.
  auto add = [&](Element a, Element b) {
    const Element u = unit_of[p.class_of[a]];
    return x.scale(x.ring_add(*coefficient(x, u, a), *coefficient(x, u, b)), u);
  };
  for (const auto& members : p.classes())
    for (Element a : members)
      for (Element b : members) {
        const Element sum = add(a, b);
        for (Element z = 0; z < x.size(); ++z) {
          const Element right_lhs = x.mul(sum, z);
          const Element right_rhs = add(x.mul(a, z), x.mul(b, z));
          const Element left_lhs = x.mul(z, sum);
          const Element left_rhs = add(x.mul(z, a), x.mul(z, b));
          if (right_lhs != right_rhs || left_lhs != left_rhs)
            return "x=" + x.label(a) + ", y=" + x.label(b) + ", z=" + x.label(z);
        }
      }
  return std::nullopt;
}

}  // namespace qcalc::scalable

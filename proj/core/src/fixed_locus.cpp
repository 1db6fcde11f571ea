#include "orbidiamond/fixed_locus.hpp"

#include <algorithm>

#include "orbidiamond/errors.hpp"

namespace orbidiamond {

namespace {

std::vector<FixedComponent> components_of(const ExponentProfile& p, int n) {
  std::vector<FixedComponent> out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    if (p.blocks[i].size() >= 2) out.push_back(FixedComponent{p.blocks[i], p.values[i], n});
  return out;
}

}  // namespace

bool FixedComponent::contains(const FixedComponent& other) const {
  return std::includes(coords.begin(), coords.end(), other.coords.begin(), other.coords.end());
}

std::vector<FixedComponent> components(const GroupElement& g) {
  return components_of(profile(g), g.n());
}

Rational age(const GroupElement& g, const FixedComponent& component) {
  if (component.n != g.n() || component.coords.size() < 2)
    throw InvalidArgument("component does not belong to " + g.to_string());
  const int d = g.modulus();
  const int v = component.value;
  std::int64_t numerator = 0;
  std::size_t k = 0;
  for (int j = 0; j <= g.n(); ++j) {
    const bool inside = k < component.coords.size() && component.coords[k] == j;
    if (inside) {
      ++k;
      if (g[j] != v) throw InvalidArgument("component does not belong to " + g.to_string());
    } else {
      if (g[j] == v) throw InvalidArgument("component is not a full block of " + g.to_string());
      numerator += ((g[j] - v) % d + d) % d;
    }
  }
  if (k != component.coords.size())
    throw InvalidArgument("component does not belong to " + g.to_string());
  return Rational(numerator, d);
}

std::vector<FixedComponent> joint_components(const GroupElement& g, const GroupElement& h) {
  return components_of(joint_profile(g, h), g.n());
}

FixedComponent locate_in(const GroupElement& element, const FixedComponent& joint) {
  if (joint.coords.empty() || joint.n != element.n())
    throw InvalidArgument("joint component does not match " + element.to_string());
  const int v = element[static_cast<std::size_t>(joint.coords.front())];
  for (int j : joint.coords)
    if (element[static_cast<std::size_t>(j)] != v)
      throw InvalidArgument("joint component is not fixed by " + element.to_string());
  FixedComponent out{{}, v, element.n()};
  for (int j = 0; j <= element.n(); ++j)
    if (element[static_cast<std::size_t>(j)] == v) out.coords.push_back(j);
  return out;
}

nlohmann::json to_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

nlohmann::json to_json(const FixedComponent& c, const Rational& a) {
  return {{"coords", c.coords}, {"value", c.value}, {"codim", c.codim()}, {"age", to_json(a)}};
}

}  // namespace orbidiamond

#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "orbidiamond/fermat_group.hpp"
#include "orbidiamond/rational.hpp"

namespace orbidiamond {

/// One block-component P^{|S|-1} ∩ X of a fixed locus, where S is a set of
/// coordinates on which the defining element(s) take a common value.
///
/// A two-coordinate block is a single record standing for d points.
struct FixedComponent {
  std::vector<int> coords;  // sorted, size >= 2
  int value = 0;            // common residue of the (first) defining element on coords
  int n = 0;                // ambient projective dimension

  int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }
  int slice_dim() const { return static_cast<int>(coords.size()) - 2; }
  int codim() const { return n + 1 - static_cast<int>(coords.size()); }
  bool contains(const FixedComponent& other) const;

  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

/// Components of X^g: one per exponent block of size >= 2, in block order.
/// Empty iff g acts without fixed points.
std::vector<FixedComponent> components(const GroupElement& g);

/// Age of g along `component`: sum over normal coordinates j of
/// ((a_j - v) mod d) / d. Throws InvalidArgument if the component is not a
/// component of X^g.
Rational age(const GroupElement& g, const FixedComponent& component);

/// Components of the fixed locus of <g, h>, from the common refinement of the
/// two exponent partitions. The `value` field carries g's residue.
std::vector<FixedComponent> joint_components(const GroupElement& g, const GroupElement& h);

/// The component of X^{element} containing a joint component. Throws
/// InvalidArgument if the joint block is not constant under `element`.
FixedComponent locate_in(const GroupElement& element, const FixedComponent& joint);

nlohmann::json to_json(const FixedComponent& c, const Rational& age);
nlohmann::json to_json(const Rational& r);

}  // namespace orbidiamond

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "segcover/instance.hpp"

namespace segcover {

// A piece of the universe with the subfamily restricted to it, re-indexed as
// a standalone instance. Local element i is elements[i]; local subset j is
// subsets[j] in the parent instance. Both maps are ascending.
struct Component {
  std::vector<ElementId> elements;
  std::vector<SubsetId> subsets;
  Instance subinstance;

  SuccinctSet element_set(std::size_t universe) const {
    return SuccinctSet::from_elements(universe, elements);
  }
};

struct Segmentation {
  std::size_t universe = 0;
  // Ordered by smallest original element id.
  std::vector<Component> components;
};

// Connected components of the element co-occurrence graph, found with
// union-find by star-uniting each subset's elements to its first element.
// The graph itself is never built.
Segmentation find_groups(const Instance& inst);

// Restriction of `inst` to `elements` (ascending): every subset meeting the
// piece, cut down to it. Subsets that miss the piece are dropped.
Component restrict_to(const Instance& inst, std::span<const ElementId> elements);

// Union of per-component covers, translated to parent subset ids. A subset
// chosen in several components (only possible for restricted, overlapping
// subfamilies) is recorded once. Throws ContractError naming the first
// component whose partial is infeasible.
Cover merge_partial_covers(const Instance& original, const Segmentation& seg,
                           std::span<const Cover> partials);

// Diagnostic dump: "component,elements,subsets" rows.
std::string segmentation_csv(const Segmentation& seg);

}  // namespace segcover

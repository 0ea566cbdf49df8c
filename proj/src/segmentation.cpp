#include "segcover/segmentation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "segcover/error.hpp"
#include "segcover/union_find.hpp"

namespace segcover {

Segmentation find_groups(const Instance& inst) {
  const std::size_t n = inst.universe_size();
  UnionFind uf(n);
  for (SubsetId j = 0; j < inst.subset_count(); ++j) {
    const auto members = inst.members(j);
    for (std::size_t k = 1; k < members.size(); ++k) uf.unite(members.front(), members[k]);
  }

  constexpr auto kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> root_to_component(n, kUnassigned);
  std::vector<std::uint32_t> component_of(n);
  std::vector<ElementId> local_index(n);
  Segmentation seg;
  seg.universe = n;
  for (ElementId e = 0; e < n; ++e) {
    const std::uint32_t r = uf.find(e);
    if (root_to_component[r] == kUnassigned) {
      root_to_component[r] = static_cast<std::uint32_t>(seg.components.size());
      seg.components.emplace_back();
    }
    component_of[e] = root_to_component[r];
    auto& elements = seg.components[component_of[e]].elements;
    local_index[e] = static_cast<ElementId>(elements.size());
    elements.push_back(e);
  }

  std::vector<std::vector<std::vector<ElementId>>> local_subsets(seg.components.size());
  for (SubsetId j = 0; j < inst.subset_count(); ++j) {
    const auto members = inst.members(j);
    const std::uint32_t c = component_of[members.front()];
    seg.components[c].subsets.push_back(j);
    std::vector<ElementId> local;
    local.reserve(members.size());
    for (const ElementId e : members) local.push_back(local_index[e]);
    local_subsets[c].push_back(std::move(local));
  }
  for (std::size_t c = 0; c < seg.components.size(); ++c) {
    seg.components[c].subinstance =
        Instance(seg.components[c].elements.size(), std::move(local_subsets[c]));
  }
  return seg;
}

Component restrict_to(const Instance& inst, std::span<const ElementId> elements) {
  const std::size_t n = inst.universe_size();
  constexpr auto kOutside = std::numeric_limits<ElementId>::max();
  std::vector<ElementId> local_index(n, kOutside);
  Component piece;
  piece.elements.assign(elements.begin(), elements.end());
  for (std::size_t i = 0; i < piece.elements.size(); ++i) {
    const ElementId e = piece.elements[i];
    if (e >= n || (i > 0 && piece.elements[i - 1] >= e)) {
      throw UsageError("restrict_to needs ascending in-range element ids");
    }
    local_index[e] = static_cast<ElementId>(i);
  }
  std::vector<std::vector<ElementId>> local_subsets;
  for (SubsetId j = 0; j < inst.subset_count(); ++j) {
    std::vector<ElementId> local;
    for (const ElementId e : inst.members(j)) {
      if (local_index[e] != kOutside) local.push_back(local_index[e]);
    }
    if (local.empty()) continue;
    piece.subsets.push_back(j);
    local_subsets.push_back(std::move(local));
  }
  piece.subinstance = Instance(piece.elements.size(), std::move(local_subsets));
  return piece;
}

Cover merge_partial_covers(const Instance& original, const Segmentation& seg,
                           std::span<const Cover> partials) {
  if (partials.size() != seg.components.size()) {
    throw UsageError("expected " + std::to_string(seg.components.size()) +
                     " partial covers, got " + std::to_string(partials.size()));
  }
  std::vector<bool> taken(original.subset_count(), false);
  Cover merged(original.universe_size());
  for (std::size_t c = 0; c < partials.size(); ++c) {
    const Component& comp = seg.components[c];
    if (!cover_is_feasible(partials[c], comp.subinstance)) {
      throw ContractError("partial cover of component " + std::to_string(c) +
                          " is infeasible");
    }
    for (const SubsetId local : partials[c].chosen()) {
      const SubsetId id = comp.subsets[local];
      if (taken[id]) continue;
      taken[id] = true;
      merged.add(original, id);
    }
  }
  if (!merged.covered().all()) {
    throw ContractError("merged cover is infeasible although every partial is feasible");
  }
  return merged;
}

std::string segmentation_csv(const Segmentation& seg) {
  std::ostringstream out;
  out << "component,elements,subsets\n";
  for (std::size_t c = 0; c < seg.components.size(); ++c) {
    out << c << ',' << seg.components[c].elements.size() << ','
        << seg.components[c].subsets.size() << '\n';
  }
  return out.str();
}

}  // namespace segcover

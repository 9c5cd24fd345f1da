#pragma once

#include <cstddef>
#include <vector>

#include "afprov/af.hpp"
#include "afprov/grounded.hpp"
#include "afprov/semantics.hpp"

namespace afprov {

struct StableSolution {
  std::size_t index = 0;  // 1-based, assigned after sorting
  ExtensionSet extension;
  Labeling labeling;       // IN on extension, OUT elsewhere

  friend bool operator==(const StableSolution&, const StableSolution&) = default;
};

/// All stable extensions, sorted by extension_less and indexed from 1.
/// Branches only on arguments the grounded solution leaves undecided.
std::vector<StableSolution> enumerate_stable(const ArgumentationFramework& af);
std::vector<StableSolution> enumerate_stable(const GroundedSolution& grounded);

/// 2-valued labeling induced by an extension.
Labeling labeling_of(const ArgumentationFramework& af, const ExtensionSet& s);

}  // namespace afprov

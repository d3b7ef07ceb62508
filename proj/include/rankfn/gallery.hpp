#pragma once

#include "rankfn/additive.hpp"
#include "rankfn/angulated.hpp"
#include "rankfn/rank_objects.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankfn {

struct GalleryEntry {
  std::string name;
  CategorySkeleton skeleton;
  std::vector<std::pair<std::string, RankOnObjects>> reference_ranks;
  std::string notes;
  std::optional<EngineContext> engine;

  /// Throws InputError for an unknown rank name.
  const RankOnObjects& rank(const std::string& rank_name) const;
};

/// Labels of the d+2 indecomposable modules of A^d_2 along the AR line:
/// "1", "21", "32", ..., "(d+1)d", "d+1" ("." between numbers once d+1 >= 10).
std::vector<IndecId> and2_base_labels(int d);

/// Sigma^{dj} of a base label: the label itself for j = 0, else "S^{dj}(base)".
IndecId and2_label(const IndecId& base, int d, int layer);

/// Stalk complexes of A^d_2 in layers -(w-1)/2 .. w/2, suspension moving one
/// layer up and wrapping; generator = the AR-line angle in layer 0.
/// Reference rank "rho_A". Throws InputError if window < 2.
GalleryEntry build_and2_cluster(int d, int window = 3);

/// d = 3 window with the assignment 1:2, 21:0, 32:1, 43:3, 4:4 as "custom".
GalleryEntry build_d3_custom();

/// 2d+2 indecs on a cycle, suspension = shift by d+2, angles = every run of
/// d+2 consecutive objects. Reference rank "all_ones".
GalleryEntry build_oa_cluster(int d);

/// proj A for kC_n/rad^ell: indecs P1..Pn, suspension from the twist, one
/// generated angle per non-projective indecomposable module.
/// Reference rank "composition_length".
GalleryEntry build_nakayama_proj(int n, int ell, int d);

/// Names accepted by build_entry in the listing.
std::vector<std::string> gallery_names();

/// and2-d<d>[-w<w>], d3-custom, oa-d<d>, nakayama-n<n>-l<ell>-d<d>.
GalleryEntry build_entry(const std::string& name);

}  // namespace rankfn

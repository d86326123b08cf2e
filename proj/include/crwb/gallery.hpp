#ifndef CRWB_GALLERY_HPP
#define CRWB_GALLERY_HPP

#include "crwb/manifold_io.hpp"

namespace crwb {

/// Built-in example structures:
///   leviflat   - flat frame on R^3, Levi form identically zero
///   heisenberg - contact frame on R^3, definite Levi form
///   quadric11  - signature (1,1) quadric graph frame on R^5
///   plane      - type (1,0) planar frame on R^2 (a leviflat leaf)
std::vector<std::string> gallery_names();
bool is_gallery_name(const std::string& name);
std::string gallery_definition_json(const std::string& name);
std::unique_ptr<Manifold> load_gallery(const std::string& name);

struct GroundTruth {
  std::string name;
  bool weakly_pseudoconcave = false;
  bool minimal = false;
};

/// Shipped expectation table asserted by the regression suite.
std::vector<GroundTruth> gallery_ground_truth();

}  // namespace crwb

#endif

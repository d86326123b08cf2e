#include "crwb/gallery.hpp"

namespace crwb {

namespace {

const char* kLeviflat = R"json({
  "schema_version": 1,
  "name": "leviflat",
  "n": 1,
  "k": 1,
  "bounds": {"lo": [-1.0, -1.0, -1.0], "hi": [1.0, 1.0, 1.0]},
  "X": [["1", "0", "0"]],
  "JX": [["0", "1", "0"]],
  "cr_functions": [
    {"name": "z", "re": "y1", "im": "y2"},
    {"name": "z^2", "re": "y1^2 - y2^2", "im": "2*y1*y2"},
    {"name": "exp(z)", "re": "exp(y1)*cos(y2)", "im": "exp(y1)*sin(y2)"}
  ]
})json";

const char* kHeisenberg = R"json({
  "schema_version": 1,
  "name": "heisenberg",
  "n": 1,
  "k": 1,
  "bounds": {"lo": [-1.0, -1.0, -1.0], "hi": [1.0, 1.0, 1.0]},
  "X": [["1", "0", "2*y2"]],
  "JX": [["0", "1", "-2*y1"]],
  "cr_functions": [
    {"name": "z", "re": "y1", "im": "y2"},
    {"name": "w", "re": "y3", "im": "y1^2 + y2^2"},
    {"name": "z*w", "re": "y1*y3 - y2*(y1^2 + y2^2)", "im": "y2*y3 + y1*(y1^2 + y2^2)"}
  ]
})json";

const char* kQuadric11 = R"json({
  "schema_version": 1,
  "name": "quadric11",
  "n": 2,
  "k": 1,
  "bounds": {"lo": [-1.0, -1.0, -1.0, -1.0, -1.0], "hi": [1.0, 1.0, 1.0, 1.0, 1.0]},
  "X": [["1", "0", "0", "0", "2*y2"],
        ["0", "0", "1", "0", "-2*y4"]],
  "JX": [["0", "1", "0", "0", "-2*y1"],
         ["0", "0", "0", "1", "2*y3"]],
  "cr_functions": [
    {"name": "z1", "re": "y1", "im": "y2"},
    {"name": "z2", "re": "y3", "im": "y4"},
    {"name": "z1*z2", "re": "y1*y3 - y2*y4", "im": "y1*y4 + y2*y3"},
    {"name": "w", "re": "y5", "im": "y1^2 + y2^2 - y3^2 - y4^2"},
    {"name": "2+z1^2", "re": "2 + y1^2 - y2^2", "im": "2*y1*y2"},
    {"name": "z1*w", "re": "y1*y5 - y2*(y1^2 + y2^2 - y3^2 - y4^2)",
                     "im": "y2*y5 + y1*(y1^2 + y2^2 - y3^2 - y4^2)"}
  ]
})json";

const char* kPlane = R"json({
  "schema_version": 1,
  "name": "plane",
  "n": 1,
  "k": 0,
  "bounds": {"lo": [-1.0, -1.0], "hi": [1.0, 1.0]},
  "X": [["1", "0"]],
  "JX": [["0", "1"]],
  "cr_functions": [
    {"name": "z", "re": "y1", "im": "y2"},
    {"name": "z^2", "re": "y1^2 - y2^2", "im": "2*y1*y2"},
    {"name": "exp(z)", "re": "exp(y1)*cos(y2)", "im": "exp(y1)*sin(y2)"}
  ]
})json";

}  // namespace

std::vector<std::string> gallery_names() {
  return {"leviflat", "heisenberg", "quadric11", "plane"};
}

bool is_gallery_name(const std::string& name) {
  for (const auto& g : gallery_names()) {
    if (g == name) return true;
  }
  return false;
}

std::string gallery_definition_json(const std::string& name) {
  if (name == "leviflat") return kLeviflat;
  if (name == "heisenberg") return kHeisenberg;
  if (name == "quadric11") return kQuadric11;
  if (name == "plane") return kPlane;
  throw ValidationError("unknown gallery manifold '" + name + "'");
}

std::unique_ptr<Manifold> load_gallery(const std::string& name) {
  return build_manifold(parse_definition(gallery_definition_json(name)));
}

std::vector<GroundTruth> gallery_ground_truth() {
  return {
      {"leviflat", true, false},
      {"heisenberg", false, true},
      {"quadric11", true, true},
  };
}

}  // namespace crwb

#ifndef CRWB_MANIFOLD_IO_HPP
#define CRWB_MANIFOLD_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include "crwb/cr_frame.hpp"

namespace crwb {

struct SchemaError : std::runtime_error {
  std::string path;  // JSON path of the offending field
  SchemaError(const std::string& path_, const std::string& msg)
      : std::runtime_error(path_ + ": " + msg), path(path_) {}
};

struct CRFunctionDef {
  std::string name;
  std::string re;
  std::string im;
};

struct BumpDef {
  std::string name;
  std::vector<AxisWindow> axes;
};

/// Parsed manifold definition file (one JSON document per manifold).
struct ManifoldDefinition {
  std::string name;
  int n = 0;
  int k = 0;
  Vec lo;
  Vec hi;
  std::vector<std::vector<std::string>> X;   // n arrays of 2n+k expressions
  std::vector<std::vector<std::string>> JX;  // n arrays of 2n+k expressions
  std::vector<CRFunctionDef> cr_functions;
  std::vector<BumpDef> bumps;
  std::string source_json;  // exact text the definition was parsed from

  int dim() const { return 2 * n + k; }
};

ManifoldDefinition parse_definition(const std::string& json_text);
ManifoldDefinition load_definition(const std::string& path);

/// Definition compiled into live objects. Heap-allocated so the chart address
/// referenced by the frame fields stays stable.
struct Manifold {
  ManifoldDefinition def;
  Chart chart;
  CRFrame frame;
  std::vector<ComplexFunction> cr_functions;
  std::vector<BumpDef> bumps;

  const ComplexFunction& cr_function(const std::string& name) const;
};

std::unique_ptr<Manifold> build_manifold(const ManifoldDefinition& def);
std::unique_ptr<Manifold> load_manifold(const std::string& path);

/// FNV-1a hash of the definition text, for report provenance.
std::string content_hash(const std::string& text);

}  // namespace crwb

#endif

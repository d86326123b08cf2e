#include "crwb/manifold_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace crwb {

namespace {

using nlohmann::json;

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw SchemaError(path + "." + key, "missing field");
  return j.at(key);
}

int require_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = require(j, key, path);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected integer");
  return v.get<int>();
}

Vec read_vector(const json& v, const std::string& path, int expected = -1) {
  if (!v.is_array()) throw SchemaError(path, "expected array of numbers");
  if (expected >= 0 && static_cast<int>(v.size()) != expected)
    throw SchemaError(path, "expected " + std::to_string(expected) + " entries, got " +
                                std::to_string(v.size()));
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw SchemaError(path + "[" + std::to_string(i) + "]", "expected number");
    out[i] = v[i].get<double>();
  }
  return out;
}

std::vector<std::vector<std::string>> read_field_arrays(const json& v, const std::string& path,
                                                        int n, int dim) {
  if (!v.is_array()) throw SchemaError(path, "expected array of coefficient arrays");
  if (static_cast<int>(v.size()) != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " coefficient arrays, got " +
                                std::to_string(v.size()));
  std::vector<std::vector<std::string>> out;
  for (size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != dim)
      throw SchemaError(p, "expected array of " + std::to_string(dim) + " expressions");
    std::vector<std::string> coeffs;
    for (size_t c = 0; c < v[i].size(); ++c) {
      if (!v[i][c].is_string())
        throw SchemaError(p + "[" + std::to_string(c) + "]", "expected expression string");
      coeffs.push_back(v[i][c].get<std::string>());
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

ManifoldDefinition parse_definition(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("$", "definition must be a JSON object");

  ManifoldDefinition def;
  def.source_json = json_text;

  const int version = require_int(root, "schema_version", "$");
  if (version != 1) throw SchemaError("$.schema_version", "unsupported schema version");

  const json& name = require(root, "name", "$");
  if (!name.is_string()) throw SchemaError("$.name", "expected string");
  def.name = name.get<std::string>();

  def.n = require_int(root, "n", "$");
  def.k = require_int(root, "k", "$");
  if (def.n < 1) throw SchemaError("$.n", "n must be >= 1");
  if (def.k < 0) throw SchemaError("$.k", "k must be >= 0");
  const int dim = def.dim();

  const json& bounds = require(root, "bounds", "$");
  def.lo = read_vector(require(bounds, "lo", "$.bounds"), "$.bounds.lo", dim);
  def.hi = read_vector(require(bounds, "hi", "$.bounds"), "$.bounds.hi", dim);

  def.X = read_field_arrays(require(root, "X", "$"), "$.X", def.n, dim);
  def.JX = read_field_arrays(require(root, "JX", "$"), "$.JX", def.n, dim);

  if (root.contains("cr_functions")) {
    const json& fns = root.at("cr_functions");
    if (!fns.is_array()) throw SchemaError("$.cr_functions", "expected array");
    for (size_t i = 0; i < fns.size(); ++i) {
      const std::string p = "$.cr_functions[" + std::to_string(i) + "]";
      const json& f = fns[i];
      if (!f.is_object()) throw SchemaError(p, "expected object");
      CRFunctionDef fd;
      fd.name = require(f, "name", p).get<std::string>();
      fd.re = require(f, "re", p).get<std::string>();
      fd.im = require(f, "im", p).get<std::string>();
      def.cr_functions.push_back(std::move(fd));
    }
  }

  if (root.contains("bumps")) {
    const json& bumps = root.at("bumps");
    if (!bumps.is_array()) throw SchemaError("$.bumps", "expected array");
    for (size_t i = 0; i < bumps.size(); ++i) {
      const std::string p = "$.bumps[" + std::to_string(i) + "]";
      const json& b = bumps[i];
      BumpDef bd;
      bd.name = require(b, "name", p).get<std::string>();
      const json& axes = require(b, "axes", p);
      if (!axes.is_array() || axes.empty()) throw SchemaError(p + ".axes", "expected nonempty array");
      for (size_t a = 0; a < axes.size(); ++a) {
        const std::string pa = p + ".axes[" + std::to_string(a) + "]";
        const json& ax = axes[a];
        AxisWindow w;
        w.axis = require_int(ax, "axis", pa) - 1;  // 1-based in the file, like y1..yN
        if (w.axis < 0 || w.axis >= dim) throw SchemaError(pa + ".axis", "axis out of range");
        const Vec outer = read_vector(require(ax, "outer", pa), pa + ".outer", 2);
        const Vec inner = read_vector(require(ax, "inner", pa), pa + ".inner", 2);
        w.outer_lo = outer[0];
        w.outer_hi = outer[1];
        w.inner_lo = inner[0];
        w.inner_hi = inner[1];
        if (!(w.outer_lo <= w.inner_lo && w.inner_lo <= w.inner_hi && w.inner_hi <= w.outer_hi))
          throw SchemaError(pa, "window intervals must be nested: outer_lo <= inner <= outer_hi");
        bd.axes.push_back(w);
      }
      def.bumps.push_back(std::move(bd));
    }
  }

  return def;
}

ManifoldDefinition load_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw SchemaError("$", "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definition(buf.str());
}

std::unique_ptr<Manifold> build_manifold(const ManifoldDefinition& def) {
  auto m = std::make_unique<Manifold>();
  m->def = def;
  m->chart = Chart(def.name, def.lo, def.hi);

  auto make_fields = [&](const std::vector<std::vector<std::string>>& arrays,
                         const char* label) {
    std::vector<VectorField> fields;
    for (size_t i = 0; i < arrays.size(); ++i) {
      std::vector<CoefficientExpr> coeffs;
      for (size_t c = 0; c < arrays[i].size(); ++c) {
        try {
          coeffs.push_back(CoefficientExpr::parse(arrays[i][c], def.dim()));
        } catch (const ParseError& e) {
          throw SchemaError("$." + std::string(label) + "[" + std::to_string(i) + "][" +
                                std::to_string(c) + "]",
                            e.what());
        }
      }
      fields.emplace_back(m->chart, std::move(coeffs));
    }
    return fields;
  };

  m->frame = build_frame(m->chart, def.n, def.k, make_fields(def.X, "X"),
                         make_fields(def.JX, "JX"));

  for (const auto& fd : def.cr_functions) {
    CoefficientExpr re = CoefficientExpr::parse(fd.re, def.dim());
    CoefficientExpr im = CoefficientExpr::parse(fd.im, def.dim());
    m->cr_functions.push_back(ComplexFunction::from_exprs(re, im, fd.name));
  }
  m->bumps = def.bumps;
  return m;
}

std::unique_ptr<Manifold> load_manifold(const std::string& path) {
  return build_manifold(load_definition(path));
}

const ComplexFunction& Manifold::cr_function(const std::string& name) const {
  for (const auto& f : cr_functions) {
    if (f.name == name) return f;
  }
  throw ValidationError("no CR function named '" + name + "' in manifold '" + def.name + "'");
}

std::string content_hash(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace crwb

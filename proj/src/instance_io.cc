// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rusm/instance_io.h"

#include <fstream>
#include <sstream>

#include "rusm/families.h"

namespace rusm {
namespace {

using nlohmann::json;

const json& Field(const json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
  }
  return *it;
}

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string Index(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double AsDouble(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  return j.get<double>();
}

int64_t AsInt(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int64_t>();
}

bool AsBool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

const json& AsArray(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::vector<double> DoubleArray(const json& j, const std::string& path) {
  AsArray(j, path);
  std::vector<double> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) out.push_back(AsDouble(j[i], Index(path, i)));
  return out;
}

LoadedInstance FromHard(const HardInstanceDescriptor& d, int64_t n,
                        const std::vector<double>& ell) {
  try {
    d.Validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError("g.params", e.what());
  }
  if (d.GroundSize() != n) {
    throw SchemaError("n", "family needs " + std::to_string(d.GroundSize()) +
                               " elements, got " + std::to_string(n));
  }
  if (d.GroundSize() > kMaxElements) {
    throw SchemaError("n", "at most " + std::to_string(kMaxElements) +
                               " elements are supported");
  }
  InstanceBundle bundle = MakeHardInstance(d);
  const auto expected = bundle.instance.ell().weights();
  for (size_t u = 0; u < ell.size(); ++u) {
    if (ell[u] != expected[u]) {
      throw SchemaError(Index("ell", u), "does not match the family's l");
    }
  }
  return {bundle.instance, bundle.group, d};
}

json DeclaredToJson(const DeclaredProperties& flags) {
  return {{"nonnegative", flags.nonnegative},
          {"submodular", flags.submodular},
          {"monotone", flags.monotone}};
}

}  // namespace

LoadedInstance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  const int64_t n = AsInt(Field(doc, "n", ""), "n");
  if (n < 1 || n > kMaxElements) {
    throw SchemaError("n", "must lie in [1, " + std::to_string(kMaxElements) + "]");
  }
  const std::vector<double> ell = DoubleArray(Field(doc, "ell", ""), "ell");
  if (static_cast<int64_t>(ell.size()) != n) {
    throw SchemaError("ell", "expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(ell.size()));
  }
  const json& g = Field(doc, "g", "");
  const json& kind_json = Field(g, "kind", "g");
  if (!kind_json.is_string()) throw SchemaError("g.kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  const json& params = Field(g, "params", "g");
  if (!params.is_object()) throw SchemaError("g.params", "expected an object");
  const std::string pp = "g.params";

  if (kind == "monotone_sec3") {
    HardInstanceDescriptor d{HardFamily::kMonotoneSec3, n,
                             AsDouble(Field(params, "r", pp), Join(pp, "r")), 1.0};
    return FromHard(d, n, ell);
  }
  if (kind == "negative_sec5") {
    HardInstanceDescriptor d{HardFamily::kNegativeSec5,
                             AsInt(Field(params, "n", pp), Join(pp, "n")),
                             AsDouble(Field(params, "r", pp), Join(pp, "r")),
                             AsDouble(Field(params, "t", pp), Join(pp, "t"))};
    return FromHard(d, n, ell);
  }
  if (kind == "positive_sec61") {
    HardInstanceDescriptor d{HardFamily::kPositiveSec61,
                             AsInt(Field(params, "n", pp), Join(pp, "n")), 0.0,
                             1.0};
    return FromHard(d, n, ell);
  }
  if (kind == "cut") {
    const std::string ep = Join(pp, "edges");
    const json& edges_json = AsArray(Field(params, "edges", pp), ep);
    std::vector<WeightedEdge> edges;
    for (size_t i = 0; i < edges_json.size(); ++i) {
      const std::string path = Index(ep, i);
      const json& e = AsArray(edges_json[i], path);
      if (e.size() != 3) throw SchemaError(path, "expected [u, v, weight]");
      const int64_t u = AsInt(e[0], Index(path, 0));
      const int64_t v = AsInt(e[1], Index(path, 1));
      if (u < 0 || u >= n) throw SchemaError(Index(path, 0), "out of range");
      if (v < 0 || v >= n) throw SchemaError(Index(path, 1), "out of range");
      const double w = AsDouble(e[2], Index(path, 2));
      if (!(w >= 0.0)) throw SchemaError(Index(path, 2), "must be >= 0");
      edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    try {
      return {MakeCutInstance(static_cast<int>(n), std::move(edges),
                              LinearWeights(ell)),
              std::nullopt, std::nullopt};
    } catch (const SchemaError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SchemaError(ep, e.what());
    }
  }
  if (kind == "coverage") {
    const std::string sp = Join(pp, "sets");
    const json& sets_json = AsArray(Field(params, "sets", pp), sp);
    const std::vector<double> values =
        DoubleArray(Field(params, "item_values", pp), Join(pp, "item_values"));
    if (static_cast<int64_t>(sets_json.size()) != n) {
      throw SchemaError(sp, "expected one set per element");
    }
    std::vector<std::vector<int>> sets(n);
    for (size_t u = 0; u < sets_json.size(); ++u) {
      const std::string path = Index(sp, u);
      const json& s = AsArray(sets_json[u], path);
      for (size_t k = 0; k < s.size(); ++k) {
        const int64_t item = AsInt(s[k], Index(path, k));
        if (item < 0 || item >= static_cast<int64_t>(values.size())) {
          throw SchemaError(Index(path, k), "item out of range");
        }
        sets[u].push_back(static_cast<int>(item));
      }
    }
    for (size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] >= 0.0)) {
        throw SchemaError(Index(Join(pp, "item_values"), i), "must be >= 0");
      }
    }
    return {MakeCoverageInstance(std::move(sets), values, LinearWeights(ell)),
            std::nullopt, std::nullopt};
  }
  if (kind == "table") {
    const std::string vp = Join(pp, "values");
    std::vector<double> values = DoubleArray(Field(params, "values", pp), vp);
    if (n > 24 || values.size() != (size_t{1} << n)) {
      throw SchemaError(vp, "expected 2^n entries with n <= 24");
    }
    DeclaredProperties flags{.nonnegative = false,
                             .submodular = false,
                             .monotone = false,
                             .ell_sign = EllSign::kMixed};
    const LinearWeights weights(ell);
    if (weights.IsNonNegative()) {
      flags.ell_sign = EllSign::kNonNegative;
    } else if (weights.IsNonPositive()) {
      flags.ell_sign = EllSign::kNonPositive;
    }
    if (params.contains("declared")) {
      const std::string dp = Join(pp, "declared");
      const json& declared = params["declared"];
      if (!declared.is_object()) throw SchemaError(dp, "expected an object");
      for (const auto& [key, value] : declared.items()) {
        const bool b = AsBool(value, Join(dp, key));
        if (key == "nonnegative") {
          flags.nonnegative = b;
        } else if (key == "submodular") {
          flags.submodular = b;
        } else if (key == "monotone") {
          flags.monotone = b;
        } else {
          throw SchemaError(Join(dp, key), "unknown property");
        }
      }
    }
    auto fn = std::make_shared<TableSetFunction>(static_cast<int>(n),
                                                 std::move(values));
    return {RusmInstance(GroundSet(static_cast<int>(n)), fn, weights, flags),
            std::nullopt, std::nullopt};
  }
  throw SchemaError("g.kind", "unknown kind \"" + kind + "\"");
}

json InstanceToJson(const RusmInstance& instance) {
  const SetFunction* g = instance.g().get();
  const int n = instance.size();
  json params = json::object();
  std::string kind = g->kind();
  const auto w = instance.ell().weights();
  if (dynamic_cast<const MonotoneHardFunction*>(g) != nullptr) {
    params["r"] = -w[0];
  } else if (const auto* neg = dynamic_cast<const NegativeHardFunction*>(g)) {
    params["n"] = neg->block_size();
    params["t"] = neg->t();
    params["r"] = -w[neg->AIndex(1)];
  } else if (const auto* pos = dynamic_cast<const PositiveHardFunction*>(g)) {
    params["n"] = pos->block_size();
  } else if (const auto* cut = dynamic_cast<const CutFunction*>(g)) {
    json edges = json::array();
    for (const WeightedEdge& e : cut->edges()) {
      edges.push_back(json::array({e.u, e.v, e.weight}));
    }
    params["edges"] = edges;
  } else if (const auto* cov = dynamic_cast<const CoverageFunction*>(g)) {
    params["sets"] = cov->sets();
    params["item_values"] = cov->item_values();
  } else {
    if (n > 24) throw std::invalid_argument("cannot tabulate more than 24 elements");
    std::vector<double> values;
    if (const auto* table = dynamic_cast<const TableSetFunction*>(g)) {
      values = table->values();
    } else {
      values.resize(size_t{1} << n);
      for (uint64_t s = 0; s < values.size(); ++s) {
        values[s] = g->Evaluate(SubsetMask(s));
      }
    }
    kind = "table";
    params["values"] = values;
    params["declared"] = DeclaredToJson(instance.flags());
  }
  return {{"n", n},
          {"g", {{"kind", kind}, {"params", params}}},
          {"ell", std::vector<double>(w.begin(), w.end())}};
}

json InstanceToJson(const HardInstanceDescriptor& descriptor) {
  return InstanceToJson(MakeHardInstance(descriptor).instance);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

LoadedInstance LoadInstance(const std::string& path) {
  const std::string text = ReadTextFile(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  return InstanceFromJson(doc);
}

void SaveInstance(const RusmInstance& instance, const std::string& path) {
  WriteTextFile(path, InstanceToJson(instance).dump(2) + "\n");
}

}  // namespace rusm

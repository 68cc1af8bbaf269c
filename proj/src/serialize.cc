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

#include "rusm/serialize.h"

namespace rusm {

using nlohmann::json;

json SetToJson(SubsetMask s) { return s.Elements(); }

json ToJson(const LocalSearchDetails& d) {
  json out = {{"filtered_ground", SetToJson(d.filtered_ground)},
              {"initial_set", SetToJson(d.initial_set)},
              {"final_set", SetToJson(d.final_set)},
              {"subsample", SetToJson(d.subsample)},
              {"delta", d.delta},
              {"iterations", d.iterations},
              {"iteration_cap", d.iteration_cap},
              {"samples_per_estimate", d.samples_per_estimate},
              {"exit_reason", d.exit_reason},
              {"selected", d.selected}};
  out["expected_subsample_value"] =
      d.expected_subsample_value ? json(*d.expected_subsample_value) : json();
  out["expected_output_value"] =
      d.expected_output_value ? json(*d.expected_output_value) : json();
  return out;
}

json ToJson(const SolverReport& r) {
  json moves = json::array();
  for (const Move& m : r.move_trace) {
    moves.push_back({{"iteration", m.iteration},
                     {"kind", m.kind == MoveKind::kAdd ? "add" : "remove"},
                     {"element", m.element},
                     {"estimated_gain", m.estimated_gain}});
  }
  json out = {{"algorithm", r.algorithm},
              {"output_set", SetToJson(r.output_set)},
              {"g_value", r.g_value},
              {"ell_value", r.ell_value},
              {"total", r.total()},
              {"oracle_queries", r.oracle_queries},
              {"seed", r.seed},
              {"move_trace", moves}};
  if (r.local_search) out["local_search"] = ToJson(*r.local_search);
  if (!r.dg_trace.empty()) {
    json steps = json::array();
    for (const DgStep& s : r.dg_trace) {
      steps.push_back({{"element", s.element},
                       {"a", s.a},
                       {"b", s.b},
                       {"added", s.added},
                       {"x_size", s.x_set.Size()},
                       {"y_size", s.y_set.Size()}});
    }
    out["dg_trace"] = steps;
  }
  return out;
}

json ToJson(const HardInstanceDescriptor& d) {
  return {{"family", ToString(d.family)}, {"n", d.n}, {"r", d.r}, {"t", d.t}};
}

json ToJson(const GapEvaluation& g) {
  json witness = json::object();
  if (g.z) witness["z"] = *g.z;
  if (g.w) witness["w"] = *g.w;
  if (g.x) witness["x"] = *g.x;
  return {{"descriptor", ToJson(g.descriptor)},
          {"alpha", g.alpha},
          {"beta", g.beta},
          {"slack", g.slack},
          {"lhs", g.lhs},
          {"rhs", g.rhs},
          {"rhs_candidate", g.rhs_candidate},
          {"rhs_witness", g.rhs_witness},
          {"optimizer_witness", witness},
          {"passed", g.passed},
          {"rhs_positive", g.rhs_positive}};
}

json ToJson(const ValidationReport& r) {
  json out = {{"property", ToString(r.property)},
              {"passed", r.passed},
              {"detail", r.detail}};
  if (r.witness_s) out["witness_s"] = SetToJson(*r.witness_s);
  if (r.witness_t) out["witness_t"] = SetToJson(*r.witness_t);
  if (r.witness_u) out["witness_u"] = *r.witness_u;
  return out;
}

json ToJson(const LsConfig& c) {
  json out = {{"beta", c.beta},
              {"epsilon", c.epsilon},
              {"marginal_mode", ToString(c.marginal_mode)},
              {"guarantee_mode", c.guarantee_mode},
              {"exact_limit", c.exact_limit}};
  out["sample_count_override"] =
      c.sample_count_override ? json(*c.sample_count_override) : json();
  out["iteration_cap_override"] =
      c.iteration_cap_override ? json(*c.iteration_cap_override) : json();
  return out;
}

}  // namespace rusm

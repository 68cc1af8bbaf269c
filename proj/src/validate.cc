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

#include "rusm/validate.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rusm/core.h"

namespace rusm {
namespace {

std::vector<double> Tabulate(const SetFunction& f) {
  const int n = f.ground_size();
  std::vector<double> table(size_t{1} << n);
  for (uint64_t s = 0; s < table.size(); ++s) {
    table[s] = f.Evaluate(SubsetMask(s));
  }
  return table;
}

void CheckSize(int n, int max_elements, Property property) {
  if (n > max_elements) {
    throw std::invalid_argument("validating " + ToString(property) +
                                " needs n <= " + std::to_string(max_elements) +
                                ", got " + std::to_string(n));
  }
}

std::string Fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

ValidationReport CheckNonNegative(const std::vector<double>& table) {
  ValidationReport report{.property = Property::kNonNegative};
  for (uint64_t s = 0; s < table.size(); ++s) {
    if (table[s] < -kTolerance) {
      report.passed = false;
      report.witness_s = SubsetMask(s);
      report.detail = "f(" + SubsetMask(s).ToString() + ") = " + Fmt(table[s]);
      return report;
    }
  }
  return report;
}

ValidationReport CheckMonotone(const std::vector<double>& table, int n) {
  ValidationReport report{.property = Property::kMonotone};
  for (uint64_t s = 0; s < table.size(); ++s) {
    for (int u = 0; u < n; ++u) {
      if ((s >> u) & 1) continue;
      const uint64_t su = s | (uint64_t{1} << u);
      if (table[su] < table[s] - kTolerance) {
        report.passed = false;
        report.witness_s = SubsetMask(s);
        report.witness_u = u;
        report.detail = "f(" + SubsetMask(su).ToString() + ") = " +
                        Fmt(table[su]) + " < f(" + SubsetMask(s).ToString() +
                        ") = " + Fmt(table[s]);
        return report;
      }
    }
  }
  return report;
}

// Every pair S subset T and every u outside T.
ValidationReport CheckSubmodularMarginal(const std::vector<double>& table,
                                         int n) {
  ValidationReport report{.property = Property::kSubmodular};
  const uint64_t full = (uint64_t{1} << n) - 1;
  for (uint64_t t = 0; t <= full; ++t) {
    const uint64_t outside = full & ~t;
    uint64_t s = 0;
    while (true) {
      for (uint64_t b = outside; b != 0; b &= b - 1) {
        const uint64_t bit = b & (~b + 1);
        const double gain_s = table[s | bit] - table[s];
        const double gain_t = table[t | bit] - table[t];
        if (gain_s < gain_t - kTolerance) {
          report.passed = false;
          report.witness_s = SubsetMask(s);
          report.witness_t = SubsetMask(t);
          report.witness_u = std::countr_zero(bit);
          report.detail = "f(u|S) = " + Fmt(gain_s) + " < f(u|T) = " +
                          Fmt(gain_t);
          return report;
        }
      }
      if (s == t) break;
      s = (s - t) & t;
    }
  }
  return report;
}

ValidationReport CheckSubmodularLattice(const std::vector<double>& table) {
  ValidationReport report{.property = Property::kSubmodularLattice};
  const uint64_t size = table.size();
  for (uint64_t s = 0; s < size; ++s) {
    for (uint64_t t = s + 1; t < size; ++t) {
      const double lhs = table[s] + table[t];
      const double rhs = table[s | t] + table[s & t];
      if (lhs < rhs - kTolerance) {
        report.passed = false;
        report.witness_s = SubsetMask(s);
        report.witness_t = SubsetMask(t);
        report.detail = "f(S) + f(T) = " + Fmt(lhs) +
                        " < f(S|T) + f(S&T) = " + Fmt(rhs);
        return report;
      }
    }
  }
  return report;
}

}  // namespace

std::string ToString(Property property) {
  switch (property) {
    case Property::kNonNegative:
      return "nonneg";
    case Property::kSubmodular:
      return "submodular";
    case Property::kSubmodularLattice:
      return "submodular_lattice";
    case Property::kMonotone:
      return "monotone";
    case Property::kEllNonNegative:
      return "ell_nonneg";
    case Property::kEllNonPositive:
      return "ell_nonpos";
    case Property::kGroupInvariant:
      return "group_invariant";
  }
  return "";
}

Property ParseProperty(const std::string& name) {
  for (Property p : {Property::kNonNegative, Property::kSubmodular,
                     Property::kSubmodularLattice, Property::kMonotone,
                     Property::kEllNonNegative, Property::kEllNonPositive}) {
    if (ToString(p) == name) return p;
  }
  throw std::invalid_argument("unknown property '" + name + "'");
}

ValidationReport Validate(const SetFunction& f, Property property,
                          int max_elements) {
  const int n = f.ground_size();
  if (property == Property::kEllNonNegative ||
      property == Property::kEllNonPositive ||
      property == Property::kGroupInvariant) {
    throw std::invalid_argument(ToString(property) +
                                " cannot be checked on a bare set function");
  }
  CheckSize(n, max_elements, property);
  const std::vector<double> table = Tabulate(f);
  switch (property) {
    case Property::kNonNegative:
      return CheckNonNegative(table);
    case Property::kSubmodular:
      return CheckSubmodularMarginal(table, n);
    case Property::kSubmodularLattice:
      return CheckSubmodularLattice(table);
    case Property::kMonotone:
      return CheckMonotone(table, n);
    default:
      break;
  }
  throw std::logic_error("unreachable");
}

ValidationReport Validate(const RusmInstance& instance, Property property,
                          int max_elements) {
  if (property == Property::kEllNonNegative ||
      property == Property::kEllNonPositive) {
    ValidationReport report{.property = property};
    const bool want_nonneg = property == Property::kEllNonNegative;
    for (int u = 0; u < instance.size(); ++u) {
      const double w = instance.ell().Weight(u);
      if (want_nonneg ? w < 0.0 : w > 0.0) {
        report.passed = false;
        report.witness_u = u;
        report.detail = "w_" + std::to_string(u) + " = " + Fmt(w);
        break;
      }
    }
    return report;
  }
  return Validate(*instance.g(), property, max_elements);
}

std::vector<ValidationReport> ValidateDeclared(const RusmInstance& instance) {
  std::vector<ValidationReport> reports;
  const DeclaredProperties& flags = instance.flags();
  if (flags.nonnegative) {
    reports.push_back(Validate(instance, Property::kNonNegative));
  }
  if (flags.submodular) {
    reports.push_back(Validate(instance, Property::kSubmodular));
  }
  if (flags.monotone) {
    reports.push_back(Validate(instance, Property::kMonotone));
  }
  if (flags.ell_sign == EllSign::kNonNegative) {
    reports.push_back(Validate(instance, Property::kEllNonNegative));
  } else if (flags.ell_sign == EllSign::kNonPositive) {
    reports.push_back(Validate(instance, Property::kEllNonPositive));
  }
  return reports;
}

ValidationReport ValidateGroupInvariance(const RusmInstance& instance,
                                         const PermutationGroup& group,
                                         int max_elements) {
  const int n = instance.size();
  if (group.size() != n) {
    throw std::invalid_argument("group size does not match the instance");
  }
  if (n > max_elements) {
    throw std::invalid_argument("group invariance check needs n <= " +
                                std::to_string(max_elements));
  }
  ValidationReport report{.property = Property::kGroupInvariant};
  const SetFunction& g = *instance.g();
  for (size_t k = 0; k < group.generators().size(); ++k) {
    const Permutation& sigma = group.generators()[k];
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
      const SubsetMask s(bits);
      const SubsetMask image = ApplyPermutation(sigma, s);
      if (g.Evaluate(image) != g.Evaluate(s) ||
          instance.ell()(image) != instance.ell()(s)) {
        report.passed = false;
        report.witness_s = s;
        report.witness_t = image;
        report.detail = "generator " + std::to_string(k) +
                        " changes the value of " + s.ToString();
        return report;
      }
    }
  }
  return report;
}

}  // namespace rusm

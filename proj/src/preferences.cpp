// Copyright 2026 The Ambigame Authors
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

#include "ambigame/preferences.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ambigame {

Ordering reverse_ordering(Ordering o) {
  switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    case Ordering::Equal: return Ordering::Equal;
  }
  return Ordering::Equal;
}

const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "equal";
}

namespace {

void require_same_state_set(const Act& a, const Act& b) {
  if (!a.same_state_set(b)) {
    throw Error(ErrorCode::StateSetMismatch, "acts are defined over different state sets");
  }
}

Ordering compare_rationals(const Rational& x, const Rational& y) {
  if (x < y) return Ordering::Less;
  if (x > y) return Ordering::Greater;
  return Ordering::Equal;
}

}  // namespace

Ordering min_compare(const Act& a, const Act& b) {
  require_same_state_set(a, b);
  return compare_rationals(a.worst(), b.worst());
}

Ordering lex_compare(const Act& a, const Act& b) {
  require_same_state_set(a, b);
  Ordering by_worst = compare_rationals(a.worst(), b.worst());
  if (by_worst != Ordering::Equal) return by_worst;
  return compare_rationals(a.best(), b.best());
}

std::pair<Rational, Rational> canonical_minmax(const Act& a) {
  return {a.worst(), a.best()};
}

Comparator min_comparator() { return Comparator{"min", &min_compare}; }

Comparator lex_comparator() { return Comparator{"lex", &lex_compare}; }

Comparator second_worst_comparator() {
  return Comparator{"second-worst", [](const Act& a, const Act& b) {
                      require_same_state_set(a, b);
                      const auto sa = a.sorted_values();
                      const auto sb = b.sorted_values();
                      for (std::size_t i = 0; i < sa.size(); ++i) {
                        Ordering o = compare_rationals(sa[i], sb[i]);
                        if (o != Ordering::Equal) return o;
                      }
                      return Ordering::Equal;
                    }};
}

Comparator min_then_comparator(const std::string& name,
                               std::function<Rational(const Rational&)> coarsen) {
  return Comparator{name, [coarsen](const Act& a, const Act& b) {
                      require_same_state_set(a, b);
                      Ordering by_worst = compare_rationals(a.worst(), b.worst());
                      if (by_worst != Ordering::Equal) return by_worst;
                      return compare_rationals(coarsen(a.best()), coarsen(b.best()));
                    }};
}

std::optional<Comparator> comparator_by_name(const std::string& name) {
  if (name == "min") return min_comparator();
  if (name == "lex") return lex_comparator();
  if (name == "second-worst") return second_worst_comparator();
  return std::nullopt;
}

std::optional<Axiom> axiom_by_name(const std::string& name) {
  if (name == "monotonicity") return Axiom::Monotonicity;
  if (name == "state-symmetry") return Axiom::StateSymmetry;
  if (name == "iii" || name == "irrelevant-information") return Axiom::IrrelevantInformation;
  if (name == "certainty-independence") return Axiom::CertaintyIndependence;
  if (name == "uncertainty-aversion") return Axiom::UncertaintyAversion;
  return std::nullopt;
}

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Monotonicity: return "monotonicity";
    case Axiom::StateSymmetry: return "state-symmetry";
    case Axiom::IrrelevantInformation: return "iii";
    case Axiom::CertaintyIndependence: return "certainty-independence";
    case Axiom::UncertaintyAversion: return "uncertainty-aversion";
  }
  return "unknown";
}

namespace {

Act permute_act(const Act& a, const std::vector<std::size_t>& perm) {
  std::vector<Rational> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) values[i] = a.values[perm[i]];
  return Act(a.state_labels, std::move(values));
}

Act duplicate_state(const Act& a, std::size_t state) {
  std::vector<std::string> labels = a.state_labels;
  std::vector<Rational> values = a.values;
  labels.push_back(labels[state] + "'");
  values.push_back(values[state]);
  return Act(std::move(labels), std::move(values));
}

Act mix_with_constant(const Act& a, const Rational& alpha, const Rational& c) {
  std::vector<Rational> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) values[i] = alpha * a.values[i] + (1 - alpha) * c;
  return Act(a.state_labels, std::move(values));
}

Act mix_acts(const Act& a, const Act& b, const Rational& alpha) {
  std::vector<Rational> values(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    values[i] = alpha * a.values[i] + (1 - alpha) * b.values[i];
  }
  return Act(a.state_labels, std::move(values));
}

bool dominates_pointwise(const Act& a, const Act& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.values[i] < b.values[i]) return false;
  }
  return true;
}

void record(AxiomReport& report, const AxiomCheckOptions& options, AxiomViolation violation) {
  report.pass = false;
  if (report.violations.size() < options.max_violations) {
    report.violations.push_back(std::move(violation));
  }
}

std::vector<std::vector<std::size_t>> state_permutations(std::size_t n,
                                                         const AxiomCheckOptions& options) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::size_t total = 1;
  for (std::size_t k = 2; k <= n && total <= options.max_permutations; ++k) total *= k;
  if (total <= options.max_permutations) {
    do { perms.push_back(p); } while (std::next_permutation(p.begin(), p.end()));
    return perms;
  }
  // Larger state sets: reversal, rotation, and seeded shuffles.
  perms.push_back(p);
  std::vector<std::size_t> rev(p.rbegin(), p.rend());
  perms.push_back(rev);
  std::rotate(p.begin(), p.begin() + 1, p.end());
  perms.push_back(p);
  std::mt19937_64 rng(options.permutation_seed);
  while (perms.size() < options.max_permutations) {
    std::shuffle(p.begin(), p.end(), rng);
    perms.push_back(p);
  }
  return perms;
}

std::vector<Rational> constant_levels(const std::vector<Act>& battery) {
  std::set<Rational> levels{Rational(0), Rational(1)};
  Rational lo = battery.front().worst();
  Rational hi = battery.front().best();
  for (const Act& a : battery) {
    lo = std::min(lo, a.worst());
    hi = std::max(hi, a.best());
  }
  levels.insert(lo);
  levels.insert(hi);
  return {levels.begin(), levels.end()};
}

}  // namespace

AxiomReport check_axiom(Axiom axiom, const Comparator& comparator, const std::vector<Act>& battery,
                        const AxiomCheckOptions& options) {
  AxiomReport report;
  report.axiom = axiom;
  if (battery.empty()) return report;
  const std::size_t n = battery.front().size();
  for (const Act& a : battery) {
    if (!a.same_state_set(battery.front())) {
      throw Error(ErrorCode::StateSetMismatch, "battery acts share no common state set");
    }
    if (a.size() != n) {
      throw Error(ErrorCode::StateSetMismatch, "battery acts differ in length");
    }
  }

  auto for_each_pair = [&](auto&& body) {
    for (std::size_t i = 0; i < battery.size(); ++i) {
      for (std::size_t j = 0; j < battery.size(); ++j) {
        if (i == j) continue;
        body(battery[i], battery[j]);
      }
    }
  };

  switch (axiom) {
    case Axiom::Monotonicity: {
      for_each_pair([&](const Act& a, const Act& b) {
        if (!dominates_pointwise(a, b)) return;
        if (comparator.compare(a, b) == Ordering::Less) {
          record(report, options,
                 AxiomViolation{a, b, a, b, Ordering::Less, Ordering::Less,
                                "pointwise dominance ranked below"});
        }
      });
      break;
    }
    case Axiom::StateSymmetry: {
      const auto perms = state_permutations(n, options);
      for_each_pair([&](const Act& a, const Act& b) {
        const Ordering before = comparator.compare(a, b);
        for (const auto& perm : perms) {
          Act pa = permute_act(a, perm);
          Act pb = permute_act(b, perm);
          const Ordering after = comparator.compare(pa, pb);
          if (after != before) {
            std::string desc = "state relabeling (";
            for (std::size_t k = 0; k < perm.size(); ++k) {
              if (k) desc += " ";
              desc += std::to_string(perm[k]);
            }
            desc += ")";
            record(report, options, AxiomViolation{a, b, pa, pb, before, after, desc});
            return;
          }
        }
      });
      break;
    }
    case Axiom::IrrelevantInformation: {
      for_each_pair([&](const Act& a, const Act& b) {
        const Ordering before = comparator.compare(a, b);
        for (std::size_t s = 0; s < n; ++s) {
          Act da = duplicate_state(a, s);
          Act db = duplicate_state(b, s);
          const Ordering after = comparator.compare(da, db);
          if (after != before) {
            record(report, options,
                   AxiomViolation{a, b, da, db, before, after,
                                  "duplicated state " + a.state_labels[s]});
            return;
          }
        }
      });
      break;
    }
    case Axiom::CertaintyIndependence: {
      const auto levels = constant_levels(battery);
      for_each_pair([&](const Act& a, const Act& b) {
        const Ordering before = comparator.compare(a, b);
        if (before == Ordering::Equal) return;  // the axiom constrains strict ranks
        for (const Rational& alpha : options.mixture_weights) {
          for (const Rational& c : levels) {
            Act ma = mix_with_constant(a, alpha, c);
            Act mb = mix_with_constant(b, alpha, c);
            const Ordering after = comparator.compare(ma, mb);
            if (after != before) {
              record(report, options,
                     AxiomViolation{a, b, ma, mb, before, after,
                                    "mixed with constant " + rational_to_string(c) + " at alpha " +
                                        rational_to_string(alpha)});
              return;
            }
          }
        }
      });
      break;
    }
    case Axiom::UncertaintyAversion: {
      for_each_pair([&](const Act& a, const Act& b) {
        if (comparator.compare(a, b) != Ordering::Equal) return;
        for (const Rational& alpha : options.mixture_weights) {
          Act mix = mix_acts(a, b, alpha);
          if (comparator.compare(mix, a) == Ordering::Less ||
              comparator.compare(mix, b) == Ordering::Less) {
            record(report, options,
                   AxiomViolation{a, b, mix, a, Ordering::Equal, Ordering::Less,
                                  "mixture at alpha " + rational_to_string(alpha) +
                                      " ranked below an indifferent pair"});
            return;
          }
        }
      });
      break;
    }
  }
  return report;
}

RefinementReport check_refinement(const Comparator& coarse, const Comparator& fine,
                                  const std::vector<Act>& battery) {
  RefinementReport report;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    for (std::size_t j = 0; j < battery.size(); ++j) {
      if (i == j) continue;
      if (!battery[i].same_state_set(battery[j])) continue;
      const Ordering c = coarse.compare(battery[i], battery[j]);
      if (c == Ordering::Equal) continue;
      const Ordering f = fine.compare(battery[i], battery[j]);
      if (f != c) {
        report.pass = false;
        report.violations.push_back(RefinementViolation{battery[i], battery[j], c, f});
      }
    }
  }
  return report;
}

std::vector<Act> random_battery(std::mt19937_64& rng, std::size_t count, std::size_t num_states) {
  std::uniform_int_distribution<int> numerator(-6, 6);
  std::uniform_int_distribution<int> denominator(1, 4);
  std::vector<Act> battery;
  battery.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Rational> values;
    values.reserve(num_states);
    for (std::size_t s = 0; s < num_states; ++s) {
      values.emplace_back(numerator(rng), denominator(rng));
    }
    battery.push_back(Act(std::move(values)));
  }
  return battery;
}

}  // namespace ambigame

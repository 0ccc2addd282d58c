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

#include "ambigame/coordination.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ambigame {

namespace {

// rank_of[player][type][location] = position in the type's order (0 = best)
std::vector<std::vector<std::vector<int>>> rank_tables(const CoordinationSpec& spec) {
  const int m = spec.num_locations();
  std::vector<std::vector<std::vector<int>>> ranks(spec.num_players());
  for (int p = 0; p < spec.num_players(); ++p) {
    for (const auto& order : spec.type_sets[p]) {
      std::vector<int> rank(m, -1);
      for (int r = 0; r < m; ++r) {
        auto it = std::find(spec.locations.begin(), spec.locations.end(), order[r]);
        rank[it - spec.locations.begin()] = r;
      }
      ranks[p].push_back(std::move(rank));
    }
  }
  return ranks;
}

std::string order_label(const std::vector<std::string>& order) {
  std::string label;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) label += '>';
    label += order[i];
  }
  return label;
}

}  // namespace

void validate_coordination_spec(const CoordinationSpec& spec) {
  const int m = spec.num_locations();
  if (m < 2) throw Error(ErrorCode::InvalidSpec, "need at least two locations");
  if (spec.num_players() < 2) throw Error(ErrorCode::InvalidSpec, "need at least two players");
  std::set<std::string> unique_locations(spec.locations.begin(), spec.locations.end());
  if (static_cast<int>(unique_locations.size()) != m) {
    throw Error(ErrorCode::InvalidSpec, "duplicate location");
  }
  for (int p = 0; p < spec.num_players(); ++p) {
    if (spec.type_sets[p].empty()) {
      throw Error(ErrorCode::InvalidSpec, "player " + std::to_string(p) + " has no types");
    }
    std::set<std::vector<std::string>> seen;
    for (const auto& order : spec.type_sets[p]) {
      if (static_cast<int>(order.size()) != m) {
        throw Error(ErrorCode::InvalidSpec,
                    "order \"" + order_label(order) + "\" does not rank every location");
      }
      std::set<std::string> covered(order.begin(), order.end());
      if (covered != unique_locations) {
        throw Error(ErrorCode::InvalidSpec,
                    "order \"" + order_label(order) + "\" is not a permutation of the locations");
      }
      if (!seen.insert(order).second) {
        throw Error(ErrorCode::InvalidSpec,
                    "duplicate type \"" + order_label(order) + "\" for player " +
                        std::to_string(p));
      }
    }
  }
}

TypeAmbiguityGame build_coordination_game(const CoordinationSpec& spec) {
  validate_coordination_spec(spec);
  const int n = spec.num_players();
  const int m = spec.num_locations();
  const auto ranks = rank_tables(spec);

  GameDescription d;
  for (int p = 0; p < n; ++p) d.players.push_back("p" + std::to_string(p + 1));
  d.actions.assign(n, spec.locations);

  // States are the full type product, odometer order, last player fastest.
  std::vector<int> type_counts(n);
  for (int p = 0; p < n; ++p) type_counts[p] = static_cast<int>(spec.type_sets[p].size());
  std::vector<int> digits(n, 0);
  while (true) {
    std::string id;
    std::vector<std::string> labels(n);
    for (int p = 0; p < n; ++p) {
      labels[p] = order_label(spec.type_sets[p][digits[p]]);
      if (p) id += '|';
      id += labels[p];
    }
    d.state_ids.push_back(id);
    d.state_types.push_back(labels);

    int p = n - 1;
    for (; p >= 0; --p) {
      if (++digits[p] < type_counts[p]) break;
      digits[p] = 0;
    }
    if (p < 0) break;
  }

  // Utilities per state and pure action profile.
  const std::size_t num_states = d.state_ids.size();
  std::vector<int> state_digits(n, 0);
  for (std::size_t s = 0; s < num_states; ++s) {
    std::vector<int> actions(n, 0);
    while (true) {
      std::string key;
      for (int p = 0; p < n; ++p) {
        if (p) key += '|';
        key += spec.locations[actions[p]];
      }
      for (int p = 0; p < n; ++p) {
        int meetings = 0;
        for (int j = 0; j < n; ++j) {
          if (j != p && actions[j] == actions[p]) ++meetings;
        }
        Rational u(0);
        if (meetings > 0) {
          const int rank = ranks[p][state_digits[p]][actions[p]];
          u = Rational(meetings * m + (m - rank));
        }
        d.utilities[d.players[p]][d.state_ids[s]][key] = u;
      }
      int p = n - 1;
      for (; p >= 0; --p) {
        if (++actions[p] < m) break;
        actions[p] = 0;
      }
      if (p < 0) break;
    }
    int p = n - 1;
    for (; p >= 0; --p) {
      if (++state_digits[p] < type_counts[p]) break;
      state_digits[p] = 0;
    }
  }

  return as_type_ambiguity_game(validate_game(d));
}

namespace {

// Best location of a type within a subset; -1-free because subsets are
// non-empty. `mask` has bit l set iff location l is in the subset.
int best_in_subset(const std::vector<int>& rank, unsigned mask) {
  int best = -1;
  for (int l = 0; l < static_cast<int>(rank.size()); ++l) {
    if (!(mask >> l & 1)) continue;
    if (best < 0 || rank[l] < rank[best]) best = l;
  }
  return best;
}

}  // namespace

std::vector<CoordinationEquilibrium> lexne_location_sets(const CoordinationSpec& spec) {
  validate_coordination_spec(spec);
  const int n = spec.num_players();
  const int m = spec.num_locations();
  if (m > 24) {
    throw Error(ErrorCode::DomainError, "subset enumeration supports at most 24 locations");
  }
  const auto ranks = rank_tables(spec);

  std::vector<CoordinationEquilibrium> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool onto_everywhere = true;
    std::vector<std::vector<int>> choice(n);
    for (int p = 0; p < n && onto_everywhere; ++p) {
      unsigned covered = 0;
      for (const auto& rank : ranks[p]) {
        const int best = best_in_subset(rank, mask);
        choice[p].push_back(best);
        covered |= 1u << best;
      }
      onto_everywhere = covered == mask;
    }
    if (!onto_everywhere) continue;

    CoordinationEquilibrium eq;
    for (int l = 0; l < m; ++l) {
      if (mask >> l & 1) eq.set.locations.push_back(l);
    }
    eq.profile.actions.resize(n);
    for (int p = 0; p < n; ++p) {
      for (int best : choice[p]) {
        eq.profile.actions[p].push_back(MixedAction::pure(best, m));
      }
    }
    out.push_back(std::move(eq));
  }
  return out;
}

bool is_minne_coordination(const CoordinationSpec& spec, const StrategyProfile& pure_profile) {
  validate_coordination_spec(spec);
  const int n = spec.num_players();
  if (static_cast<int>(pure_profile.actions.size()) != n) {
    throw Error(ErrorCode::InvalidSpec, "profile does not cover every player");
  }

  bool all_same = true;
  int common = -1;
  bool some_player_uniform = false;
  for (int p = 0; p < n; ++p) {
    if (pure_profile.actions[p].size() != spec.type_sets[p].size()) {
      throw Error(ErrorCode::InvalidSpec, "profile does not cover every type");
    }
    bool uniform = true;
    int first = -1;
    for (const MixedAction& a : pure_profile.actions[p]) {
      const int l = a.pure_action();
      if (l < 0) throw Error(ErrorCode::InvalidSpec, "profile is not pure");
      if (first < 0) first = l;
      if (l != first) uniform = false;
      if (common < 0) common = l;
      if (l != common) all_same = false;
    }
    if (uniform) some_player_uniform = true;
  }
  return all_same || !some_player_uniform;
}

Rational minne_fraction_lower_bound(int m, int t, int n) {
  if (m < 2 || t < 1 || n < 2) {
    throw Error(ErrorCode::DomainError,
                "need m >= 2, t >= 1, n >= 2; got m=" + std::to_string(m) +
                    " t=" + std::to_string(t) + " n=" + std::to_string(n));
  }
  const Rational inside = 1 - Rational(1, rational_pow(Rational(m), t - 1));
  return rational_pow(inside, n);
}

std::vector<LocationSet> known_peak_lexne(
    const CoordinationSpec& spec, const std::vector<std::string>& peaks,
    const std::vector<std::vector<std::vector<std::string>>>& orders) {
  validate_coordination_spec(spec);
  const int n = spec.num_players();
  const int m = spec.num_locations();
  if (static_cast<int>(peaks.size()) != n || static_cast<int>(orders.size()) != n) {
    throw Error(ErrorCode::InvalidSpec, "peaks and orders must cover every player");
  }
  const auto ranks = rank_tables(spec);

  auto location_index = [&](const std::string& name) {
    auto it = std::find(spec.locations.begin(), spec.locations.end(), name);
    if (it == spec.locations.end()) {
      throw Error(ErrorCode::InvalidSpec, "unknown location \"" + name + "\"");
    }
    return static_cast<int>(it - spec.locations.begin());
  };

  // position_of[player][order][location] = index along the supplied line
  std::vector<std::vector<std::vector<int>>> positions(n);
  std::vector<int> peak_index(n);
  for (int p = 0; p < n; ++p) {
    peak_index[p] = location_index(peaks[p]);
    if (orders[p].empty()) {
      throw Error(ErrorCode::InvalidSpec, "player " + std::to_string(p) + " has no orders");
    }
    for (const auto& order : orders[p]) {
      if (static_cast<int>(order.size()) != m) {
        throw Error(ErrorCode::InvalidSpec, "order does not cover every location");
      }
      std::vector<int> pos(m, -1);
      for (int i = 0; i < m; ++i) pos[location_index(order[i])] = i;
      for (int l = 0; l < m; ++l) {
        if (pos[l] < 0) throw Error(ErrorCode::InvalidSpec, "order repeats a location");
      }
      positions[p].push_back(std::move(pos));
    }

    // Every type must peak at the player's known ideal location and decline
    // monotonically on each side of it along every supplied order.
    for (std::size_t t = 0; t < spec.type_sets[p].size(); ++t) {
      const std::vector<int>& rank = ranks[p][t];
      int top = 0;
      for (int l = 1; l < m; ++l) {
        if (rank[l] < rank[top]) top = l;
      }
      if (top != peak_index[p]) {
        throw Error(ErrorCode::PeakMismatch,
                    "type \"" + order_label(spec.type_sets[p][t]) + "\" of player " +
                        std::to_string(p) + " peaks at \"" + spec.locations[top] +
                        "\", expected \"" + peaks[p] + "\"");
      }
      for (const auto& pos : positions[p]) {
        for (int a = 0; a < m; ++a) {
          for (int b = 0; b < m; ++b) {
            const int xp = pos[peak_index[p]];
            const bool between = (xp < pos[a] && pos[a] < pos[b]) ||
                                 (xp > pos[a] && pos[a] > pos[b]);
            if (between && rank[a] > rank[b]) {
              throw Error(ErrorCode::NotSinglePeaked,
                          "type \"" + order_label(spec.type_sets[p][t]) + "\" of player " +
                              std::to_string(p) + " is not single-peaked w.r.t. a supplied order");
            }
          }
        }
      }
    }
  }

  std::vector<LocationSet> out;
  for (int l = 0; l < m; ++l) out.push_back(LocationSet{{l}});
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      bool straddles = true;
      for (int p = 0; p < n && straddles; ++p) {
        for (const auto& pos : positions[p]) {
          const int xp = pos[peak_index[p]];
          if (!((pos[a] < xp && xp < pos[b]) || (pos[b] < xp && xp < pos[a]))) {
            straddles = false;
            break;
          }
        }
      }
      if (!straddles) continue;
      // Richness from the tightness argument: each player needs a type on
      // each side of the pair.
      bool rich = true;
      for (int p = 0; p < n && rich; ++p) {
        bool prefers_a = false, prefers_b = false;
        for (const auto& rank : ranks[p]) {
          (rank[a] < rank[b] ? prefers_a : prefers_b) = true;
        }
        rich = prefers_a && prefers_b;
      }
      if (rich) out.push_back(LocationSet{{a, b}});
    }
  }
  std::sort(out.begin(), out.end(), [](const LocationSet& x, const LocationSet& y) {
    return x.locations < y.locations;
  });
  return out;
}

void validate_euclidean_spec(const EuclideanSpec& spec) {
  if (spec.locations.size() != spec.coordinates.size()) {
    throw Error(ErrorCode::InvalidSpec, "coordinates not aligned with locations");
  }
  if (spec.locations.size() < 2) throw Error(ErrorCode::InvalidSpec, "need at least two locations");
  if (spec.ideal_points.size() < 2) throw Error(ErrorCode::InvalidSpec, "need at least two players");
  std::set<Rational> unique_coords(spec.coordinates.begin(), spec.coordinates.end());
  if (unique_coords.size() != spec.coordinates.size()) {
    throw Error(ErrorCode::InvalidSpec, "duplicate location coordinate");
  }
  for (const auto& ideals : spec.ideal_points) {
    if (ideals.empty()) throw Error(ErrorCode::InvalidSpec, "player without ideal points");
    std::set<Rational> unique_ideals(ideals.begin(), ideals.end());
    if (unique_ideals.size() != ideals.size()) {
      throw Error(ErrorCode::InvalidSpec, "duplicate ideal point");
    }
  }
}

std::vector<LocationSet> euclidean_lexne(const EuclideanSpec& spec) {
  validate_euclidean_spec(spec);
  const int m = static_cast<int>(spec.locations.size());
  if (m > 24) {
    throw Error(ErrorCode::DomainError, "subset enumeration supports at most 24 locations");
  }

  // Locations sorted by coordinate; sets are built over sorted positions and
  // reported as original indices.
  std::vector<int> by_coord(m);
  std::iota(by_coord.begin(), by_coord.end(), 0);
  std::sort(by_coord.begin(), by_coord.end(),
            [&](int a, int b) { return spec.coordinates[a] < spec.coordinates[b]; });

  std::vector<LocationSet> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> chosen;  // sorted by coordinate
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) chosen.push_back(by_coord[i]);
    }
    bool ok = true;
    if (chosen.size() > 1) {
      std::vector<Rational> midpoints;
      for (std::size_t t = 0; t + 1 < chosen.size(); ++t) {
        midpoints.push_back(
            (spec.coordinates[chosen[t]] + spec.coordinates[chosen[t + 1]]) / 2);
      }
      for (const auto& ideals : spec.ideal_points) {
        // Need one ideal point strictly inside every midpoint gap
        // (-inf, mid_1), (mid_1, mid_2), ..., (mid_{k-1}, +inf).
        for (std::size_t gap = 0; gap <= midpoints.size() && ok; ++gap) {
          bool filled = false;
          for (const Rational& x : ideals) {
            const bool above_lo = gap == 0 || x > midpoints[gap - 1];
            const bool below_hi = gap == midpoints.size() || x < midpoints[gap];
            if (above_lo && below_hi) { filled = true; break; }
          }
          ok = filled;
        }
        if (!ok) break;
      }
    }
    if (!ok) continue;
    LocationSet set;
    set.locations.assign(chosen.begin(), chosen.end());
    std::sort(set.locations.begin(), set.locations.end());
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const LocationSet& x, const LocationSet& y) {
    return x.locations < y.locations;
  });
  return out;
}

CoordinationSpec coordination_spec_from_euclidean(const EuclideanSpec& spec) {
  validate_euclidean_spec(spec);
  const int m = static_cast<int>(spec.locations.size());

  CoordinationSpec out;
  out.locations = spec.locations;
  out.type_sets.resize(spec.ideal_points.size());
  for (std::size_t p = 0; p < spec.ideal_points.size(); ++p) {
    for (const Rational& x : spec.ideal_points[p]) {
      std::vector<int> order(m);
      std::iota(order.begin(), order.end(), 0);
      auto distance = [&](int l) { return abs(spec.coordinates[l] - x); };
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          if (distance(a) == distance(b)) {
            throw Error(ErrorCode::NotSinglePeaked,
                        "ideal point " + rational_to_string(x) + " is equidistant from \"" +
                            spec.locations[a] + "\" and \"" + spec.locations[b] + "\"");
          }
        }
      }
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return distance(a) < distance(b); });
      std::vector<std::string> named;
      for (int l : order) named.push_back(spec.locations[l]);
      // Distinct ideal points can induce the same distance order; the type
      // set is a set of preferences, so keep one copy.
      if (std::find(out.type_sets[p].begin(), out.type_sets[p].end(), named) ==
          out.type_sets[p].end()) {
        out.type_sets[p].push_back(std::move(named));
      }
    }
  }
  validate_coordination_spec(out);
  return out;
}

}  // namespace ambigame

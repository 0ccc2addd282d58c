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

#pragma once

#include <string>
#include <vector>

#include "ambigame/core_model.hpp"

namespace ambigame {

// Everybody wants to maximize how many others pick their location; a type is
// a strict preference order over the locations used only to break ties among
// positive meeting counts.
struct CoordinationSpec {
  std::vector<std::string> locations;
  // type_sets[player][type] = order over all locations, best first
  std::vector<std::vector<std::vector<std::string>>> type_sets;

  int num_players() const { return static_cast<int>(type_sets.size()); }
  int num_locations() const { return static_cast<int>(locations.size()); }
};

/// Spec invariants: m >= 2, n >= 2, every order ranks every location exactly
/// once, type lists duplicate-free. Throws InvalidSpec.
void validate_coordination_spec(const CoordinationSpec& spec);

/// Compiles to a game whose states are the full type product. The cardinal
/// encoding is meetings*m + (m - rank_of_chosen_location), 0 when alone: more
/// meetings dominate, the rank breaks ties among equal positive counts, and
/// all alone-outcomes are indifferent, exactly realizing the ordinal
/// definition.
TypeAmbiguityGame build_coordination_game(const CoordinationSpec& spec);

struct LocationSet {
  std::vector<int> locations;  // ascending location indices
  bool operator==(const LocationSet&) const = default;
};

struct CoordinationEquilibrium {
  LocationSet set;
  StrategyProfile profile;  // each type at its best location within the set
};

/// Every non-empty location set L whose type-to-best-location-in-L map is
/// onto for every player, paired with its unique canonical pure profile.
/// Canonically ordered by the subset bitmask over location indices.
std::vector<CoordinationEquilibrium> lexne_location_sets(const CoordinationSpec& spec);

/// Characterization check for pure profiles on the compiled game: an
/// equilibrium iff all types of all players share one location, or no player
/// has all his types on one location.
bool is_minne_coordination(const CoordinationSpec& spec, const StrategyProfile& pure_profile);

/// (1 - 1/m^(t-1))^n exactly. DomainError unless m >= 2, t >= 1, n >= 2.
Rational minne_fraction_lower_bound(int m, int t, int n);

/// Candidate location sets when every player's ideal location is known:
/// all singletons, plus the pairs straddling every supplied order's peak that
/// pass the richness filter (each player has a type on each side of the
/// pair). Throws PeakMismatch / NotSinglePeaked on invalid input.
std::vector<LocationSet> known_peak_lexne(
    const CoordinationSpec& spec, const std::vector<std::string>& peaks,
    const std::vector<std::vector<std::vector<std::string>>>& orders);

struct EuclideanSpec {
  std::vector<std::string> locations;
  std::vector<Rational> coordinates;               // aligned with locations
  std::vector<std::vector<Rational>> ideal_points; // per player
};

void validate_euclidean_spec(const EuclideanSpec& spec);

/// Location sets {l_1 < ... < l_k} such that every player has ideal points
/// strictly separated by the consecutive midpoints, plus all singletons.
std::vector<LocationSet> euclidean_lexne(const EuclideanSpec& spec);

/// Derives each ideal point's distance order. Throws NotSinglePeaked when an
/// ideal point is equidistant from two locations (no strict order exists).
CoordinationSpec coordination_spec_from_euclidean(const EuclideanSpec& spec);

}  // namespace ambigame

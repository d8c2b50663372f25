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

#include "eppt/synthetic.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "eppt/rng.h"

namespace eppt::geo {
namespace {

constexpr double kMilesPerDegreeLat =
    kEarthRadiusMiles * 3.14159265358979323846 / 180.0;

// Local planar frame in miles, x east and y north of the origin.
class Frame {
 public:
  explicit Frame(const SyntheticCityParams& p)
      : lat0_(p.origin_lat),
        lon0_(p.origin_lon),
        miles_per_degree_lon_(
            kMilesPerDegreeLat *
            std::cos((p.origin_lat + p.height_miles / 2 / kMilesPerDegreeLat) *
                     3.14159265358979323846 / 180.0)) {}

  LatLon ToLatLon(double x, double y) const {
    return {lat0_ + y / kMilesPerDegreeLat, lon0_ + x / miles_per_degree_lon_};
  }

 private:
  double lat0_;
  double lon0_;
  double miles_per_degree_lon_;
};

std::string PaddedId(const char* prefix, int k) {
  std::string digits = std::to_string(k);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return prefix + digits;
}

void ValidateParams(const SyntheticCityParams& p) {
  if (p.target_eligible < 1 || p.max_draws < p.target_eligible) {
    throw std::invalid_argument("need 1 <= target_eligible <= max_draws");
  }
  if (p.neighborhoods < 1) {
    throw std::invalid_argument("need at least one neighbourhood");
  }
  if (!(p.width_miles > 2) || !(p.height_miles > 2)) {
    throw std::invalid_argument("city must be wider than 2 miles");
  }
  if (p.rail_line_x_miles.empty() ||
      (p.bus_line_x_miles.empty() && p.bus_line_y_miles.empty())) {
    throw std::invalid_argument("city needs rail and bus lines");
  }
  if (p.race_weights.empty()) {
    throw std::invalid_argument("race_weights must not be empty");
  }
  for (const auto& [label, w] : p.race_weights) {
    if (label.empty() || !(w > 0)) {
      throw std::invalid_argument("race weights must be positive");
    }
  }
  if (!(p.background_share >= 0 && p.background_share <= 1) ||
      !(p.dominant_share >= 0 && p.dominant_share <= 1)) {
    throw std::invalid_argument("shares must lie in [0, 1]");
  }
}

std::vector<TransitStop> LayTransit(const SyntheticCityParams& p,
                                    const Frame& frame) {
  std::vector<TransitStop> stops;
  auto add = [&](const char* prefix, StopKind kind, double x, double y) {
    const LatLon ll = frame.ToLatLon(x, y);
    stops.push_back(
        TransitStop{PaddedId(prefix, static_cast<int>(stops.size())), kind,
                    ll.lat, ll.lon});
  };
  for (double x : p.rail_line_x_miles) {
    for (double y = 0; y <= p.height_miles; y += 1.0) {
      add("rail", StopKind::kRail, x, y);
    }
  }
  for (double x : p.bus_line_x_miles) {
    for (double y = 0; y <= p.height_miles; y += 0.5) {
      add("bus", StopKind::kBus, x, y);
    }
  }
  for (double y : p.bus_line_y_miles) {
    for (double x = 0; x <= p.width_miles; x += 0.5) {
      add("bus", StopKind::kBus, x, y);
    }
  }
  return stops;
}

const std::string& DrawLabel(const SyntheticCityParams& p, Rng& rng) {
  double total = 0;
  for (const auto& rw : p.race_weights) total += rw.second;
  double u = rng.Uniform01() * total;
  for (const auto& rw : p.race_weights) {
    if (u < rw.second) return rw.first;
    u -= rw.second;
  }
  return p.race_weights.back().first;
}

struct Neighborhood {
  double x = 0;
  double y = 0;
  std::string dominant;
};

std::vector<Neighborhood> PlaceNeighborhoods(
    const SyntheticCityParams& p, const Frame& frame,
    const std::vector<TransitStop>& transit, Rng& rng) {
  std::vector<Neighborhood> out;
  const int labels = static_cast<int>(p.race_weights.size());
  const int offset = static_cast<int>(rng.UniformIndex(labels));
  for (int attempt = 0;
       attempt < 100'000 && static_cast<int>(out.size()) < p.neighborhoods;
       ++attempt) {
    const double x = 1.0 + rng.Uniform01() * (p.width_miles - 2.0);
    const double y = 1.0 + rng.Uniform01() * (p.height_miles - 2.0);
    const TransitDistances d = NearestTransit(frame.ToLatLon(x, y), transit);
    if (d.bus < 0.6 || d.bus > 1.3 || d.rail < 0.8 || d.rail > 3.0) continue;
    bool crowded = false;
    for (const Neighborhood& n : out) {
      crowded = crowded || std::hypot(n.x - x, n.y - y) < 2.5;
    }
    if (crowded) continue;
    const int k = static_cast<int>(out.size());
    out.push_back({x, y, p.race_weights[(k + offset) % labels].first});
  }
  if (out.empty()) {
    throw std::runtime_error("no neighbourhood centre fits the transit layout");
  }
  return out;
}

}  // namespace

GeoDataset GenerateSyntheticCity(const SyntheticCityParams& params) {
  ValidateParams(params);
  const Frame frame(params);
  Rng rng(DeriveSeed(params.seed, {0x5157}));

  GeoDataset ds;
  ds.guideline = PovertyGuideline::Hhs2021();
  ds.stops = LayTransit(params, frame);
  const std::vector<Neighborhood> hoods =
      PlaceNeighborhoods(params, frame, ds.stops, rng);

  const EligibilityRule rule;
  int eligible = 0;
  for (int draw = 0;
       draw < params.max_draws && eligible < params.target_eligible; ++draw) {
    double x;
    double y;
    std::string race;
    if (rng.Uniform01() < params.background_share) {
      x = rng.Uniform01() * params.width_miles;
      y = rng.Uniform01() * params.height_miles;
      race = DrawLabel(params, rng);
    } else {
      const Neighborhood& n = hoods[rng.UniformIndex(hoods.size())];
      x = rng.Normal(n.x, params.neighborhood_sigma_miles);
      y = rng.Normal(n.y, params.neighborhood_sigma_miles);
      race = rng.Uniform01() < params.dominant_share ? n.dominant
                                                     : DrawLabel(params, rng);
    }
    const int size = 1 + static_cast<int>(rng.UniformIndex(6));
    const double income =
        ds.guideline.Threshold(size) * (0.5 + 2.1 * rng.Uniform01());
    const LatLon ll = frame.ToLatLon(x, y);
    GeoHousehold h{PaddedId("h", draw), ll.lat, ll.lon, income, size, race};
    const TransitDistances d = NearestTransit(ll, ds.stops);
    if (d.bus >= rule.bus_min && d.bus <= rule.bus_max &&
        d.rail >= rule.rail_min && d.rail <= rule.rail_max) {
      ++eligible;
    }
    ds.households.push_back(std::move(h));
  }
  return ds;
}

}  // namespace eppt::geo

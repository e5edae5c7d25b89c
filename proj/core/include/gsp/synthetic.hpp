#pragma once

#include <cstdint>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

/// Seeded stations scattered uniformly over a lat/lon box. Pairing this with
/// build_geo_graph gives a reproducible geometric graph for experiments.
std::vector<GeoStation> random_geo_stations(int count, std::uint64_t seed,
                                            double lat_min = 40.0, double lat_max = 45.0,
                                            double lon_min = 8.0, double lon_max = 14.0);

/// Smooth but not bandlimited test signal: independent standard normal
/// spectral coefficients damped by exp(-tau * lambda_i) with
/// tau = 5 / lambda_max (tau = 0 on an edgeless graph).
Signal heat_kernel_signal(const GftBasis& basis, std::uint64_t seed);

}  // namespace gsp

#include "gsp/synthetic.hpp"

#include <cmath>
#include <string>

#include "gsp/rng.hpp"

namespace gsp {

std::vector<GeoStation> random_geo_stations(int count, std::uint64_t seed,
                                            double lat_min, double lat_max,
                                            double lon_min, double lon_max) {
  auto gen = make_engine(substream_seed(seed, 0x67656f));
  std::vector<GeoStation> stations;
  stations.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    GeoStation s;
    s.id = "s" + std::to_string(i + 1);
    s.lat = lat_min + (lat_max - lat_min) * uniform_unit(gen);
    s.lon = lon_min + (lon_max - lon_min) * uniform_unit(gen);
    stations.push_back(std::move(s));
  }
  return stations;
}

Signal heat_kernel_signal(const GftBasis& basis, std::uint64_t seed) {
  const int n = basis.size();
  const double lambda_max = n ? basis.lambdas(n - 1) : 0.0;
  const double tau = lambda_max > 0.0 ? 5.0 / lambda_max : 0.0;

  auto gen = make_engine(substream_seed(seed, 0x686561));
  Spectrum coeffs(n);
  for (int i = 0; i < n; ++i)
    coeffs(i) = std::exp(-tau * basis.lambdas(i)) * standard_normal(gen);
  return igft(basis, coeffs);
}

}  // namespace gsp

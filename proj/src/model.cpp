#include "latticefire/model.hpp"

#include <cmath>
#include <stdexcept>

namespace latticefire {

std::int64_t Configuration::total_count() const {
  std::int64_t n = 0;
  for (const auto& [x, c] : counts) n += c;
  return n;
}

std::int64_t Configuration::total_infected() const {
  std::int64_t n = 0;
  for (const auto& [x, c] : infected) n += c;
  return n;
}

std::int64_t initial_count_at(std::uint64_t master_seed, const Site& x,
                              double rho, int d) {
  RngStream s = make_stream(master_seed, StreamPurpose::kInitial,
                            {x[0], x[1], x[2], x[3], d});
  return s.poisson(rho);
}

Configuration sample_initial_configuration(double rho,
                                           const LatticeDomain& domain,
                                           std::uint64_t master_seed) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::invalid_argument("density rho must be positive and finite");
  domain.validate();

  Configuration cfg;
  cfg.domain = domain;
  cfg.time = 0.0;
  const std::int64_t n_sites = domain.site_count();
  for (std::int64_t idx = 0; idx < n_sites; ++idx) {
    const Site x = domain.site_at(idx);
    const std::int64_t c = initial_count_at(master_seed, x, rho, domain.d);
    if (c > 0) cfg.counts[x] = c;
  }
  const Site o = origin_site();
  cfg.counts[o] += 1;  // the extra particle, index eta_0(0) + 1
  cfg.infected[o] = cfg.counts[o];
  return cfg;
}

bool dominance_check(const Configuration& a, const Configuration& b) {
  if (!a.domain.same_geometry(b.domain))
    throw std::invalid_argument("dominance_check: mismatched domains");
  if (a.time != b.time)
    throw std::invalid_argument("dominance_check: mismatched times");
  for (const auto& [x, c] : a.counts) {
    if (c > b.count_at(x)) return false;
  }
  return true;
}

}  // namespace latticefire

#pragma once

#include <cstdint>
#include <map>

#include "latticefire/lattice.hpp"
#include "latticefire/rng.hpp"

namespace latticefire {

// Label (x, n): the n-th particle born at site x. The extra infected particle
// placed at the origin takes index eta_0(0) + 1 so cloud labels are dense.
struct ParticleId {
  Site origin = origin_site();
  std::int32_t index = 1;

  auto operator<=>(const ParticleId&) const = default;
};

// Occupancy snapshot: per-site particle and infected counts at a fixed time.
// Sparse; absent sites are empty.
struct Configuration {
  LatticeDomain domain;
  double time = 0.0;
  std::map<Site, std::int64_t> counts;
  std::map<Site, std::int64_t> infected;

  std::int64_t count_at(const Site& x) const {
    auto it = counts.find(x);
    return it == counts.end() ? 0 : it->second;
  }
  std::int64_t infected_at(const Site& x) const {
    auto it = infected.find(x);
    return it == infected.end() ? 0 : it->second;
  }
  std::int64_t total_count() const;
  std::int64_t total_infected() const;
};

// Initial occupancy of one site, realized as the arrival count of a unit-rate
// process on the density axis. Poisson(rho)-distributed, and monotone in rho
// for a fixed (master_seed, site): raising the density only ever adds
// particles, which is what the density couplings assert pathwise.
std::int64_t initial_count_at(std::uint64_t master_seed, const Site& x,
                              double rho, int d);

// Poisson(rho) cloud over the simulated region plus the extra infected
// particle at the origin; all particles at the origin start infected.
Configuration sample_initial_configuration(double rho,
                                           const LatticeDomain& domain,
                                           std::uint64_t master_seed);

// true iff a.counts(x) <= b.counts(x) for all x. Throws on mismatched
// domains or times.
bool dominance_check(const Configuration& a, const Configuration& b);

}  // namespace latticefire

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace latticefire {

// Dimensions are runtime values but capped so sites stay a flat value type.
inline constexpr int kMaxDim = 4;

// Lattice site. Coordinates beyond the active dimension are zero, so the
// default lexicographic comparison works for any d.
using Site = std::array<std::int32_t, kMaxDim>;

inline Site origin_site() { return Site{0, 0, 0, 0}; }

enum class Boundary { kHalo, kPeriodic };

// Finite window of Z^d. In halo mode the simulated region is the centered
// box of side L + 2*halo_margin and observables are read from the inner box
// of side L; periodic mode wraps a side-L torus and exists for conservation
// and stationarity checks.
struct LatticeDomain {
  int d = 1;
  int L = 16;
  Boundary boundary = Boundary::kHalo;
  int halo_margin = 0;

  int side() const {
    return boundary == Boundary::kHalo ? L + 2 * halo_margin : L;
  }
  // Centered coordinate range [lo, lo+side-1] per axis; always contains 0.
  int lo() const { return -(side() / 2); }
  int hi() const { return lo() + side() - 1; }
  int inner_lo() const { return -(L / 2); }
  int inner_hi() const { return inner_lo() + L - 1; }

  bool contains(const Site& x) const {
    for (int k = 0; k < d; ++k)
      if (x[k] < lo() || x[k] > hi()) return false;
    return true;
  }
  bool in_inner_box(const Site& x) const {
    for (int k = 0; k < d; ++k)
      if (x[k] < inner_lo() || x[k] > inner_hi()) return false;
    return true;
  }
  // Outermost site layer of the simulated region (halo contamination shell).
  bool on_shell(const Site& x) const {
    for (int k = 0; k < d; ++k)
      if (x[k] == lo() || x[k] == hi()) return true;
    return false;
  }

  std::int64_t site_count() const {
    std::int64_t n = 1;
    for (int k = 0; k < d; ++k) n *= side();
    return n;
  }

  // Wraps a coordinate vector onto the simulated region (periodic only).
  Site wrap(Site x) const {
    if (boundary == Boundary::kPeriodic) {
      const int s = side();
      for (int k = 0; k < d; ++k) {
        int v = (x[k] - lo()) % s;
        if (v < 0) v += s;
        x[k] = static_cast<std::int32_t>(v + lo());
      }
    }
    return x;
  }

  // Linear index of an in-region site.
  std::int64_t index_of(const Site& x) const {
    std::int64_t idx = 0;
    for (int k = d - 1; k >= 0; --k) idx = idx * side() + (x[k] - lo());
    return idx;
  }
  Site site_at(std::int64_t idx) const {
    Site x = origin_site();
    for (int k = 0; k < d; ++k) {
      x[k] = static_cast<std::int32_t>(idx % side() + lo());
      idx /= side();
    }
    return x;
  }

  bool same_geometry(const LatticeDomain& o) const {
    return d == o.d && L == o.L && boundary == o.boundary &&
           halo_margin == o.halo_margin;
  }

  void validate() const;
};

std::string site_to_string(const Site& x, int d);

}  // namespace latticefire

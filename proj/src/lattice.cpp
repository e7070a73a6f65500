#include "latticefire/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace latticefire {

void LatticeDomain::validate() const {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("lattice dimension must be in [1, " +
                                std::to_string(kMaxDim) + "]");
  if (L < 1) throw std::invalid_argument("lattice side L must be >= 1");
  if (halo_margin < 0)
    throw std::invalid_argument("halo_margin must be >= 0");
}

std::string site_to_string(const Site& x, int d) {
  std::ostringstream os;
  os << "(";
  for (int k = 0; k < d; ++k) {
    if (k) os << ",";
    os << x[k];
  }
  os << ")";
  return os.str();
}

}  // namespace latticefire

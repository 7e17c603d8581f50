#ifndef FADECAP_WH_GRID_HPP
#define FADECAP_WH_GRID_HPP

namespace fadecap {

/// Rectangular Weyl-Heisenberg lattice: time step T (s), frequency step F (Hz).
/// Orthonormality of the induced WH set requires T*F >= 1.
struct WHGrid {
  double T;
  double F;
  double product() const { return T * F; }
};

}  // namespace fadecap

#endif

#pragma once

#include <iosfwd>

#include "tmsv/fock.hpp"
#include "tmsv/gaussian.hpp"

namespace tmsv {

// Binary regression snapshot, all fields little-endian:
//   int64  nmax
//   int64  partial-transpose flag (0 or 1)
//   double time
//   double gain
//   double loss
//   double elements[(nmax+1)^4], row-major in (n, m, p, q)
struct FockSnapshot {
  FockDensityMatrix state;
  double time = 0.0;
  BathParams bath;
};

void write_snapshot(std::ostream& out, const FockDensityMatrix& state, double time,
                    const BathParams& bath);

FockSnapshot read_snapshot(std::istream& in);

}  // namespace tmsv

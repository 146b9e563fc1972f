// Canal cross-sections and volumes.
//
// A canal is a prism: length x (nindan) times a cross-section S. For a
// trapezoidal section with upper breadth u, lower breadth v (nindan) and
// depth z (kus), S = z (u + v) / 2 in nindan-kus, and V = x S volume-sar.
// The reserved water stands at a fixed fraction of the depth, the canal
// constant, 0;48 for a small canal.

#pragma once

#include "sexakit/sexa.hpp"
#include "sexakit/trace.hpp"
#include "sexakit/units.hpp"

namespace sexakit {

struct TrapezoidCanal {
  Quantity upper_breadth;  // nindan
  Quantity lower_breadth;  // nindan
  Quantity length;         // nindan
  Quantity depth;          // kus

  /// Throws DimensionMismatch, NonPositiveDimension, or
  /// InconsistentConstraint when the upper breadth is below the lower.
  void validate() const;
  Quantity cross_section() const;
  Quantity volume() const;
};

struct RectCanal {
  Quantity length;  // nindan
  Quantity width;   // nindan
  Quantity depth;   // kus

  void validate() const;
  Quantity cross_section() const;
  Quantity volume() const;
};

/// Ratio of the reserved-water depth to the canal depth.
class CanalConstant {
 public:
  /// 0;48, the constant of a small canal.
  CanalConstant();
  /// Throws NonPositiveDimension unless 0 < ratio <= 1.
  explicit CanalConstant(Sexa ratio);

  const Sexa& ratio() const noexcept { return ratio_; }

 private:
  Sexa ratio_;
};

/// S = z (u + v) / 2. Throws NonPositiveDimension, DimensionMismatch.
Quantity trapezoid_cross_section(const Quantity& u, const Quantity& v,
                                 const Quantity& z);

/// V = x S. Throws NonPositiveDimension, DimensionMismatch.
Quantity prism_volume(const Quantity& cross_section, const Quantity& length);

/// V' = ratio * V. Throws NonPositiveDimension for a negative volume.
Quantity reserved_water_volume(const Quantity& volume, const CanalConstant& c);

/// Defaults reproduce the relations between the dimensions of the first
/// canal problem: v = u/2 + 0;30 and z = 12 (0;30 + (u - v)/12).
struct BreadthConstraints {
  Sexa excess = Sexa(1, 2);         // 0;30, added to half the upper breadth
  Sexa excess_share = Sexa(1, 12);  // part of u - v added to the excess
  Sexa depth_factor = Sexa(12);     // kus per nindan of the depth
};

struct BreadthResult {
  Sexa v;
  Sexa z;
  /// half_u, v, breadth_excess, excess_share, depth_base, z.
  StepTrace trace;
};

/// Lower breadth and depth from the upper breadth.
/// Throws NonPositiveDimension (u <= 0) or InconsistentConstraint (u < v).
BreadthResult breadths_from_constraints(const Sexa& u,
                                        const BreadthConstraints& k = {});

/// x = V / S via the reciprocal of S. Throws IrregularDivisorError,
/// NonPositiveDimension, DimensionMismatch.
Quantity length_from_volume(const Quantity& volume, const Quantity& cross_section);

struct LaborDepthResult {
  Quantity depth;        // kus
  Quantity water_depth;  // kus
  /// recip_reach, water_per_length, recip_workers, water_per_worker,
  /// recip_constant, cross_section, recip_breadth, z, z_water.
  StepTrace trace;
};

/// Depth of a rectangular canal dug by a gang of workers, each assigned
/// `reach_length` nindan, given the total reserved water. This follows a
/// restored problem statement (the tablet's own statement is lost):
///   V'0 = V' / reach        water per nindan of length
///   V'1 = V'0 / workers     per worker; equals S', the submerged section
///   S   = S' / ratio
///   z   = S / y,  z' = ratio * z
/// Throws IrregularDivisorError on any division, NonPositiveDimension,
/// DimensionMismatch.
LaborDepthResult depth_from_labor(const Quantity& total_water, const Sexa& reach_length,
                                  const Quantity& worker_count, const Quantity& width,
                                  const CanalConstant& c = CanalConstant());

}  // namespace sexakit

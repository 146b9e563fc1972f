// Babylonian metrology: dimensioned quantities for canal work.
//
// Horizontal lengths are in nindan, depths in kus (cubits, 12 per nindan).
// A volume-sar is 1 nindan x 1 nindan x 1 kus. Cross-sections mix a
// breadth in nindan with a depth in kus and get their own dimension.

#pragma once

#include "sexakit/sexa.hpp"

#include <string>
#include <string_view>

namespace sexakit {

enum class Dimension {
  LengthNindan,
  LengthKus,
  NindanKus,
  AreaSar,
  VolumeSar,
  Dimensionless,
  WorkerCount,
};

/// Unit spelling used in corpus files and CLI output.
std::string_view unit_name(Dimension dim) noexcept;

/// Volume units that appear in counts of earth or water.
enum class VolumeUnit { Sar60, Susi, VolumeSar };

struct Quantity {
  Sexa magnitude;
  Dimension dim = Dimension::Dimensionless;

  /// "<literal> <unit>"; the literal falls back to fraction form when it
  /// does not terminate.
  std::string to_string() const;

  /// Parses "<literal> <unit>" with unit one of
  /// nindan|kus|nindan-kus|sar|volume-sar|sar60|susi|workers|1.
  /// sar60 and susi are scaled to volume-sar. A bare literal is
  /// dimensionless. Throws MalformedLiteral or UnknownUnit.
  static Quantity parse(std::string_view text);

  /// `count` of `unit`, with the unit spellings accepted by parse().
  static Quantity with_unit(const Sexa& count, std::string_view unit);

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

inline Quantity nindan(Sexa v) { return {std::move(v), Dimension::LengthNindan}; }
inline Quantity kus(Sexa v) { return {std::move(v), Dimension::LengthKus}; }
inline Quantity nindan_kus(Sexa v) { return {std::move(v), Dimension::NindanKus}; }
inline Quantity volume_sar(Sexa v) { return {std::move(v), Dimension::VolumeSar}; }
inline Quantity workers(Sexa v) { return {std::move(v), Dimension::WorkerCount}; }
inline Quantity scalar(Sexa v) { return {std::move(v), Dimension::Dimensionless}; }

/// Kus per nindan.
inline const Sexa kKusPerNindan{12};

/// Throws DimensionMismatch unless q.dim == expected.
void require_dim(const Quantity& q, Dimension expected, std::string_view what);

Quantity nindan_to_kus(const Quantity& q);
Quantity kus_to_nindan(const Quantity& q);

/// Counts of sar60 (3600), susi (60) or plain volume-sar. Negative counts
/// throw NonPositiveDimension.
Quantity sar_to_volume_sar(const Sexa& count, VolumeUnit unit);

/// Product under the dimension table:
///   1 x D = D, nindan x nindan = sar, nindan x kus = nindan-kus,
///   nindan-kus x nindan = volume-sar, sar x kus = volume-sar
/// (all symmetric). Throws DimensionMismatch for any other pair.
Quantity qmul(const Quantity& a, const Quantity& b);

/// Exact quotient a / b, for b the divisor of a product in the table,
/// b dimensionless, a and b of equal dimension (gives a dimensionless
/// ratio), or b a worker count (a per-worker share keeps a's dimension).
/// Uses the scribal reciprocal, so an irregular divisor throws.
Quantity qdiv(const Quantity& a, const Quantity& b);

Quantity qadd(const Quantity& a, const Quantity& b);
Quantity qsub(const Quantity& a, const Quantity& b);

}  // namespace sexakit

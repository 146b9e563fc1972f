#include "sexakit/units.hpp"

#include "sexakit/errors.hpp"

#include <array>
#include <optional>
#include <utility>

namespace sexakit {

namespace {

std::optional<Dimension> product_dim(Dimension a, Dimension b) {
  using D = Dimension;
  if (a == D::Dimensionless) return b;
  if (b == D::Dimensionless) return a;
  auto is = [&](D x, D y) { return (a == x && b == y) || (a == y && b == x); };
  if (is(D::LengthNindan, D::LengthNindan)) return D::AreaSar;
  if (is(D::LengthNindan, D::LengthKus)) return D::NindanKus;
  if (is(D::NindanKus, D::LengthNindan)) return D::VolumeSar;
  if (is(D::AreaSar, D::LengthKus)) return D::VolumeSar;
  return std::nullopt;
}

std::optional<Dimension> quotient_dim(Dimension a, Dimension b) {
  if (b == Dimension::Dimensionless) return a;
  if (a == b) return Dimension::Dimensionless;
  if (b == Dimension::WorkerCount) return a;
  constexpr std::array kAll = {
      Dimension::LengthNindan, Dimension::LengthKus, Dimension::NindanKus,
      Dimension::AreaSar,      Dimension::VolumeSar};
  for (Dimension c : kAll) {
    if (product_dim(b, c) == a) return c;
  }
  return std::nullopt;
}

[[noreturn]] void mismatch(std::string_view op, const Quantity& a,
                           const Quantity& b) {
  throw Error(ErrorKind::DimensionMismatch,
              std::string(op) + " of " + std::string(unit_name(a.dim)) +
                  " and " + std::string(unit_name(b.dim)));
}

}  // namespace

std::string_view unit_name(Dimension dim) noexcept {
  switch (dim) {
    case Dimension::LengthNindan: return "nindan";
    case Dimension::LengthKus: return "kus";
    case Dimension::NindanKus: return "nindan-kus";
    case Dimension::AreaSar: return "sar";
    case Dimension::VolumeSar: return "volume-sar";
    case Dimension::Dimensionless: return "1";
    case Dimension::WorkerCount: return "workers";
  }
  return "?";
}

std::string Quantity::to_string() const {
  return magnitude.render_or_fraction() + " " + std::string(unit_name(dim));
}

Quantity Quantity::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::size_t space = text.find_first_of(" \t");
  std::string_view literal = text.substr(0, space);
  std::string_view unit =
      space == std::string_view::npos ? std::string_view("1") : trim(text.substr(space));
  return with_unit(Sexa::parse(literal), unit);
}

Quantity Quantity::with_unit(const Sexa& count, std::string_view unit) {
  if (unit == "sar60") return sar_to_volume_sar(count, VolumeUnit::Sar60);
  if (unit == "susi") return sar_to_volume_sar(count, VolumeUnit::Susi);
  constexpr std::array kDims = {
      Dimension::LengthNindan, Dimension::LengthKus,     Dimension::NindanKus,
      Dimension::AreaSar,      Dimension::VolumeSar,     Dimension::Dimensionless,
      Dimension::WorkerCount};
  for (Dimension d : kDims) {
    if (unit == unit_name(d)) return {count, d};
  }
  throw Error(ErrorKind::UnknownUnit, "'" + std::string(unit) + "'");
}

void require_dim(const Quantity& q, Dimension expected, std::string_view what) {
  if (q.dim != expected) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be in " +
                    std::string(unit_name(expected)) + ", got " +
                    std::string(unit_name(q.dim)));
  }
}

Quantity nindan_to_kus(const Quantity& q) {
  require_dim(q, Dimension::LengthNindan, "nindan_to_kus input");
  return kus(q.magnitude * kKusPerNindan);
}

Quantity kus_to_nindan(const Quantity& q) {
  require_dim(q, Dimension::LengthKus, "kus_to_nindan input");
  return nindan(q.magnitude * reciprocal(kKusPerNindan));
}

Quantity sar_to_volume_sar(const Sexa& count, VolumeUnit unit) {
  if (count.sign() < 0) {
    throw Error(ErrorKind::NonPositiveDimension,
                "negative volume count " + count.render_or_fraction());
  }
  switch (unit) {
    case VolumeUnit::Sar60: return volume_sar(count * Sexa(3600));
    case VolumeUnit::Susi: return volume_sar(count * Sexa(60));
    case VolumeUnit::VolumeSar: return volume_sar(count);
  }
  return volume_sar(count);
}

Quantity qmul(const Quantity& a, const Quantity& b) {
  auto dim = product_dim(a.dim, b.dim);
  if (!dim) mismatch("product", a, b);
  return {a.magnitude * b.magnitude, *dim};
}

Quantity qdiv(const Quantity& a, const Quantity& b) {
  auto dim = quotient_dim(a.dim, b.dim);
  if (!dim) mismatch("quotient", a, b);
  return {a.magnitude * reciprocal(b.magnitude), *dim};
}

Quantity qadd(const Quantity& a, const Quantity& b) {
  if (a.dim != b.dim) mismatch("sum", a, b);
  return {a.magnitude + b.magnitude, a.dim};
}

Quantity qsub(const Quantity& a, const Quantity& b) {
  if (a.dim != b.dim) mismatch("difference", a, b);
  return {a.magnitude - b.magnitude, a.dim};
}

}  // namespace sexakit

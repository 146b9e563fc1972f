#include "sexakit/geometry.hpp"

#include "sexakit/errors.hpp"

#include <string>
#include <utility>

namespace sexakit {

namespace {

void require_positive(const Sexa& v, std::string_view what) {
  if (v.sign() <= 0) {
    throw Error(ErrorKind::NonPositiveDimension,
                std::string(what) + " = " + v.render_or_fraction() + " must be positive");
  }
}

void require_positive(const Quantity& q, Dimension dim, std::string_view what) {
  require_dim(q, dim, what);
  require_positive(q.magnitude, what);
}

}  // namespace

void TrapezoidCanal::validate() const {
  require_positive(upper_breadth, Dimension::LengthNindan, "upper breadth");
  require_positive(lower_breadth, Dimension::LengthNindan, "lower breadth");
  require_positive(length, Dimension::LengthNindan, "length");
  require_positive(depth, Dimension::LengthKus, "depth");
  if (upper_breadth.magnitude < lower_breadth.magnitude) {
    throw Error(ErrorKind::InconsistentConstraint,
                "upper breadth " + upper_breadth.to_string() + " is below lower breadth " +
                    lower_breadth.to_string());
  }
}

Quantity TrapezoidCanal::cross_section() const {
  validate();
  return trapezoid_cross_section(upper_breadth, lower_breadth, depth);
}

Quantity TrapezoidCanal::volume() const { return prism_volume(cross_section(), length); }

void RectCanal::validate() const {
  require_positive(length, Dimension::LengthNindan, "length");
  require_positive(width, Dimension::LengthNindan, "width");
  require_positive(depth, Dimension::LengthKus, "depth");
}

Quantity RectCanal::cross_section() const {
  validate();
  return qmul(width, depth);
}

Quantity RectCanal::volume() const { return prism_volume(cross_section(), length); }

CanalConstant::CanalConstant() : ratio_(Sexa(4, 5)) {}

CanalConstant::CanalConstant(Sexa ratio) : ratio_(std::move(ratio)) {
  if (ratio_.sign() <= 0 || ratio_ > Sexa(1)) {
    throw Error(ErrorKind::NonPositiveDimension,
                "canal constant " + ratio_.render_or_fraction() + " outside (0, 1]");
  }
}

Quantity trapezoid_cross_section(const Quantity& u, const Quantity& v, const Quantity& z) {
  require_positive(u, Dimension::LengthNindan, "upper breadth");
  require_positive(v, Dimension::LengthNindan, "lower breadth");
  require_positive(z, Dimension::LengthKus, "depth");
  Quantity half_sum = nindan(halve(u.magnitude + v.magnitude));
  return qmul(half_sum, z);
}

Quantity prism_volume(const Quantity& cross_section, const Quantity& length) {
  require_positive(cross_section, Dimension::NindanKus, "cross-section");
  require_positive(length, Dimension::LengthNindan, "length");
  return qmul(length, cross_section);
}

Quantity reserved_water_volume(const Quantity& volume, const CanalConstant& c) {
  require_dim(volume, Dimension::VolumeSar, "volume");
  if (volume.magnitude.sign() < 0) {
    throw Error(ErrorKind::NonPositiveDimension,
                "volume " + volume.to_string() + " is negative");
  }
  return volume_sar(c.ratio() * volume.magnitude);
}

BreadthResult breadths_from_constraints(const Sexa& u, const BreadthConstraints& k) {
  require_positive(u, "upper breadth");
  BreadthResult out;
  StepTrace& t = out.trace;
  Sexa half_u = t.record("half_u", nindan(halve(u)));
  out.v = t.record("v", nindan(half_u + k.excess));
  if (u < out.v) {
    throw Error(ErrorKind::InconsistentConstraint,
                "upper breadth " + u.render_or_fraction() + " is below lower breadth " +
                    out.v.render_or_fraction());
  }
  Sexa breadth_excess = t.record("breadth_excess", nindan(u - out.v));
  Sexa share = t.record("excess_share", nindan(k.excess_share * breadth_excess));
  Sexa base = t.record("depth_base", nindan(k.excess + share));
  out.z = t.record("z", kus(k.depth_factor * base));
  return out;
}

Quantity length_from_volume(const Quantity& volume, const Quantity& cross_section) {
  require_positive(volume, Dimension::VolumeSar, "volume");
  require_positive(cross_section, Dimension::NindanKus, "cross-section");
  return qdiv(volume, cross_section);
}

LaborDepthResult depth_from_labor(const Quantity& total_water, const Sexa& reach_length,
                                  const Quantity& worker_count, const Quantity& width,
                                  const CanalConstant& c) {
  require_positive(total_water, Dimension::VolumeSar, "total water");
  require_positive(reach_length, "reach length");
  require_positive(worker_count, Dimension::WorkerCount, "workers");
  require_positive(width, Dimension::LengthNindan, "width");

  LaborDepthResult out;
  StepTrace& t = out.trace;
  Sexa recip_reach = t.record("recip_reach", reciprocal(reach_length));
  Sexa per_length =
      t.record("water_per_length", nindan_kus(recip_reach * total_water.magnitude));
  Sexa recip_workers = t.record("recip_workers", reciprocal(worker_count.magnitude));
  // One worker's share over one nindan of length is the submerged section S'.
  Sexa submerged = t.record("water_per_worker", nindan_kus(recip_workers * per_length));
  Sexa recip_constant = t.record("recip_constant", reciprocal(c.ratio()));
  Sexa section = t.record("cross_section", nindan_kus(recip_constant * submerged));
  Sexa recip_breadth = t.record("recip_breadth", reciprocal(width.magnitude));
  out.depth = kus(t.record("z", kus(recip_breadth * section)));
  out.water_depth = kus(t.record("z_water", kus(c.ratio() * out.depth.magnitude)));
  return out;
}

}  // namespace sexakit

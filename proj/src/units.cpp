#include "ncg/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ncg {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw std::invalid_argument(std::string("physical constant '") + name +
                                "' must be a finite positive number, got " +
                                std::to_string(value));
  }
}

}  // namespace

PhysicalUnits::PhysicalUnits(double charge, double field, double light_speed,
                             double hbar, double mass)
    : charge_(charge),
      field_(field),
      light_speed_(light_speed),
      hbar_(hbar),
      mass_(mass) {
  require_positive(charge, "e");
  require_positive(field, "B");
  require_positive(light_speed, "c");
  require_positive(hbar, "hbar");
  require_positive(mass, "m");
}

PhysicalUnits PhysicalUnits::with_field(double field) const {
  return PhysicalUnits(charge_, field, light_speed_, hbar_, mass_);
}

double magnetic_length_squared(const PhysicalUnits& u) {
  return u.hbar() * u.light_speed() / (u.charge() * u.field());
}

double magnetic_length(const PhysicalUnits& u) {
  return std::sqrt(magnetic_length_squared(u));
}

double cyclotron_frequency(const PhysicalUnits& u) {
  return u.charge() * u.field() / (u.mass() * u.light_speed());
}

}  // namespace ncg

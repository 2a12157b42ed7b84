#pragma once

namespace ncg {

/// Physical constants of the charged particle and field. All five are
/// strictly positive and mutually consistent; the engine never converts
/// between unit systems. Default-constructed units are dimensionless
/// (e = B = c = hbar = m = 1), which makes the magnetic length and the
/// cyclotron frequency both 1.
class PhysicalUnits {
 public:
  PhysicalUnits() = default;

  /// Throws std::invalid_argument naming the first nonpositive or
  /// non-finite constant.
  PhysicalUnits(double charge, double field, double light_speed, double hbar,
                double mass);

  static PhysicalUnits natural() { return {}; }

  double charge() const { return charge_; }
  double field() const { return field_; }
  double light_speed() const { return light_speed_; }
  double hbar() const { return hbar_; }
  double mass() const { return mass_; }

  PhysicalUnits with_field(double field) const;

  friend bool operator==(const PhysicalUnits&, const PhysicalUnits&) = default;

 private:
  double charge_ = 1.0;
  double field_ = 1.0;
  double light_speed_ = 1.0;
  double hbar_ = 1.0;
  double mass_ = 1.0;
};

/// hbar c / (e B): the magnitude of the lowest-level coordinate commutator.
double magnetic_length_squared(const PhysicalUnits& u);

/// sqrt(hbar c / (e B)).
double magnetic_length(const PhysicalUnits& u);

/// e B / (m c). Landau levels are spaced by hbar times this.
double cyclotron_frequency(const PhysicalUnits& u);

}  // namespace ncg

#ifndef KNOTQUBIT_PHYS_PARAMS_HPP
#define KNOTQUBIT_PHYS_PARAMS_HPP

namespace knotqubit {

// Physical constants of the problem.  The defaults give the natural unit
// system hbar = 1, m = 1/2, so hbar^2/2m = 1 and a free particle with wave
// number q has E = q^2.  All plotted parameters in the reference device
// configurations plug in verbatim in these units.
struct PhysParams {
  double hbar = 1.0;
  double mass = 0.5;
  double charge = 1.0;
  double boltzmann = 1.0;

  // hbar^2 / 2m, the kinetic prefactor that multiplies -psi''.
  double kinetic_factor() const { return hbar * hbar / (2.0 * mass); }

  static PhysParams natural() { return PhysParams{}; }

  // SI units for an electron-mass carrier; lengths in meters, energies in
  // joules, temperatures in kelvin.
  static PhysParams physical_electron() {
    PhysParams p;
    p.hbar = 1.054571817e-34;
    p.mass = 9.1093837015e-31;
    p.charge = 1.602176634e-19;
    p.boltzmann = 1.380649e-23;
    return p;
  }
};

}  // namespace knotqubit

#endif  // KNOTQUBIT_PHYS_PARAMS_HPP

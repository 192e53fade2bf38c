#pragma once

#include <stdexcept>

// Unit conventions used throughout the engine:
//   length in 1/k with k = 2*pi/lambda (the coordinate is u = k*x),
//   energy in recoil units E_r = h^2/(2 m lambda^2),
//   time in hbar/E_r, angular frequency in E_r/hbar.
// Plane-wave kinetic energies are then exactly n^2 E_r.

namespace dwf {

inline constexpr double kPlanck = 6.62607015e-34;           // J s (exact)
inline constexpr double kAtomicMassUnit = 1.66053906660e-27; // kg
inline constexpr double kArgon40MassU = 39.9623831237;       // u, 40Ar

struct RecoilEnergy {
    double joules;
    double hertz;  // E_r / h
};

// E_r = h^2 / (2 m lambda^2) and its frequency equivalent E_r/h.
inline RecoilEnergy recoil_energy(double wavelength_m, double mass_kg)
{
    if (!(wavelength_m > 0.0) || !(mass_kg > 0.0))
        throw std::invalid_argument("recoil_energy: wavelength and mass must be positive");
    const double er = kPlanck * kPlanck
        / (2.0 * mass_kg * wavelength_m * wavelength_m);
    return {er, er / kPlanck};
}

struct UnitSystem {
    double wavelength_m;
    double particle_mass_kg;

    RecoilEnergy recoil() const { return recoil_energy(wavelength_m, particle_mass_kg); }

    // dimensionless angular frequency hbar*omega/E_r for a drive at nu_d Hz (omega = 2*pi*nu_d)
    double omega_from_frequency_hz(double nu_d) const { return nu_d / recoil().hertz; }
};

// The experiment's units: metastable 40Ar at lambda = 811.775 nm.
inline UnitSystem argon_units()
{
    return {811.775e-9, kArgon40MassU * kAtomicMassUnit};
}

}  // namespace dwf

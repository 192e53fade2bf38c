#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace dwf {

// Static bichromatic double well, dimensionless form (u = k*x, energies in E_r):
//   V(u) = v1 cos^2(u) + v2 cos^2(u/2 + phi_s/2)
// One cell spans u in [-pi, pi). With phi_s = 0 the two wells sit near u = +-pi/2,
// separated by barriers v1+v2 (at u = 0) and v1 (at u = +-pi).
struct LatticeParams {
    double v1 = 0.0;    // depth of the lambda/2 lattice (E_r)
    double v2 = 0.0;    // depth of the lambda lattice (E_r)
    double phi_s = 0.0; // spatial asymmetry phase of the long lattice (rad)

    LatticeParams() = default;
    LatticeParams(double v1_, double v2_, double phi = 0.0) : v1(v1_), v2(v2_), phi_s(phi)
    {
        if (v1 < 0.0 || v2 < 0.0)
            throw std::invalid_argument("LatticeParams: lattice depths must be nonnegative");
    }
};

double static_potential(const LatticeParams& p, double u);

// One Fourier component of a drive waveform: amplitude * sin(index * omega_d * t + phase).
struct Harmonic {
    int index;
    double amplitude;
    double phase = 0.0;
};

enum class Waveform { Sine, SawtoothFourier, CustomFourier };

// Time dependence f(t) of the drive plus its strength. Built-in waveforms are
// normalized so max|f| = 1; the amplitude lives entirely in S.
class DriveSpec {
public:
    static DriveSpec sine(double amplitude_s, double omega_d);
    // Band-limited sawtooth: f = N * sum_{m=1..M} (-1)^{m+1} sin(m w t)/m, N fixes max|f| = 1.
    static DriveSpec sawtooth(double amplitude_s, double omega_d, int harmonic_count = 5);
    // User-specified harmonics, not renormalized.
    static DriveSpec custom(double amplitude_s, double omega_d, std::vector<Harmonic> harmonics);

    double value(double t) const;  // f(t)
    double period() const { return 2.0 * pi_ / omega_d; }

    // Complex Fourier coefficients f_q with f(t) = sum_q f_q exp(i q w t), q in [-q_max, q_max].
    std::vector<std::complex<double>> fourier_coefficients(int q_max) const;

    Waveform waveform() const { return waveform_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }

    double amplitude_s = 0.0;  // S (E_r)
    double omega_d = 0.0;      // hbar*omega_d/E_r

private:
    DriveSpec(Waveform w, double s, double om, std::vector<Harmonic> h);

    static constexpr double pi_ = 3.14159265358979323846;
    Waveform waveform_;
    std::vector<Harmonic> harmonics_;  // with normalization folded into amplitudes
};

// RMS of f(t+T/2) + f(t) over one period; zero iff the drive is half-period antisymmetric.
double symmetry_defect(const DriveSpec& spec);

// How the time-dependent potential is formed.
//   Linearized: V_static(u) + S sin(u) f(t).
//   Exact: V1 cos^2(u) + V2 cos^2((u + k*x0) cos(pi/3 + eps f(t)) + phi_s/2), evaluated at a
//   cell x0 = offset_cells * lambda from the mirror (integer cells keep the static limit
//   compensated). The angle modulation acts on the long lattice as a phase slip ~ eps*k*x0.
struct DriveForm {
    enum class Mode { Linearized, Exact };

    static DriveForm linearized() { return {Mode::Linearized, 0.0, 148}; }
    static DriveForm exact(double eps, int offset_cells = 148)
    {
        return {Mode::Exact, eps, offset_cells};
    }

    Mode mode = Mode::Linearized;
    double epsilon = 0.0;  // angle deviation amplitude (rad), Exact mode only
    int offset_cells = 148;
};

// Exact-form potential at drive value f (dimensionless instantaneous f(t)).
double exact_potential(const LatticeParams& p, const DriveForm& form, double u, double f);

double total_potential(const LatticeParams& p, const DriveForm& form, const DriveSpec& spec,
                       double u, double t);

// Best-fit coefficient of sin(u) in dV/d(eps) at eps = 0 (the S <-> eps calibration):
// S(eps) = drive_coefficient_per_epsilon(...) * eps.
double drive_coefficient_per_epsilon(const LatticeParams& p, int offset_cells = 148);

}  // namespace dwf

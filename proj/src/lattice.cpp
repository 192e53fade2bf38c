#include "dwf/lattice.hpp"

#include <cmath>
#include <numbers>

namespace dwf {

namespace {
constexpr double kPi = std::numbers::pi;
}

double static_potential(const LatticeParams& p, double u)
{
    const double c1 = std::cos(u);
    const double c2 = std::cos(0.5 * u + 0.5 * p.phi_s);
    return p.v1 * c1 * c1 + p.v2 * c2 * c2;
}

DriveSpec::DriveSpec(Waveform w, double s, double om, std::vector<Harmonic> h)
    : amplitude_s(s), omega_d(om), waveform_(w), harmonics_(std::move(h))
{
    if (!(omega_d > 0.0))
        throw std::invalid_argument("DriveSpec: omega_d must be positive");
    if (amplitude_s < 0.0)
        throw std::invalid_argument("DriveSpec: amplitude_s must be nonnegative");
    if (harmonics_.empty())
        throw std::invalid_argument("DriveSpec: drive needs at least one harmonic");
    for (const auto& hm : harmonics_)
        if (hm.index < 1)
            throw std::invalid_argument("DriveSpec: harmonic indices must be >= 1");
}

DriveSpec DriveSpec::sine(double s, double om)
{
    return DriveSpec(Waveform::Sine, s, om, {{1, 1.0, 0.0}});
}

DriveSpec DriveSpec::sawtooth(double s, double om, int harmonic_count)
{
    if (harmonic_count < 1)
        throw std::invalid_argument("DriveSpec::sawtooth: harmonic_count must be >= 1");
    std::vector<Harmonic> h;
    h.reserve(static_cast<std::size_t>(harmonic_count));
    for (int m = 1; m <= harmonic_count; ++m)
        h.push_back({m, (m % 2 == 1 ? 1.0 : -1.0) / m, 0.0});
    DriveSpec spec(Waveform::SawtoothFourier, s, om, std::move(h));
    // fix max|f| = 1 on a dense phase grid
    double fmax = 0.0;
    const int n = 8192;
    for (int i = 0; i < n; ++i)
        fmax = std::max(fmax, std::abs(spec.value(i * spec.period() / n)));
    for (auto& hm : spec.harmonics_)
        hm.amplitude /= fmax;
    return spec;
}

DriveSpec DriveSpec::custom(double s, double om, std::vector<Harmonic> harmonics)
{
    return DriveSpec(Waveform::CustomFourier, s, om, std::move(harmonics));
}

double DriveSpec::value(double t) const
{
    const double wt = omega_d * t;
    double f = 0.0;
    for (const auto& h : harmonics_)
        f += h.amplitude * std::sin(h.index * wt + h.phase);
    return f;
}

std::vector<std::complex<double>> DriveSpec::fourier_coefficients(int q_max) const
{
    // A sin(m w t + theta) = (A/2i) e^{i theta} e^{imwt} - (A/2i) e^{-i theta} e^{-imwt}
    std::vector<std::complex<double>> fq(static_cast<std::size_t>(2 * q_max + 1), 0.0);
    const std::complex<double> inv2i(0.0, -0.5);
    for (const auto& h : harmonics_) {
        if (h.index > q_max)
            continue;
        const std::complex<double> c = h.amplitude * inv2i
            * std::exp(std::complex<double>(0.0, h.phase));
        fq[static_cast<std::size_t>(q_max + h.index)] += c;
        fq[static_cast<std::size_t>(q_max - h.index)] += std::conj(c);
    }
    return fq;
}

double symmetry_defect(const DriveSpec& spec)
{
    const int n = 4096;
    const double T = spec.period();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = i * T / n;
        const double d = spec.value(t + 0.5 * T) + spec.value(t);
        acc += d * d;
    }
    return std::sqrt(acc / n);
}

double exact_potential(const LatticeParams& p, const DriveForm& form, double u, double f)
{
    if (form.mode != DriveForm::Mode::Exact)
        throw std::invalid_argument("exact_potential: form is not Exact");
    const double x0k = 2.0 * kPi * form.offset_cells;
    const double c1 = std::cos(u);
    const double arg = (x0k + u) * std::cos(kPi / 3.0 + form.epsilon * f) + 0.5 * p.phi_s;
    const double c2 = std::cos(arg);
    return p.v1 * c1 * c1 + p.v2 * c2 * c2;
}

double total_potential(const LatticeParams& p, const DriveForm& form, const DriveSpec& spec,
                       double u, double t)
{
    if (form.mode == DriveForm::Mode::Linearized)
        return static_potential(p, u) + spec.amplitude_s * std::sin(u) * spec.value(t);
    return exact_potential(p, form, u, spec.value(t));
}

double drive_coefficient_per_epsilon(const LatticeParams& p, int offset_cells)
{
    // central difference of the exact form in eps, projected onto sin(u) over one cell
    const DriveForm fp = DriveForm::exact(1e-6, offset_cells);
    const DriveForm fm = DriveForm::exact(-1e-6, offset_cells);
    const int n = 4096;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = -kPi + (i + 0.5) * 2.0 * kPi / n;
        const double g = (exact_potential(p, fp, u, 1.0) - exact_potential(p, fm, u, 1.0))
            / (2.0 * 1e-6);
        const double s = std::sin(u);
        num += g * s;
        den += s * s;
    }
    return num / den;
}

}  // namespace dwf

#pragma once

#include <Eigen/Dense>

#include "dwf/lattice.hpp"

namespace dwf {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Plane waves exp(i n u)/sqrt(2 pi) over one lambda-cell u in [-pi, pi),
// n in [-n_max, n_max] (the q = 0 Bloch sector).
struct PlaneWaveBasis {
    int n_max = 32;

    PlaneWaveBasis() = default;
    explicit PlaneWaveBasis(int nmax) : n_max(nmax)
    {
        if (n_max < 8)
            throw std::invalid_argument("PlaneWaveBasis: n_max must be >= 8");
    }

    int dim() const { return 2 * n_max + 1; }
    int row_of(int n) const { return n + n_max; }
    int n_of(int row) const { return row - n_max; }
};

// H = p^2 + V in the plane-wave basis. Diagonal n^2 + (v1+v2)/2, v1 couples
// n <-> n+-2 with v1/4, v2 couples n <-> n+-1 with (v2/4) e^{-+ i phi_s}.
Matrix static_hamiltonian(const LatticeParams& p, const PlaneWaveBasis& basis);

// <m| sin u |n> = (delta_{m,n+1} - delta_{m,n-1}) / (2i)
Matrix sin_u_matrix(const PlaneWaveBasis& basis);

// spatial parity u -> -u, i.e. n -> -n
Matrix parity_matrix(const PlaneWaveBasis& basis);

// Drive part of the exact form, W(u, f) = V_exact(u, f) - V_static(u), projected on the
// plane-wave cell. Entries are evaluated from closed-form integrals of u^p cos u, u^p sin u
// (the incommensurate long-lattice argument expanded around c = 1, exact to ~1e-14 for the
// small angle deviations the exact mode describes).
class ExactDriveOperator {
public:
    ExactDriveOperator(const LatticeParams& p, const DriveForm& form,
                       const PlaneWaveBasis& basis);

    // W matrix at instantaneous drive value f = f(t)
    Matrix at(double f) const;

    // brute-force quadrature of the same matrix, for validation
    Matrix at_quadrature(double f, int grid_points = 8192) const;

private:
    LatticeParams params_;
    DriveForm form_;
    PlaneWaveBasis basis_;
    double x0k_;
    // projected matrices of u^p cos(u) and u^p sin(u), p = 0..3
    Matrix ucos_[4];
    Matrix usin_[4];
    Matrix static_long_;  // cos(u + phi_s) matrix (the v2 oscillatory part of the static limit)
};

}  // namespace dwf

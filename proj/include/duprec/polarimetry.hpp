// SPDX-License-Identifier: Apache-2.0
//
// duprec - FDD duplex antenna pattern reciprocity analysis
// Copyright (C) 2026 duprec project contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DUPREC_POLARIMETRY_HPP
#define DUPREC_POLARIMETRY_HPP

#include <complex>
#include <vector>

#include "duprec/pattern.hpp"

namespace duprec
{
    enum class RotationSense { linear, co, cross };

    // Polarization-ellipse state of a dual-polarized field sample. The help angle
    // alpha = atan(|E_theta|/|E_phi|) and the phase difference delta = arg(E_theta) -
    // arg(E_phi) determine the ellipse tilt via tan(2*tilt) = tan(2*alpha)*cos(delta)
    // and the eccentricity angle via sin(2*chi) = sin(2*alpha)*sin(delta). chi = 0 is
    // linear polarization, chi = +/-45° circular; its sign carries the rotation sense.
    struct PolarizationState
    {
        double alpha_deg = 0.0; // [0, 90]
        double delta_deg = 0.0; // (-180, 180]
        double tilt_deg = 0.0;  // ellipse tilt, [0, 180)
        double chi_deg = 0.0;   // [-45, 45]
        RotationSense sense = RotationSense::linear;
    };

    std::string to_string(RotationSense s);

    // Throws when both field components are zero.
    PolarizationState ellipse_state(std::complex<double> e_theta, std::complex<double> e_phi);

    // Polarization loss factor |E1 . conj(E2)|^2 between two polarization vectors
    // [E_phi; E_theta]; inputs are normalized internally, so eta is in [0, 1] and
    // identical states give 1. Throws on zero vectors.
    double plf(std::complex<double> e_theta1, std::complex<double> e_phi1,
               std::complex<double> e_theta2, std::complex<double> e_phi2);

    // Max-envelope regression of the eccentricity difference against the tilt
    // difference: per-node dpsi = |alpha_UL - alpha_DL| and dchi = |chi_UL - chi_DL|
    // are binned in dpsi, the per-bin max dchi is fit by ordinary least squares with
    // intercept, and the Pearson correlation of the binned pairs is reported.
    struct BoundFitReport
    {
        double gamma_fit = 0.0; // regression slope
        double rho_fit = 0.0;   // Pearson correlation of the binned pairs
        std::vector<double> bin_delta_psi_deg;     // non-empty bin centers
        std::vector<double> bin_max_delta_chi_deg; // max dchi per bin
    };

    // Throws when fewer than 3 bins are populated (degenerate scatter).
    BoundFitReport chi_bound_fit(const Pattern &ul, const Pattern &dl, const Region &region,
                                 double bin_width_deg = 2.0);

    // Per-node scatter sample behind the bound fit and the PLF comparison plots.
    struct PolarizationScatter
    {
        std::vector<std::uint32_t> nodes;
        std::vector<double> delta_psi_deg;
        std::vector<double> delta_chi_deg;
        std::vector<double> eta; // PLF between the UL and DL states
        std::vector<bool> co_rotating;
    };

    PolarizationScatter polarization_scatter(const Pattern &ul, const Pattern &dl, const Region &region);

} // namespace duprec

#endif

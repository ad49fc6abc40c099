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

#ifndef DUPREC_FOOTPRINT_HPP
#define DUPREC_FOOTPRINT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "duprec/grid.hpp"

namespace duprec
{
    // Circular quasi-Laplacian scattering-cluster footprint on the unit sphere.
    //
    // The construction starts from the 20-ray equal-power cluster layout of the 3GPP
    // TR 38.901 channel model (Table 7.5-3, rms azimuth spread normalized to 1°),
    // scaled by the relative spread sigma_rel. The ray density is matched by a
    // truncated Laplacian in azimuth, ported to a rotation-symmetric exp(-sqrt(r))
    // radial profile on the sphere, truncated at the extreme ray offset and weighted
    // by the grid quadrature areas. sigma_rel = 15 gives a footprint diameter of
    // roughly 60°; above sigma_rel = 49 the footprint crosses the hemisphere and the
    // circular construction loses its meaning, so such spreads are rejected.

    namespace footprint_model
    {
        constexpr int n_rays = 20;
        constexpr int n_midpoints = n_rays - 1;
        constexpr double sigma_nom_deg = 1.0;          // nominal azimuth spread of the ray table
        constexpr double max_nominal_offset_deg = 2.1551;
        constexpr double nu = 1.32;                    // Laplacian shape-match factor
        constexpr double beta_l = 2.29;                // radial-profile scale factor
        constexpr double max_sigma_rel = 49.0;         // hemispherical validity limit
    }

    struct FootprintSpec
    {
        double sigma_rel = 15.0;
        double center_theta_deg = 90.0;
        double center_phi_deg = 0.0;

        double truncation_radius_deg() const; // r_0 = sigma_rel * 2.1551°
        double chord_radius() const;          // r_0_3D = sqrt(2*(1 - cos r_0))
    };

    struct FootprintDensity
    {
        std::vector<std::uint32_t> nodes; // member node indices, ascending
        std::vector<double> p_s;          // probability per member, sums to 1
        std::vector<double> arc_deg;      // great-circle distance to the center per member
        bool truncated = false;           // footprint reaches past the grid theta limit
    };

    // 1D azimuth profile sampled at the 19 ray midpoints, numerically normalized to
    // unit sum (the paper's g/sum(g) convention).
    struct AzimuthProfile
    {
        std::vector<double> phi_deg;
        std::vector<double> density;
    };

    // The 20 ray offsets scaled by sigma_rel, sorted ascending; symmetric about 0.
    std::array<double, footprint_model::n_rays> ray_offsets(double sigma_rel);

    // Ray-density pdf at the 19 midpoints: g(phi_m) = 1/(phi_{n+1} - phi_n).
    AzimuthProfile numeric_pdf(double sigma_rel);

    // Truncated-Laplacian scale b_hat = (sigma_rel*sigma_nom/sqrt(2)) * nu.
    double laplacian_b_hat(double sigma_rel);

    // exp(-|phi|/b_hat) sampled at the midpoints, unit-sum normalized.
    AzimuthProfile continuous_laplacian(double sigma_rel);

    // Radial scale b_2D = b_hat / (beta_l * sqrt(sigma_rel)).
    double footprint_b_2d(double sigma_rel);

    // Unnormalized radial profile exp(-sqrt(r)/b_2D) for r <= r_0, else 0 (r in deg).
    double radial_profile_2d(double sigma_rel, double r_deg);

    // Azimuth marginal of the 2D disc profile: line integral over theta_2D at each
    // midpoint (midpoint rule, 0.05°*sigma_rel step), unit-sum normalized.
    AzimuthProfile integrated_profile_2d(double sigma_rel);

    // Azimuth marginal of the 3D spherical profile for an equator-centered footprint,
    // integrated over theta with the sin(theta) area element; unit-sum normalized.
    AzimuthProfile integrated_profile_3d(double sigma_rel);

    // Builds the area-weighted footprint density on a grid. Membership uses the 3D
    // chord distance from the Cartesian center; p_s = g_3D*dA / sum(g_3D*dA).
    // Throws for sigma_rel outside (0, 49] and when no grid node falls inside.
    FootprintDensity build_footprint(const SphericalGrid &grid, const AreaWeights &weights,
                                     const FootprintSpec &spec);

    // Uniform-disc variant (equal density over the member nodes, still area weighted).
    // Extra beyond the quasi-Laplacian shape; kept for spread-scaled comparisons.
    FootprintDensity build_footprint_uniform(const SphericalGrid &grid, const AreaWeights &weights,
                                             const FootprintSpec &spec);

} // namespace duprec

#endif

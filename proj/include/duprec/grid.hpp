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

#ifndef DUPREC_GRID_HPP
#define DUPREC_GRID_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace duprec
{
    constexpr double pi = 3.14159265358979323846;

    inline double deg2rad(double deg) { return deg * (pi / 180.0); }
    inline double rad2deg(double rad) { return rad * (180.0 / pi); }

    // Regular (theta, phi) grid on the unit sphere in the usual spherical convention:
    // inclination theta in [0°, 180°] measured from the +z pole, azimuth phi in [0°, 360°).
    // Poles are stored as single logical nodes (phi degenerate). Grids may be truncated
    // at theta_max (measurement limit); the truncation drops the 180° cap entirely.
    //
    // Node ordering is fixed: north pole (theta = 0°) first, then rings in ascending
    // theta, each ring in ascending phi, then the south pole (theta = 180°) if present.
    class SphericalGrid
    {
    public:
        double delta_theta_deg = 0.0; // theta spacing, must divide 180°
        double delta_phi_deg = 0.0;   // phi spacing, must divide 360°
        double theta_max_deg = 180.0; // measurement limit, grid covers theta in [0°, theta_max]

        std::vector<double> theta_nodes_deg; // distinct theta values: 0, dt, ..., theta_max
        std::vector<double> phi_nodes_deg;   // distinct phi values: 0, dp, ..., 360 - dp

        SphericalGrid() = default;

        bool has_north_pole() const { return !theta_nodes_deg.empty() && theta_nodes_deg.front() == 0.0; }
        bool has_south_pole() const { return !theta_nodes_deg.empty() && theta_nodes_deg.back() == 180.0; }

        std::size_t n_phi() const { return phi_nodes_deg.size(); }
        std::size_t n_rings() const; // interior theta rings, poles excluded
        std::size_t n_nodes() const;

        // Per-node angles; pole nodes report phi = 0°.
        double node_theta_deg(std::size_t node) const;
        double node_phi_deg(std::size_t node) const;
        bool node_is_pole(std::size_t node) const;

        // Index of the node at (theta_nodes_deg[it], phi_nodes_deg[ip]); for pole
        // thetas any ip maps to the single pole node.
        std::size_t node_index(std::size_t it, std::size_t ip) const;

        // true when both grids have identical spacings, limits and node sets
        bool same_layout(const SphericalGrid &other) const;
    };

    // Per-node quadrature weights in steradians. Interior nodes carry the ring area
    // element sin(theta)*dtheta*dphi; each pole carries the tuned cap area
    // (cap_gamma/2)*2*pi*(1-cos(dtheta/2)). The full-sphere sum reproduces 4*pi to a
    // relative error of order 1e-6 for 3° and 15° spacings.
    struct AreaWeights
    {
        std::vector<double> steradians; // one weight per grid node

        double total() const;
    };

    // Pole cap tuning factor; calibrated so the full-sphere weight sum matches 4*pi.
    constexpr double cap_gamma = 1.337;

    // Spherical region of investigation: a closed theta interval and a phi interval
    // [phi_lo, phi_hi) that defaults to the full circle. Named constructors cover the
    // two regions used throughout: the measured sphere and the girdle just above the
    // horizontal plane (elevation 0°..30°, i.e. theta 60°..90°).
    struct Region
    {
        double theta_lo_deg = 0.0;
        double theta_hi_deg = 180.0;
        double phi_lo_deg = 0.0;
        double phi_hi_deg = 360.0;
        std::string name = "sphere";

        static Region full_measured(double theta_max_deg = 180.0);
        static Region girdle();
        static Region custom(double theta_lo_deg, double theta_hi_deg,
                             double phi_lo_deg = 0.0, double phi_hi_deg = 360.0);

        bool contains(double theta_deg, double phi_deg) const;
    };

    // Throws std::invalid_argument when spacings do not divide 180°/360° or theta_max
    // is out of (0°, 180°].
    SphericalGrid build_grid(double delta_theta_deg, double delta_phi_deg, double theta_max_deg = 180.0);

    AreaWeights area_weights(const SphericalGrid &grid);

    // Boolean inclusion per node; pole nodes are included when their theta lies in the
    // region's theta interval. Throws when no node falls inside the region.
    std::vector<bool> region_mask(const SphericalGrid &grid, const Region &region);

} // namespace duprec

#endif

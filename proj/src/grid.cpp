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

#include "duprec/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace duprec
{
    static constexpr double angle_eps = 1e-9; // tolerance for angle/node comparisons in degrees

    std::size_t SphericalGrid::n_rings() const
    {
        std::size_t n = theta_nodes_deg.size();
        if (has_north_pole())
            --n;
        if (has_south_pole())
            --n;
        return n;
    }

    std::size_t SphericalGrid::n_nodes() const
    {
        return n_rings() * n_phi() + (has_north_pole() ? 1 : 0) + (has_south_pole() ? 1 : 0);
    }

    double SphericalGrid::node_theta_deg(std::size_t node) const
    {
        if (has_north_pole())
        {
            if (node == 0)
                return 0.0;
            --node;
        }
        std::size_t ring = node / n_phi();
        if (ring < n_rings())
            return theta_nodes_deg[ring + (has_north_pole() ? 1 : 0)];
        return 180.0; // south pole
    }

    double SphericalGrid::node_phi_deg(std::size_t node) const
    {
        if (has_north_pole())
        {
            if (node == 0)
                return 0.0;
            --node;
        }
        std::size_t ring = node / n_phi();
        if (ring < n_rings())
            return phi_nodes_deg[node % n_phi()];
        return 0.0; // south pole
    }

    bool SphericalGrid::node_is_pole(std::size_t node) const
    {
        if (has_north_pole() && node == 0)
            return true;
        return has_south_pole() && node + 1 == n_nodes();
    }

    std::size_t SphericalGrid::node_index(std::size_t it, std::size_t ip) const
    {
        double theta = theta_nodes_deg.at(it);
        if (theta == 0.0)
            return 0;
        if (theta == 180.0)
            return n_nodes() - 1;
        std::size_t ring = it - (has_north_pole() ? 1 : 0);
        return (has_north_pole() ? 1 : 0) + ring * n_phi() + ip;
    }

    bool SphericalGrid::same_layout(const SphericalGrid &other) const
    {
        return delta_theta_deg == other.delta_theta_deg &&
               delta_phi_deg == other.delta_phi_deg &&
               theta_max_deg == other.theta_max_deg &&
               theta_nodes_deg == other.theta_nodes_deg &&
               phi_nodes_deg == other.phi_nodes_deg;
    }

    double AreaWeights::total() const
    {
        double sum = 0.0;
        for (double w : steradians)
            sum += w;
        return sum;
    }

    // true when `num` is an integer multiple of `den` up to rounding noise
    static bool divides_evenly(double den, double num)
    {
        if (den <= 0.0)
            return false;
        double k = num / den;
        return std::abs(k - std::round(k)) < angle_eps && std::round(k) >= 1.0;
    }

    SphericalGrid build_grid(double delta_theta_deg, double delta_phi_deg, double theta_max_deg)
    {
        if (!divides_evenly(delta_theta_deg, 180.0))
        {
            std::ostringstream msg;
            msg << "delta_theta = " << delta_theta_deg << "° does not divide 180° evenly";
            throw std::invalid_argument(msg.str());
        }
        if (!divides_evenly(delta_phi_deg, 360.0))
        {
            std::ostringstream msg;
            msg << "delta_phi = " << delta_phi_deg << "° does not divide 360° evenly";
            throw std::invalid_argument(msg.str());
        }
        if (!(theta_max_deg > 0.0) || theta_max_deg > 180.0 + angle_eps)
            throw std::invalid_argument("theta_max must lie in (0°, 180°]");
        if (!divides_evenly(delta_theta_deg, theta_max_deg))
            throw std::invalid_argument("theta_max must be an integer multiple of delta_theta");

        SphericalGrid g;
        g.delta_theta_deg = delta_theta_deg;
        g.delta_phi_deg = delta_phi_deg;
        g.theta_max_deg = theta_max_deg;

        auto n_theta = static_cast<std::size_t>(std::llround(theta_max_deg / delta_theta_deg));
        for (std::size_t i = 0; i <= n_theta; ++i)
            g.theta_nodes_deg.push_back(static_cast<double>(i) * delta_theta_deg);
        // snap the endpoints so pole detection is exact
        if (std::abs(g.theta_nodes_deg.back() - 180.0) < angle_eps)
            g.theta_nodes_deg.back() = 180.0;

        auto n_phi = static_cast<std::size_t>(std::llround(360.0 / delta_phi_deg));
        for (std::size_t i = 0; i < n_phi; ++i)
            g.phi_nodes_deg.push_back(static_cast<double>(i) * delta_phi_deg);

        return g;
    }

    AreaWeights area_weights(const SphericalGrid &grid)
    {
        const double dt = deg2rad(grid.delta_theta_deg);
        const double dp = deg2rad(grid.delta_phi_deg);
        const double cap = (cap_gamma / 2.0) * 2.0 * pi * (1.0 - std::cos(dt / 2.0));

        AreaWeights w;
        w.steradians.resize(grid.n_nodes());
        for (std::size_t i = 0; i < w.steradians.size(); ++i)
        {
            if (grid.node_is_pole(i))
                w.steradians[i] = cap;
            else
                w.steradians[i] = std::sin(deg2rad(grid.node_theta_deg(i))) * dt * dp;
        }
        return w;
    }

    Region Region::full_measured(double theta_max_deg)
    {
        Region r;
        r.theta_hi_deg = theta_max_deg;
        r.name = "sphere";
        return r;
    }

    Region Region::girdle()
    {
        Region r;
        r.theta_lo_deg = 60.0;
        r.theta_hi_deg = 90.0;
        r.name = "girdle";
        return r;
    }

    Region Region::custom(double theta_lo_deg, double theta_hi_deg, double phi_lo_deg, double phi_hi_deg)
    {
        Region r;
        r.theta_lo_deg = theta_lo_deg;
        r.theta_hi_deg = theta_hi_deg;
        r.phi_lo_deg = phi_lo_deg;
        r.phi_hi_deg = phi_hi_deg;
        r.name = "custom";
        return r;
    }

    bool Region::contains(double theta_deg, double phi_deg) const
    {
        if (theta_deg < theta_lo_deg - angle_eps || theta_deg > theta_hi_deg + angle_eps)
            return false;
        if (phi_lo_deg <= 0.0 + angle_eps && phi_hi_deg >= 360.0 - angle_eps)
            return true; // full circle
        return phi_deg >= phi_lo_deg - angle_eps && phi_deg < phi_hi_deg - angle_eps;
    }

    std::vector<bool> region_mask(const SphericalGrid &grid, const Region &region)
    {
        std::vector<bool> mask(grid.n_nodes(), false);
        std::size_t count = 0;
        for (std::size_t i = 0; i < mask.size(); ++i)
        {
            bool in = region.contains(grid.node_theta_deg(i), grid.node_phi_deg(i));
            mask[i] = in;
            if (in)
                ++count;
        }
        if (count == 0)
            throw std::invalid_argument("region '" + region.name + "' contains no grid node");
        return mask;
    }

} // namespace duprec

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

#include "duprec/footprint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace duprec
{
    using namespace footprint_model;

    // 3GPP TR 38.901 Table 7.5-3: ray offset angles within a cluster, rms angle
    // spread normalized to 1 (degrees, for sigma_nom = 1°).
    static constexpr std::array<double, n_rays / 2> base_offsets = {
        0.0447, 0.1413, 0.2492, 0.3715, 0.5129, 0.6797, 0.8844, 1.1481, 1.5195, 2.1551};

    double FootprintSpec::truncation_radius_deg() const
    {
        return sigma_rel * max_nominal_offset_deg;
    }

    double FootprintSpec::chord_radius() const
    {
        return std::sqrt(2.0 * (1.0 - std::cos(deg2rad(truncation_radius_deg()))));
    }

    static void require_valid_sigma(double sigma_rel)
    {
        if (!(sigma_rel > 0.0))
            throw std::invalid_argument("sigma_rel must be positive");
        if (sigma_rel > max_sigma_rel)
            throw std::invalid_argument("sigma_rel above the hemispherical validity limit (49): "
                                        "circular footprints are ill-defined across the hemisphere");
    }

    std::array<double, n_rays> ray_offsets(double sigma_rel)
    {
        if (!(sigma_rel > 0.0))
            throw std::invalid_argument("sigma_rel must be positive");
        std::array<double, n_rays> out{};
        for (int i = 0; i < n_rays / 2; ++i)
        {
            out[n_rays / 2 - 1 - i] = -base_offsets[i] * sigma_rel;
            out[n_rays / 2 + i] = base_offsets[i] * sigma_rel;
        }
        return out;
    }

    static void normalize_unit_sum(std::vector<double> &v)
    {
        double sum = 0.0;
        for (double x : v)
            sum += x;
        for (double &x : v)
            x /= sum;
    }

    static std::vector<double> midpoints(const std::array<double, n_rays> &offs)
    {
        std::vector<double> mid(n_midpoints);
        for (int i = 0; i < n_midpoints; ++i)
            mid[i] = 0.5 * (offs[i] + offs[i + 1]);
        return mid;
    }

    AzimuthProfile numeric_pdf(double sigma_rel)
    {
        auto offs = ray_offsets(sigma_rel);
        AzimuthProfile prof;
        prof.phi_deg = midpoints(offs);
        prof.density.resize(n_midpoints);
        for (int i = 0; i < n_midpoints; ++i)
            prof.density[i] = 1.0 / (offs[i + 1] - offs[i]);
        normalize_unit_sum(prof.density);
        return prof;
    }

    double laplacian_b_hat(double sigma_rel)
    {
        double sigma_phi = sigma_rel * sigma_nom_deg;
        return sigma_phi / std::sqrt(2.0) * nu;
    }

    AzimuthProfile continuous_laplacian(double sigma_rel)
    {
        auto offs = ray_offsets(sigma_rel);
        double b_hat = laplacian_b_hat(sigma_rel);
        AzimuthProfile prof;
        prof.phi_deg = midpoints(offs);
        prof.density.resize(n_midpoints);
        for (int i = 0; i < n_midpoints; ++i)
            prof.density[i] = std::exp(-std::abs(prof.phi_deg[i]) / b_hat);
        normalize_unit_sum(prof.density);
        return prof;
    }

    double footprint_b_2d(double sigma_rel)
    {
        return laplacian_b_hat(sigma_rel) / (beta_l * std::sqrt(sigma_rel));
    }

    double radial_profile_2d(double sigma_rel, double r_deg)
    {
        double r0 = sigma_rel * max_nominal_offset_deg;
        if (r_deg < 0.0 || r_deg > r0)
            return 0.0;
        return std::exp(-std::sqrt(r_deg) / footprint_b_2d(sigma_rel));
    }

    AzimuthProfile integrated_profile_2d(double sigma_rel)
    {
        require_valid_sigma(sigma_rel);
        auto offs = ray_offsets(sigma_rel);
        double r0 = sigma_rel * max_nominal_offset_deg;
        double b2d = footprint_b_2d(sigma_rel);
        double step = 0.05 * sigma_rel; // quadrature error an order below the fit tolerances

        AzimuthProfile prof;
        prof.phi_deg = midpoints(offs);
        prof.density.assign(n_midpoints, 0.0);
        for (int i = 0; i < n_midpoints; ++i)
        {
            double phi = prof.phi_deg[i];
            if (std::abs(phi) >= r0)
                continue;
            double span = std::sqrt(r0 * r0 - phi * phi); // theta_2D half-extent of the chord
            auto n = static_cast<std::size_t>(std::ceil(2.0 * span / step));
            double h = 2.0 * span / static_cast<double>(n);
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
            {
                double t = -span + (static_cast<double>(k) + 0.5) * h;
                double r = std::sqrt(t * t + phi * phi);
                acc += std::exp(-std::sqrt(r) / b2d);
            }
            prof.density[i] = acc * h;
        }
        normalize_unit_sum(prof.density);
        return prof;
    }

    AzimuthProfile integrated_profile_3d(double sigma_rel)
    {
        require_valid_sigma(sigma_rel);
        auto offs = ray_offsets(sigma_rel);
        double r0 = sigma_rel * max_nominal_offset_deg;
        double b2d = footprint_b_2d(sigma_rel);
        double r0_3d = std::sqrt(2.0 * (1.0 - std::cos(deg2rad(r0))));

        // center on the equator so the theta integration runs pole to pole
        const double ct = deg2rad(90.0), cp = 0.0;
        const double cx = std::sin(ct) * std::cos(cp), cy = std::sin(ct) * std::sin(cp), cz = std::cos(ct);

        const std::size_t n_theta = 9000; // 0.02° steps
        const double h = pi / static_cast<double>(n_theta);

        AzimuthProfile prof;
        prof.phi_deg = midpoints(offs);
        prof.density.assign(n_midpoints, 0.0);
        for (int i = 0; i < n_midpoints; ++i)
        {
            double phi = cp + deg2rad(prof.phi_deg[i]);
            double acc = 0.0;
            for (std::size_t k = 0; k < n_theta; ++k)
            {
                double theta = (static_cast<double>(k) + 0.5) * h;
                double st = std::sin(theta);
                double dx = st * std::cos(phi) - cx;
                double dy = st * std::sin(phi) - cy;
                double dz = std::cos(theta) - cz;
                double r3d = std::sqrt(dx * dx + dy * dy + dz * dz);
                if (r3d > r0_3d)
                    continue;
                double arc = rad2deg(2.0 * std::asin(std::min(r3d, 2.0) / 2.0));
                acc += std::exp(-std::sqrt(arc) / b2d) * st;
            }
            prof.density[i] = acc * h;
        }
        normalize_unit_sum(prof.density);
        return prof;
    }

    // shared membership scan: nodes within the chord radius of the center
    static FootprintDensity scan_members(const SphericalGrid &grid, const FootprintSpec &spec)
    {
        const double tc = deg2rad(spec.center_theta_deg);
        const double pc = deg2rad(spec.center_phi_deg);
        const double cx = std::sin(tc) * std::cos(pc);
        const double cy = std::sin(tc) * std::sin(pc);
        const double cz = std::cos(tc);
        const double r0_3d = spec.chord_radius();

        FootprintDensity fp;
        for (std::size_t i = 0; i < grid.n_nodes(); ++i)
        {
            double theta = deg2rad(grid.node_theta_deg(i));
            double phi = deg2rad(grid.node_phi_deg(i));
            double dx = std::sin(theta) * std::cos(phi) - cx;
            double dy = std::sin(theta) * std::sin(phi) - cy;
            double dz = std::cos(theta) - cz;
            double r3d = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (r3d <= r0_3d)
            {
                fp.nodes.push_back(static_cast<std::uint32_t>(i));
                fp.arc_deg.push_back(rad2deg(2.0 * std::asin(std::min(r3d, 2.0) / 2.0)));
            }
        }
        // footprint reach past the measurement limit
        fp.truncated = grid.theta_max_deg < 180.0 &&
                       spec.center_theta_deg + spec.truncation_radius_deg() > grid.theta_max_deg;
        return fp;
    }

    FootprintDensity build_footprint(const SphericalGrid &grid, const AreaWeights &weights,
                                     const FootprintSpec &spec)
    {
        require_valid_sigma(spec.sigma_rel);
        FootprintDensity fp = scan_members(grid, spec);
        if (fp.nodes.empty())
            throw std::invalid_argument("footprint lies entirely outside the grid domain");

        const double b2d = footprint_b_2d(spec.sigma_rel);
        fp.p_s.resize(fp.nodes.size());
        for (std::size_t k = 0; k < fp.nodes.size(); ++k)
            fp.p_s[k] = std::exp(-std::sqrt(fp.arc_deg[k]) / b2d) * weights.steradians[fp.nodes[k]];
        normalize_unit_sum(fp.p_s);
        return fp;
    }

    FootprintDensity build_footprint_uniform(const SphericalGrid &grid, const AreaWeights &weights,
                                             const FootprintSpec &spec)
    {
        require_valid_sigma(spec.sigma_rel);
        FootprintDensity fp = scan_members(grid, spec);
        if (fp.nodes.empty())
            throw std::invalid_argument("footprint lies entirely outside the grid domain");

        fp.p_s.resize(fp.nodes.size());
        for (std::size_t k = 0; k < fp.nodes.size(); ++k)
            fp.p_s[k] = weights.steradians[fp.nodes[k]];
        normalize_unit_sum(fp.p_s);
        return fp;
    }

} // namespace duprec

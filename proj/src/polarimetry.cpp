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

#include "duprec/polarimetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace duprec
{
    std::string to_string(RotationSense s)
    {
        switch (s)
        {
        case RotationSense::co:
            return "co";
        case RotationSense::cross:
            return "cross";
        default:
            return "linear";
        }
    }

    PolarizationState ellipse_state(std::complex<double> e_theta, std::complex<double> e_phi)
    {
        double mt = std::abs(e_theta), mp = std::abs(e_phi);
        if (mt == 0.0 && mp == 0.0)
            throw std::invalid_argument("ellipse_state: both field components are zero");

        PolarizationState s;
        double alpha = std::atan2(mt, mp); // [0, pi/2]
        double delta = (mt > 0.0 && mp > 0.0) ? std::arg(e_theta) - std::arg(e_phi) : 0.0;
        delta = std::remainder(delta, 2.0 * pi);

        // quadrant-correct tilt: 2*tilt = atan2(sin(2a)cos(d), cos(2a)), folded to [0, pi)
        double two_tilt = std::atan2(std::sin(2.0 * alpha) * std::cos(delta), std::cos(2.0 * alpha));
        double tilt = 0.5 * two_tilt;
        if (tilt < 0.0)
            tilt += pi;
        if (tilt >= pi)
            tilt -= pi;

        double s2chi = std::clamp(std::sin(2.0 * alpha) * std::sin(delta), -1.0, 1.0);
        double chi = 0.5 * std::asin(s2chi);

        s.alpha_deg = rad2deg(alpha);
        s.delta_deg = rad2deg(delta);
        s.tilt_deg = rad2deg(tilt);
        s.chi_deg = rad2deg(chi);
        if (std::abs(s.chi_deg) < 1e-12)
            s.sense = RotationSense::linear;
        else
            s.sense = s.chi_deg > 0.0 ? RotationSense::co : RotationSense::cross;
        return s;
    }

    double plf(std::complex<double> e_theta1, std::complex<double> e_phi1,
               std::complex<double> e_theta2, std::complex<double> e_phi2)
    {
        double n1 = std::sqrt(std::norm(e_theta1) + std::norm(e_phi1));
        double n2 = std::sqrt(std::norm(e_theta2) + std::norm(e_phi2));
        if (n1 == 0.0 || n2 == 0.0)
            throw std::invalid_argument("plf: zero polarization vector");
        std::complex<double> dot = (e_phi1 / n1) * std::conj(e_phi2 / n2) +
                                   (e_theta1 / n1) * std::conj(e_theta2 / n2);
        return std::min(std::norm(dot), 1.0);
    }

    PolarizationScatter polarization_scatter(const Pattern &ul, const Pattern &dl, const Region &region)
    {
        if (!ul.grid.same_layout(dl.grid))
            throw std::invalid_argument("patterns live on different grids; resample first");
        auto mask = region_mask(ul.grid, region);

        PolarizationScatter sc;
        for (std::size_t i = 0; i < mask.size(); ++i)
        {
            if (!mask[i])
                continue;
            bool ul_zero = ul.e_theta[i] == std::complex<double>{} && ul.e_phi[i] == std::complex<double>{};
            bool dl_zero = dl.e_theta[i] == std::complex<double>{} && dl.e_phi[i] == std::complex<double>{};
            if (ul_zero || dl_zero)
                continue;
            auto su = ellipse_state(ul.e_theta[i], ul.e_phi[i]);
            auto sd = ellipse_state(dl.e_theta[i], dl.e_phi[i]);
            sc.nodes.push_back(static_cast<std::uint32_t>(i));
            sc.delta_psi_deg.push_back(std::abs(su.alpha_deg - sd.alpha_deg));
            sc.delta_chi_deg.push_back(std::abs(su.chi_deg - sd.chi_deg));
            sc.eta.push_back(plf(ul.e_theta[i], ul.e_phi[i], dl.e_theta[i], dl.e_phi[i]));
            sc.co_rotating.push_back(su.chi_deg * sd.chi_deg >= 0.0);
        }
        return sc;
    }

    BoundFitReport chi_bound_fit(const Pattern &ul, const Pattern &dl, const Region &region,
                                 double bin_width_deg)
    {
        if (!(bin_width_deg > 0.0))
            throw std::invalid_argument("chi_bound_fit: bin width must be positive");
        PolarizationScatter sc = polarization_scatter(ul, dl, region);

        auto n_bins = static_cast<std::size_t>(std::ceil(90.0 / bin_width_deg));
        std::vector<double> bin_max(n_bins, -1.0);
        for (std::size_t k = 0; k < sc.nodes.size(); ++k)
        {
            auto b = static_cast<std::size_t>(sc.delta_psi_deg[k] / bin_width_deg);
            if (b >= n_bins)
                b = n_bins - 1;
            bin_max[b] = std::max(bin_max[b], sc.delta_chi_deg[k]);
        }

        BoundFitReport r;
        for (std::size_t b = 0; b < n_bins; ++b)
            if (bin_max[b] >= 0.0)
            {
                r.bin_delta_psi_deg.push_back((static_cast<double>(b) + 0.5) * bin_width_deg);
                r.bin_max_delta_chi_deg.push_back(bin_max[b]);
            }
        std::size_t n = r.bin_delta_psi_deg.size();
        if (n < 3)
            throw std::invalid_argument("chi_bound_fit: fewer than 3 populated bins, scatter is degenerate");

        double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
        for (std::size_t k = 0; k < n; ++k)
        {
            double x = r.bin_delta_psi_deg[k], y = r.bin_max_delta_chi_deg[k];
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
        }
        double dn = static_cast<double>(n);
        double cov = sxy - sx * sy / dn;
        double var_x = sxx - sx * sx / dn;
        double var_y = syy - sy * sy / dn;
        r.gamma_fit = cov / var_x;
        r.rho_fit = (var_x > 0.0 && var_y > 0.0) ? cov / std::sqrt(var_x * var_y) : 0.0;
        return r;
    }

} // namespace duprec

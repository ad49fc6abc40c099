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

#include "duprec/scalar_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace duprec
{
    static constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();
    static constexpr double inf_v = std::numeric_limits<double>::infinity();

    static void require_same_grid(const Pattern &a, const Pattern &b)
    {
        if (!a.grid.same_layout(b.grid))
            throw std::invalid_argument("patterns live on different grids; resample first");
    }

    static MetricField empty_field(const SphericalGrid &grid, const Region &region,
                                   MetricUnit unit, std::string name)
    {
        MetricField f;
        f.grid = grid;
        f.mask = region_mask(grid, region);
        f.value.assign(grid.n_nodes(), nan_v);
        f.unit = unit;
        f.name = std::move(name);
        return f;
    }

    MetricField ipb(const Pattern &ul, const Pattern &dl, const Region &region, PowerComponent component)
    {
        require_same_grid(ul, dl);
        MetricField f = empty_field(ul.grid, region, MetricUnit::decibel, "ipb");
        const bool dl_raw = dl.convention == PowerConvention::eis_raw;
        for (std::size_t i = 0; i < f.mask.size(); ++i)
        {
            if (!f.mask[i])
                continue;
            double pu = ul.power(i, component);
            double pd = dl.power(i, component);
            if (pu <= 0.0 || pd <= 0.0)
            {
                f.value[i] = -inf_v;
                continue;
            }
            // EIRP*EIS in dB; with gain-proportional DL the product becomes a ratio
            f.value[i] = dl_raw ? 10.0 * std::log10(pu * pd) : 10.0 * std::log10(pu / pd);
        }
        return f;
    }

    MetricField delta_ip(const Pattern &ul, const Pattern &dl, const Region &region, PowerComponent component)
    {
        require_same_grid(ul, dl);
        if (dl.convention == PowerConvention::eis_raw)
            throw std::invalid_argument("delta_ip expects a gain-proportional DL pattern; apply invert_eis first");

        MetricField f = empty_field(ul.grid, region, MetricUnit::linear, "delta_ip");
        AreaWeights w = area_weights(ul.grid);

        double num_u = 0.0, num_d = 0.0, den = 0.0;
        for (std::size_t i = 0; i < f.mask.size(); ++i)
        {
            if (!f.mask[i])
                continue;
            num_u += w.steradians[i] * ul.power(i, component);
            num_d += w.steradians[i] * dl.power(i, component);
            den += w.steradians[i];
        }
        double mean_u = num_u / den, mean_d = num_d / den;
        if (mean_u <= 0.0 || mean_d <= 0.0)
            throw std::invalid_argument("delta_ip: pattern power vanishes over the region");

        for (std::size_t i = 0; i < f.mask.size(); ++i)
            if (f.mask[i])
                f.value[i] = std::abs(ul.power(i, component) / mean_u - dl.power(i, component) / mean_d);
        return f;
    }

    FrontBackReport delta_fb(const Pattern &ul, const Pattern &dl, const Region &region,
                             PowerComponent polarization)
    {
        require_same_grid(ul, dl);
        if (polarization == PowerComponent::total)
            throw std::invalid_argument("delta_fb is defined per polarization");
        const SphericalGrid &g = ul.grid;
        if (g.n_phi() % 2 != 0)
            throw std::invalid_argument("delta_fb needs an even azimuth node count so phi+180° is on the grid");

        auto mask = region_mask(g, region);

        // per-azimuth maxima across the region's theta span; poles carry no azimuth
        const std::size_t np = g.n_phi();
        std::vector<double> max_ul(np, -inf_v), max_dl(np, -inf_v);
        bool any = false;
        for (std::size_t i = 0; i < mask.size(); ++i)
        {
            if (!mask[i] || g.node_is_pole(i))
                continue;
            auto ip = static_cast<std::size_t>(std::llround(g.node_phi_deg(i) / g.delta_phi_deg)) % np;
            max_ul[ip] = std::max(max_ul[ip], ul.power(i, polarization));
            max_dl[ip] = std::max(max_dl[ip], dl.power(i, polarization));
            any = true;
        }
        if (!any)
            throw std::invalid_argument("delta_fb: region holds no ring nodes");

        // azimuth of the DL maximum; ties resolved toward the smallest azimuth
        std::size_t ip_max = 0;
        for (std::size_t ip = 1; ip < np; ++ip)
            if (max_dl[ip] > max_dl[ip_max])
                ip_max = ip;
        std::size_t ip_back = (ip_max + np / 2) % np;

        auto db = [](double p) { return p > 0.0 ? 10.0 * std::log10(p) : -inf_v; };

        FrontBackReport r;
        r.polarization = polarization;
        r.phi_max_dl_deg = g.phi_nodes_deg[ip_max];
        r.dl_front_db = db(max_dl[ip_max]);
        r.ul_front_db = db(max_ul[ip_max]);
        r.ul_back_db = db(max_ul[ip_back]);
        r.dl_back_db = db(max_dl[ip_back]);
        r.delta_fb_db = r.dl_front_db - r.ul_front_db + r.ul_back_db - r.dl_back_db;
        return r;
    }

    MetricField xpd(const Pattern &p, const Region &region)
    {
        MetricField f = empty_field(p.grid, region, MetricUnit::decibel, "xpd");
        for (std::size_t i = 0; i < f.mask.size(); ++i)
        {
            if (!f.mask[i])
                continue;
            double pt = p.p_theta(i), pp = p.p_phi(i);
            if (pt == 0.0 && pp == 0.0)
            {
                f.mask[i] = false;
                continue;
            }
            if (pp == 0.0)
                f.value[i] = inf_v;
            else if (pt == 0.0)
                f.value[i] = -inf_v;
            else
                f.value[i] = 10.0 * std::log10(pt / pp);
        }
        return f;
    }

    MetricField tilt(const Pattern &p, const Region &region)
    {
        MetricField f = empty_field(p.grid, region, MetricUnit::degrees, "tilt");
        for (std::size_t i = 0; i < f.mask.size(); ++i)
        {
            if (!f.mask[i])
                continue;
            double mt = std::abs(p.e_theta[i]), mp = std::abs(p.e_phi[i]);
            if (mt == 0.0 && mp == 0.0)
            {
                f.mask[i] = false;
                continue;
            }
            f.value[i] = rad2deg(std::atan2(mt, mp));
        }
        return f;
    }

    MetricField delta_psi(const Pattern &ul, const Pattern &dl, const Region &region)
    {
        require_same_grid(ul, dl);
        MetricField tu = tilt(ul, region);
        MetricField td = tilt(dl, region);
        MetricField f = empty_field(ul.grid, region, MetricUnit::degrees, "delta_psi");
        for (std::size_t i = 0; i < f.mask.size(); ++i)
        {
            if (!tu.mask[i] || !td.mask[i])
            {
                f.mask[i] = false;
                continue;
            }
            f.value[i] = std::abs(tu.value[i] - td.value[i]);
        }
        return f;
    }

    double tilt_mismatch_loss_db(double delta_psi_deg)
    {
        return -20.0 * std::log10(std::cos(deg2rad(delta_psi_deg)));
    }

} // namespace duprec

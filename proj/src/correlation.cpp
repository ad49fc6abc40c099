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

#include "duprec/correlation.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

namespace duprec
{
    std::complex<double> correlate(const Pattern &hj, const Pattern &hk,
                                   const FootprintDensity &p_s, double xpd_db)
    {
        if (!hj.grid.same_layout(hk.grid))
            throw std::invalid_argument("patterns live on different grids; resample first");

        const double xpd = std::pow(10.0, xpd_db / 10.0);
        std::complex<double> c_jk{0.0, 0.0};
        double c_jj = 0.0, c_kk = 0.0;
        for (std::size_t m = 0; m < p_s.nodes.size(); ++m)
        {
            std::size_t i = p_s.nodes[m];
            double w = p_s.p_s[m];
            c_jk += w * (xpd * hj.e_theta[i] * std::conj(hk.e_theta[i]) +
                         hj.e_phi[i] * std::conj(hk.e_phi[i]));
            c_jj += w * (xpd * std::norm(hj.e_theta[i]) + std::norm(hj.e_phi[i]));
            c_kk += w * (xpd * std::norm(hk.e_theta[i]) + std::norm(hk.e_phi[i]));
        }
        if (c_jj <= 0.0 || c_kk <= 0.0)
            throw std::invalid_argument("correlate: a pattern vanishes on the footprint");
        return c_jk / std::sqrt(c_jj * c_kk);
    }

    // static partition over center indices; every slot is written exactly once, so
    // the result does not depend on the schedule
    static void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)> &body);

    namespace
    {
        void run_range(std::size_t begin, std::size_t end, const std::function<void(std::size_t)> &body)
        {
            for (std::size_t i = begin; i < end; ++i)
                body(i);
        }
    } // namespace

    static void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)> &body)
    {
        if (workers <= 1 || n < 2)
        {
            run_range(0, n, body);
            return;
        }
        unsigned k = std::min<unsigned>(workers, static_cast<unsigned>(n));
        std::vector<std::thread> pool;
        std::size_t chunk = (n + k - 1) / k;
        for (unsigned t = 0; t < k; ++t)
        {
            std::size_t b = static_cast<std::size_t>(t) * chunk;
            std::size_t e = std::min(n, b + chunk);
            if (b >= e)
                break;
            pool.emplace_back(run_range, b, e, std::cref(body));
        }
        for (auto &th : pool)
            th.join();
    }

    CorrelationMap correlation_map(const Pattern &hj, const Pattern &hk, double sigma_rel,
                                   double xpd_db, CorrelationMode mode, unsigned workers)
    {
        Pattern a = mode == CorrelationMode::scalar ? scalar_magnitude(hj) : hj;
        Pattern b = mode == CorrelationMode::scalar ? scalar_magnitude(hk) : hk;
        if (!a.grid.same_layout(b.grid))
            throw std::invalid_argument("patterns live on different grids; resample first");

        const SphericalGrid &grid = a.grid;
        AreaWeights w = area_weights(grid);

        CorrelationMap map;
        map.centers = grid;
        map.mode = mode;
        map.xpd_db = xpd_db;
        map.sigma_rel = sigma_rel;
        map.rho.assign(grid.n_nodes(), {0.0, 0.0});
        map.truncated.assign(grid.n_nodes(), false);

        std::vector<char> trunc(grid.n_nodes(), 0);
        parallel_for(grid.n_nodes(), workers, [&](std::size_t i) {
            FootprintSpec spec;
            spec.sigma_rel = sigma_rel;
            spec.center_theta_deg = grid.node_theta_deg(i);
            spec.center_phi_deg = grid.node_phi_deg(i);
            FootprintDensity fp = build_footprint(grid, w, spec);
            map.rho[i] = correlate(a, b, fp, xpd_db);
            trunc[i] = fp.truncated ? 1 : 0;
        });
        for (std::size_t i = 0; i < trunc.size(); ++i)
            map.truncated[i] = trunc[i] != 0;
        return map;
    }

    MapSummary summarize_map(const CorrelationMap &map, const Region &region, bool area_weighted)
    {
        auto mask = region_mask(map.centers, region);
        AreaWeights w = area_weights(map.centers);

        MapSummary s;
        s.region_name = region.name;
        double min_abs = 2.0, acc = 0.0, den = 0.0;
        for (std::size_t i = 0; i < mask.size(); ++i)
        {
            if (!mask[i])
                continue;
            double r = std::abs(map.rho[i]);
            min_abs = std::min(min_abs, r);
            double wi = area_weighted ? w.steradians[i] : 1.0;
            acc += wi * r;
            den += wi;
            ++s.n_centers;
        }
        s.min_abs = min_abs;
        s.mean_abs = acc / den;
        return s;
    }

    double envelope_estimate(double rho_scalar)
    {
        if (rho_scalar < 0.0 || rho_scalar > 1.0)
            throw std::invalid_argument("envelope_estimate expects a scalar correlation in [0, 1]");
        double r2 = rho_scalar * rho_scalar;
        return r2 * r2;
    }

    QuadrupleFit quadruple_fit(const CorrelationMap &map_complex, const CorrelationMap &map_scalar,
                               const Region &region)
    {
        if (!map_complex.centers.same_layout(map_scalar.centers))
            throw std::invalid_argument("quadruple_fit: maps use different center grids");
        auto mask = region_mask(map_complex.centers, region);

        QuadrupleFit f;
        f.region_name = region.name;
        double sxx = 0.0, sxy = 0.0, sx = 0.0, sy = 0.0, syy = 0.0;
        for (std::size_t i = 0; i < mask.size(); ++i)
        {
            if (!mask[i])
                continue;
            double x = std::abs(map_scalar.rho[i]);
            x = x * x;
            double y = std::abs(map_complex.rho[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
            ++f.n;
        }
        if (f.n < 3)
            throw std::invalid_argument("quadruple_fit: fewer than 3 centers in the region");

        f.gamma_fit = sxy / sxx; // least squares through the origin
        double dn = static_cast<double>(f.n);
        double var_x = sxx - sx * sx / dn;
        double var_y = syy - sy * sy / dn;
        double cov = sxy - sx * sy / dn;
        if (var_x <= 1e-24 || var_y <= 1e-24)
        {
            // all pairs coincide (e.g. identical patterns: every point is (1, 1))
            f.degenerate = true;
            f.rho_fit = 1.0;
        }
        else
            f.rho_fit = cov / std::sqrt(var_x * var_y);
        return f;
    }

} // namespace duprec

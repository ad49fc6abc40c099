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

#ifndef DUPREC_CORRELATION_HPP
#define DUPREC_CORRELATION_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "duprec/footprint.hpp"
#include "duprec/grid.hpp"
#include "duprec/pattern.hpp"

namespace duprec
{
    // Footprint-weighted duplex signal correlation
    //   C_jk = sum_nodes p_S * (XPD * h_j_theta * conj(h_k_theta) + h_j_phi * conj(h_k_phi))
    //   rho  = C_jk / sqrt(C_jj * C_kk)
    // with the footprint density p_S carrying the full quadrature weight (grid areas
    // are folded into p_S, no second area factor). The XPD factor is linear and
    // multiplies the theta term of all three C's. Scalar patterns make every
    // integrand non-negative, so their rho is real in [0, 1].
    std::complex<double> correlate(const Pattern &hj, const Pattern &hk,
                                   const FootprintDensity &p_s, double xpd_db);

    enum class CorrelationMode { complex_field, scalar };

    struct CorrelationMap
    {
        SphericalGrid centers;                  // one footprint center per grid node
        std::vector<std::complex<double>> rho;  // per center
        std::vector<bool> truncated;            // footprint crossed the theta limit
        CorrelationMode mode = CorrelationMode::complex_field;
        double xpd_db = 3.0;
        double sigma_rel = 15.0;
    };

    // Sweeps the footprint center over every node of the patterns' grid. Scalar mode
    // drops the phases (|h|) before correlating. Center evaluations are independent
    // and run on `workers` threads; results land in per-center slots, so the output
    // is identical for any worker count.
    CorrelationMap correlation_map(const Pattern &hj, const Pattern &hk, double sigma_rel,
                                   double xpd_db, CorrelationMode mode, unsigned workers = 1);

    struct MapSummary
    {
        std::string region_name;
        double min_abs = 0.0;
        double mean_abs = 0.0; // area weighted by default
        std::size_t n_centers = 0;
    };

    MapSummary summarize_map(const CorrelationMap &map, const Region &region,
                             bool area_weighted = true);

    // Correlation classification thresholds from the population tables.
    constexpr double rho_high_min = 0.9; // min(rho) >= 0.9: compressed-to-high distribution
    constexpr double rho_low_mean = 0.9; // mean(rho) <= 0.9: low-mean flag

    // Estimated envelope signal correlation from a scalar pattern correlation under
    // single-element duplex operation: rho^4 (the quadruple power relationship).
    double envelope_estimate(double rho_scalar);

    struct QuadrupleFit
    {
        double gamma_fit = 0.0; // through-origin slope of |rho_complex| on rho_scalar^2
        double rho_fit = 0.0;   // Pearson correlation of the pairs
        bool degenerate = false;
        std::string region_name;
        std::size_t n = 0;
    };

    // Regression of |rho_complex| against rho_scalar^2 over the map centers inside a
    // region; both maps must share their center grid. Throws below 3 centers.
    QuadrupleFit quadruple_fit(const CorrelationMap &map_complex, const CorrelationMap &map_scalar,
                               const Region &region);

} // namespace duprec

#endif

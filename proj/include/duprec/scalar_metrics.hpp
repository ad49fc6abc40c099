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

#ifndef DUPREC_SCALAR_METRICS_HPP
#define DUPREC_SCALAR_METRICS_HPP

#include <limits>
#include <string>
#include <vector>

#include "duprec/grid.hpp"
#include "duprec/pattern.hpp"

namespace duprec
{
    enum class MetricUnit { linear, decibel, degrees };

    // Per-direction metric values on the nodes of a region. Nodes outside the region
    // (or excluded, e.g. zero-power directions) carry mask = false and NaN values.
    // +/-inf values are legitimate sentinels (XPD of purely polarized directions) and
    // are skipped by the aggregation stage.
    struct MetricField
    {
        SphericalGrid grid;
        std::vector<bool> mask;
        std::vector<double> value;
        MetricUnit unit = MetricUnit::linear;
        std::string name;
    };

    // Cross-link front-to-back report for one polarization. delta_fb_db compares the
    // DL and UL focus at the azimuth of the DL maximum and at its 180° opposite, all
    // maximized across the region's theta span.
    struct FrontBackReport
    {
        PowerComponent polarization = PowerComponent::theta_pol;
        double phi_max_dl_deg = 0.0;
        double delta_fb_db = 0.0;
        // the four dB terms: DL/UL power toward phi_max and toward the back direction
        double dl_front_db = 0.0, ul_front_db = 0.0, ul_back_db = 0.0, dl_back_db = 0.0;
    };

    // Classification thresholds used in the population tables.
    constexpr double delta_fb_high_db = 10.0; // |dFB| >= 10 dB: high bi-modal divergence
    constexpr double delta_fb_low_db = 3.0;   // |dFB| <= 3 dB: low divergence

    // Isotropic power balance EIRP*EIS per node in dB. DL may be given either as raw
    // EIS (product) or gain-proportional (division); both agree up to a constant.
    MetricField ipb(const Pattern &ul, const Pattern &dl, const Region &region,
                    PowerComponent component = PowerComponent::total);

    // |EIRP/mean(EIRP) - g_DL/mean(g_DL)| with area-weighted linear-domain means over
    // the region; zero where the patterns agree in shape. DL must be gain-proportional.
    MetricField delta_ip(const Pattern &ul, const Pattern &dl, const Region &region,
                         PowerComponent component = PowerComponent::total);

    FrontBackReport delta_fb(const Pattern &ul, const Pattern &dl, const Region &region,
                             PowerComponent polarization);

    // Cross-polarization discrimination 10*log10(p_theta/p_phi); +inf / -inf where one
    // polarization vanishes.
    MetricField xpd(const Pattern &p, const Region &region);

    // Linear polarization tilt psi = atan(sqrt(p_theta/p_phi)) in [0°, 90°]; directions
    // with no power at all are excluded from the mask.
    MetricField tilt(const Pattern &p, const Region &region);

    // |psi_UL - psi_DL| in [0°, 90°].
    MetricField delta_psi(const Pattern &ul, const Pattern &dl, const Region &region);

    // Linear polarization mismatch loss for a tilt difference, -20*log10(cos(dpsi)).
    double tilt_mismatch_loss_db(double delta_psi_deg);

} // namespace duprec

#endif

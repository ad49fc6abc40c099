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

#ifndef DUPREC_PATTERN_HPP
#define DUPREC_PATTERN_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "duprec/grid.hpp"

namespace duprec
{
    enum class Link { ul, dl };
    enum class PatternKind { complex_field, scalar };
    enum class PowerConvention { gain_proportional, eis_raw };
    enum class PowerComponent { total, theta_pol, phi_pol };
    enum class NormalizeMode { max_total, mean_total };

    // Dual-polarized field samples on a spherical grid, one complex value per node
    // and polarization. Values are linear and volts-proportional; powers are |E|^2.
    // For scalar (power-only) data the imaginary parts are zero and the real parts
    // are the non-negative field magnitudes sqrt(p). DL sensitivity data enters as
    // eis_raw and must be inverted (dB negation) before gain-based processing.
    struct Pattern
    {
        SphericalGrid grid;
        Link link = Link::ul;
        std::string band;
        PatternKind kind = PatternKind::complex_field;
        PowerConvention convention = PowerConvention::gain_proportional;
        std::vector<std::complex<double>> e_theta;
        std::vector<std::complex<double>> e_phi;

        double p_theta(std::size_t node) const { return std::norm(e_theta[node]); }
        double p_phi(std::size_t node) const { return std::norm(e_phi[node]); }
        double p_total(std::size_t node) const { return p_theta(node) + p_phi(node); }
        double power(std::size_t node, PowerComponent c) const;
    };

    std::string to_string(Link link);
    std::string to_string(PatternKind kind);

    // CSV interchange format. Metadata lines prefixed '#' precede the column header:
    //   # link: UL|DL
    //   # band: <label>
    //   # kind: complex|scalar
    //   # convention: gain|eis
    // followed by either
    //   theta_deg,phi_deg,etheta_re,etheta_im,ephi_re,ephi_im   (complex kind)
    //   theta_deg,phi_deg,ptheta_db,pphi_db                     (scalar kind)
    // with one row per node and a single row per pole. Parse failures report the
    // offending line number; missing or duplicate nodes are rejected by name.
    Pattern load_pattern(std::istream &in, const std::string &source_name = "<stream>");
    Pattern load_pattern_file(const std::string &path);
    void save_pattern(const Pattern &p, std::ostream &out);
    void save_pattern_file(const Pattern &p, const std::string &path);

    // Negates the per-node power in dB (m -> 1/m on field magnitudes) so EIS data
    // becomes antenna-gain proportional. Applying it to an already inverted pattern
    // is a no-op; `inverted` (when given) reports whether a negation happened.
    Pattern invert_eis(const Pattern &p, bool *inverted = nullptr);

    // Linear interpolation of field magnitudes onto `target`, bilinear in (theta, phi)
    // with phi wrap-around; complex phases follow by shortest-arc interpolation per
    // polarization. Source and target spacings must be related by an integer factor
    // in each direction, and the target domain must not exceed the source domain.
    Pattern resample(const Pattern &p, const SphericalGrid &target);

    // Scales the pattern so the total power p_theta+p_phi has region maximum (or
    // area-weighted region mean) equal to one.
    Pattern normalize(const Pattern &p, const Region &region, NormalizeMode mode);

    // Drops phase information: per node and polarization keeps |E| as a real field.
    Pattern scalar_magnitude(const Pattern &p);

} // namespace duprec

#endif

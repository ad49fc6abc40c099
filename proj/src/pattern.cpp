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

#include "duprec/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace duprec
{
    double Pattern::power(std::size_t node, PowerComponent c) const
    {
        switch (c)
        {
        case PowerComponent::theta_pol:
            return p_theta(node);
        case PowerComponent::phi_pol:
            return p_phi(node);
        default:
            return p_total(node);
        }
    }

    std::string to_string(Link link) { return link == Link::ul ? "UL" : "DL"; }
    std::string to_string(PatternKind kind) { return kind == PatternKind::complex_field ? "complex" : "scalar"; }

    // ---------------------------------------------------------------- CSV I/O

    static std::string format_g9(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.9g", v);
        return buf;
    }

    namespace
    {
        struct Row
        {
            double theta = 0.0, phi = 0.0;
            std::complex<double> et, ep;
            std::size_t line = 0;
        };

        // quantized angle key, robust against decimal-text rounding
        long long angle_key(double deg) { return std::llround(deg * 1e6); }

        std::vector<std::string> split_csv(const std::string &line)
        {
            std::vector<std::string> out;
            std::string cur;
            for (char c : line)
            {
                if (c == ',')
                {
                    out.push_back(cur);
                    cur.clear();
                }
                else if (c != '\r')
                    cur += c;
            }
            out.push_back(cur);
            for (auto &s : out)
            {
                while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                    s.erase(s.begin());
                while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
                    s.pop_back();
            }
            return out;
        }

        double parse_number(const std::string &s, std::size_t line, const std::string &src, bool allow_inf = false)
        {
            const char *begin = s.c_str();
            char *end = nullptr;
            double v = std::strtod(begin, &end);
            bool ok = end == begin + s.size() && !s.empty();
            if (ok && !allow_inf && !std::isfinite(v))
                ok = false;
            if (!ok)
                throw std::runtime_error(src + ":" + std::to_string(line) + ": non-numeric field '" + s + "'");
            return v;
        }
    } // namespace

    Pattern load_pattern(std::istream &in, const std::string &source_name)
    {
        Pattern p;
        std::string declared_kind;
        std::vector<std::string> header;
        std::vector<Row> rows;
        bool is_complex = true;

        std::string line;
        std::size_t line_no = 0;
        bool header_seen = false;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.empty() || line == "\r")
                continue;
            if (line[0] == '#')
            {
                auto colon = line.find(':');
                if (colon == std::string::npos)
                    continue;
                std::string key = line.substr(1, colon - 1);
                std::string val = line.substr(colon + 1);
                auto strip = [](std::string s) {
                    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                        s.erase(s.begin());
                    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                        s.pop_back();
                    return s;
                };
                key = strip(key);
                val = strip(val);
                if (key == "link")
                {
                    if (val == "UL")
                        p.link = Link::ul;
                    else if (val == "DL")
                        p.link = Link::dl;
                    else
                        throw std::runtime_error(source_name + ":" + std::to_string(line_no) + ": unknown link '" + val + "'");
                }
                else if (key == "band")
                    p.band = val;
                else if (key == "kind")
                    declared_kind = val;
                else if (key == "convention")
                {
                    if (val == "gain")
                        p.convention = PowerConvention::gain_proportional;
                    else if (val == "eis")
                        p.convention = PowerConvention::eis_raw;
                    else
                        throw std::runtime_error(source_name + ":" + std::to_string(line_no) + ": unknown convention '" + val + "'");
                }
                continue;
            }
            if (!header_seen)
            {
                header = split_csv(line);
                if (header.size() == 6 && header[2] == "etheta_re")
                    is_complex = true;
                else if (header.size() == 4 && header[2] == "ptheta_db")
                    is_complex = false;
                else
                    throw std::runtime_error(source_name + ":" + std::to_string(line_no) + ": unrecognized column header");
                header_seen = true;
                continue;
            }
            auto fields = split_csv(line);
            if (fields.size() != header.size())
                throw std::runtime_error(source_name + ":" + std::to_string(line_no) + ": expected " +
                                         std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
            Row r;
            r.line = line_no;
            r.theta = parse_number(fields[0], line_no, source_name);
            r.phi = parse_number(fields[1], line_no, source_name);
            if (is_complex)
            {
                r.et = {parse_number(fields[2], line_no, source_name), parse_number(fields[3], line_no, source_name)};
                r.ep = {parse_number(fields[4], line_no, source_name), parse_number(fields[5], line_no, source_name)};
            }
            else
            {
                // scalar rows carry per-polarization power in dB; -inf encodes a null
                double pt_db = parse_number(fields[2], line_no, source_name, true);
                double pp_db = parse_number(fields[3], line_no, source_name, true);
                r.et = {std::pow(10.0, pt_db / 20.0), 0.0};
                r.ep = {std::pow(10.0, pp_db / 20.0), 0.0};
            }
            rows.push_back(r);
        }
        if (!header_seen || rows.empty())
            throw std::runtime_error(source_name + ": no pattern data found");

        p.kind = is_complex ? PatternKind::complex_field : PatternKind::scalar;
        if (!declared_kind.empty() && declared_kind != to_string(p.kind))
            throw std::runtime_error(source_name + ": declared kind '" + declared_kind +
                                     "' does not match the column header");
        if (p.kind == PatternKind::complex_field)
            p.convention = PowerConvention::gain_proportional;

        // infer the grid from the row set
        std::map<long long, double> thetas, phis;
        for (const auto &r : rows)
        {
            thetas.emplace(angle_key(r.theta), r.theta);
            bool pole = std::abs(r.theta) < 1e-9 || std::abs(r.theta - 180.0) < 1e-9;
            if (!pole)
                phis.emplace(angle_key(r.phi), r.phi);
        }
        if (phis.empty())
            throw std::runtime_error(source_name + ": pattern contains no ring nodes");

        std::vector<double> theta_vals, phi_vals;
        for (auto &kv : thetas)
            theta_vals.push_back(kv.second);
        for (auto &kv : phis)
            phi_vals.push_back(kv.second);

        if (std::abs(theta_vals.front()) > 1e-9)
            throw std::runtime_error(source_name + ": pattern grid must start at theta=0 (pole row missing)");
        auto check_uniform = [&](const std::vector<double> &v, const char *what) {
            double d = v.size() > 1 ? v[1] - v[0] : 0.0;
            for (std::size_t i = 1; i < v.size(); ++i)
                if (std::abs((v[i] - v[i - 1]) - d) > 1e-6)
                    throw std::runtime_error(source_name + ": non-uniform " + std::string(what) +
                                             " spacing (check for fully missing rings/columns)");
            return d;
        };
        double dtheta = check_uniform(theta_vals, "theta");
        double dphi = check_uniform(phi_vals, "phi");
        if (std::abs(phi_vals.front()) > 1e-9 || std::abs(phi_vals.back() + dphi - 360.0) > 1e-6)
            throw std::runtime_error(source_name + ": phi columns must cover 0..360-dphi");

        p.grid = build_grid(dtheta, dphi, theta_vals.back());

        // place rows and detect duplicates / gaps
        const std::size_t n = p.grid.n_nodes();
        p.e_theta.assign(n, {0.0, 0.0});
        p.e_phi.assign(n, {0.0, 0.0});
        std::vector<std::size_t> seen(n, 0);

        auto theta_index = [&](double theta) {
            return static_cast<std::size_t>(std::llround(theta / dtheta));
        };
        auto phi_index = [&](double phi) {
            return static_cast<std::size_t>(std::llround(phi / dphi)) % p.grid.n_phi();
        };

        for (const auto &r : rows)
        {
            std::size_t node = p.grid.node_index(theta_index(r.theta), phi_index(r.phi));
            if (seen[node])
                throw std::runtime_error(source_name + ":" + std::to_string(r.line) + ": duplicate node (theta=" +
                                         format_g9(r.theta) + ", phi=" + format_g9(r.phi) + ")");
            seen[node] = r.line;
            p.e_theta[node] = r.et;
            p.e_phi[node] = r.ep;
        }
        std::string missing;
        std::size_t n_missing = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!seen[i])
            {
                ++n_missing;
                if (n_missing <= 8)
                    missing += " (theta=" + format_g9(p.grid.node_theta_deg(i)) +
                               ", phi=" + format_g9(p.grid.node_phi_deg(i)) + ")";
            }
        if (n_missing)
            throw std::runtime_error(source_name + ": " + std::to_string(n_missing) + " missing node(s):" + missing +
                                     (n_missing > 8 ? " ..." : ""));

        if (p.kind == PatternKind::scalar)
            for (std::size_t i = 0; i < n; ++i)
                if (p.e_theta[i].imag() != 0.0 || p.e_phi[i].imag() != 0.0 ||
                    p.e_theta[i].real() < 0.0 || p.e_phi[i].real() < 0.0)
                    throw std::runtime_error(source_name + ": scalar pattern with non-real or negative magnitude");

        return p;
    }

    Pattern load_pattern_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open pattern file '" + path + "'");
        return load_pattern(in, path);
    }

    void save_pattern(const Pattern &p, std::ostream &out)
    {
        out << "# link: " << to_string(p.link) << "\n";
        out << "# band: " << p.band << "\n";
        out << "# kind: " << to_string(p.kind) << "\n";
        out << "# convention: " << (p.convention == PowerConvention::eis_raw ? "eis" : "gain") << "\n";
        const bool cx = p.kind == PatternKind::complex_field;
        out << (cx ? "theta_deg,phi_deg,etheta_re,etheta_im,ephi_re,ephi_im"
                   : "theta_deg,phi_deg,ptheta_db,pphi_db")
            << "\n";
        for (std::size_t i = 0; i < p.grid.n_nodes(); ++i)
        {
            out << format_g9(p.grid.node_theta_deg(i)) << ',' << format_g9(p.grid.node_phi_deg(i));
            if (cx)
                out << ',' << format_g9(p.e_theta[i].real()) << ',' << format_g9(p.e_theta[i].imag())
                    << ',' << format_g9(p.e_phi[i].real()) << ',' << format_g9(p.e_phi[i].imag());
            else
                out << ',' << format_g9(20.0 * std::log10(p.e_theta[i].real()))
                    << ',' << format_g9(20.0 * std::log10(p.e_phi[i].real()));
            out << "\n";
        }
    }

    void save_pattern_file(const Pattern &p, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write pattern file '" + path + "'");
        save_pattern(p, out);
    }

    // ------------------------------------------------------------ transforms

    Pattern invert_eis(const Pattern &p, bool *inverted)
    {
        if (p.convention != PowerConvention::eis_raw)
        {
            if (inverted)
                *inverted = false;
            return p;
        }
        Pattern out = p;
        out.convention = PowerConvention::gain_proportional;
        for (std::size_t i = 0; i < out.e_theta.size(); ++i)
        {
            // dB negation: magnitude m -> 1/m; zero sensitivity stays zero gain
            double mt = std::abs(p.e_theta[i]);
            double mp = std::abs(p.e_phi[i]);
            out.e_theta[i] = {mt > 0.0 ? 1.0 / mt : 0.0, 0.0};
            out.e_phi[i] = {mp > 0.0 ? 1.0 / mp : 0.0, 0.0};
        }
        if (inverted)
            *inverted = true;
        return out;
    }

    namespace
    {
        // a + t*(b - a); exact at t = 0 and for a == b
        double lerp_exact(double a, double b, double t) { return a + t * (b - a); }

        double lerp_angle(double a, double b, double t)
        {
            double d = std::remainder(b - a, 2.0 * pi);
            return a + t * d;
        }

        struct AxisMap
        {
            std::size_t lo = 0, hi = 0;
            double frac = 0.0;
        };

        // integer-exact mapping of target node index -> bracketing source indices
        AxisMap map_axis(std::size_t target_idx, std::size_t refine, std::size_t coarsen, std::size_t src_count, bool wrap)
        {
            AxisMap m;
            if (coarsen > 1)
            {
                m.lo = m.hi = target_idx * coarsen;
                m.frac = 0.0;
            }
            else
            {
                m.lo = target_idx / refine;
                std::size_t rem = target_idx % refine;
                m.frac = static_cast<double>(rem) / static_cast<double>(refine);
                m.hi = rem == 0 ? m.lo : m.lo + 1;
            }
            if (wrap)
            {
                m.lo %= src_count;
                m.hi %= src_count;
            }
            else
            {
                if (m.lo >= src_count)
                    m.lo = src_count - 1;
                if (m.hi >= src_count)
                    m.hi = src_count - 1;
            }
            return m;
        }

        // integer ratio of two spacings, or 0 when not an integer multiple
        std::size_t int_ratio(double big, double small)
        {
            double k = big / small;
            double r = std::round(k);
            if (r >= 1.0 && std::abs(k - r) < 1e-9)
                return static_cast<std::size_t>(r);
            return 0;
        }
    } // namespace

    Pattern resample(const Pattern &p, const SphericalGrid &target)
    {
        if (p.grid.same_layout(target))
            return p;

        std::size_t rt = int_ratio(p.grid.delta_theta_deg, target.delta_theta_deg);
        std::size_t ct = int_ratio(target.delta_theta_deg, p.grid.delta_theta_deg);
        std::size_t rp = int_ratio(p.grid.delta_phi_deg, target.delta_phi_deg);
        std::size_t cp = int_ratio(target.delta_phi_deg, p.grid.delta_phi_deg);
        if ((rt == 0 && ct == 0) || (rp == 0 && cp == 0))
            throw std::invalid_argument("resample: source and target spacings are not related by an integer factor");
        if (target.theta_max_deg > p.grid.theta_max_deg + 1e-9)
            throw std::invalid_argument("resample: target domain extends beyond the source theta limit");

        Pattern out;
        out.grid = target;
        out.link = p.link;
        out.band = p.band;
        out.kind = p.kind;
        out.convention = p.convention;
        out.e_theta.resize(target.n_nodes());
        out.e_phi.resize(target.n_nodes());

        const std::size_t src_nt = p.grid.theta_nodes_deg.size();
        const std::size_t src_np = p.grid.n_phi();

        auto source_value = [&](std::size_t it, std::size_t ip, bool theta_pol) -> std::complex<double> {
            std::size_t node = p.grid.node_index(it, ip);
            return theta_pol ? p.e_theta[node] : p.e_phi[node];
        };

        auto interp = [&](const AxisMap &mt, const AxisMap &mp, bool theta_pol) -> std::complex<double> {
            std::complex<double> v00 = source_value(mt.lo, mp.lo, theta_pol);
            std::complex<double> v01 = source_value(mt.lo, mp.hi, theta_pol);
            std::complex<double> v10 = source_value(mt.hi, mp.lo, theta_pol);
            std::complex<double> v11 = source_value(mt.hi, mp.hi, theta_pol);
            double m0 = lerp_exact(std::abs(v00), std::abs(v01), mp.frac);
            double m1 = lerp_exact(std::abs(v10), std::abs(v11), mp.frac);
            double mag = lerp_exact(m0, m1, mt.frac);
            if (p.kind == PatternKind::scalar)
                return {mag, 0.0};
            double a0 = lerp_angle(std::arg(v00), std::arg(v01), mp.frac);
            double a1 = lerp_angle(std::arg(v10), std::arg(v11), mp.frac);
            double ang = lerp_angle(a0, a1, mt.frac);
            return std::polar(mag, ang);
        };

        for (std::size_t i = 0; i < target.n_nodes(); ++i)
        {
            double theta = target.node_theta_deg(i);
            double phi = target.node_phi_deg(i);
            std::size_t ti = static_cast<std::size_t>(std::llround(theta / target.delta_theta_deg));
            std::size_t pi_ = static_cast<std::size_t>(std::llround(phi / target.delta_phi_deg));

            AxisMap mt = (ct > 1) ? map_axis(ti, 1, ct, src_nt, false) : map_axis(ti, rt ? rt : 1, 1, src_nt, false);
            AxisMap mp = (cp > 1) ? map_axis(pi_, 1, cp, src_np, true) : map_axis(pi_, rp ? rp : 1, 1, src_np, true);

            out.e_theta[i] = interp(mt, mp, true);
            out.e_phi[i] = interp(mt, mp, false);
        }
        return out;
    }

    Pattern normalize(const Pattern &p, const Region &region, NormalizeMode mode)
    {
        auto mask = region_mask(p.grid, region);
        double ref = 0.0;
        if (mode == NormalizeMode::max_total)
        {
            for (std::size_t i = 0; i < mask.size(); ++i)
                if (mask[i])
                    ref = std::max(ref, p.p_total(i));
        }
        else
        {
            AreaWeights w = area_weights(p.grid);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < mask.size(); ++i)
                if (mask[i])
                {
                    num += w.steradians[i] * p.p_total(i);
                    den += w.steradians[i];
                }
            ref = num / den;
        }
        if (ref <= 0.0)
            throw std::invalid_argument("normalize: pattern power vanishes on the region");

        double scale = 1.0 / std::sqrt(ref);
        Pattern out = p;
        for (std::size_t i = 0; i < out.e_theta.size(); ++i)
        {
            out.e_theta[i] *= scale;
            out.e_phi[i] *= scale;
        }
        return out;
    }

    Pattern scalar_magnitude(const Pattern &p)
    {
        Pattern out = p;
        out.kind = PatternKind::scalar;
        for (std::size_t i = 0; i < out.e_theta.size(); ++i)
        {
            out.e_theta[i] = {std::abs(p.e_theta[i]), 0.0};
            out.e_phi[i] = {std::abs(p.e_phi[i]), 0.0};
        }
        return out;
    }

} // namespace duprec

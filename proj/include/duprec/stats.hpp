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

#ifndef DUPREC_STATS_HPP
#define DUPREC_STATS_HPP

#include <string>
#include <vector>

#include "duprec/grid.hpp"
#include "duprec/scalar_metrics.hpp"

namespace duprec
{
    enum class AggregateKind { max, mean, mean_plus_sigma, mean_minus_sigma, min };

    std::string to_string(AggregateKind k);

    // Area-weighted aggregates of a metric field over its region mask. sigma is the
    // population standard deviation (the region is the population of directions, not
    // a sample of it). Non-finite values (e.g. XPD sentinels) are skipped.
    struct FieldSummary
    {
        double mean = 0.0;
        double sigma = 0.0;
        double max = 0.0;
        double min = 0.0;
        std::size_t n = 0;

        double get(AggregateKind k) const;
    };

    FieldSummary aggregate(const MetricField &field);

    // One population entry: the value of a named metric aggregate for a (phone, band)
    // case over a region, feeding the cumulative distribution plots.
    struct PopulationSample
    {
        std::string phone_id;
        std::string band;
        std::string region_name;
        std::string metric;
        AggregateKind kind = AggregateKind::mean;
        double value = 0.0;
    };

    // Right-continuous empirical CDF: prob[i] = (i+1)/n over the sorted values.
    struct CdfCurve
    {
        std::vector<double> value;
        std::vector<double> prob;
    };

    CdfCurve population_cdf(std::vector<double> samples);

    // Empirical quantile with linear interpolation of the order statistics
    // (h = (n-1)p convention). `level` in [0, 1]; samples need not be sorted.
    double quantile(std::vector<double> samples, double level);

} // namespace duprec

#endif

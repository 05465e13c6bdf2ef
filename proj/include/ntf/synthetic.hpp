#pragma once

// Synthetic network traffic generator: per-link series composed of baseline,
// slow trend, daily and weekly seasonality, a shared latent factor per latent
// cluster, and Gaussian noise, clipped at zero. The links are the arcs of a
// weakly-connected random digraph.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "ntf/clustering.hpp"
#include "ntf/common.hpp"
#include "ntf/graph.hpp"
#include "ntf/timeseries.hpp"

namespace ntf {

struct SynthResult {
    NetworkMTS data;
    ClusterAssignment ground_truth;
    LineDigraph graph;      // links-as-nodes adjacency, consumed by the GAT
    Digraph underlying;     // device-level digraph whose arcs are the links
    std::uint64_t seed = 0;
};

namespace detail {

inline Digraph random_connected_digraph(Index n_arcs, Rng& rng) {
    // smallest sensible node count with arc capacity m*(m-1) >= n_arcs
    Index m = static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(n_arcs)))) + 1;
    if (m < 2) m = 2;
    while (m * (m - 1) < n_arcs) ++m;

    Digraph g;
    g.n_nodes = m;
    std::set<std::pair<Index, Index>> used;

    // random spanning tree (random parent among already-attached nodes),
    // arcs oriented at random: weak connectivity by construction
    std::vector<Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Index{0});
    rng.shuffle(order);
    for (Index i = 1; i < m && static_cast<Index>(g.arcs.size()) < n_arcs; ++i) {
        const Index child = order[static_cast<std::size_t>(i)];
        const Index parent = order[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i)))];
        const bool flip = rng.uniform01() < 0.5;
        const auto arc = flip ? std::make_pair(child, parent) : std::make_pair(parent, child);
        g.arcs.push_back(arc);
        used.insert(arc);
    }
    while (static_cast<Index>(g.arcs.size()) < n_arcs) {
        const Index u = static_cast<Index>(rng.below(static_cast<std::uint64_t>(m)));
        const Index v = static_cast<Index>(rng.below(static_cast<std::uint64_t>(m)));
        if (u == v) continue;
        const auto arc = std::make_pair(u, v);
        if (!used.insert(arc).second) continue;
        g.arcs.push_back(arc);
    }
    return g;
}

}  // namespace detail

inline SynthResult synth_generate(Index n_links, Index n_hours, Index n_latent_clusters,
                                  std::uint64_t seed) {
    if (n_links < 2) throw ArgumentError("synth_generate: n_links must be >= 2");
    if (n_hours < 2 * kHoursPerWeek)
        throw ArgumentError("synth_generate: n_hours must be >= " +
                            std::to_string(2 * kHoursPerWeek));
    if (n_latent_clusters < 1 || n_latent_clusters > n_links)
        throw ArgumentError("synth_generate: n_latent_clusters must be in [1, n_links]");

    Rng rng(seed);
    SynthResult out;
    out.seed = seed;
    out.underlying = detail::random_connected_digraph(n_links, rng);
    out.graph = line_digraph(out.underlying);

    // latent cluster labels: shuffled round-robin so every cluster is non-empty
    std::vector<Index> perm(static_cast<std::size_t>(n_links));
    std::iota(perm.begin(), perm.end(), Index{0});
    rng.shuffle(perm);
    out.ground_truth.k = n_latent_clusters;
    out.ground_truth.labels.assign(static_cast<std::size_t>(n_links), 0);
    for (Index i = 0; i < n_links; ++i)
        out.ground_truth.labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            i % n_latent_clusters;
    out.ground_truth.validate();

    constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
    const Index k = n_latent_clusters;

    // cluster-level structure: distinct daily/weekly phases plus a smooth
    // latent factor (mix of mid-range sinusoids)
    struct ClusterSignal {
        double daily_phase, weekly_phase;
        double f_amp[3], f_period[3], f_phase[3];
    };
    std::vector<ClusterSignal> cs(static_cast<std::size_t>(k));
    for (Index c = 0; c < k; ++c) {
        auto& s = cs[static_cast<std::size_t>(c)];
        s.daily_phase = kTwoPi * static_cast<double>(c) / static_cast<double>(k) + rng.uniform(-0.1, 0.1);
        s.weekly_phase = kTwoPi * rng.uniform01();
        for (int i = 0; i < 3; ++i) {
            s.f_amp[i] = rng.uniform(5.0, 9.0);
            s.f_period[i] = rng.uniform(40.0, 400.0);
            s.f_phase[i] = kTwoPi * rng.uniform01();
        }
    }

    struct SeriesParams {
        double baseline, trend_amp, trend_phase, trend_slope;
        double daily_amp, daily_jitter, weekly_amp, weekly_jitter, latent_gain;
    };
    std::vector<SeriesParams> sp(static_cast<std::size_t>(n_links));
    for (Index n = 0; n < n_links; ++n) {
        auto& p = sp[static_cast<std::size_t>(n)];
        p.baseline = rng.uniform(80.0, 130.0);
        p.trend_amp = rng.uniform(4.0, 10.0);
        p.trend_phase = kTwoPi * rng.uniform01();
        p.trend_slope = rng.uniform(-8.0, 8.0);
        p.daily_amp = rng.uniform(9.0, 15.0);
        p.daily_jitter = rng.uniform(-0.15, 0.15);
        p.weekly_amp = rng.uniform(4.0, 8.0);
        p.weekly_jitter = rng.uniform(-0.15, 0.15);
        p.latent_gain = rng.uniform(0.8, 1.2);
    }

    const double noise_sigma = 1.5;  // calibrated: clusters recoverable, series not noiseless
    const std::int64_t t0 = parse_iso8601("2025-01-01T00:00:00Z");

    NetworkMTS& data = out.data;
    data.link_ids = out.graph.node_ids;
    data.timestamps.resize(static_cast<std::size_t>(n_hours));
    for (Index t = 0; t < n_hours; ++t)
        data.timestamps[static_cast<std::size_t>(t)] = t0 + t * kHourSeconds;
    data.values.resize(n_hours, n_links);

    for (Index n = 0; n < n_links; ++n) {
        const auto& p = sp[static_cast<std::size_t>(n)];
        const auto& c = cs[static_cast<std::size_t>(out.ground_truth.labels[static_cast<std::size_t>(n)])];
        for (Index t = 0; t < n_hours; ++t) {
            const double ft = static_cast<double>(t);
            const double frac = ft / static_cast<double>(n_hours);
            double latent = 0.0;
            for (int i = 0; i < 3; ++i)
                latent += c.f_amp[i] * std::sin(kTwoPi * ft / c.f_period[i] + c.f_phase[i]);
            double v = p.baseline;
            v += p.trend_amp * std::sin(kTwoPi * frac + p.trend_phase) + p.trend_slope * (frac - 0.5);
            v += p.daily_amp * std::sin(kTwoPi * ft / 24.0 + c.daily_phase + p.daily_jitter);
            v += p.weekly_amp * std::sin(kTwoPi * ft / 168.0 + c.weekly_phase + p.weekly_jitter);
            v += p.latent_gain * latent;
            v += noise_sigma * rng.normal();
            data.values(t, n) = std::max(0.0, v);
        }
    }

    data.metadata["unit"] = "megabits/s";
    data.metadata["source"] = "synthetic";
    data.metadata["seed"] = std::to_string(seed);
    data.validate();
    return out;
}

inline nlohmann::json synth_sidecar_json(const SynthResult& r) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [i, j] : r.graph.arcs) arcs.push_back({i, j});
    return nlohmann::json{{"link_ids", r.data.link_ids},
                          {"ground_truth_clusters", r.ground_truth.labels},
                          {"graph_arcs", arcs},
                          {"seed", r.seed}};
}

// Rebuild the link graph from a sidecar written by synth_sidecar_json.
inline LineDigraph graph_from_sidecar(const nlohmann::json& j) {
    LineDigraph g;
    g.node_ids = j.at("link_ids").get<std::vector<std::string>>();
    for (const auto& arc : j.at("graph_arcs"))
        g.arcs.emplace_back(arc.at(0).get<Index>(), arc.at(1).get<Index>());
    g.validate();
    return g;
}

}  // namespace ntf

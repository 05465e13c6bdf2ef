#pragma once

// Agglomerative average-linkage clustering on correlation distance
// d = 1 - rho. Fully deterministic: ties merge the lowest (i,j) cluster-id
// pair, and final labels are ordered by each cluster's smallest member.

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include "ntf/common.hpp"
#include "ntf/correlation.hpp"

namespace ntf {

struct ClusterAssignment {
    Index k = 0;
    std::vector<Index> labels;  // length N, values in [0,k)
    std::optional<SplitProvenance> fingerprint;  // provenance of the affinity fit

    Index n_series() const { return static_cast<Index>(labels.size()); }

    void validate() const {
        if (k < 1) throw ArgumentError("cluster count must be >= 1");
        std::vector<Index> sizes(static_cast<std::size_t>(k), 0);
        for (Index l : labels) {
            if (l < 0 || l >= k) throw IntegrityError("cluster label out of range");
            sizes[static_cast<std::size_t>(l)]++;
        }
        for (Index c = 0; c < k; ++c)
            if (sizes[static_cast<std::size_t>(c)] == 0)
                throw IntegrityError("cluster " + std::to_string(c) + " is empty");
    }

    std::vector<std::vector<Index>> members() const {
        std::vector<std::vector<Index>> out(static_cast<std::size_t>(k));
        for (Index i = 0; i < n_series(); ++i)
            out[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])].push_back(i);
        return out;
    }
};

inline ClusterAssignment cluster_series(const CorrelationMatrix& corr, Index k) {
    const Index n = corr.size();
    if (k < 1 || k > n)
        throw ArgumentError("cluster count must be in [1," + std::to_string(n) + "], got " +
                            std::to_string(k));

    // active cluster -> members; cluster id = smallest member index
    std::vector<std::vector<Index>> clusters(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) clusters[static_cast<std::size_t>(i)] = {i};
    std::vector<bool> active(static_cast<std::size_t>(n), true);
    Index n_active = n;

    auto linkage = [&](Index a, Index b) {
        double sum = 0.0;
        for (Index i : clusters[static_cast<std::size_t>(a)])
            for (Index j : clusters[static_cast<std::size_t>(b)]) sum += 1.0 - corr.rho(i, j);
        return sum / static_cast<double>(clusters[static_cast<std::size_t>(a)].size() *
                                         clusters[static_cast<std::size_t>(b)].size());
    };

    while (n_active > k) {
        Index best_a = -1, best_b = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (Index a = 0; a < n; ++a) {
            if (!active[static_cast<std::size_t>(a)]) continue;
            for (Index b = a + 1; b < n; ++b) {
                if (!active[static_cast<std::size_t>(b)]) continue;
                const double d = linkage(a, b);
                if (d < best_d) {  // strict: first minimal pair in (a,b) order wins ties
                    best_d = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        auto& dst = clusters[static_cast<std::size_t>(best_a)];
        auto& src = clusters[static_cast<std::size_t>(best_b)];
        dst.insert(dst.end(), src.begin(), src.end());
        std::sort(dst.begin(), dst.end());
        src.clear();
        active[static_cast<std::size_t>(best_b)] = false;
        --n_active;
    }

    ClusterAssignment out;
    out.k = k;
    out.labels.assign(static_cast<std::size_t>(n), -1);
    out.fingerprint = corr.fingerprint;
    Index next_label = 0;
    for (Index a = 0; a < n; ++a) {  // clusters ordered by smallest member == id
        if (!active[static_cast<std::size_t>(a)]) continue;
        for (Index i : clusters[static_cast<std::size_t>(a)])
            out.labels[static_cast<std::size_t>(i)] = next_label;
        ++next_label;
    }
    out.validate();
    return out;
}

// Adjusted Rand index between two labelings of the same items.
inline double adjusted_rand(const std::vector<Index>& a, const std::vector<Index>& b) {
    if (a.size() != b.size()) throw ArgumentError("adjusted_rand: size mismatch");
    const Index n = static_cast<Index>(a.size());
    const Index ka = 1 + *std::max_element(a.begin(), a.end());
    const Index kb = 1 + *std::max_element(b.begin(), b.end());
    Matrix table = Matrix::Zero(ka, kb);
    for (Index i = 0; i < n; ++i) table(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]) += 1.0;
    auto comb2 = [](double m) { return m * (m - 1.0) / 2.0; };
    double sum_ij = 0.0, sum_a = 0.0, sum_b = 0.0;
    for (Index i = 0; i < ka; ++i) sum_a += comb2(table.row(i).sum());
    for (Index j = 0; j < kb; ++j) sum_b += comb2(table.col(j).sum());
    for (Index i = 0; i < ka; ++i)
        for (Index j = 0; j < kb; ++j) sum_ij += comb2(table(i, j));
    const double total = comb2(static_cast<double>(n));
    const double expected = sum_a * sum_b / total;
    const double max_index = 0.5 * (sum_a + sum_b);
    if (max_index == expected) return 1.0;
    return (sum_ij - expected) / (max_index - expected);
}

inline nlohmann::json cluster_to_json(const ClusterAssignment& a) {
    return nlohmann::json{{"k", a.k}, {"labels", a.labels}};
}

inline ClusterAssignment cluster_from_json(const nlohmann::json& j) {
    ClusterAssignment a;
    a.k = j.at("k").get<Index>();
    a.labels = j.at("labels").get<std::vector<Index>>();
    a.validate();
    return a;
}

}  // namespace ntf

#pragma once

// Spearman / Pearson correlation matrices over the N series. Spearman is
// Pearson on average-rank transforms (ties share the mean rank). Constant
// series correlate 0 with everything and 1 with themselves.

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "ntf/common.hpp"
#include "ntf/timeseries.hpp"

namespace ntf {

enum class CorrelationMethod { spearman, pearson };

struct CorrelationMatrix {
    CorrelationMethod method = CorrelationMethod::spearman;
    Matrix rho;  // N×N, symmetric, unit diagonal, entries in [-1,1]
    std::optional<SplitProvenance> fingerprint;  // rows the correlations were fitted on

    Index size() const { return rho.rows(); }
};

// Average ranks (1-based; ties get the mean of their positions).
inline Vector average_ranks(const Vector& x) {
    const Index T = x.size();
    std::vector<Index> order(static_cast<std::size_t>(T));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return x[a] < x[b]; });
    Vector ranks(T);
    Index i = 0;
    while (i < T) {
        Index j = i;
        while (j + 1 < T && x[order[static_cast<std::size_t>(j + 1)]] == x[order[static_cast<std::size_t>(i)]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (Index t = i; t <= j; ++t) ranks[order[static_cast<std::size_t>(t)]] = avg;
        i = j + 1;
    }
    return ranks;
}

inline double pearson_corr(const Vector& a, const Vector& b) {
    const Index T = a.size();
    const double ma = a.mean();
    const double mb = b.mean();
    double num = 0.0, da = 0.0, db = 0.0;
    for (Index t = 0; t < T; ++t) {
        const double xa = a[t] - ma;
        const double xb = b[t] - mb;
        num += xa * xb;
        da += xa * xa;
        db += xb * xb;
    }
    if (da <= 0.0 || db <= 0.0) return 0.0;  // constant-series convention
    double r = num / std::sqrt(da * db);
    return std::clamp(r, -1.0, 1.0);
}

inline CorrelationMatrix correlation_matrix(const NetworkMTS& data, CorrelationMethod method) {
    const Index T = data.rows();
    const Index N = data.cols();
    if (T < 3) throw ArgumentError("correlation needs T >= 3 (got " + std::to_string(T) + ")");

    std::vector<Vector> cols(static_cast<std::size_t>(N));
    for (Index n = 0; n < N; ++n) {
        Vector col = data.values.col(n);
        cols[static_cast<std::size_t>(n)] =
            method == CorrelationMethod::spearman ? average_ranks(col) : col;
    }

    CorrelationMatrix out;
    out.method = method;
    out.rho = Matrix::Identity(N, N);
    out.fingerprint = data.provenance;
    for (Index i = 0; i < N; ++i)
        for (Index j = i + 1; j < N; ++j) {
            const double r = pearson_corr(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
            out.rho(i, j) = r;
            out.rho(j, i) = r;
        }
    return out;
}

inline CorrelationMatrix spearman_matrix(const NetworkMTS& data) {
    return correlation_matrix(data, CorrelationMethod::spearman);
}

inline CorrelationMatrix pearson_matrix(const NetworkMTS& data) {
    return correlation_matrix(data, CorrelationMethod::pearson);
}

}  // namespace ntf

#include "aperiodica/correlations.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "aperiodica/numerics.hpp"
#include "aperiodica/parallel.hpp"

namespace aperiodica {

namespace {

std::uint64_t pack_delta(std::int64_t dn, std::int64_t dm) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(dn)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(dm));
}

bool lex_nonneg(std::span<const double> t) {
    for (double v : t) {
        if (v > 0.0) return true;
        if (v < 0.0) return false;
    }
    return true;  // zero vector
}

double max_norm(std::span<const double> t) {
    double m = 0.0;
    for (double v : t) m = std::max(m, std::abs(v));
    return m;
}

/// Indices of points inside the centered cube of edge `radius`.
std::vector<std::size_t> window_indices(const ColoredPointSet& set,
                                        double radius) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < set.size(); ++i)
        if (in_window(set.position(i), radius)) idx.push_back(i);
    return idx;
}

/// Displacement clusters discovered over ordered pairs (x, x + t) with x in
/// the inner window and t lexicographically nonnegative, |t|_inf <= max_lag.
/// A cluster's representative is the smallest displacement value assigned to
/// it, which keeps results independent of thread interleaving.
struct ClusterTable {
    int dimension = 1;
    bool exact = false;  // keyed by integer lattice deltas
    // exact path
    std::unordered_map<std::uint64_t, int> id_by_delta;
    // quantized path, d == 1: merged runs of adjacent tolerance cells
    std::vector<std::int64_t> cell_lo, cell_hi;
    // quantized path, d >= 2: one cluster per unique cell vector
    std::vector<std::vector<std::int64_t>> cells;
    std::vector<std::vector<double>> reps;  // representative displacement

    int size() const { return static_cast<int>(reps.size()); }

    int cluster_of(const ColoredPointSet& set, std::size_t i, std::size_t j,
                   std::span<const double> t) const {
        if (exact) {
            const auto& a = set.lattice[i];
            const auto& b = set.lattice[j];
            return id_by_delta.at(pack_delta(b[0] - a[0], b[1] - a[1]));
        }
        if (dimension == 1) {
            const std::int64_t c = quantize(t[0]);
            auto it = std::upper_bound(cell_lo.begin(), cell_lo.end(), c);
            const int k = static_cast<int>(it - cell_lo.begin()) - 1;
            return k;  // phase order guarantees c <= cell_hi[k]
        }
        std::vector<std::int64_t> c(t.size());
        for (std::size_t a = 0; a < t.size(); ++a) c[a] = quantize(t[a]);
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return static_cast<int>(it - cells.begin());
    }
};

template <typename PairVisitor>
void for_each_canonical_pair(const ColoredPointSet& set,
                             const std::vector<std::size_t>& inner,
                             double max_lag, int nthreads, PairVisitor&& visit) {
    const int d = set.dimension;
    const auto n_inner = static_cast<std::int64_t>(inner.size());
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<double> t(d);
#pragma omp for schedule(static)
        for (std::int64_t ii = 0; ii < n_inner; ++ii) {
            const std::size_t i = inner[static_cast<std::size_t>(ii)];
            const auto xi = set.position(i);
            const std::size_t begin =
                lower_bound_first_coord(set, xi[0] - max_lag, kMatchTol);
            for (std::size_t j = begin; j < set.size(); ++j) {
                const auto xj = set.position(j);
                if (xj[0] > xi[0] + max_lag + kMatchTol) break;
                for (int a = 0; a < d; ++a) t[a] = xj[a] - xi[a];
                if (max_norm(t) > max_lag) continue;
                if (!lex_nonneg(t)) continue;
                visit(i, j, std::span<const double>(t.data(), t.size()),
                      omp_get_thread_num());
            }
        }
    }
}

ClusterTable discover_clusters(const ColoredPointSet& set,
                               const std::vector<std::size_t>& inner,
                               double max_lag, int nthreads) {
    ClusterTable table;
    table.dimension = set.dimension;
    table.exact = set.has_lattice_coords();

    if (table.exact) {
        std::vector<std::unordered_map<std::uint64_t, double>> local(nthreads);
        for_each_canonical_pair(
            set, inner, max_lag, nthreads,
            [&](std::size_t i, std::size_t j, std::span<const double> t, int tid) {
                const auto& a = set.lattice[i];
                const auto& b = set.lattice[j];
                const std::uint64_t key = pack_delta(b[0] - a[0], b[1] - a[1]);
                auto [it, fresh] = local[tid].try_emplace(key, t[0]);
                if (!fresh && t[0] < it->second) it->second = t[0];
            });
        std::unordered_map<std::uint64_t, double> merged;
        for (auto& part : local)
            for (auto [key, rep] : part) {
                auto [it, fresh] = merged.try_emplace(key, rep);
                if (!fresh && rep < it->second) it->second = rep;
            }
        std::vector<std::pair<double, std::uint64_t>> ordered;  // (rep, delta)
        ordered.reserve(merged.size());
        for (auto [key, rep] : merged) ordered.emplace_back(rep, key);
        std::sort(ordered.begin(), ordered.end());
        for (auto& [rep, key] : ordered) {
            table.id_by_delta[key] = table.size();
            table.reps.push_back({rep});
        }
        return table;
    }

    if (set.dimension == 1) {
        std::vector<std::unordered_map<std::int64_t, double>> local(nthreads);
        for_each_canonical_pair(
            set, inner, max_lag, nthreads,
            [&](std::size_t, std::size_t, std::span<const double> t, int tid) {
                const std::int64_t cell = quantize(t[0]);
                auto [it, fresh] = local[tid].try_emplace(cell, t[0]);
                if (!fresh && t[0] < it->second) it->second = t[0];
            });
        std::map<std::int64_t, double> cells;
        for (auto& part : local)
            for (auto [cell, rep] : part) {
                auto [it, fresh] = cells.try_emplace(cell, rep);
                if (!fresh && rep < it->second) it->second = rep;
            }
        // Merge runs of adjacent tolerance cells into one cluster.
        for (auto it = cells.begin(); it != cells.end();) {
            const std::int64_t lo = it->first;
            std::int64_t hi = lo;
            double rep = it->second;
            auto run = std::next(it);
            while (run != cells.end() && run->first == hi + 1) {
                rep = std::min(rep, run->second);
                hi = run->first;
                ++run;
            }
            table.cell_lo.push_back(lo);
            table.cell_hi.push_back(hi);
            table.reps.push_back({rep});
            it = run;
        }
        return table;
    }

    using CellVec = std::vector<std::int64_t>;
    std::vector<std::map<CellVec, std::vector<double>>> local(nthreads);
    for_each_canonical_pair(
        set, inner, max_lag, nthreads,
        [&](std::size_t, std::size_t, std::span<const double> t, int tid) {
            CellVec cell(t.size());
            for (std::size_t a = 0; a < t.size(); ++a) cell[a] = quantize(t[a]);
            std::vector<double> val(t.begin(), t.end());
            auto [it, fresh] = local[tid].try_emplace(std::move(cell), val);
            if (!fresh &&
                std::lexicographical_compare(val.begin(), val.end(),
                                             it->second.begin(), it->second.end()))
                it->second = val;
        });
    std::map<CellVec, std::vector<double>> merged;
    for (auto& part : local)
        for (auto& [cell, rep] : part) {
            auto [it, fresh] = merged.try_emplace(cell, rep);
            if (!fresh &&
                std::lexicographical_compare(rep.begin(), rep.end(),
                                             it->second.begin(), it->second.end()))
                it->second = rep;
        }
    for (auto& [cell, rep] : merged) {
        table.cells.push_back(cell);
        table.reps.push_back(rep);
    }
    return table;
}

bool lex_less_span(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint64_t hash_sequence(const SequenceWindow& seq) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::int64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<unsigned char>(v >> (8 * b));
            h *= 1099511628211ull;
        }
    };
    mix(seq.first_index);
    mix(seq.num_colors);
    for (int s : seq.symbols) mix(s);
    return h;
}

}  // namespace

std::optional<double> AutocorrelationMeasure::value_at(
    std::span<const double> t, double tol) const {
    const std::size_t n = size();
    // binary search on the leading lag coordinate
    std::size_t lo = 0, hi = n;
    const double target = t[0] - tol;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (lags[mid * dimension] < target)
            lo = mid + 1;
        else
            hi = mid;
    }
    for (std::size_t i = lo; i < n; ++i) {
        auto li = lag(i);
        if (li[0] > t[0] + tol) break;
        double m = 0.0;
        for (int a = 0; a < dimension; ++a)
            m = std::max(m, std::abs(li[a] - t[a]));
        if (m <= tol) return values[i];
    }
    return std::nullopt;
}

double AutocorrelationMeasure::at_zero() const {
    const std::vector<double> zero(dimension, 0.0);
    return value_at_or_zero(zero);
}

DisplacementCounts displacement_counts(const ColoredPointSet& points,
                                       double max_lag, int threads) {
    if (max_lag < 0.0) throw std::invalid_argument("max_lag must be >= 0");
    if (!(2.0 * max_lag < points.window_radius))
        throw std::invalid_argument("lag exceeds window");
    const int nthreads = resolve_threads(threads);
    const int d = points.dimension;
    const int m = points.num_colors;

    DisplacementCounts out;
    out.dimension = d;
    out.num_colors = m;
    out.radius_used = points.window_radius;
    out.inner_radius = points.window_radius - 2.0 * max_lag;
    out.max_lag = max_lag;
    out.source_id = fingerprint(points);

    const auto inner = window_indices(points, out.inner_radius);
    const auto table = discover_clusters(points, inner, max_lag, nthreads);
    const int n_clusters = table.size();
    for (const auto& rep : table.reps)
        out.reps.insert(out.reps.end(), rep.begin(), rep.end());

    std::vector<std::vector<std::int64_t>> local_counts(
        nthreads, std::vector<std::int64_t>(
                      static_cast<std::size_t>(n_clusters) * m * m, 0));
    for_each_canonical_pair(
        points, inner, max_lag, nthreads,
        [&](std::size_t i, std::size_t j, std::span<const double> t, int tid) {
            const int k = table.cluster_of(points, i, j, t);
            const int ci = points.colors[i] - 1;
            const int cj = points.colors[j] - 1;
            local_counts[tid][(static_cast<std::size_t>(k) * m + ci) * m + cj] += 1;
        });
    out.counts.assign(static_cast<std::size_t>(n_clusters) * m * m, 0);
    for (const auto& part : local_counts)
        for (std::size_t e = 0; e < out.counts.size(); ++e)
            out.counts[e] += part[e];

    out.color_counts.assign(m, 0);
    for (std::size_t idx : inner) out.color_counts[points.colors[idx] - 1] += 1;
    return out;
}

AutocorrelationMeasure weigh_displacements(const DisplacementCounts& counts,
                                           const WeightSystem& w) {
    if (w.size() != counts.num_colors)
        throw std::invalid_argument("weight system length must equal num_colors");
    const int d = counts.dimension;
    const int m = counts.num_colors;
    const double vol = std::pow(counts.inner_radius, d);

    AutocorrelationMeasure ac;
    ac.dimension = d;
    ac.radius_used = counts.radius_used;
    ac.inner_radius = counts.inner_radius;
    ac.max_lag = counts.max_lag;
    ac.weight_system = w;
    ac.source_id = counts.source_id;

    double iw = 0.0;
    for (int c = 0; c < m; ++c)
        iw += w.weights[c] * static_cast<double>(counts.color_counts[c]);
    ac.intensity = vol > 0.0 ? iw / vol : 0.0;

    struct Entry {
        std::vector<double> t;
        double v;
    };
    const int n_clusters = counts.clusters();
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(n_clusters) * 2);
    for (int k = 0; k < n_clusters; ++k) {
        double sum = 0.0;
        for (int ci = 0; ci < m; ++ci)
            for (int cj = 0; cj < m; ++cj)
                sum += w.weights[ci] * w.weights[cj] *
                       static_cast<double>(
                           counts.counts[(static_cast<std::size_t>(k) * m + ci) * m +
                                         cj]);
        const double value = vol > 0.0 ? sum / vol : 0.0;
        std::vector<double> rep(counts.reps.begin() + k * d,
                                counts.reps.begin() + (k + 1) * d);
        bool zero = true;
        for (double v : rep) zero = zero && v == 0.0;
        if (!zero) {
            std::vector<double> neg(rep.size());
            for (std::size_t a = 0; a < rep.size(); ++a) neg[a] = -rep[a];
            entries.push_back({std::move(neg), value});
        }
        entries.push_back({std::move(rep), value});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return lex_less_span(a.t, b.t);
    });
    for (const auto& e : entries) {
        ac.lags.insert(ac.lags.end(), e.t.begin(), e.t.end());
        ac.values.push_back(e.v);
    }
    return ac;
}

AutocorrelationMeasure autocorrelation(const ColoredPointSet& points,
                                       const WeightSystem& w, double max_lag,
                                       int threads) {
    check_weights(points, w);
    return weigh_displacements(displacement_counts(points, max_lag, threads), w);
}

AutocorrelationMeasure sequence_autocorrelation(const SequenceWindow& seq,
                                                const WeightSystem& w,
                                                std::int64_t max_k,
                                                int threads) {
    if (w.size() != seq.num_colors)
        throw std::invalid_argument("weight system length must equal num_colors");
    if (max_k < 0) throw std::invalid_argument("max_k must be >= 0");
    const std::int64_t len = seq.size();
    if (!(2 * max_k < len)) throw std::invalid_argument("max_k too large");
    const int nthreads = resolve_threads(threads);
    const int m = seq.num_colors;

    std::vector<double> eta(static_cast<std::size_t>(max_k) + 1, 0.0);
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::int64_t k = 0; k <= max_k; ++k) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(m) * m, 0);
        const std::int64_t terms = len - k;
        for (std::int64_t i = 0; i < terms; ++i) {
            const int ci = seq.symbols[static_cast<std::size_t>(i)] - 1;
            const int cj = seq.symbols[static_cast<std::size_t>(i + k)] - 1;
            counts[static_cast<std::size_t>(ci) * m + cj] += 1;
        }
        double sum = 0.0;
        for (int ci = 0; ci < m; ++ci)
            for (int cj = 0; cj < m; ++cj)
                sum += w.weights[ci] * w.weights[cj] *
                       static_cast<double>(counts[static_cast<std::size_t>(ci) * m + cj]);
        eta[static_cast<std::size_t>(k)] = sum / static_cast<double>(terms);
    }

    AutocorrelationMeasure ac;
    ac.dimension = 1;
    ac.radius_used = static_cast<double>(len);
    ac.inner_radius = static_cast<double>(len);
    ac.max_lag = static_cast<double>(max_k);
    ac.weight_system = w;
    ac.source_id = hash_sequence(seq);
    std::vector<std::int64_t> color_counts(m, 0);
    for (int s : seq.symbols) color_counts[s - 1] += 1;
    double iw = 0.0;
    for (int c = 0; c < m; ++c)
        iw += w.weights[c] * static_cast<double>(color_counts[c]);
    ac.intensity = iw / static_cast<double>(len);

    for (std::int64_t k = -max_k; k <= max_k; ++k) {
        ac.lags.push_back(static_cast<double>(k));
        ac.values.push_back(eta[static_cast<std::size_t>(std::llabs(k))]);
    }
    return ac;
}

CorrelationTensor npoint_correlation(const ColoredPointSet& points,
                                     const WeightSystem& w,
                                     const std::vector<std::vector<double>>& tuples,
                                     int order, int threads, double erosion) {
    check_weights(points, w);
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const int d = points.dimension;
    const int m = points.num_colors;
    double needed = erosion;
    for (const auto& tup : tuples) {
        if (static_cast<int>(tup.size()) != order * d)
            throw std::invalid_argument("tuple size must be order * dimension");
        for (int i = 0; i < order; ++i) {
            const std::span<const double> ti(tup.data() + i * d,
                                             static_cast<std::size_t>(d));
            needed = std::max(needed, max_norm(ti));
        }
    }
    if (!(2.0 * needed < points.window_radius))
        throw std::invalid_argument("lag overflow");
    const int nthreads = resolve_threads(threads);

    CorrelationTensor tensor;
    tensor.order = order;
    tensor.dimension = d;
    tensor.tuples = tuples;
    tensor.values.assign(tuples.size(), 0.0);
    tensor.radius_used = points.window_radius;
    tensor.inner_radius = points.window_radius - 2.0 * needed;
    tensor.weight_system = w;
    tensor.source_id = fingerprint(points);

    const auto inner = window_indices(points, tensor.inner_radius);
    const double vol = std::pow(tensor.inner_radius, d);
    if (vol <= 0.0) return tensor;

    // Color-tuple counting keeps the accumulation exact (and, at order 1,
    // arithmetically identical to the autocorrelation); beyond the table cap
    // fall back to direct compensated summation.
    std::size_t combos = 1;
    bool countable = true;
    for (int i = 0; i <= order; ++i) {
        combos *= static_cast<std::size_t>(m);
        if (combos > 4096) {
            countable = false;
            break;
        }
    }

    const auto n_tuples = static_cast<std::int64_t>(tuples.size());
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::int64_t ti = 0; ti < n_tuples; ++ti) {
        const auto& tup = tuples[static_cast<std::size_t>(ti)];
        std::vector<double> target(d);
        if (countable) {
            std::vector<std::int64_t> counts(combos, 0);
            for (std::size_t idx : inner) {
                const auto x = points.position(idx);
                std::size_t code = static_cast<std::size_t>(points.colors[idx] - 1);
                bool complete = true;
                for (int i = 0; i < order && complete; ++i) {
                    for (int a = 0; a < d; ++a) target[a] = x[a] + tup[i * d + a];
                    const auto hit = find_position(points, target);
                    if (!hit) {
                        complete = false;
                        break;
                    }
                    code = code * m + static_cast<std::size_t>(points.colors[*hit] - 1);
                }
                if (complete) counts[code] += 1;
            }
            double sum = 0.0;
            for (std::size_t code = 0; code < combos; ++code) {
                if (counts[code] == 0) continue;
                double prod = 1.0;
                std::size_t rest = code;
                std::vector<int> digits(order + 1);
                for (int i = order; i >= 0; --i) {
                    digits[i] = static_cast<int>(rest % m);
                    rest /= m;
                }
                for (int i = 0; i <= order; ++i) prod *= w.weights[digits[i]];
                sum += prod * static_cast<double>(counts[code]);
            }
            tensor.values[static_cast<std::size_t>(ti)] = sum / vol;
        } else {
            KahanSum sum;
            for (std::size_t idx : inner) {
                const auto x = points.position(idx);
                double prod = w[points.colors[idx]];
                bool complete = true;
                for (int i = 0; i < order && complete; ++i) {
                    for (int a = 0; a < d; ++a) target[a] = x[a] + tup[i * d + a];
                    const auto hit = find_position(points, target);
                    if (!hit) {
                        complete = false;
                        break;
                    }
                    prod *= w[points.colors[*hit]];
                }
                if (complete) sum.add(prod);
            }
            tensor.values[static_cast<std::size_t>(ti)] = sum.value() / vol;
        }
    }
    return tensor;
}

double pattern_frequency(const ColoredPointSet& points, const Pattern& pattern,
                         int threads) {
    if (!(pattern.epsilon > 0.0))
        throw std::invalid_argument("pattern tolerance must be positive");
    if (pattern.anchor.empty())
        throw std::invalid_argument("pattern anchor must be nonempty");
    const int d = points.dimension;
    bool has_origin = false;
    double extent = 0.0;
    for (const auto& f : pattern.anchor) {
        if (static_cast<int>(f.position.size()) != d)
            throw std::invalid_argument("pattern dimension mismatch");
        if (f.color < 1 || f.color > points.num_colors)
            throw std::invalid_argument("pattern color out of range");
        const double norm = max_norm(f.position);
        extent = std::max(extent, norm);
        if (norm <= 1e-12) has_origin = true;
    }
    if (!has_origin)
        throw std::invalid_argument("pattern anchor must contain the origin");
    if (!(extent + pattern.epsilon <= points.window_radius / 4.0))
        throw std::invalid_argument("pattern too large for window");

    const double erosion = extent + pattern.epsilon;
    const double inner_radius = points.window_radius - 2.0 * erosion;
    const auto inner = window_indices(points, inner_radius);
    const double vol = std::pow(inner_radius, d);
    const int nthreads = resolve_threads(threads);
    const double eps = pattern.epsilon;
    const bool closed = pattern.closed;

    const auto n_inner = static_cast<std::int64_t>(inner.size());
    std::int64_t matched = 0;
#pragma omp parallel num_threads(nthreads)
    {
        std::vector<double> target(d);
#pragma omp for schedule(static) reduction(+ : matched)
        for (std::int64_t ii = 0; ii < n_inner; ++ii) {
            const auto x = points.position(inner[static_cast<std::size_t>(ii)]);
            bool all = true;
            for (const auto& f : pattern.anchor) {
                for (int a = 0; a < d; ++a) target[a] = x[a] + f.position[a];
                bool found = false;
                for (std::size_t j = lower_bound_first_coord(
                         points, target[0] - eps, kMatchTol);
                     j < points.size(); ++j) {
                    const auto y = points.position(j);
                    if (y[0] > target[0] + eps + kMatchTol) break;
                    if (points.colors[j] != f.color) continue;
                    double norm = 0.0;
                    for (int a = 0; a < d; ++a)
                        norm = std::max(norm, std::abs(y[a] - target[a]));
                    if (closed ? norm <= eps : norm < eps) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    all = false;
                    break;
                }
            }
            if (all) matched += 1;
        }
    }
    return vol > 0.0 ? static_cast<double>(matched) / vol : 0.0;
}

std::vector<double> solve_color_intensities(
    const std::vector<double>& diagonal_moments, const WeightSystem& w) {
    const int m = w.size();
    if (static_cast<int>(diagonal_moments.size()) != m)
        throw std::invalid_argument("one diagonal moment required per color");
    for (int i = 0; i < m; ++i) {
        if (std::abs(w.weights[i]) < 1e-12)
            throw std::invalid_argument("singular weight system");
        for (int j = i + 1; j < m; ++j)
            if (std::abs(w.weights[i] - w.weights[j]) < 1e-12)
                throw std::invalid_argument("singular weight system");
    }
    std::vector<double> vand(static_cast<std::size_t>(m) * m);
    for (int j = 1; j <= m; ++j)
        for (int k = 0; k < m; ++k)
            vand[static_cast<std::size_t>(j - 1) * m + k] =
                std::pow(w.weights[k], j);
    return solve_linear_system(std::move(vand), diagonal_moments, m);
}

std::vector<double> diagonal_moments_from(const std::vector<double>& c,
                                          const WeightSystem& w) {
    const int m = w.size();
    if (static_cast<int>(c.size()) != m)
        throw std::invalid_argument("component count mismatch");
    std::vector<double> d(m, 0.0);
    for (int j = 1; j <= m; ++j)
        for (int k = 0; k < m; ++k)
            d[j - 1] += std::pow(w.weights[k], j) * c[k];
    return d;
}

}  // namespace aperiodica

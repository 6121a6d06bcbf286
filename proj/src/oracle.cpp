#include "balance/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <string>

#include "balance/parallel.hpp"

namespace balance {

EnumerationCapExceeded::EnumerationCapExceeded(std::uint64_t needed_, std::uint64_t cap_)
    : std::runtime_error("enumeration needs " +
                         (needed_ == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                               : std::to_string(needed_)) +
                         " placements, above the cap of " + std::to_string(cap_)),
      needed(needed_),
      cap(cap_) {}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return std::uint64_t(acc);
}

std::vector<Vertex> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<Vertex> out;
    out.reserve(k);
    Vertex next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (;; ++next) {
            // Subsets whose current slot holds `next` and whose remaining slots use larger ids.
            auto block = binomial(n - next - 1, k - slot - 1);
            if (rank < block) break;
            rank -= block;
        }
        out.push_back(next++);
    }
    return out;
}

namespace {

bool next_combination(std::vector<Vertex>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

/// Distance rows for every vertex when they fit in memory, BFS on demand otherwise.
class DistanceSource {
public:
    explicit DistanceSource(const Graph& g) : g_(g), n_(g.num_vertices()) {
        if (n_ * n_ <= kMaxCachedCells) {
            cache_.resize(n_ * n_);
            parallel_for(n_, [&](std::size_t begin, std::size_t end) {
                for (std::size_t v = begin; v < end; ++v) {
                    auto d = bfs_distances(g_, Vertex(v));
                    std::copy(d.dist.begin(), d.dist.end(), cache_.begin() + std::ptrdiff_t(v * n_));
                }
            });
        }
    }

    ScoreReport score(std::span<const Vertex> placement) const {
        std::vector<std::span<const std::uint32_t>> rows;
        std::vector<DistanceVector> owned;
        rows.reserve(placement.size());
        if (!cache_.empty()) {
            for (Vertex u : placement) rows.emplace_back(cache_.data() + std::size_t(u) * n_, n_);
        } else {
            owned.reserve(placement.size());
            for (Vertex u : placement) owned.push_back(bfs_distances(g_, u));
            for (const auto& d : owned) rows.emplace_back(d.dist);
        }
        return scores_from_distances(n_, rows);
    }

private:
    static constexpr std::size_t kMaxCachedCells = std::size_t{1} << 25;
    const Graph& g_;
    std::size_t n_;
    std::vector<std::uint32_t> cache_;
};

std::uint64_t checked_total(const Graph& g, std::size_t k, std::uint64_t cap) {
    const auto n = g.num_vertices();
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n, got k = " + std::to_string(k));
    auto total = binomial(n, k);
    if (total > cap) throw EnumerationCapExceeded(total, cap);
    return total;
}

struct FirstHit {
    std::uint64_t rank;
    std::vector<Vertex> placement;
    ScoreReport report;
};

/// Lowest-rank placement satisfying `hit`, or nullopt. Workers scan disjoint
/// rank blocks and skip anything above the best rank found so far.
std::optional<FirstHit> first_hit(const Graph& g, std::size_t k, std::uint64_t total,
                                  const std::function<bool(const ScoreReport&)>& hit) {
    const auto n = g.num_vertices();
    DistanceSource source(g);
    constexpr std::uint64_t kBlock = 4096;
    const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
    std::atomic<std::uint64_t> best{total};
    std::optional<FirstHit> found;
    std::mutex found_mutex;
    parallel_for(blocks, [&](std::size_t first_block, std::size_t last_block) {
        for (std::size_t b = first_block; b < last_block; ++b) {
            std::uint64_t rank = b * kBlock;
            if (rank >= best) return;
            const std::uint64_t end = std::min(total, rank + kBlock);
            auto comb = unrank_combination(n, k, rank);
            for (; rank < end; ++rank) {
                auto report = source.score(comb);
                if (hit(report)) {
                    std::lock_guard lock(found_mutex);
                    if (rank < best) {
                        best = rank;
                        found = FirstHit{rank, comb, std::move(report)};
                    }
                    return;
                }
                next_combination(comb, n);
            }
        }
    });
    return found;
}

}  // namespace

BalancednessVerdict is_graph_z_balanced(const Graph& g, std::size_t k, const Rational& z, std::uint64_t cap) {
    if (z < Rational(0)) throw std::invalid_argument("z must be non-negative");
    BalancednessVerdict verdict;
    verdict.total_placements = checked_total(g, k, cap);
    auto hit = first_hit(g, k, verdict.total_placements,
                         [&](const ScoreReport& r) { return !is_z_balanced_placement(r, z); });
    if (!hit) {
        verdict.placements_examined = verdict.total_placements;
        return verdict;
    }
    verdict.balanced = false;
    verdict.placements_examined = hit->rank + 1;
    verdict.witness_min_score = hit->report.min_score();
    verdict.witness_max_score = hit->report.max_score();
    verdict.witness = Placement(std::move(hit->placement));
    return verdict;
}

UnbalancednessAnswer unbalancedness_decision(const Graph& g, std::size_t k, const Rational& s, std::uint64_t cap) {
    UnbalancednessAnswer answer;
    answer.total_placements = checked_total(g, k, cap);
    auto hit = first_hit(g, k, answer.total_placements, [&](const ScoreReport& r) { return r.min_score() < s; });
    if (!hit) {
        answer.placements_examined = answer.total_placements;
        return answer;
    }
    answer.answer = true;
    answer.placements_examined = hit->rank + 1;
    answer.witness_min_score = hit->report.min_score();
    answer.witness = Placement(std::move(hit->placement));
    return answer;
}

PlacementCount count_unbalanced_placements(const Graph& g, std::size_t k, const Rational& z, std::uint64_t cap) {
    if (z < Rational(0)) throw std::invalid_argument("z must be non-negative");
    PlacementCount count;
    count.total = checked_total(g, k, cap);
    const auto n = g.num_vertices();
    DistanceSource source(g);
    constexpr std::uint64_t kBlock = 4096;
    const std::uint64_t blocks = (count.total + kBlock - 1) / kBlock;
    std::atomic<std::uint64_t> violating{0};
    parallel_for(blocks, [&](std::size_t first_block, std::size_t last_block) {
        std::uint64_t local = 0;
        for (std::size_t b = first_block; b < last_block; ++b) {
            std::uint64_t rank = b * kBlock;
            const std::uint64_t end = std::min(count.total, rank + kBlock);
            auto comb = unrank_combination(n, k, rank);
            for (; rank < end; ++rank) {
                if (!is_z_balanced_placement(source.score(comb), z)) ++local;
                next_combination(comb, n);
            }
        }
        violating += local;
    });
    count.violating = violating;
    return count;
}

}  // namespace balance

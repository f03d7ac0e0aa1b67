#include "shrub/forest.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <utility>

#include "shrub/errors.hpp"

namespace shrub {

ShrubForest::ShrubForest(int k, std::vector<int> labels)
    : k_(k), labels_(std::move(labels)) {
    if (k_ < 2) throw invalid_input("shrub arity must be at least 2");
    const std::size_t block = static_cast<std::size_t>(k_) + 1;
    if (labels_.size() % block != 0) {
        throw invalid_input("label count " + std::to_string(labels_.size()) +
                            " is not a multiple of " + std::to_string(block));
    }
    n_ = static_cast<int>(labels_.size() / block);
    Permutation check(labels_);  // validates the label set
    for (int i = 0; i < n_; ++i) {
        const int r = root(i);
        for (int j = 0; j < k_; ++j) {
            if (leaf(i, j) < r) {
                throw not_a_shrub_word(
                    static_cast<std::size_t>(i),
                    "leaf " + std::to_string(leaf(i, j)) + " below root " +
                        std::to_string(r) + " in shrub " + std::to_string(i));
            }
        }
    }
}

Permutation pi_of_forest(const ShrubForest& f) { return Permutation(f.labels()); }

ShrubForest forest_of_pi(const Permutation& pi, int k) {
    if (k < 2) throw invalid_input("shrub arity must be at least 2");
    if (pi.size() % (k + 1) != 0) {
        throw invalid_input("permutation length " + std::to_string(pi.size()) +
                            " is not a multiple of " + std::to_string(k + 1));
    }
    return ShrubForest(k, pi.values());
}

HeapForest::HeapForest(std::vector<TreeShape> shapes, std::vector<int> labels)
    : shapes_(std::move(shapes)), labels_(std::move(labels)) {
    Permutation check(labels_);  // validates the label set
    std::size_t offset = 0;
    for (std::size_t t = 0; t < shapes_.size(); ++t) {
        const auto& counts = shapes_[t].child_counts;
        const std::size_t size = counts.size();
        if (size == 0) throw invalid_input("empty tree in heap forest");
        // Recover breadth-first parents from the child counts.
        std::vector<std::size_t> parent(size, 0);
        std::size_t next = 1;
        for (std::size_t i = 0; i < size; ++i) {
            if (counts[i] < 0) throw invalid_input("negative child count");
            for (int c = 0; c < counts[i]; ++c) {
                if (next >= size) {
                    throw invalid_input("tree shape has more children than nodes");
                }
                parent[next] = i;
                ++next;
            }
        }
        if (next != size) {
            throw invalid_input("tree shape leaves nodes unattached");
        }
        if (offset + size > labels_.size()) {
            throw invalid_input("labels shorter than the combined tree sizes");
        }
        for (std::size_t i = 1; i < size; ++i) {
            if (labels_[offset + i] < labels_[offset + parent[i]]) {
                throw not_a_shrub_word(
                    t, "label " + std::to_string(labels_[offset + i]) +
                           " below its parent " +
                           std::to_string(labels_[offset + parent[i]]) +
                           " in tree " + std::to_string(t));
            }
        }
        offset += size;
    }
    if (offset != labels_.size()) {
        throw invalid_input("labels longer than the combined tree sizes");
    }
}

Permutation pi_of_heap_forest(const HeapForest& f) { return Permutation(f.labels()); }

namespace {

// Tracks, for a growing prefix known to avoid every pattern, whether a
// candidate value may be appended without creating an occurrence.
class IncrementalAvoider {
public:
    explicit IncrementalAvoider(const PatternSet* set) {
        if (!set) return;
        for (const auto& p : set->patterns()) {
            if (p.values() == std::vector<int>{3, 2, 1}) {
                track_321_ = true;
            } else if (p.values() == std::vector<int>{1, 2, 3}) {
                track_123_ = true;
            } else {
                generic_.push_back(p.values());
            }
        }
    }

    bool can_append(int v) const {
        if (track_321_ && max_non_lr_max_ > v) return false;
        if (track_123_ && min_non_lr_min_ != 0 && min_non_lr_min_ < v) return false;
        for (const auto& rho : generic_) {
            if (completes(rho, v)) return false;
        }
        return true;
    }

    void push(int v) {
        if (track_321_ || track_123_) {
            history_.push_back({prefix_max_, prefix_min_, max_non_lr_max_,
                                min_non_lr_min_});
            if (prefix_max_ != 0 && v < prefix_max_) {
                max_non_lr_max_ = std::max(max_non_lr_max_, v);
            }
            if (prefix_min_ != 0 && v > prefix_min_) {
                min_non_lr_min_ =
                    min_non_lr_min_ == 0 ? v : std::min(min_non_lr_min_, v);
            }
            prefix_max_ = std::max(prefix_max_, v);
            prefix_min_ = prefix_min_ == 0 ? v : std::min(prefix_min_, v);
        }
        prefix_.push_back(v);
    }

    void pop() {
        prefix_.pop_back();
        if (track_321_ || track_123_) {
            const auto& h = history_.back();
            prefix_max_ = h.prefix_max;
            prefix_min_ = h.prefix_min;
            max_non_lr_max_ = h.max_non_lr_max;
            min_non_lr_min_ = h.min_non_lr_min;
            history_.pop_back();
        }
    }

private:
    // Occurrence of rho ending exactly at the appended value v.
    bool completes(const std::vector<int>& rho, int v) const {
        const std::size_t m = rho.size();
        if (m == 1) return true;
        std::vector<int> chosen;
        chosen.reserve(m - 1);
        return completes_from(rho, v, chosen, 0);
    }

    bool completes_from(const std::vector<int>& rho, int v,
                        std::vector<int>& chosen, std::size_t start) const {
        const std::size_t m = rho.size();
        const std::size_t t = chosen.size();
        if (t == m - 1) return true;
        for (std::size_t i = start; i + (m - 1 - t) <= prefix_.size(); ++i) {
            const int w = prefix_[i];
            if ((w < v) != (rho[t] < rho[m - 1])) continue;
            bool ok = true;
            for (std::size_t s = 0; s < t; ++s) {
                if ((chosen[s] < w) != (rho[s] < rho[t])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(w);
            if (completes_from(rho, v, chosen, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    }

    struct Snapshot {
        int prefix_max;
        int prefix_min;
        int max_non_lr_max;
        int min_non_lr_min;
    };

    bool track_321_ = false;
    bool track_123_ = false;
    std::vector<std::vector<int>> generic_;
    std::vector<int> prefix_;
    std::vector<Snapshot> history_;
    int prefix_max_ = 0;
    int prefix_min_ = 0;       // 0 = empty prefix
    int max_non_lr_max_ = 0;   // largest value with a larger value before it
    int min_non_lr_min_ = 0;   // smallest value with a smaller value before it
};

class BudgetMeter {
public:
    BudgetMeter(std::atomic<std::uint64_t>* shared, std::uint64_t budget)
        : shared_(shared), budget_(budget) {}

    void tick() {
        if (++local_ >= kFlush) flush();
    }

    void flush() {
        if (local_ == 0) return;
        const std::uint64_t seen =
            shared_->fetch_add(local_, std::memory_order_relaxed) + local_;
        local_ = 0;
        if (seen > budget_) {
            throw budget_exceeded(
                "search node budget of " + std::to_string(budget_) +
                " exceeded; raise the node budget to continue");
        }
    }

private:
    static constexpr std::uint64_t kFlush = 4096;
    std::atomic<std::uint64_t>* shared_;
    std::uint64_t budget_;
    std::uint64_t local_ = 0;
};

struct SearchJob {
    int k;
    int L;
    IncrementalAvoider checker;
    std::vector<int> labels;
    std::vector<char> used;
    BudgetMeter meter;
    BigCount count = 0;
    const ForestSink* sink = nullptr;
    std::vector<std::vector<int>>* buffer = nullptr;

    SearchJob(int k_, int n_, const PatternSet* patterns,
              std::atomic<std::uint64_t>* nodes, std::uint64_t budget)
        : k(k_), L((k_ + 1) * n_), checker(patterns),
          used(static_cast<std::size_t>(L) + 1, 0), meter(nodes, budget) {
        labels.reserve(static_cast<std::size_t>(L));
    }

    void emit() {
        if (buffer) {
            buffer->push_back(labels);
        } else if (sink && *sink) {
            (*sink)(labels);
        }
    }

    void place(int v) {
        checker.push(v);
        labels.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
    }

    void unplace() {
        const int v = labels.back();
        used[static_cast<std::size_t>(v)] = 0;
        labels.pop_back();
        checker.pop();
    }

    void run(int pos) {
        meter.tick();
        if (pos == L) {
            ++count;
            emit();
            return;
        }
        const int r = pos % (k + 1);
        if (r == 0) {
            // Root: k labels above it must still be free. The count of free
            // labels above v only shrinks as v grows, so stop at first failure.
            int free_above = L - pos;  // free labels > v, maintained in the scan
            for (int v = 1; v <= L; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                --free_above;
                if (free_above < k) break;
                if (!checker.can_append(v)) continue;
                place(v);
                run(pos + 1);
                unplace();
            }
        } else {
            const int root = labels[static_cast<std::size_t>(pos - r)];
            for (int v = root + 1; v <= L; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                if (!checker.can_append(v)) continue;
                place(v);
                run(pos + 1);
                unplace();
            }
        }
    }
};

// All pattern-avoiding complete first-shrub labelings, in generation order.
std::vector<std::vector<int>> first_shrub_prefixes(
    int k, int n, const PatternSet* patterns,
    std::atomic<std::uint64_t>* nodes, std::uint64_t budget) {
    std::vector<std::vector<int>> out;
    SearchJob job(k, n, patterns, nodes, budget);
    struct Collector {
        SearchJob& job;
        std::vector<std::vector<int>>& out;
        int depth;
        void walk(int pos) {
            job.meter.tick();
            if (pos == depth) {
                out.push_back(job.labels);
                return;
            }
            const int r = pos % (job.k + 1);
            if (r == 0) {
                int free_above = job.L - pos;
                for (int v = 1; v <= job.L; ++v) {
                    if (job.used[static_cast<std::size_t>(v)]) continue;
                    --free_above;
                    if (free_above < job.k) break;
                    if (!job.checker.can_append(v)) continue;
                    job.place(v);
                    walk(pos + 1);
                    job.unplace();
                }
            } else {
                const int root = job.labels[static_cast<std::size_t>(pos - r)];
                for (int v = root + 1; v <= job.L; ++v) {
                    if (job.used[static_cast<std::size_t>(v)]) continue;
                    if (!job.checker.can_append(v)) continue;
                    job.place(v);
                    walk(pos + 1);
                    job.unplace();
                }
            }
        }
    } collector{job, out, k + 1};
    collector.walk(0);
    job.meter.flush();
    return out;
}

}  // namespace

BigCount enumerate_forests(int k, int n, const PatternSet* patterns,
                           const EnumerateOptions& options, const ForestSink& sink) {
    if (k < 2) throw invalid_input("shrub arity must be at least 2");
    if (n < 0) throw invalid_input("shrub count must be nonnegative");

    std::atomic<std::uint64_t> nodes{0};

    if (n == 0) {
        if (sink) sink({});
        return 1;
    }

    if (options.jobs <= 1) {
        SearchJob job(k, n, patterns, &nodes, options.node_budget);
        job.sink = &sink;
        job.run(0);
        job.meter.flush();
        return job.count;
    }

    const auto prefixes =
        first_shrub_prefixes(k, n, patterns, &nodes, options.node_budget);
    const std::size_t tasks = prefixes.size();
    std::vector<BigCount> counts(tasks, 0);
    std::vector<std::vector<std::vector<int>>> buffers;
    const bool buffered = static_cast<bool>(sink);
    if (buffered) buffers.resize(tasks);

    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        try {
            for (;;) {
                const std::size_t t = next.fetch_add(1);
                if (t >= tasks) break;
                SearchJob job(k, n, patterns, &nodes, options.node_budget);
                if (buffered) job.buffer = &buffers[t];
                for (int v : prefixes[t]) job.place(v);
                job.run(k + 1);
                job.meter.flush();
                counts[t] = std::move(job.count);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    const int thread_count =
        std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks)));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);

    BigCount total = 0;
    for (const auto& c : counts) total += c;
    if (buffered) {
        // Task order equals generation order, so the merged stream is the
        // single-threaded stream regardless of worker interleaving.
        std::lock_guard<std::mutex> lock(sink_mutex);
        for (auto& buf : buffers) {
            for (auto& labels : buf) sink(labels);
        }
    }
    return total;
}

}  // namespace shrub

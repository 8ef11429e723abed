#include <limits>

#include "polydom/errors.hpp"
#include "polydom/solver.hpp"

namespace polydom {

namespace {

// Incremental bookkeeping for a partial assignment in canonical order.
class Backtracker {
public:
    Backtracker(const PolytopeGraph& g, Variant variant, std::uint64_t budget)
        : g_(g),
          variant_(variant),
          budget_(budget),
          vertex_count_(g.vertex_count()),
          label_(vertex_count_, 0),
          sum_(vertex_count_, 0),
          pending_(vertex_count_, 0),
          twos_(vertex_count_, 0),
          unassigned_neighbors_(vertex_count_, 0),
          best_labels_(vertex_count_, 0) {
        for (int v = 0; v < vertex_count_; ++v) {
            unassigned_neighbors_[v] = g.degree(v);
            pending_[v] = g.degree(v) + (variant == Variant::SRD ? 1 : 0);
        }
    }

    void run() { descend(0, 0); }

    bool exhausted() const noexcept { return exhausted_; }
    bool found() const noexcept { return best_ < kNone; }
    int best() const noexcept { return best_; }
    const std::vector<int>& best_labels() const noexcept { return best_labels_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    static constexpr int kNone = std::numeric_limits<int>::max();

    void apply(int v, int label, int sign) {
        label_[v] = sign > 0 ? label : 0;
        for (int u : g_.neighbors(v)) {
            sum_[u] += sign * label;
            pending_[u] -= sign;
            unassigned_neighbors_[u] -= sign;
            if (label == 2) twos_[u] += sign;
        }
        if (variant_ == Variant::SRD) {
            sum_[v] += sign * label;
            pending_[v] -= sign;
        }
    }

    // Rules (a) and (b) for one vertex.
    bool still_feasible(int u) const {
        if (sum_[u] + 2 * pending_[u] < 1) return false;
        if (label_[u] == -1 && twos_[u] == 0 && unassigned_neighbors_[u] == 0) return false;
        return true;
    }

    bool consistent_around(int v) const {
        if (!still_feasible(v)) return false;
        for (int u : g_.neighbors(v))
            if (!still_feasible(u)) return false;
        return true;
    }

    void descend(int v, int weight) {
        if (exhausted_) return;
        if (v == vertex_count_) {
            // Strict improvement only: the first optimum met in DFS order is lexicographically smallest.
            if (weight < best_) {
                best_ = weight;
                best_labels_ = label_;
            }
            return;
        }
        const int remaining_after = vertex_count_ - v - 1;
        for (int label : {-1, 1, 2}) {
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return;
            }
            // Rule (c): every unassigned vertex contributes at least -1.
            if (best_ != kNone && weight + label - remaining_after >= best_) continue;
            apply(v, label, +1);
            if (consistent_around(v)) descend(v + 1, weight + label);
            apply(v, label, -1);
            if (exhausted_) return;
        }
    }

    const PolytopeGraph& g_;
    Variant variant_;
    std::uint64_t budget_;
    int vertex_count_;
    std::vector<int> label_;
    std::vector<int> sum_;
    std::vector<int> pending_;  // unassigned vertices inside the summed neighbourhood
    std::vector<int> twos_;
    std::vector<int> unassigned_neighbors_;
    std::vector<int> best_labels_;
    int best_ = kNone;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

SolveResult solve_bruteforce(const PolytopeGraph& g, Variant variant, std::uint64_t node_budget) {
    const auto start = std::chrono::steady_clock::now();
    Backtracker search(g, variant, node_budget);
    search.run();

    SolveResult result;
    result.method = SolveMethod::BruteForce;
    result.stats.nodes = search.nodes();
    if (!search.exhausted()) {
        if (!search.found()) throw ConsistencyError("exhaustive search found no admissible labeling");
        std::vector<Label> labels;
        labels.reserve(search.best_labels().size());
        for (int x : search.best_labels()) labels.push_back(*label_from_int(x));
        result.status = SolveStatus::Solved;
        result.gamma = search.best();
        result.witness = LabelFunction(g, std::move(labels));
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace polydom

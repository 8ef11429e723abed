#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>

#include "polydom/certificates.hpp"
#include "polydom/errors.hpp"
#include "polydom/solver.hpp"

namespace polydom {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr int kLabelValue[3] = {-1, 1, 2};
// Seed groups solved between upper-bound updates.
constexpr std::size_t kBatch = 16;

// Neighbour rows of a row-r vertex, split by the column they live in.
struct ColumnPattern {
    int rows = 0;
    std::array<std::vector<int>, 4> prev;
    std::array<std::vector<int>, 4> same;
    std::array<std::vector<int>, 4> next;
};

ColumnPattern extract_pattern(const PolytopeGraph& g) {
    const int n = g.n();
    if (n < 3) throw ContractError("profile DP needs at least 3 columns");
    ColumnPattern p;
    p.rows = g.rows();
    for (int r = 0; r < p.rows; ++r) {
        for (int i = 0; i < n; ++i) {
            std::array<std::vector<int>, 3> split;  // prev, same, next
            for (int u : g.neighbors(g.id(VertexId{static_cast<VertexClass>(r), i}))) {
                VertexId w = g.vertex(u);
                int d = (w.index - i + n) % n;
                int slot = d == n - 1 ? 0 : d == 0 ? 1 : d == 1 ? 2 : -1;
                if (slot < 0)
                    throw ContractError("graph is not band-structured: edge spans more than one column at " +
                                        vertex_name(VertexId{static_cast<VertexClass>(r), i}));
                split[slot].push_back(static_cast<int>(w.klass));
            }
            for (auto& s : split) std::sort(s.begin(), s.end());
            if (i == 0) {
                p.prev[r] = split[0];
                p.same[r] = split[1];
                p.next[r] = split[2];
            } else if (split[0] != p.prev[r] || split[1] != p.same[r] || split[2] != p.next[r]) {
                throw ContractError("neighbourhood pattern is not column-periodic");
            }
        }
    }
    return p;
}

// Residual obligations of one column once two adjacent columns are fixed:
// per row, the minimum sum still owed by the missing column and whether a
// -1 vertex still waits for a 2-labelled neighbour there.
struct Residual {
    int code;
    std::array<std::int8_t, 4> need{};
    std::uint8_t witness_mask = 0;

    std::uint64_t key() const {
        std::uint64_t k = static_cast<std::uint64_t>(code);
        for (int r = 0; r < 4; ++r) k = (k << 8) | static_cast<std::uint8_t>(need[r]);
        return (k << 8) | witness_mask;
    }
};

class Tables {
public:
    Tables(const PolytopeGraph& g, Variant variant) : pattern_(extract_pattern(g)) {
        rows_ = pattern_.rows;
        codes_ = 1;
        for (int r = 0; r < rows_; ++r) codes_ *= 3;
        digit_.assign(codes_ * rows_, 0);
        weight_.assign(codes_, 0);
        for (int c = 0; c < codes_; ++c) {
            int x = c;
            for (int r = 0; r < rows_; ++r) {
                digit_[c * rows_ + r] = static_cast<std::uint8_t>(x % 3);
                weight_[c] += kLabelValue[x % 3];
                x /= 3;
            }
        }
        for (int side = 0; side < 3; ++side) {
            sum_[side].assign(codes_ * rows_, 0);
            two_[side].assign(codes_, 0);
        }
        for (int c = 0; c < codes_; ++c) {
            for (int r = 0; r < rows_; ++r) {
                const std::array<const std::vector<int>*, 3> sides{&pattern_.prev[r], &pattern_.same[r], &pattern_.next[r]};
                for (int side = 0; side < 3; ++side) {
                    int s = 0;
                    for (int u : *sides[side]) {
                        s += label(c, u);
                        if (label(c, u) == 2) two_[side][c] |= std::uint8_t(1u << r);
                    }
                    if (side == 1 && variant == Variant::SRD) s += label(c, r);
                    sum_[side][c * rows_ + r] = s;
                }
            }
        }
        build_states();
        build_carries();
    }

    int rows() const noexcept { return rows_; }
    int codes() const noexcept { return codes_; }
    int digit(int code, int r) const noexcept { return digit_[code * rows_ + r]; }
    int label(int code, int r) const noexcept { return kLabelValue[digit(code, r)]; }
    int weight(int code) const noexcept { return weight_[code]; }

    int state_count() const noexcept { return static_cast<int>(states_.size()); }
    int state_code(int s) const noexcept { return states_[s].code; }
    /// Forward state for column i given (c_{i-1}, c_i), or -1 if column i is already infeasible.
    int state_of(int prev, int cur) const noexcept { return state_of_[prev * codes_ + cur]; }
    /// Successor after appending column z (finalises the state's column), or -1.
    int transition(int s, int z) const noexcept { return trans_[s * codes_ + z]; }

    int carry_count() const noexcept { return static_cast<int>(carries_.size()); }
    int carry_code(int k) const noexcept { return carries_[k].code; }
    /// Residual of column 0 given (c_0, c_1), awaiting c_{n-1}; -1 if infeasible.
    int carry_of(int c0, int c1) const noexcept { return carry_of_[c0 * codes_ + c1]; }
    bool carry_closes(int k, int last) const noexcept { return carry_ok_[k * codes_ + last]; }
    bool state_closes(int s, int first) const noexcept { return trans_ok_[s * codes_ + first]; }

private:
    enum Side { kPrev = 0, kSame = 1, kNext = 2 };

    int side_sum(int side, int code, int r) const { return sum_[side][code * rows_ + r]; }

    // Residual of a column labelled `code` when the neighbour column on
    // `known_side` is `other`; obligations remain toward `open_side`.
    std::optional<Residual> residual(int code, int other, int known_side, int open_side) const {
        Residual res{code};
        for (int r = 0; r < rows_; ++r) {
            const int k = static_cast<int>(open_side == kNext ? pattern_.next[r].size() : pattern_.prev[r].size());
            int need = 1 - side_sum(kSame, code, r) - side_sum(known_side, other, r);
            if (need > 2 * k) return std::nullopt;
            res.need[r] = static_cast<std::int8_t>(std::max(need, -k));
            const bool covered = ((two_[kSame][code] | two_[known_side][other]) >> r) & 1u;
            if (label(code, r) == -1 && !covered) {
                if (k == 0) return std::nullopt;
                res.witness_mask |= std::uint8_t(1u << r);
            }
        }
        return res;
    }

    bool discharges(const Residual& res, int open_side, int other) const {
        for (int r = 0; r < rows_; ++r) {
            if (side_sum(open_side, other, r) < res.need[r]) return false;
            if (((res.witness_mask >> r) & 1u) && !((two_[open_side][other] >> r) & 1u)) return false;
        }
        return true;
    }

    static int intern(std::vector<Residual>& pool, std::unordered_map<std::uint64_t, int>& index, const Residual& r) {
        auto [it, inserted] = index.emplace(r.key(), static_cast<int>(pool.size()));
        if (inserted) pool.push_back(r);
        return it->second;
    }

    void build_states() {
        std::unordered_map<std::uint64_t, int> index;
        state_of_.assign(codes_ * codes_, -1);
        for (int prev = 0; prev < codes_; ++prev)
            for (int cur = 0; cur < codes_; ++cur)
                if (auto res = residual(cur, prev, kPrev, kNext)) state_of_[prev * codes_ + cur] = intern(states_, index, *res);
        trans_.assign(states_.size() * codes_, -1);
        trans_ok_.assign(states_.size() * codes_, false);
        for (int s = 0; s < state_count(); ++s)
            for (int z = 0; z < codes_; ++z)
                if (discharges(states_[s], kNext, z)) {
                    trans_ok_[s * codes_ + z] = true;
                    trans_[s * codes_ + z] = state_of(states_[s].code, z);
                }
    }

    void build_carries() {
        std::unordered_map<std::uint64_t, int> index;
        carry_of_.assign(codes_ * codes_, -1);
        for (int c0 = 0; c0 < codes_; ++c0)
            for (int c1 = 0; c1 < codes_; ++c1)
                if (auto res = residual(c0, c1, kNext, kPrev)) carry_of_[c0 * codes_ + c1] = intern(carries_, index, *res);
        carry_ok_.assign(carries_.size() * codes_, false);
        for (int k = 0; k < carry_count(); ++k)
            for (int last = 0; last < codes_; ++last) carry_ok_[k * codes_ + last] = discharges(carries_[k], kPrev, last);
    }

    ColumnPattern pattern_;
    int rows_ = 0;
    int codes_ = 0;
    std::vector<std::uint8_t> digit_;
    std::vector<int> weight_;
    std::array<std::vector<int>, 3> sum_;
    std::array<std::vector<std::uint8_t>, 3> two_;
    std::vector<Residual> states_;
    std::vector<int> state_of_;
    std::vector<int> trans_;
    std::vector<bool> trans_ok_;
    std::vector<Residual> carries_;
    std::vector<int> carry_of_;
    std::vector<bool> carry_ok_;
};

// lower[t][s]: least weight of t further columns appended to state s, closure ignored.
std::vector<std::vector<int>> path_lower_bounds(const Tables& t, int steps) {
    std::vector<std::vector<int>> lower(steps + 1, std::vector<int>(t.state_count(), kInf));
    std::fill(lower[0].begin(), lower[0].end(), 0);
    for (int len = 1; len <= steps; ++len) {
        for (int s = 0; s < t.state_count(); ++s) {
            int best = kInf;
            for (int z = 0; z < t.codes(); ++z) {
                int nxt = t.transition(s, z);
                if (nxt < 0 || lower[len - 1][nxt] >= kInf) continue;
                best = std::min(best, t.weight(z) + lower[len - 1][nxt]);
            }
            lower[len][s] = best;
        }
    }
    return lower;
}

struct SeedGroup {
    int carry;
    int bound;
    std::vector<int> second_columns;
};

struct GroupOutcome {
    bool expanded = false;
    std::optional<int> weight;
    std::vector<int> columns;  // label codes of columns 0..n-1
    std::uint64_t transitions = 0;
    std::uint64_t kept = 0;
};

// Partial solution ending at some column.
struct Node {
    int state;
    int weight;
    int parent;
    int code;
    std::array<std::uint32_t, 4> rank{};
};

class GroupSolver {
public:
    GroupSolver(const Tables& t, const std::vector<std::vector<int>>& lower, int n)
        : t_(t), lower_(lower), n_(n), slot_(t.state_count(), -1), stamp_(t.state_count(), -1) {}

    GroupOutcome solve(const SeedGroup& group, int upper) {
        GroupOutcome out;
        out.expanded = true;
        const int rows = t_.rows();
        const int c0 = t_.carry_code(group.carry);
        std::vector<std::vector<Node>> layers(n_);

        // Column 1: rows of the prefix (c_0, c_1) differ only in c_1 within a group.
        for (int c1 : group.second_columns) {
            int s = t_.state_of(c0, c1);
            int w = t_.weight(c0) + t_.weight(c1);
            if (s < 0 || lower_[n_ - 2][s] >= kInf || w + lower_[n_ - 2][s] > upper) continue;
            Node node{s, w, -1, c1, {}};
            for (int r = 0; r < rows; ++r) node.rank[r] = static_cast<std::uint32_t>(t_.digit(c1, r));
            layers[1].push_back(node);
        }
        out.kept += layers[1].size();

        for (int col = 2; col < n_ && !layers[col - 1].empty(); ++col) {
            const std::vector<Node>& prev = layers[col - 1];
            std::vector<Node>& cur = layers[col];
            const int remaining = n_ - 1 - col;
            for (int p = 0; p < static_cast<int>(prev.size()); ++p) {
                const Node& from = prev[p];
                for (int z = 0; z < t_.codes(); ++z) {
                    int s = t_.transition(from.state, z);
                    if (s < 0) continue;
                    ++out.transitions;
                    int w = from.weight + t_.weight(z);
                    if (lower_[remaining][s] >= kInf || w + lower_[remaining][s] > upper) continue;
                    Node cand{s, w, p, z, {}};
                    if (stamp_[s] != col) {
                        stamp_[s] = col;
                        slot_[s] = static_cast<int>(cur.size());
                        cur.push_back(cand);
                    } else if (better(cand, cur[slot_[s]], prev)) {
                        cur[slot_[s]] = cand;
                    }
                }
            }
            assign_ranks(cur, prev);
            out.kept += cur.size();
        }
        // Reset stamps for the next group handled by this solver.
        std::fill(stamp_.begin(), stamp_.end(), -1);

        const std::vector<Node>& last = layers[n_ - 1];
        int best = -1;
        for (int i = 0; i < static_cast<int>(last.size()); ++i) {
            const Node& node = last[i];
            if (!t_.state_closes(node.state, c0) || !t_.carry_closes(group.carry, t_.state_code(node.state))) continue;
            if (best < 0 || final_less(node, last[best])) best = i;
        }
        if (best >= 0) {
            out.weight = last[best].weight;
            out.columns.assign(n_, 0);
            out.columns[0] = c0;
            int idx = best;
            for (int col = n_ - 1; col >= 1; --col) {
                out.columns[col] = layers[col][idx].code;
                idx = layers[col][idx].parent;
            }
        }
        return out;
    }

private:
    // Same state, so the completion is shared: order by weight, then row by row
    // by (rank of the parent's row prefix, appended digit).
    bool better(const Node& a, const Node& b, const std::vector<Node>& prev) const {
        if (a.weight != b.weight) return a.weight < b.weight;
        for (int r = 0; r < t_.rows(); ++r) {
            auto ka = std::pair(prev[a.parent].rank[r], t_.digit(a.code, r));
            auto kb = std::pair(prev[b.parent].rank[r], t_.digit(b.code, r));
            if (ka != kb) return ka < kb;
        }
        return false;
    }

    bool final_less(const Node& a, const Node& b) const {
        if (a.weight != b.weight) return a.weight < b.weight;
        for (int r = 0; r < t_.rows(); ++r)
            if (a.rank[r] != b.rank[r]) return a.rank[r] < b.rank[r];
        return false;
    }

    void assign_ranks(std::vector<Node>& cur, const std::vector<Node>& prev) {
        std::vector<std::pair<std::uint64_t, int>> keys(cur.size());
        for (int r = 0; r < t_.rows(); ++r) {
            for (int i = 0; i < static_cast<int>(cur.size()); ++i)
                keys[i] = {std::uint64_t(prev[cur[i].parent].rank[r]) * 3 + std::uint64_t(t_.digit(cur[i].code, r)), i};
            std::sort(keys.begin(), keys.end());
            std::uint32_t rank = 0;
            for (std::size_t j = 0; j < keys.size(); ++j) {
                if (j > 0 && keys[j].first != keys[j - 1].first) ++rank;
                cur[keys[j].second].rank[r] = rank;
            }
        }
    }

    const Tables& t_;
    const std::vector<std::vector<int>>& lower_;
    int n_;
    std::vector<int> slot_;
    std::vector<int> stamp_;
};

LabelFunction to_labeling(const PolytopeGraph& g, const Tables& t, const std::vector<int>& columns) {
    LabelFunction f(g);
    for (int i = 0; i < g.n(); ++i)
        for (int r = 0; r < t.rows(); ++r)
            f.set(g.id(VertexId{static_cast<VertexClass>(r), i}), *label_from_int(t.label(columns[i], r)));
    return f;
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

SolveResult solve_profile_dp(const PolytopeGraph& g, Variant variant, const ProfileDpOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const Tables t(g, variant);
    const int n = g.n();
    const auto lower = path_lower_bounds(t, n - 2);

    std::vector<SeedGroup> groups(t.carry_count());
    for (int k = 0; k < t.carry_count(); ++k) groups[k] = {k, kInf, {}};
    for (int c0 = 0; c0 < t.codes(); ++c0)
        for (int c1 = 0; c1 < t.codes(); ++c1) {
            int k = t.carry_of(c0, c1);
            int s = t.state_of(c0, c1);
            if (k < 0 || s < 0 || lower[n - 2][s] >= kInf) continue;
            groups[k].second_columns.push_back(c1);
            groups[k].bound = std::min(groups[k].bound, t.weight(c0) + t.weight(c1) + lower[n - 2][s]);
        }
    std::erase_if(groups, [](const SeedGroup& sg) { return sg.second_columns.empty(); });
    std::sort(groups.begin(), groups.end(),
              [](const SeedGroup& a, const SeedGroup& b) { return std::pair(a.bound, a.carry) < std::pair(b.bound, b.carry); });

    int upper = kInf;
    if (options.use_certificate_bound) {
        try {
            if (auto cert = certificate_for(g.family(), variant, n); cert && cert->labeling.matches(g) &&
                                                                    is_admissible(g, cert->labeling, variant))
                upper = cert->labeling.weight();
        } catch (const DomainError&) {
            // n outside the certificate's range
        }
    }

    std::vector<GroupOutcome> outcomes(groups.size());
    std::size_t next = 0;
    {
        // Deterministic warm-up: expand best-bound groups until one yields a solution.
        GroupSolver solver(t, lower, n);
        for (; next < groups.size() && groups[next].bound <= upper; ++next) {
            outcomes[next] = solver.solve(groups[next], upper);
            if (outcomes[next].weight) {
                upper = std::min(upper, *outcomes[next].weight);
                ++next;
                break;
            }
        }
    }
    // Remaining groups run in fixed-size batches. The bound is frozen within a
    // batch and tightened between batches, so the work done does not depend on
    // the thread count or on scheduling.
    const unsigned threads = resolve_threads(options.threads);
    GroupSolver serial(t, lower, n);
    while (next < groups.size() && groups[next].bound <= upper) {
        std::size_t end = next;
        while (end < groups.size() && end - next < kBatch && groups[end].bound <= upper) ++end;
        const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(end - next));
        if (workers <= 1) {
            for (std::size_t i = next; i < end; ++i) outcomes[i] = serial.solve(groups[i], upper);
        } else {
            std::atomic<std::size_t> cursor{next};
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    GroupSolver solver(t, lower, n);
                    for (std::size_t i = cursor++; i < end; i = cursor++) outcomes[i] = solver.solve(groups[i], upper);
                });
        }
        for (std::size_t i = next; i < end; ++i)
            if (outcomes[i].weight) upper = std::min(upper, *outcomes[i].weight);
        next = end;
    }

    SolveResult result;
    result.method = SolveMethod::ProfileDP;
    std::optional<LabelFunction> best;
    int best_weight = kInf;
    for (const GroupOutcome& o : outcomes) {
        if (!o.expanded) continue;
        ++result.stats.seeds;
        result.stats.nodes += o.transitions;
        result.stats.states += o.kept;
        if (!o.weight || *o.weight > best_weight) continue;
        LabelFunction f = to_labeling(g, t, o.columns);
        if (*o.weight < best_weight || lex_less(f, *best)) {
            best_weight = *o.weight;
            best = std::move(f);
        }
    }
    if (!best) throw ConsistencyError("profile DP found no admissible labeling within the upper bound");
    result.status = SolveStatus::Solved;
    result.gamma = best_weight;
    result.witness = std::move(best);
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace polydom

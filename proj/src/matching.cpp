#include <limits>
#include <queue>

#include "antiramsey/decompose.hpp"
#include "antiramsey/errors.hpp"

namespace antiramsey {

namespace {

class HopcroftKarp {
public:
    HopcroftKarp(int left_count, int right_count, const std::vector<std::vector<int>>& adjacency)
        : adj_(adjacency),
          match_left_(static_cast<std::size_t>(left_count), -1),
          match_right_(static_cast<std::size_t>(right_count), -1),
          dist_(static_cast<std::size_t>(left_count)),
          next_(static_cast<std::size_t>(left_count)) {}

    void run() {
        while (layer()) {
            std::fill(next_.begin(), next_.end(), 0);
            for (int u = 0; u < left_count(); ++u) {
                if (match_left_[at(u)] == -1) augment(u);
            }
        }
    }

    void canonicalize() {
        for (int u = 0; u < left_count(); ++u) {
            int current = match_left_[at(u)];
            if (current == -1) continue;
            int lowest = current;
            for (int w : adj_[at(u)]) {
                if (w < lowest && match_right_[at(w)] == -1) lowest = w;
            }
            if (lowest != current) {
                match_right_[at(current)] = -1;
                match_right_[at(lowest)] = u;
                match_left_[at(u)] = lowest;
            }
        }
    }

    std::vector<int> hall_violator() const {
        std::vector<char> seen_left(match_left_.size(), 0);
        std::vector<char> seen_right(match_right_.size(), 0);
        std::queue<int> queue;
        for (int u = 0; u < left_count(); ++u) {
            if (match_left_[at(u)] == -1) {
                seen_left[at(u)] = 1;
                queue.push(u);
            }
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : adj_[at(u)]) {
                if (seen_right[at(w)]) continue;
                seen_right[at(w)] = 1;
                int v = match_right_[at(w)];
                if (v == -1) throw InvariantError("hall_violator: matching is not maximum");
                if (!seen_left[at(v)]) {
                    seen_left[at(v)] = 1;
                    queue.push(v);
                }
            }
        }
        std::vector<int> violator;
        for (int u = 0; u < left_count(); ++u) {
            if (seen_left[at(u)]) violator.push_back(u);
        }
        return violator;
    }

    const std::vector<int>& partner() const { return match_left_; }

private:
    static constexpr int kUnreached = std::numeric_limits<int>::max();
    static std::size_t at(int i) { return static_cast<std::size_t>(i); }
    int left_count() const { return static_cast<int>(match_left_.size()); }

    bool layer() {
        std::queue<int> queue;
        for (int u = 0; u < left_count(); ++u) {
            dist_[at(u)] = match_left_[at(u)] == -1 ? 0 : kUnreached;
            if (dist_[at(u)] == 0) queue.push(u);
        }
        bool reached_free = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : adj_[at(u)]) {
                int v = match_right_[at(w)];
                if (v == -1) {
                    reached_free = true;
                } else if (dist_[at(v)] == kUnreached) {
                    dist_[at(v)] = dist_[at(u)] + 1;
                    queue.push(v);
                }
            }
        }
        return reached_free;
    }

    bool augment(int u) {
        const auto& nbrs = adj_[at(u)];
        for (int& i = next_[at(u)]; i < static_cast<int>(nbrs.size()); ++i) {
            int w = nbrs[at(i)];
            int v = match_right_[at(w)];
            if (v == -1 || (dist_[at(v)] == dist_[at(u)] + 1 && augment(v))) {
                match_left_[at(u)] = w;
                match_right_[at(w)] = u;
                ++i;
                return true;
            }
        }
        dist_[at(u)] = kUnreached;
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<int> dist_;
    std::vector<int> next_;
};

}  // namespace

BipartiteMatching saturating_matching(int left_count, int right_count,
                                      const std::vector<std::vector<int>>& adjacency) {
    if (left_count < 0 || right_count < 0 || static_cast<int>(adjacency.size()) != left_count) {
        throw InputError("saturating_matching: adjacency does not match the left side");
    }
    for (const auto& list : adjacency) {
        for (int w : list) {
            if (w < 0 || w >= right_count) throw InputError("saturating_matching: right vertex out of range");
        }
    }
    HopcroftKarp hk(left_count, right_count, adjacency);
    hk.run();
    BipartiteMatching result;
    result.hall_violator = hk.hall_violator();
    if (result.saturating()) hk.canonicalize();
    result.partner = hk.partner();
    return result;
}

}  // namespace antiramsey

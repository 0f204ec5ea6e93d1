#pragma once

// Planar (Temperley-Lieb) diagrams: crossingless matchings in a rectangle
// with `bottom` marked points on the lower edge and `top` on the upper edge.
//
// Point indexing: 0 .. bottom-1 along the lower edge left to right, then
// bottom .. bottom+top-1 along the upper edge left to right.  A diagram is
// planar iff its matching is non-crossing with respect to the boundary circle
// traversed bottom left-to-right then top right-to-left.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "skeinlab/errors.hpp"

namespace skeinlab {

class PlanarDiagram;
struct Composed;
Composed compose(const PlanarDiagram& a, const PlanarDiagram& b);

class PlanarDiagram {
  public:
    PlanarDiagram() : bottom_(0), top_(0) {}
    PlanarDiagram(int bottom, int top, std::vector<int> mate)
        : bottom_(bottom), top_(top), mate_(std::move(mate)) {
        validate();
    }

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int mate(int i) const { return mate_[i]; }
    const std::vector<int>& mates() const { return mate_; }

    bool is_bottom(int i) const { return i < bottom_; }
    // does strand {i, mate(i)} connect two bottom (or two top) points?
    bool is_turnback(int i) const { return is_bottom(i) == is_bottom(mate_[i]); }

    static PlanarDiagram identity(int m) {
        std::vector<int> mate(2 * m);
        for (int i = 0; i < m; ++i) {
            mate[i] = m + i;
            mate[m + i] = i;
        }
        return PlanarDiagram(m, m, std::move(mate));
    }

    // TL generator e_i on m strands, 1 <= i <= m-1: cap joining bottom points
    // i-1, i and cup joining the matching top points
    static PlanarDiagram e_gen(int m, int i) {
        if (i < 1 || i > m - 1) throw std::runtime_error("e_gen: index out of range");
        std::vector<int> mate(2 * m);
        for (int j = 0; j < m; ++j) {
            mate[j] = m + j;
            mate[m + j] = j;
        }
        mate[i - 1] = i;
        mate[i] = i - 1;
        mate[m + i - 1] = m + i;
        mate[m + i] = m + i - 1;
        return PlanarDiagram(m, m, std::move(mate));
    }

    // matching of k points (no bottom/top distinction): bottom 0, top k
    static PlanarDiagram matching(const std::vector<int>& mate) {
        return PlanarDiagram(0, static_cast<int>(mate.size()), mate);
    }

    // k nested caps: 0 -> 2k, arcs (0,2k-1), (1,2k-2), ...
    static PlanarDiagram nested_cup(int k) {
        std::vector<int> mate(2 * k);
        for (int i = 0; i < k; ++i) {
            mate[i] = 2 * k - 1 - i;
            mate[2 * k - 1 - i] = i;
        }
        return PlanarDiagram(0, 2 * k, std::move(mate));
    }

    // k adjacent cups: 0 -> 2k, arcs (0,1), (2,3), ...
    static PlanarDiagram adjacent_cups(int k) {
        std::vector<int> mate(2 * k);
        for (int i = 0; i < k; ++i) {
            mate[2 * i] = 2 * i + 1;
            mate[2 * i + 1] = 2 * i;
        }
        return PlanarDiagram(0, 2 * k, std::move(mate));
    }

    PlanarDiagram reflect() const {
        // swap top and bottom, keeping left-to-right order
        std::vector<int> mate(mate_.size());
        auto flip = [&](int i) { return i < bottom_ ? top_ + i : i - bottom_; };
        for (size_t i = 0; i < mate_.size(); ++i) mate[flip(static_cast<int>(i))] = flip(mate_[i]);
        return PlanarDiagram(top_, bottom_, std::move(mate));
    }

    // pure matchings only (bottom == 0): relabel point i -> i + shift mod top
    PlanarDiagram rotate(int shift) const {
        if (bottom_ != 0) throw std::runtime_error("rotate: only for pure matchings");
        const int n = top_;
        auto sh = [&](int i) { return ((i + shift) % n + n) % n; };
        std::vector<int> mate(n);
        for (int i = 0; i < n; ++i) mate[sh(i)] = sh(mate_[i]);
        return PlanarDiagram(0, n, std::move(mate));
    }

    friend PlanarDiagram tensor(const PlanarDiagram& a, const PlanarDiagram& b) {
        const int m = a.bottom_ + b.bottom_, t = a.top_ + b.top_;
        std::vector<int> mate(m + t);
        auto map_a = [&](int i) { return i < a.bottom_ ? i : m + (i - a.bottom_); };
        auto map_b = [&](int i) {
            return i < b.bottom_ ? a.bottom_ + i : m + a.top_ + (i - b.bottom_);
        };
        for (int i = 0; i < a.bottom_ + a.top_; ++i) mate[map_a(i)] = map_a(a.mate_[i]);
        for (int i = 0; i < b.bottom_ + b.top_; ++i) mate[map_b(i)] = map_b(b.mate_[i]);
        return PlanarDiagram(m, t, std::move(mate));
    }

    // b stacked on top of a (a first); requires a.top == b.bottom
    friend Composed compose(const PlanarDiagram& a, const PlanarDiagram& b);

    friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
        return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.mate_ == b.mate_;
    }
    friend bool operator!=(const PlanarDiagram& a, const PlanarDiagram& b) { return !(a == b); }
    friend bool operator<(const PlanarDiagram& a, const PlanarDiagram& b) {
        if (a.bottom_ != b.bottom_) return a.bottom_ < b.bottom_;
        if (a.top_ != b.top_) return a.top_ < b.top_;
        return a.mate_ < b.mate_;
    }

  private:
    // boundary-circle position: bottom left-to-right, then top right-to-left
    int circle_pos(int i) const { return i < bottom_ ? i : bottom_ + (top_ - 1 - (i - bottom_)); }

    void validate() const {
        const int n = bottom_ + top_;
        if (static_cast<int>(mate_.size()) != n)
            throw std::runtime_error("PlanarDiagram: mate vector length mismatch");
        if (n % 2 != 0) throw std::runtime_error("PlanarDiagram: odd number of points");
        std::vector<int> at_pos(n);
        for (int i = 0; i < n; ++i) {
            if (mate_[i] < 0 || mate_[i] >= n || mate_[i] == i || mate_[mate_[i]] != i)
                throw std::runtime_error("PlanarDiagram: not an involution");
            at_pos[circle_pos(i)] = i;
        }
        // non-crossing <=> the mate of each closing point is on top of the stack
        std::vector<int> stack;
        for (int p = 0; p < n; ++p) {
            int i = at_pos[p];
            if (!stack.empty() && stack.back() == mate_[i]) stack.pop_back();
            else stack.push_back(i);
        }
        if (!stack.empty()) throw std::runtime_error("PlanarDiagram: crossing strands");
    }

    int bottom_, top_;
    std::vector<int> mate_;
};

struct Composed {
    PlanarDiagram diagram;
    int loops;
};

inline Composed compose(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (a.top_ != b.bottom_) throw StrandMismatch("compose: strand count mismatch");
    const int m = a.bottom_, t = a.top_, u = b.top_ - 0;
    // external nodes: 0..m-1 = result bottom, m..m+u-1 = result top
    std::vector<int> mate(m + u, -1);
    std::vector<char> glue_seen(t, 0);
    auto walk = [&](int start_ext) {
        // returns the external node reached from start_ext
        bool in_a = start_ext < m;
        int cur = in_a ? a.mate_[start_ext] : b.mate_[t + (start_ext - m)];
        while (true) {
            if (in_a) {
                if (cur < m) return cur;  // a-bottom: external
                int g = cur - m;
                glue_seen[g] = 1;
                in_a = false;
                cur = b.mate_[g];
            } else {
                if (cur >= t) return m + (cur - t);  // b-top: external
                glue_seen[cur] = 1;
                in_a = true;
                cur = a.mate_[m + cur];
            }
        }
    };
    for (int i = 0; i < m + u; ++i) {
        if (mate[i] != -1) continue;
        int j = walk(i);
        mate[i] = j;
        mate[j] = i;
    }
    int loops = 0;
    for (int g = 0; g < t; ++g) {
        if (glue_seen[g]) continue;
        ++loops;
        // traverse the cycle through g
        int cur = g;
        do {
            glue_seen[cur] = 1;
            int via_a = a.mate_[m + cur];  // lands on another glue node
            cur = via_a - m;
            glue_seen[cur] = 1;
            cur = b.mate_[cur];
        } while (cur != g);
    }
    return {PlanarDiagram(m, u, std::move(mate)), loops};
}

// All non-crossing perfect matchings of k points on a line, as mate vectors;
// Catalan(k/2) of them, in a deterministic order.
inline std::vector<std::vector<int>> noncrossing_matchings(int k) {
    if (k % 2 != 0) return {};
    if (k == 0) return {{}};
    std::vector<std::vector<int>> out;
    // point 0 pairs with an odd point j; inside and outside are independent
    for (int j = 1; j < k; j += 2) {
        auto inner = noncrossing_matchings(j - 1);
        auto outer = noncrossing_matchings(k - j - 1);
        for (const auto& in : inner)
            for (const auto& ou : outer) {
                std::vector<int> m(k);
                m[0] = j;
                m[j] = 0;
                for (int i = 0; i < j - 1; ++i) m[1 + i] = 1 + in[i];
                for (int i = j + 1; i < k; ++i) m[i] = j + 1 + ou[i - j - 1];
                out.push_back(std::move(m));
            }
    }
    return out;
}

}  // namespace skeinlab

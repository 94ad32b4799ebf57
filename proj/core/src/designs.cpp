#include "mubkit/designs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mubkit {

int ResolvableDesign::block_size() const {
    int k = -1;
    for (const auto& cls : classes)
        for (const auto& b : cls) {
            if (k == -1) k = static_cast<int>(b.size());
            else if (k != static_cast<int>(b.size())) return -1;
        }
    return k;
}

DesignValidation validate_design(const ResolvableDesign& d) {
    DesignValidation v;
    auto complain = [&](std::string msg) {
        v.ok = false;
        v.problems.push_back(std::move(msg));
    };
    if (d.point_count <= 0) complain("point_count must be positive");
    if (d.classes.empty()) complain("no parallel classes");
    for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
        std::vector<int> seen(static_cast<std::size_t>(std::max(d.point_count, 0)), 0);
        long long total = 0;
        for (const auto& b : d.classes[ci]) {
            std::set<int> uniq(b.begin(), b.end());
            if (uniq.size() != b.size())
                complain("class " + std::to_string(ci) + ": duplicated point within a block");
            for (int p : b) {
                if (p < 0 || p >= d.point_count) {
                    complain("class " + std::to_string(ci) + ": point " + std::to_string(p) +
                             " out of range");
                    continue;
                }
                ++seen[p];
            }
            total += static_cast<long long>(b.size());
        }
        if (total != d.point_count)
            complain("class " + std::to_string(ci) + ": block sizes sum to " +
                     std::to_string(total) + ", expected " + std::to_string(d.point_count));
        for (int p = 0; p < d.point_count; ++p)
            if (seen[p] != 1) {
                complain("class " + std::to_string(ci) + ": point " + std::to_string(p) +
                         " covered " + std::to_string(seen[p]) + " times");
                break;
            }
    }
    return v;
}

IntersectionProfile intersection_profile(const ResolvableDesign& d) {
    IntersectionProfile prof;
    for (std::size_t ci = 0; ci < d.classes.size(); ++ci)
        for (std::size_t cj = ci + 1; cj < d.classes.size(); ++cj)
            for (const auto& b1 : d.classes[ci])
                for (const auto& b2 : d.classes[cj]) {
                    // blocks are sorted; count the merge overlap
                    int n = 0;
                    std::size_t i = 0, j = 0;
                    while (i < b1.size() && j < b2.size()) {
                        if (b1[i] < b2[j]) ++i;
                        else if (b1[i] > b2[j]) ++j;
                        else { ++n; ++i; ++j; }
                    }
                    ++prof.histogram[n];
                    if (n > prof.mu) prof.mu = n;
                }
    return prof;
}

namespace {

void validate_or_throw(const ResolvableDesign& d, const char* who) {
    auto v = validate_design(d);
    if (!v.ok)
        throw std::logic_error(std::string(who) + ": constructed design failed validation: " +
                               (v.problems.empty() ? "unknown" : v.problems.front()));
}

Block sorted(Block b) {
    std::sort(b.begin(), b.end());
    return b;
}

}  // namespace

ResolvableDesign affine_resolvable_bibd(int q) {
    FieldTable f(q);
    ResolvableDesign d;
    d.point_count = q * q;
    d.provenance = "affine-plane(q=" + std::to_string(q) + ")";
    // slope classes y = m x + c, then the vertical class x = c
    for (int m = 0; m < q; ++m) {
        ParallelClass cls;
        for (int c = 0; c < q; ++c) {
            Block b;
            b.reserve(q);
            for (int x = 0; x < q; ++x) b.push_back(x * q + f.add(f.mul(m, x), c));
            cls.push_back(sorted(std::move(b)));
        }
        d.classes.push_back(std::move(cls));
    }
    ParallelClass vert;
    for (int c = 0; c < q; ++c) {
        Block b;
        for (int y = 0; y < q; ++y) b.push_back(c * q + y);
        vert.push_back(std::move(b));
    }
    d.classes.push_back(std::move(vert));
    validate_or_throw(d, "affine_resolvable_bibd");
    return d;
}

ResolvableDesign resolvable_transversal_design(int k, int s) {
    if (k < 1) throw std::invalid_argument("resolvable_transversal_design: k must be >= 1");
    if (k > s)
        throw std::invalid_argument("resolvable_transversal_design: block size k = " +
                                    std::to_string(k) + " exceeds s = " + std::to_string(s));
    FieldTable f(s);
    ResolvableDesign d;
    d.point_count = k * s;
    d.provenance = "rtd(k=" + std::to_string(k) + ",s=" + std::to_string(s) + ")";
    // point (row a, column x) has index a*s + x; class per slope m
    for (int m = 0; m < s; ++m) {
        ParallelClass cls;
        for (int c = 0; c < s; ++c) {
            Block b;
            b.reserve(k);
            for (int a = 0; a < k; ++a) b.push_back(a * s + f.add(f.mul(m, a), c));
            cls.push_back(sorted(std::move(b)));
        }
        d.classes.push_back(std::move(cls));
    }
    validate_or_throw(d, "resolvable_transversal_design");
    return d;
}

namespace {

// Reinsertion matching for the q^2-1 surgery.
//
// Classes are the pencil directions through the removed point p*. The row of
// class i (the punctured block through p*) is laid out as columns c = 1..q-1
// with point p* + (mu_i * c) v_i; column c of class i is anchored to column c
// of the successor class. A cross-class pair of rebuilt blocks picks up a
// third common point exactly when w_i * w_l = -det(v_i, v_l)^2, where
// w_i = mu_{s(i)} det(v_{s(i)}, v_i) / mu_i. Over GF(q) with q = 3 (mod 4)
// the right side is always a non-square, so making every w_i a non-square
// rules the event out; that needs the cycle's det product to have an even
// number of non-square factors, which an interior swap of the slope order
// arranges. In even characteristic (and when no parity fix exists) the plain
// matching is used and triple intersections may survive.
struct SurgeryPlan {
    std::vector<int> order;  // class keys: field elements, then q for the vertical pencil
    std::vector<int> mu;     // column scalings per class, same indexing
    bool balanced = false;
};

SurgeryPlan plan_surgery(const FieldTable& f) {
    const int q = f.order();
    const int INF = q;
    SurgeryPlan plan;
    plan.order.resize(q + 1);
    std::iota(plan.order.begin(), plan.order.end(), 0);  // 0..q-1, INF last
    plan.mu.assign(q + 1, 1);
    if (f.characteristic() == 2) return plan;

    // det[v_a, v_b] with v_m = (1, m), v_INF = (0, 1)
    auto det = [&](int a, int b) {
        if (a == INF && b == INF) return 0;
        if (a == INF) return f.neg(1);  // det[(0,1),(1,b)] = -1
        if (b == INF) return 1;         // det[(1,a),(0,1)] = 1
        return f.sub(b, a);             // det[(1,a),(1,b)] = b - a
    };
    auto cycle_parity = [&](const std::vector<int>& ord) {
        int nr = 0;
        for (std::size_t i = 0; i < ord.size(); ++i) {
            int dv = det(ord[(i + 1) % ord.size()], ord[i]);
            if (f.chi(dv) == -1) ++nr;
        }
        return nr % 2;
    };

    if (cycle_parity(plan.order) != 0) {
        bool fixed = false;
        for (std::size_t i = 0; i + 1 < plan.order.size() && !fixed; ++i) {
            std::swap(plan.order[i], plan.order[i + 1]);
            if (cycle_parity(plan.order) == 0) fixed = true;
            else std::swap(plan.order[i], plan.order[i + 1]);
        }
        if (!fixed) return plan;  // plain matching; quality not guaranteed
    }

    int wstar = -1;
    for (int a = 1; a < q; ++a)
        if (f.chi(a) == -1) { wstar = a; break; }
    if (wstar < 0) return plan;

    // solve mu around the cycle so that every transition weight is wstar
    // (the closing weight then has the same character automatically)
    for (std::size_t i = 0; i + 1 < plan.order.size(); ++i) {
        int dv = det(plan.order[i + 1], plan.order[i]);
        plan.mu[i + 1] = f.div(f.mul(wstar, plan.mu[i]), dv);
    }
    plan.balanced = true;
    return plan;
}

}  // namespace

ResolvableDesign q2_minus_1_design(int q) {
    if (q < 3) throw std::invalid_argument("q2_minus_1_design: q must be >= 3");
    FieldTable f(q);
    const int INF = q;
    const int d = q * q - 1;
    // remove the largest-index point (q-1, q-1); labels stay contiguous
    const int gx = q - 1, gy = q - 1;

    SurgeryPlan plan = plan_surgery(f);

    auto idx = [&](int x, int y) { return x * q + y; };
    // blocks of the pencil class through any point, minus the deficient one
    auto class_blocks = [&](int key) {
        ParallelClass cls;
        if (key == INF) {
            for (int c = 0; c < q; ++c) {
                if (c == gx) continue;  // deficient vertical block
                Block b;
                for (int y = 0; y < q; ++y) b.push_back(idx(c, y));
                cls.push_back(sorted(std::move(b)));
            }
        } else {
            // lines y = key*(x - gx) + gy + c for offsets c != 0
            for (int c = 1; c < q; ++c) {
                Block b;
                for (int x = 0; x < q; ++x) {
                    int y = f.add(f.add(f.mul(key, f.sub(x, gx)), gy), c);
                    b.push_back(idx(x, y));
                }
                cls.push_back(sorted(std::move(b)));
            }
        }
        return cls;
    };
    // row of class at cycle position pos: column c -> p* + (mu*c) v_key
    auto row_points = [&](std::size_t pos) {
        const int key = plan.order[pos];
        const int mu = plan.mu[pos];
        std::vector<int> row(q - 1);
        for (int c = 1; c < q; ++c) {
            int t = f.mul(mu, c);
            if (key == INF) row[c - 1] = idx(gx, f.add(gy, t));
            else row[c - 1] = idx(f.add(gx, t), f.add(gy, f.mul(t, key)));
        }
        return row;
    };

    ResolvableDesign out;
    out.point_count = d;
    out.provenance = "q2m1(q=" + std::to_string(q) + ")" +
                     (plan.balanced ? "" : "[plain-matching]");
    out.classes.resize(q + 1);
    const std::size_t n = plan.order.size();
    for (std::size_t pos = 0; pos < n; ++pos) {
        ParallelClass cls = class_blocks(plan.order[pos]);
        auto row = row_points(pos);
        auto anchor = row_points((pos + 1) % n);
        for (int c = 0; c < q - 1; ++c) {
            bool placed = false;
            for (auto& b : cls)
                if (std::binary_search(b.begin(), b.end(), anchor[c])) {
                    b.push_back(row[c]);
                    std::sort(b.begin(), b.end());
                    placed = true;
                    break;
                }
            if (!placed)
                throw std::logic_error("q2_minus_1_design: anchor point not found in class");
        }
        // keep class positions aligned with the cycle order for reproducibility
        out.classes[pos] = std::move(cls);
    }
    validate_or_throw(out, "q2_minus_1_design");
    for (const auto& cls : out.classes)
        for (const auto& b : cls)
            if (static_cast<int>(b.size()) != q + 1)
                throw std::logic_error("q2_minus_1_design: reinsertion left a block of size " +
                                       std::to_string(b.size()));
    return out;
}

ResolvableDesign kirkman_kts15() {
    static const int days[7][5][3] = {
        {{0, 1, 2}, {3, 7, 11}, {4, 9, 14}, {5, 10, 12}, {6, 8, 13}},
        {{0, 3, 4}, {1, 7, 9}, {2, 12, 13}, {5, 8, 14}, {6, 10, 11}},
        {{0, 5, 6}, {1, 8, 10}, {2, 11, 14}, {3, 9, 13}, {4, 7, 12}},
        {{0, 7, 8}, {1, 11, 13}, {2, 4, 5}, {3, 10, 14}, {6, 9, 12}},
        {{0, 9, 10}, {1, 12, 14}, {2, 3, 6}, {4, 8, 11}, {5, 7, 13}},
        {{0, 11, 12}, {1, 3, 5}, {2, 8, 9}, {4, 10, 13}, {6, 7, 14}},
        {{0, 13, 14}, {1, 4, 6}, {2, 7, 10}, {3, 8, 12}, {5, 9, 11}},
    };
    ResolvableDesign d;
    d.point_count = 15;
    d.provenance = "kts15";
    for (const auto& day : days) {
        ParallelClass cls;
        for (const auto& t : day) cls.push_back({t[0], t[1], t[2]});
        d.classes.push_back(std::move(cls));
    }
    validate_or_throw(d, "kirkman_kts15");
    return d;
}

}  // namespace mubkit

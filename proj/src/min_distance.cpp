#include "hermitian/min_distance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hermitian {

const char* to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Auto: return "auto";
        case DistanceMethod::Enumerate: return "enumerate";
        case DistanceMethod::DependentColumns: return "dependent-columns";
    }
    return "?";
}

int default_k_max(int field_size) {
    int k = 0;
    double cost = 1.0;
    while (cost * field_size <= static_cast<double>(1 << 26)) {
        cost *= field_size;
        ++k;
    }
    return k;
}

namespace {

// Runs fn(0..tasks-1) on up to `workers` threads.
void run_tasks(int tasks, int workers, const std::function<void(int)>& fn) {
    if (workers <= 1 || tasks <= 1) {
        for (int t = 0; t < tasks; ++t) fn(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int count = std::min(workers, tasks);
    for (int w = 0; w < count; ++w)
        pool.emplace_back([&] {
            for (int t = next++; t < tasks; t = next++) fn(t);
        });
    for (auto& th : pool) th.join();
}

void atomic_min(std::atomic<int>& target, int value) {
    int cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

// Vector spaces F_{q^2}^n used by the enumerator. Each provides Vec, pack(),
// add(a, b) (a += b) and weight().

// p = 2, n <= 64: one bitmask per F_2 coordinate.
struct Binary {
    using Vec = std::array<std::uint64_t, 8>;
    int planes;

    Vec pack(std::span<const std::uint8_t> v) const {
        Vec out{};
        for (std::size_t c = 0; c < v.size(); ++c)
            for (int l = 0; l < planes; ++l)
                if ((v[c] >> l) & 1) out[l] |= std::uint64_t{1} << c;
        return out;
    }
    void add(Vec& a, const Vec& b) const {
        for (int l = 0; l < planes; ++l) a[l] ^= b[l];
    }
    int weight(const Vec& a) const {
        std::uint64_t m = 0;
        for (int l = 0; l < planes; ++l) m |= a[l];
        return std::popcount(m);
    }
};

// p = 3, n <= 64: each F_3 coordinate is a pair of one-hot masks (value 1, value 2).
struct Ternary {
    using Vec = std::array<std::uint64_t, 8>;
    int planes;

    Vec pack(std::span<const std::uint8_t> v) const {
        Vec out{};
        for (std::size_t c = 0; c < v.size(); ++c) {
            int x = v[c];
            for (int l = 0; l < planes; ++l, x /= 3) {
                if (x % 3 == 1) out[2 * l] |= std::uint64_t{1} << c;
                if (x % 3 == 2) out[2 * l + 1] |= std::uint64_t{1} << c;
            }
        }
        return out;
    }
    void add(Vec& a, const Vec& b) const {
        for (int l = 0; l < planes; ++l) {
            const std::uint64_t a1 = a[2 * l], a2 = a[2 * l + 1];
            const std::uint64_t b1 = b[2 * l], b2 = b[2 * l + 1];
            const std::uint64_t a0 = ~(a1 | a2), b0 = ~(b1 | b2);
            a[2 * l] = (a1 & b0) | (a0 & b1) | (a2 & b2);
            a[2 * l + 1] = (a2 & b0) | (a0 & b2) | (a1 & b1);
        }
    }
    int weight(const Vec& a) const {
        std::uint64_t m = 0;
        for (int l = 0; l < 2 * planes; ++l) m |= a[l];
        return std::popcount(m);
    }
};

struct Generic {
    using Vec = std::vector<std::uint8_t>;
    const Field* field;

    Vec pack(std::span<const std::uint8_t> v) const { return Vec(v.begin(), v.end()); }
    void add(Vec& a, const Vec& b) const {
        const std::uint8_t* t = field->add_table();
        const int s = field->size();
        for (std::size_t c = 0; c < a.size(); ++c) a[c] = t[a[c] * s + b[c]];
    }
    int weight(const Vec& a) const { return hermitian::weight(a); }
};

// Every nonzero codeword up to scalar multiples: for each t the words
// r_t + sum_{i>t} c_i r_i. The free coefficients are walked as F_p digits in
// modular Gray-code order, so each step adds one precomputed b_l * r_i.
template <class Space>
int enumerate_min(const Field& field, const Space& space, const Matrix& basis, int workers) {
    const int k = basis.rows();
    const int p = field.characteristic();
    const int dp = field.degree();
    const int Q = field.size();
    const std::vector<Element> additive = field.additive_basis();

    std::vector<typename Space::Vec> step(static_cast<std::size_t>(k) * dp);
    std::vector<std::uint8_t> tmp(basis.cols());
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < dp; ++l) {
            for (int c = 0; c < basis.cols(); ++c) tmp[c] = field.mul(additive[l], basis.at(i, c)).index;
            step[i * dp + l] = space.pack(tmp);
        }
    std::vector<typename Space::Vec> scaled_next(static_cast<std::size_t>(k) * Q);
    for (int i = 0; i < k; ++i)
        for (int lam = 0; lam < Q; ++lam) {
            for (int c = 0; c < basis.cols(); ++c) tmp[c] = field.mul(Element(static_cast<std::uint8_t>(lam)), basis.at(i, c)).index;
            scaled_next[i * Q + lam] = space.pack(tmp);
        }

    // Task (t, lambda): leading row t, coefficient lambda on row t+1.
    struct Task {
        int t;
        int lambda;  // -1 when row t is last
    };
    std::vector<Task> tasks;
    for (int t = 0; t < k; ++t) {
        if (t + 1 < k)
            for (int lam = 0; lam < Q; ++lam) tasks.push_back({t, lam});
        else
            tasks.push_back({t, -1});
    }

    std::atomic<int> best{basis.cols() + 1};
    run_tasks(static_cast<int>(tasks.size()), workers, [&](int ti) {
        const Task task = tasks[ti];
        typename Space::Vec v = step[task.t * dp];  // b_0 = 1
        int first_free = task.t + 1;
        if (task.lambda >= 0) {
            space.add(v, scaled_next[(task.t + 1) * Q + task.lambda]);
            first_free = task.t + 2;
        }
        const int digits = (k - first_free) * dp;
        int local = space.weight(v);
        std::vector<int> counter(static_cast<std::size_t>(digits) + 1, 0);
        while (true) {
            int j = 0;
            while (j < digits && counter[j] == p - 1) counter[j++] = 0;
            if (j == digits) break;
            ++counter[j];
            space.add(v, step[(first_free + j / dp) * dp + j % dp]);
            local = std::min(local, space.weight(v));
        }
        atomic_min(best, local);
    });
    return best.load();
}

// Smallest dependent set among the columns of H, searched by DFS over column
// subsets in increasing index order with an incremental echelon basis.
class DependentSearch {
public:
    DependentSearch(const Field& field, const Matrix& H, int upper) : field_(field), r_(H.rows()), n_(H.cols()) {
        cols_.resize(n_);
        for (int c = 0; c < n_; ++c) {
            cols_[c].resize(r_);
            for (int t = 0; t < r_; ++t) cols_[c][t] = H.at(t, c).index;
        }
        best_.store(upper);
    }

    int run(int workers) {
        run_tasks(n_, workers, [&](int c) {
            std::vector<std::vector<std::uint8_t>> basis;
            std::vector<int> pivots;
            std::vector<std::uint8_t> v = cols_[c];
            if (!insert(v, basis, pivots)) {
                atomic_min(best_, 1);
                return;
            }
            extend(basis, pivots, c + 1);
        });
        return best_.load();
    }

private:
    // Reduces v against the basis; on a nonzero remainder appends it and returns true.
    bool insert(std::vector<std::uint8_t>& v, std::vector<std::vector<std::uint8_t>>& basis,
                std::vector<int>& pivots) const {
        const std::uint8_t* add = field_.add_table();
        const std::uint8_t* mul = field_.mul_table();
        const std::uint8_t* neg = field_.neg_table();
        const std::uint8_t* inv = field_.inv_table();
        const int s = field_.size();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const int p = pivots[b];
            if (v[p] == 0) continue;
            const std::uint8_t f = neg[v[p]];
            const auto& row = basis[b];
            for (int u = p; u < r_; ++u) v[u] = add[v[u] * s + mul[f * s + row[u]]];
        }
        int p = 0;
        while (p < r_ && v[p] == 0) ++p;
        if (p == r_) return false;
        const std::uint8_t f = inv[v[p]];
        for (int u = p; u < r_; ++u) v[u] = mul[f * s + v[u]];
        basis.push_back(v);
        pivots.push_back(p);
        return true;
    }

    void extend(std::vector<std::vector<std::uint8_t>>& basis, std::vector<int>& pivots, int next) {
        const int size = static_cast<int>(basis.size());
        for (int c = next; c < n_; ++c) {
            if (size + 1 >= best_.load(std::memory_order_relaxed)) return;
            std::vector<std::uint8_t> v = cols_[c];
            if (!insert(v, basis, pivots)) {
                atomic_min(best_, size + 1);
                return;
            }
            if (size + 2 < best_.load(std::memory_order_relaxed)) extend(basis, pivots, c + 1);
            basis.pop_back();
            pivots.pop_back();
        }
    }

    const Field& field_;
    int r_;
    int n_;
    std::vector<std::vector<std::uint8_t>> cols_;
    std::atomic<int> best_;
};

double binomial_prefix(int n, int t_max) {
    double total = 0.0;
    double term = 1.0;
    for (int t = 0; t <= t_max && t <= n; ++t) {
        total += term;
        term = term * (n - t) / (t + 1);
    }
    return total;
}

}  // namespace

MinDistanceResult min_distance_exhaustive(const Field& field, const Matrix& rows, const MinDistanceOptions& opts) {
    const RowEchelon e = rref(field, rows);
    const int k = e.rank();
    const int n = rows.cols();
    if (k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
    const int k_max = opts.k_max > 0 ? opts.k_max : default_k_max(field.size());
    if (k > k_max) throw OracleInfeasible(k, k_max);

    // Any reduced row is a codeword, so its weight bounds the search.
    int upper = n;
    for (int r = 0; r < k; ++r) upper = std::min(upper, weight(e.reduced.row(r)));

    DistanceMethod method = opts.method;
    if (method == DistanceMethod::Auto) {
        const double enum_cost = std::pow(static_cast<double>(field.size()), k - 1);
        const double dfs_cost = binomial_prefix(n, upper - 1) * std::max(1, (n - k) / 4);
        method = enum_cost <= dfs_cost ? DistanceMethod::Enumerate : DistanceMethod::DependentColumns;
    }

    int d = 0;
    if (method == DistanceMethod::Enumerate) {
        const int p = field.characteristic();
        if (n <= 64 && p == 2)
            d = enumerate_min(field, Binary{field.degree()}, e.reduced, opts.workers);
        else if (n <= 64 && p == 3)
            d = enumerate_min(field, Ternary{field.degree()}, e.reduced, opts.workers);
        else
            d = enumerate_min(field, Generic{&field}, e.reduced, opts.workers);
    } else {
        if (k == n) {
            d = 1;
        } else {
            const Matrix H = kernel(field, e.reduced);
            DependentSearch search(field, H, std::min(upper, n - k + 1));
            d = search.run(opts.workers);
        }
    }
    return {d, k, method};
}

}  // namespace hermitian

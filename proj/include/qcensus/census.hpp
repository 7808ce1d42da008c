#pragma once

// Torus-fixed points of the moduli of rank-r framed sheaves: the tangent
// weight decomposition at an r-tuple of Young diagrams, attracting-cell
// dimensions for a one-parameter subtorus, and the derived component-count
// (h0) and Poincare generating series.

#include "qcensus/bivariate.hpp"
#include "qcensus/partition.hpp"
#include "qcensus/series.hpp"

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qcensus {

// Raised when a computation's validity criterion is not met (for instance a
// cocharacter outside the compactness regime): the tool refuses rather than
// extrapolating.
class Refusal : public std::runtime_error {
public:
    explicit Refusal(const std::string& what) : std::runtime_error(what) {}
};

// An r-tuple of Young diagrams D_1..D_r; the combinatorial datum of a fixed
// point of total size n = sum |D_i|.
struct FixedPoint {
    std::vector<Partition> diagrams;

    int rank() const { return static_cast<int>(diagrams.size()); }

    int total_size() const {
        int n = 0;
        for (const Partition& d : diagrams) n += d.size();
        return n;
    }
};

// The one-parameter subtorus (t^alpha, t^beta, t^{w_1}, ..., t^{w_r}) with
// alpha, beta >= 1 coprime.
class Cocharacter {
public:
    Cocharacter(int alpha, int beta, std::vector<int> weights)
        : alpha_(alpha), beta_(beta), weights_(std::move(weights)) {
        if (alpha_ < 1 || beta_ < 1)
            throw std::invalid_argument("Cocharacter: alpha and beta must be >= 1");
        if (std::gcd(alpha_, beta_) != 1)
            throw std::invalid_argument("Cocharacter: alpha and beta must be coprime");
        if (weights_.empty())
            throw std::invalid_argument("Cocharacter: weight vector must be nonempty");
    }

    // The vector with m leading ones followed by zeros.
    static std::vector<int> ones_vector(int r, int m) {
        if (r < 1 || m < 0 || m > r)
            throw std::invalid_argument("ones_vector: need r >= 1 and 0 <= m <= r");
        std::vector<int> w(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] = 1;
        return w;
    }

    int alpha() const { return alpha_; }
    int beta() const { return beta_; }
    const std::vector<int>& weights() const { return weights_; }
    int rank() const { return static_cast<int>(weights_.size()); }

    int weight(int index_1based) const {
        if (index_1based < 1 || index_1based > rank())
            throw std::invalid_argument("Cocharacter: framing index out of range");
        return weights_[static_cast<std::size_t>(index_1based - 1)];
    }

    int spread() const {
        auto [lo, hi] = std::minmax_element(weights_.begin(), weights_.end());
        return *hi - *lo;
    }

private:
    int alpha_;
    int beta_;
    std::vector<int> weights_;
};

// Sufficient criterion for the fixed locus to be compact (for every n):
// max w_i - min w_i < alpha + beta.
inline bool is_compact_regime(const Cocharacter& c) {
    return c.spread() < c.alpha() + c.beta();
}

// One tangent weight e_j e_i^{-1} t1^{k1} t2^{k2} at a fixed point; i is the
// destination framing index, j the source.
struct TangentWeight {
    int i = 1;
    int j = 1;
    int k1 = 0;
    int k2 = 0;

    friend auto operator<=>(const TangentWeight&, const TangentWeight&) = default;
};

// The 2rn tangent weights at the fixed point D: for every ordered pair
// (i, j), each box s of D_i contributes t1^{-l_{D_j}(s)} t2^{a_{D_i}(s)+1}
// and each box s of D_j contributes t1^{l_{D_i}(s)+1} t2^{-a_{D_j}(s)}, both
// with framing character e_j e_i^{-1}.
inline std::vector<TangentWeight> tangent_weights(const FixedPoint& fp) {
    const int r = fp.rank();
    std::vector<TangentWeight> out;
    out.reserve(static_cast<std::size_t>(2) * static_cast<std::size_t>(r) * static_cast<std::size_t>(fp.total_size()));
    for (int i = 1; i <= r; ++i) {
        const Partition& di = fp.diagrams[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= r; ++j) {
            const Partition& dj = fp.diagrams[static_cast<std::size_t>(j - 1)];
            for (const BoxCoord& s : di.boxes()) {
                const ArmLeg a_i = arm_leg(di, s);
                const ArmLeg l_j = arm_leg(dj, s);
                out.push_back({i, j, -l_j.leg, a_i.arm + 1});
            }
            for (const BoxCoord& s : dj.boxes()) {
                const ArmLeg a_j = arm_leg(dj, s);
                const ArmLeg l_i = arm_leg(di, s);
                out.push_back({i, j, l_i.leg + 1, -a_j.arm});
            }
        }
    }
    return out;
}

// t-exponent of the weight under the cocharacter: w_j - w_i + alpha*k1 + beta*k2.
inline long long weight_pairing(const TangentWeight& wt, const Cocharacter& c) {
    return static_cast<long long>(c.weight(wt.j)) - c.weight(wt.i) +
           static_cast<long long>(c.alpha()) * wt.k1 + static_cast<long long>(c.beta()) * wt.k2;
}

// Sign of the weight under the generic refinement v_1 >> ... >> v_r >> gamma
// >> 1: the framing difference dominates, then the t2-exponent, then the
// t1-exponent.  Weights of interest always have k2 != 0 when i = j; the k1
// tie-break keeps the function total.
inline int refinement_sign(const TangentWeight& wt) {
    if (wt.j != wt.i) return (wt.j < wt.i) ? +1 : -1;
    if (wt.k2 != 0) return (wt.k2 > 0) ? +1 : -1;
    return (wt.k1 > 0) ? +1 : -1;
}

// Complex dimension of the attracting cell of the fixed point inside the
// fixed locus of the cocharacter: the number of tangent weights with zero
// pairing and positive refinement sign.
inline int cell_dimension(const FixedPoint& fp, const Cocharacter& c) {
    int dim = 0;
    for (const TangentWeight& wt : tangent_weights(fp))
        if (weight_pairing(wt, c) == 0 && refinement_sign(wt) == +1) ++dim;
    return dim;
}

// Applies fn to every fixed point of rank r and size n, iterating the sizes
// of the r diagrams as compositions of n.  Deterministic order.
template <typename Fn>
void for_each_fixed_point(int r, int n, Fn&& fn) {
    if (r < 1) throw std::invalid_argument("for_each_fixed_point: rank must be >= 1");
    if (n < 0) throw std::invalid_argument("for_each_fixed_point: size must be >= 0");
    std::vector<std::vector<Partition>> by_size;
    by_size.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) by_size.push_back(enumerate_partitions(k));
    FixedPoint fp;
    fp.diagrams.assign(static_cast<std::size_t>(r), Partition{});
    auto fill = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == r - 1) {
            for (const Partition& p : by_size[static_cast<std::size_t>(remaining)]) {
                fp.diagrams[static_cast<std::size_t>(slot)] = p;
                fn(const_cast<const FixedPoint&>(fp));
            }
            return;
        }
        for (int sz = 0; sz <= remaining; ++sz)
            for (const Partition& p : by_size[static_cast<std::size_t>(sz)]) {
                fp.diagrams[static_cast<std::size_t>(slot)] = p;
                self(self, slot + 1, remaining - sz);
            }
    };
    fill(fill, 0, n);
}

// Number of fixed points of rank r and size n: the q^n coefficient of the
// r-th power of the partition generating function.
inline Int count_fixed_points(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("count_fixed_points: need r >= 1 and n >= 0");
    Series p = inv_poch_q_inf(n);
    Series acc = Series::one(n);
    for (int i = 0; i < r; ++i) acc *= p;
    return acc[n];
}

namespace detail {

// Chunked parallel map over the fixed points of one size; the per-point work
// is pure, so only the result merge needs coordination.
inline std::vector<int> census_dims(const Cocharacter& c, int n) {
    std::vector<FixedPoint> points;
    for_each_fixed_point(c.rank(), n, [&](const FixedPoint& fp) { points.push_back(fp); });
    std::vector<int> dims(points.size(), 0);
    const std::size_t count = points.size();
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (count >= 512 && hw > 1) {
        const std::size_t chunk = (count + hw - 1) / hw;
        std::vector<std::future<void>> jobs;
        for (std::size_t begin = 0; begin < count; begin += chunk) {
            const std::size_t end = std::min(count, begin + chunk);
            jobs.push_back(std::async(std::launch::async, [&, begin, end] {
                for (std::size_t k = begin; k < end; ++k) dims[k] = cell_dimension(points[k], c);
            }));
        }
        for (auto& j : jobs) j.get();
    } else {
        for (std::size_t k = 0; k < count; ++k) dims[k] = cell_dimension(points[k], c);
    }
    std::sort(dims.begin(), dims.end());
    return dims;
}

}  // namespace detail

struct CensusKey {
    int r = 0;
    int alpha = 0;
    int beta = 0;
    std::vector<int> w;
    int n = 0;

    friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

// Persistence hook for census results; see cache.hpp for the on-disk store.
class CensusStore {
public:
    virtual ~CensusStore() = default;
    virtual std::optional<std::vector<int>> load(const CensusKey& key) = 0;
    virtual void store(const CensusKey& key, const std::vector<int>& dims) = 0;
};

// Memoized census of attracting-cell dimensions.  The memo is the only
// shared mutable state and is updated under a lock; the computation itself
// is pure and data-parallel over fixed points.
class CellCensus {
public:
    CellCensus() = default;
    explicit CellCensus(std::shared_ptr<CensusStore> store) : store_(std::move(store)) {}

    // Sorted multiset of cell dimensions over all fixed points of size n.
    std::vector<int> dimensions(const Cocharacter& c, int n) {
        const CensusKey key{c.rank(), c.alpha(), c.beta(), c.weights(), n};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
            if (store_) {
                if (auto disk = store_->load(key)) {
                    memo_.emplace(key, *disk);
                    return *disk;
                }
            }
        }
        std::vector<int> dims = detail::census_dims(c, n);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            memo_.emplace(key, dims);
            if (store_) store_->store(key, dims);
        }
        return dims;
    }

    // Generating series of the number of zero-dimensional cells, i.e. of the
    // irreducible components of the fixed locus.  Requires the compactness
    // criterion, which underpins the cell decomposition.
    Series h0_series(const Cocharacter& c, int order) {
        require_compact(c);
        Series s(order);
        for (int n = 0; n <= order; ++n) {
            const std::vector<int> dims = dimensions(c, n);
            s.coeff(n) = static_cast<long long>(std::count(dims.begin(), dims.end(), 0));
        }
        return s;
    }

    // Two-variable series: the t^n coefficient is sum_p q^{dim C_p} over the
    // fixed points of size n (the Poincare polynomial of the fixed locus).
    Bivariate poincare_series(const Cocharacter& c, int t_order) {
        require_compact(c);
        Bivariate b(t_order);
        for (int n = 0; n <= t_order; ++n) {
            QPoly poly;
            for (int d : dimensions(c, n)) {
                if (static_cast<std::size_t>(d) >= poly.size()) poly.resize(static_cast<std::size_t>(d) + 1, Int(0));
                poly[static_cast<std::size_t>(d)] += 1;
            }
            b.coeff(n) = std::move(poly);
        }
        return b;
    }

private:
    static void require_compact(const Cocharacter& c) {
        if (!is_compact_regime(c))
            throw Refusal(
                "cocharacter outside the compact regime: requires max(w) - min(w) < alpha + beta");
    }

    std::mutex mutex_;
    std::map<CensusKey, std::vector<int>> memo_;
    std::shared_ptr<CensusStore> store_;
};

inline Series h0_series(const Cocharacter& c, int order) {
    CellCensus census;
    return census.h0_series(c, order);
}

inline Bivariate poincare_series(const Cocharacter& c, int t_order) {
    CellCensus census;
    return census.poincare_series(c, t_order);
}

}  // namespace qcensus

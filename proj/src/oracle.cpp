#include "dgcalc/oracle.hpp"

#include "dgcalc/error.hpp"
#include "dgcalc/linalg.hpp"
#include "dgcalc/util.hpp"

#include <algorithm>
#include <map>

namespace dgcalc {

namespace {

struct WeightInfo {
    bool active = false;
    std::vector<int> w;  // per variable index
};

int key_weight(const WeightInfo& wi, const MonoKey& key) {
    int s = 0;
    for (const auto& f : key) s += wi.w[f.first] * static_cast<int>(f.second);
    return s;
}

int key_base_degree(const VarTable& t, const MonoKey& key) {
    int s = 0;
    for (const auto& f : key)
        if (t.var(f.first).degree == 0) s += static_cast<int>(f.second);
    return s;
}

/// All monomials of the given cohomological degree with base-degree <= d
/// (and exact total weight when selected), sorted by (base degree, key).
class BasisEnumerator {
public:
    BasisEnumerator(const VarTable& t, const WeightInfo& wi, std::optional<int> selected_weight,
                    size_t cap)
        : t_(t), wi_(wi), selected_weight_(selected_weight), cap_(cap) {
        for (int i = 0; i < t.size(); ++i)
            (t.var(i).degree < 0 ? fibers_ : bases_).push_back(i);
    }

    std::vector<MonoKey> enumerate(int degree, int max_base_degree) const {
        std::vector<MonoKey> out;
        MonoKey key;
        fiber_rec(out, key, 0, degree, max_base_degree);
        std::stable_sort(out.begin(), out.end(), [&](const MonoKey& a, const MonoKey& b) {
            int da = key_base_degree(t_, a), db = key_base_degree(t_, b);
            if (da != db) return da < db;
            return a < b;
        });
        return out;
    }

private:
    void check_cap(size_t n) const {
        if (n > cap_)
            throw DgError("oracle truncation basis exceeds cap of " + std::to_string(cap_) +
                          " monomials; shrink the window or raise the cap");
    }

    void fiber_rec(std::vector<MonoKey>& out, MonoKey& key, size_t pos, int need,
                   int max_base_degree) const {
        if (need == 0 || pos == fibers_.size()) {
            if (need != 0) return;
            base_rec(out, key, 0, max_base_degree);
            return;
        }
        int idx = fibers_[pos];
        int deg = t_.var(idx).degree;
        int max_e = t_.var(idx).odd() ? 1 : need / deg;  // both negative: quotient >= 0
        for (int e = 0; e <= max_e; ++e) {
            if (e > 0) key.emplace_back(idx, static_cast<uint32_t>(e));
            fiber_rec(out, key, pos + 1, need - e * deg, max_base_degree);
            if (e > 0) key.pop_back();
        }
    }

    void base_rec(std::vector<MonoKey>& out, MonoKey& key, size_t pos, int budget) const {
        if (pos == bases_.size()) {
            if (selected_weight_ && key_weight(wi_, key) != *selected_weight_) return;
            check_cap(out.size() + 1);
            MonoKey k = key;
            std::sort(k.begin(), k.end());
            out.push_back(std::move(k));
            return;
        }
        int idx = bases_[pos];
        for (int e = 0; e <= budget; ++e) {
            if (e > 0) key.emplace_back(idx, static_cast<uint32_t>(e));
            base_rec(out, key, pos + 1, budget - e);
            if (e > 0) key.pop_back();
        }
    }

    const VarTable& t_;
    const WeightInfo& wi_;
    std::optional<int> selected_weight_;
    size_t cap_;
    std::vector<int> fibers_, bases_;
};

std::vector<Rational> expand_in_basis(const GradedPolynomial& p, const std::map<MonoKey, int>& index,
                                      size_t dim, const char* what) {
    std::vector<Rational> v(dim);
    for (const auto& [key, coeff] : p.terms()) {
        auto it = index.find(key);
        if (it == index.end()) throw DgError(std::string("oracle: image monomial escapes the ") + what);
        v[it->second] = coeff;
    }
    return v;
}

struct DegreeDims {
    int h = 0;
};

// h^k of the d-truncation (exact kernel, image from the once-larger domain).
int truncated_h(const DgChart& c, const BasisEnumerator& en, int k, int d, int inc) {
    std::vector<MonoKey> dom = en.enumerate(k, d);
    std::vector<MonoKey> codom = en.enumerate(k + 1, d + inc);
    std::map<MonoKey, int> codom_index;
    for (size_t i = 0; i < codom.size(); ++i) codom_index[codom[i]] = static_cast<int>(i);

    std::vector<std::vector<Rational>> d_rows(dom.size());
    parallel_for(dom.size(), [&](size_t i) {
        GradedPolynomial m = GradedPolynomial::monomial(c.table, Rational(1), dom[i]);
        d_rows[i] = expand_in_basis(c.d.apply(m), codom_index, codom.size(), "codomain truncation");
    });
    int ker = static_cast<int>(dom.size()) - span_rank(d_rows);

    std::vector<MonoKey> below = en.enumerate(k - 1, d + inc);
    std::vector<MonoKey> target = en.enumerate(k, d + 2 * inc);
    std::map<MonoKey, int> target_index;
    for (size_t i = 0; i < target.size(); ++i) target_index[target[i]] = static_cast<int>(i);
    std::vector<std::vector<Rational>> im_rows(below.size());
    parallel_for(below.size(), [&](size_t i) {
        GradedPolynomial m = GradedPolynomial::monomial(c.table, Rational(1), below[i]);
        im_rows[i] = expand_in_basis(c.d.apply(m), target_index, target.size(), "image truncation");
    });
    int im = span_intersect_prefix_dim(im_rows, static_cast<int>(dom.size()));
    return ker - im;
}

}  // namespace

bool OracleResult::all_stable() const {
    for (const auto& r : per_degree)
        if (!r.stable) return false;
    return true;
}

int OracleResult::h_at(int degree) const {
    for (const auto& r : per_degree)
        if (r.degree == degree) return r.h;
    throw DgError("oracle: degree outside the computed window");
}

OracleResult bounded_cohomology(const DgChart& c, const TruncationSpec& t) {
    if (t.max_base_degree < 0) throw DgError("oracle: max base degree must be >= 0");
    if (t.window_min > 0) throw DgError("oracle: window must end at 0");

    WeightInfo wi;
    if (t.weights) {
        wi.active = true;
        wi.w.assign(c.table->size(), 0);
        for (int i = 0; i < c.table->size(); ++i) {
            auto it = t.weights->find(c.table->var(i).name);
            if (it == t.weights->end())
                throw DgError("oracle: no weight for generator '" + c.table->var(i).name + "'");
            if (it->second <= 0) throw DgError("oracle: weights must be positive");
            wi.w[i] = it->second;
        }
        for (int i = 0; i < c.table->size(); ++i) {
            const GradedPolynomial& val = c.d_value(i);
            for (const auto& [key, coeff] : val.terms()) {
                (void)coeff;
                if (key_weight(wi, key) != wi.w[i])
                    throw DgError("oracle: differential does not preserve the weight of '" +
                                  c.table->var(i).name + "'");
            }
        }
    }
    if (t.selected_weight && !wi.active) throw DgError("oracle: weight selector needs generator weights");

    // largest base-degree jump D can make on one generator
    int inc = 0;
    for (int i = 0; i < c.table->size(); ++i) {
        const GradedPolynomial& val = c.d_value(i);
        if (!val.is_zero()) inc = std::max(inc, max_base_degree(val));
    }

    BasisEnumerator en(*c.table, wi, t.selected_weight, t.basis_cap);
    OracleResult out;
    int count = -t.window_min + 1;
    out.per_degree.resize(count);
    for (int k = t.window_min; k <= 0; ++k) {
        int h_d = truncated_h(c, en, k, t.max_base_degree, inc);
        int h_d1 = truncated_h(c, en, k, t.max_base_degree + 1, inc);
        out.per_degree[k - t.window_min] = {k, h_d, h_d == h_d1};
    }
    return out;
}

}  // namespace dgcalc

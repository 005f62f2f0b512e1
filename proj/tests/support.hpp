#pragma once

#include "dgcalc/chart.hpp"
#include "dgcalc/derivation.hpp"
#include "dgcalc/morphism.hpp"
#include "dgcalc/polynomial.hpp"

#include <random>
#include <vector>

namespace dgtest {

using namespace dgcalc;

/// Independent sign oracle: normalize an explicit factor sequence by bubble
/// sort, flipping the sign on every transposition of two odd factors. Returns
/// false when an odd factor repeats.
inline bool brute_normalize(const VarTable& t, std::vector<int> seq, MonoKey& key, int& sign) {
    sign = 1;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        for (size_t j = 0; j + 1 < seq.size() - i; ++j) {
            if (seq[j] > seq[j + 1]) {
                if (t.var(seq[j]).odd() && t.var(seq[j + 1]).odd()) sign = -sign;
                std::swap(seq[j], seq[j + 1]);
            }
        }
    }
    key.clear();
    for (int v : seq) {
        if (!key.empty() && key.back().first == v) {
            if (t.var(v).odd()) return false;
            key.back().second += 1;
        } else {
            key.emplace_back(v, 1);
        }
    }
    return true;
}

/// Product of two factor sequences via the brute oracle, as a polynomial.
inline GradedPolynomial brute_product(const VarTablePtr& t, const Rational& c,
                                      const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> seq = a;
    seq.insert(seq.end(), b.begin(), b.end());
    MonoKey key;
    int sign;
    if (!brute_normalize(*t, seq, key, sign)) return GradedPolynomial::zero(t);
    return GradedPolynomial::monomial(t, sign < 0 ? -c : c, key);
}

struct Rng {
    std::mt19937 engine;
    explicit Rng(uint32_t seed) : engine(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
    Rational coeff() {
        int n = uniform(-4, 4);
        int d = uniform(1, 3);
        return Rational(BigInt(static_cast<long long>(n)), BigInt(static_cast<long long>(d)));
    }
};

/// Random polynomial over the table with up to max_terms monomials.
inline GradedPolynomial random_poly(Rng& rng, const VarTablePtr& t, int max_terms, int max_exp = 2) {
    GradedPolynomial p = GradedPolynomial::zero(t);
    int terms = rng.uniform(0, max_terms);
    for (int i = 0; i < terms; ++i) {
        MonoKey key;
        for (int v = 0; v < t->size(); ++v) {
            int cap = t->var(v).odd() ? 1 : max_exp;
            int e = rng.uniform(0, cap);
            if (e > 0) key.emplace_back(v, static_cast<uint32_t>(e));
        }
        p = p + GradedPolynomial::monomial(t, rng.coeff(), key);
    }
    return p;
}

/// Random homogeneous polynomial of the requested degree (may be zero).
inline GradedPolynomial random_homogeneous(Rng& rng, const VarTablePtr& t, int degree, int max_terms,
                                           int max_base_exp = 2) {
    GradedPolynomial p = GradedPolynomial::zero(t);
    for (int attempt = 0; attempt < 12 * max_terms && static_cast<int>(p.terms().size()) < max_terms;
         ++attempt) {
        MonoKey key;
        int deg = 0;
        for (int v : t->fiber_indices()) {
            int cap = t->var(v).odd() ? 1 : 2;
            int e = rng.uniform(0, cap);
            if (e > 0) {
                key.emplace_back(v, static_cast<uint32_t>(e));
                deg += e * t->var(v).degree;
            }
        }
        if (deg != degree) continue;
        for (int v : t->base_indices()) {
            int e = rng.uniform(0, max_base_exp);
            if (e > 0) key.emplace_back(v, static_cast<uint32_t>(e));
        }
        p = p + GradedPolynomial::monomial(t, rng.coeff(), key);
    }
    return p;
}

}  // namespace dgtest

#include "dgcalc/polynomial.hpp"

#include "dgcalc/error.hpp"

#include <algorithm>
#include <sstream>

namespace dgcalc {

namespace {

bool var_odd(const VarTable& t, int idx) { return t.var(idx).odd(); }

// Normalize an arbitrary factor list into canonical order, tracking the
// Koszul sign of the reordering. Returns false when an odd variable repeats.
bool normalize_key(const VarTable& t, MonoKey& key, int& sign) {
    sign = 1;
    // insertion sort over the factor entries, counting odd-odd transpositions
    for (size_t i = 1; i < key.size(); ++i) {
        auto item = key[i];
        size_t j = i;
        while (j > 0 && key[j - 1].first > item.first) {
            // item jumps over key[j-1]
            if (var_odd(t, item.first) && var_odd(t, key[j - 1].first)) {
                // both entries have exponent bounded by 1 for odd vars at this
                // point only if input was sane; treat exponents explicitly below
                if ((item.second % 2) && (key[j - 1].second % 2)) sign = -sign;
            }
            key[j] = key[j - 1];
            --j;
        }
        key[j] = item;
    }
    // combine equal indices
    MonoKey merged;
    for (const auto& f : key) {
        if (f.second == 0) continue;
        if (!merged.empty() && merged.back().first == f.first) {
            if (var_odd(t, f.first)) return false;  // odd square
            merged.back().second += f.second;
        } else {
            if (var_odd(t, f.first) && f.second > 1) return false;
            merged.push_back(f);
        }
    }
    key = std::move(merged);
    return true;
}

// Product of two canonical keys; returns false when an odd variable repeats.
// The sign counts, for every odd factor of b, the odd factors of a it must
// jump over to reach its canonical slot.
bool merge_keys(const VarTable& t, const MonoKey& a, const MonoKey& b, MonoKey& out, int& sign) {
    out.clear();
    sign = 1;
    int odd_total_a = 0;
    for (const auto& f : a)
        if (var_odd(t, f.first)) ++odd_total_a;

    size_t ia = 0, ib = 0;
    int odd_seen_a = 0;
    while (ia < a.size() || ib < b.size()) {
        bool take_a;
        if (ia == a.size()) take_a = false;
        else if (ib == b.size()) take_a = true;
        else if (a[ia].first == b[ib].first) {
            if (var_odd(t, a[ia].first)) return false;  // odd square
            out.emplace_back(a[ia].first, a[ia].second + b[ib].second);
            ++ia;
            ++ib;
            continue;
        } else {
            take_a = a[ia].first < b[ib].first;
        }
        if (take_a) {
            if (var_odd(t, a[ia].first)) ++odd_seen_a;
            out.push_back(a[ia]);
            ++ia;
        } else {
            if (var_odd(t, b[ib].first)) {
                if ((odd_total_a - odd_seen_a) % 2) sign = -sign;
            }
            out.push_back(b[ib]);
            ++ib;
        }
    }
    return true;
}

}  // namespace

int monomial_degree(const VarTable& table, const MonoKey& key) {
    int d = 0;
    for (const auto& f : key) d += table.var(f.first).degree * static_cast<int>(f.second);
    return d;
}

void GradedPolynomial::add_term(MonoKey key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void GradedPolynomial::check_same_table(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (a.table_ == b.table_) return;
    if (a.table_ && b.table_ && *a.table_ == *b.table_) return;
    throw DgError("polynomial operation across different variable universes");
}

GradedPolynomial GradedPolynomial::constant(VarTablePtr table, Rational c) {
    GradedPolynomial p(std::move(table));
    p.add_term({}, c);
    return p;
}

GradedPolynomial GradedPolynomial::variable(VarTablePtr table, int index) {
    if (index < 0 || index >= table->size()) throw DgError("variable index out of range");
    GradedPolynomial p(std::move(table));
    p.add_term({{index, 1}}, Rational(1));
    return p;
}

GradedPolynomial GradedPolynomial::monomial(VarTablePtr table, Rational coeff, MonoKey key) {
    GradedPolynomial p(table);
    int sign = 1;
    if (!normalize_key(*table, key, sign)) return p;  // odd square vanishes
    p.add_term(std::move(key), sign < 0 ? -coeff : coeff);
    return p;
}

GradedPolynomial operator+(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial::check_same_table(a, b);
    GradedPolynomial r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
}

GradedPolynomial operator-(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial::check_same_table(a, b);
    GradedPolynomial r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial r(table_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p) {
    GradedPolynomial r(p.table());
    if (c.is_zero()) return r;
    for (const auto& [k, v] : p.terms()) r.add_term(k, c * v);
    return r;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial::check_same_table(a, b);
    GradedPolynomial r(a.table_ ? a.table_ : b.table_);
    const VarTable& t = *r.table();
    MonoKey merged;
    int sign;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            if (!merge_keys(t, ka, kb, merged, sign)) continue;
            Rational c = ca * cb;
            r.add_term(merged, sign < 0 ? -c : c);
        }
    }
    return r;
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial::check_same_table(a, b);
    return a.terms_ == b.terms_;
}

GradedPolynomial pow(const GradedPolynomial& p, uint32_t e) {
    GradedPolynomial r = GradedPolynomial::constant(p.table(), Rational(1));
    for (uint32_t i = 0; i < e; ++i) r = r * p;
    return r;
}

GradedPolynomial left_partial(const GradedPolynomial& p, int var) {
    const VarTable& t = *p.table();
    if (var < 0 || var >= t.size()) throw DgError("left_partial: variable index out of range");
    GradedPolynomial r(p.table());
    const bool v_odd = t.var(var).odd();
    for (const auto& [key, coeff] : p.terms_) {
        int prefix_parity = 0;
        int found = -1;
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i].first == var) { found = static_cast<int>(i); break; }
            prefix_parity ^= (t.var(key[i].first).degree * static_cast<int>(key[i].second)) & 1;
        }
        if (found < 0) continue;
        int sign = (v_odd && prefix_parity) ? -1 : 1;
        Rational c = coeff * Rational(static_cast<long long>(key[found].second));
        if (sign < 0) c = -c;
        MonoKey reduced = key;
        if (--reduced[found].second == 0) reduced.erase(reduced.begin() + found);
        r.add_term(std::move(reduced), c);
    }
    return r;
}

GradedPolynomial left_partial(const GradedPolynomial& p, const std::string& var_name) {
    auto idx = p.table()->find(var_name);
    if (!idx) throw DgError("left_partial: unknown variable '" + var_name + "'");
    return left_partial(p, *idx);
}

Rational evaluate_at_core(const GradedPolynomial& p, const Point& point) {
    const VarTable& t = *p.table();
    std::vector<Rational> base_values(t.size());
    for (int i : t.base_indices()) {
        auto it = point.find(t.var(i).name);
        if (it == point.end()) throw DgError("point does not assign base variable '" + t.var(i).name + "'");
        base_values[i] = it->second;
    }
    Rational total(0);
    for (const auto& [key, coeff] : p.terms()) {
        bool fiber = false;
        Rational v = coeff;
        for (const auto& f : key) {
            if (t.var(f.first).degree < 0) { fiber = true; break; }
            for (uint32_t e = 0; e < f.second; ++e) v *= base_values[f.first];
        }
        if (!fiber) total += v;
    }
    return total;
}

Homogeneity homogeneous_degree(const GradedPolynomial& p) {
    if (p.is_zero()) return {Homogeneity::kZeroPolynomial, 0};
    const VarTable& t = *p.table();
    int deg = monomial_degree(t, p.terms().begin()->first);
    for (const auto& [key, c] : p.terms()) {
        (void)c;
        if (monomial_degree(t, key) != deg) return {Homogeneity::kInhomogeneous, 0};
    }
    return {Homogeneity::kHomogeneous, deg};
}

bool is_homogeneous_of(const GradedPolynomial& p, int degree) {
    Homogeneity h = homogeneous_degree(p);
    return h.kind == Homogeneity::kZeroPolynomial ||
           (h.kind == Homogeneity::kHomogeneous && h.degree == degree);
}

GradedPolynomial substitute(const GradedPolynomial& p, const std::vector<GradedPolynomial>& images,
                            VarTablePtr target) {
    if (static_cast<int>(images.size()) != p.table()->size())
        throw DgError("substitute: one image per variable required");
    if (!target) {
        for (const auto& img : images)
            if (img.table()) { target = img.table(); break; }
    }
    if (!target) throw DgError("substitute: images carry no variable universe");

    GradedPolynomial r(target);
    for (const auto& [key, coeff] : p.terms()) {
        GradedPolynomial prod = GradedPolynomial::constant(target, coeff);
        for (const auto& f : key) {
            for (uint32_t e = 0; e < f.second && !prod.is_zero(); ++e) prod = prod * images[f.first];
            if (prod.is_zero()) break;
        }
        r = r + prod;
    }
    return r;
}

GradedPolynomial lift(const GradedPolynomial& p, const VarTablePtr& to) {
    return lift_renamed(p, to, {});
}

GradedPolynomial lift_renamed(const GradedPolynomial& p, const VarTablePtr& to,
                              const std::map<std::string, std::string>& rename) {
    const VarTable& from = *p.table();
    std::vector<int> remap(from.size(), -1);
    auto map_var = [&](int i) {
        if (remap[i] >= 0) return remap[i];
        std::string name = from.var(i).name;
        auto rit = rename.find(name);
        if (rit != rename.end()) name = rit->second;
        auto idx = to->find(name);
        if (!idx) throw DgError("lift: variable '" + name + "' missing from target universe");
        if (to->var(*idx).degree != from.var(i).degree)
            throw DgError("lift: degree mismatch for variable '" + name + "'");
        return remap[i] = *idx;
    };
    GradedPolynomial r(to);
    for (const auto& [key, coeff] : p.terms()) {
        MonoKey mapped = key;
        for (auto& f : mapped) f.first = map_var(f.first);
        // canonical order is degree-and-name based, so the relative order of
        // factors is unchanged by a degree-preserving rename within a level
        // only up to names; renormalize to be safe.
        int sign = 1;
        MonoKey copy = mapped;
        if (!normalize_key(*to, copy, sign)) continue;
        r.add_term(std::move(copy), sign < 0 ? -coeff : coeff);
    }
    return r;
}

int max_base_degree(const GradedPolynomial& p) {
    const VarTable& t = *p.table();
    int best = 0;
    for (const auto& [key, c] : p.terms()) {
        (void)c;
        int d = 0;
        for (const auto& f : key)
            if (t.var(f.first).degree == 0) d += static_cast<int>(f.second);
        best = std::max(best, d);
    }
    return best;
}

int min_fiber_arity(const GradedPolynomial& p) {
    const VarTable& t = *p.table();
    int best = -1;
    for (const auto& [key, c] : p.terms()) {
        (void)c;
        int a = 0;
        for (const auto& f : key)
            if (t.var(f.first).degree < 0) a += static_cast<int>(f.second);
        if (best < 0 || a < best) best = a;
    }
    return best;
}

std::string GradedPolynomial::str() const {
    if (terms_.empty()) return "0";
    const VarTable& t = *table_;
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        Rational c = coeff;
        bool neg = BigInt::cmp(c.num(), BigInt(0)) < 0;
        if (first) {
            if (neg) { os << "-"; c = -c; }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = -c;
        }
        first = false;
        bool printed_coeff = false;
        if (key.empty() || !(c.is_integer() && c.num().is_one())) {
            os << c.str();
            printed_coeff = true;
        }
        for (size_t i = 0; i < key.size(); ++i) {
            if (printed_coeff || i > 0) os << "*";
            os << t.var(key[i].first).name;
            if (key[i].second > 1) os << "^" << key[i].second;
        }
    }
    return os.str();
}

}  // namespace dgcalc

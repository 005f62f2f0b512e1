#include "dgcalc/tangent.hpp"

#include "dgcalc/error.hpp"
#include "dgcalc/util.hpp"

namespace dgcalc {

namespace {

std::vector<std::vector<int>> levels_of(const DgChart& c) {
    std::vector<std::vector<int>> out;
    int amp = c.amplitude();
    for (int k = 0; k <= amp; ++k) out.push_back(c.table->level_indices(k));
    return out;
}

// Entry (gen_row, gen_col) of the linearization of `values` at p:
// coefficient of gen_col in the fiber-linear part, bases evaluated.
RatMat linear_block(const DgChart& c, const std::vector<GradedPolynomial>& values,
                    const std::vector<int>& rows, const std::vector<int>& cols, const Point& p) {
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int i = 0; i < m.rows(); ++i) {
        const GradedPolynomial& val = values[rows[i]];
        if (val.is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = evaluate_at_core(left_partial(val, cols[j]), p);
    }
    (void)c;
    return m;
}

}  // namespace

Diagnostic CochainComplex::check() const {
    if (d.size() + 1 != dims.size() && !(dims.empty() && d.empty()))
        return Diagnostic::fail("complex needs one differential per adjacent slot pair");
    for (size_t k = 0; k < d.size(); ++k) {
        if (d[k].rows() != dims[k + 1] || d[k].cols() != dims[k])
            return Diagnostic::fail("differential " + std::to_string(k) + " has wrong shape");
        if (k + 1 < d.size()) {
            if (!RatMat::mul(d[k + 1], d[k]).is_zero())
                return Diagnostic::fail("d.d != 0 between slots " + std::to_string(k) + " and " +
                                        std::to_string(k + 2));
        }
    }
    return Diagnostic::pass();
}

std::vector<int> cohomology_dims(const CochainComplex& c) {
    std::vector<int> h(c.dims.size());
    std::vector<int> ranks(c.d.size());
    parallel_for(c.d.size(), [&](size_t k) { ranks[k] = rank(c.d[k]); });
    for (size_t k = 0; k < c.dims.size(); ++k) {
        int r_out = k < c.d.size() ? ranks[k] : 0;
        int r_in = k > 0 ? ranks[k - 1] : 0;
        h[k] = c.dims[k] - r_out - r_in;
    }
    return h;
}

bool is_acyclic(const CochainComplex& c) {
    for (int h : cohomology_dims(c))
        if (h != 0) return false;
    return true;
}

CochainComplex tangent_complex(const DgChart& c, const Point& p) {
    if (!is_classical_point(c, p)) throw DgError("tangent_complex: point is not classical");
    auto levels = levels_of(c);
    CochainComplex out;
    for (const auto& lv : levels) out.dims.push_back(static_cast<int>(lv.size()));
    for (size_t k = 0; k + 1 < levels.size(); ++k)
        out.d.push_back(linear_block(c, c.d.values(), levels[k + 1], levels[k], p));
    Diagnostic ok = out.check();
    if (!ok.ok) throw DgError("tangent_complex: " + ok.message);
    return out;
}

Diagnostic TangentChainMap::check() const {
    if (mats.size() != source.dims.size() && mats.size() != std::max(source.dims.size(), target.dims.size()))
        return Diagnostic::fail("chain map needs one matrix per slot");
    for (size_t k = 0; k + 1 < std::min(source.dims.size(), target.dims.size()); ++k) {
        if (k >= mats.size() || k + 1 >= mats.size()) break;
        RatMat lhs = RatMat::mul(target.d[k], mats[k]);
        RatMat rhs = RatMat::mul(mats[k + 1], source.d[k]);
        if (!(lhs == rhs)) return Diagnostic::fail("square fails between slots " + std::to_string(k) +
                                                   " and " + std::to_string(k + 1));
    }
    return Diagnostic::pass();
}

TangentChainMap tangent_chain_map(const DgMorphism& f, const Point& p) {
    TangentChainMap out;
    out.source = tangent_complex(*f.source, p);
    Point q = image_point(f, p);
    out.target = tangent_complex(*f.target, q);

    auto src_levels = levels_of(*f.source);
    auto tgt_levels = levels_of(*f.target);
    size_t n = std::max(src_levels.size(), tgt_levels.size());
    src_levels.resize(n);
    tgt_levels.resize(n);
    out.source.dims.resize(n, 0);
    out.target.dims.resize(n, 0);
    while (out.source.d.size() + 1 < n) out.source.d.push_back(RatMat(0, out.source.dims[out.source.d.size()]));
    while (out.target.d.size() + 1 < n) out.target.d.push_back(RatMat(0, out.target.dims[out.target.d.size()]));

    for (size_t k = 0; k < n; ++k) {
        RatMat m(static_cast<int>(tgt_levels[k].size()), static_cast<int>(src_levels[k].size()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = evaluate_at_core(left_partial(f.images[tgt_levels[k][i]], src_levels[k][j]), p);
        out.mats.push_back(std::move(m));
    }
    Diagnostic ok = out.check();
    if (!ok.ok) throw DgError("tangent_chain_map: " + ok.message);
    return out;
}

CochainComplex mapping_cone(const TangentChainMap& f) {
    const CochainComplex& x = f.source;
    const CochainComplex& y = f.target;
    auto xdim = [&](size_t i) { return i < x.dims.size() ? x.dims[i] : 0; };
    auto ydim = [&](size_t i) { return i < y.dims.size() ? y.dims[i] : 0; };
    auto xd = [&](size_t i) {  // x.d[i]: slot i -> i+1
        return i < x.d.size() ? x.d[i] : RatMat(xdim(i + 1), xdim(i));
    };
    auto yd = [&](size_t i) { return i < y.d.size() ? y.d[i] : RatMat(ydim(i + 1), ydim(i)); };
    auto fm = [&](size_t i) { return i < f.mats.size() ? f.mats[i] : RatMat(ydim(i), xdim(i)); };

    size_t n = std::max(x.dims.size(), y.dims.size() + 1);
    CochainComplex cone;
    for (size_t i = 0; i < n; ++i) cone.dims.push_back(xdim(i) + (i > 0 ? ydim(i - 1) : 0));
    for (size_t i = 0; i + 1 < n; ++i) {
        RatMat m(cone.dims[i + 1], cone.dims[i]);
        RatMat dx = xd(i);
        for (int r = 0; r < dx.rows(); ++r)
            for (int c = 0; c < dx.cols(); ++c) m.at(r, c) = -dx.at(r, c);
        RatMat fi = fm(i);
        for (int r = 0; r < fi.rows(); ++r)
            for (int c = 0; c < fi.cols(); ++c) m.at(xdim(i + 1) + r, c) = fi.at(r, c);
        if (i > 0) {
            RatMat dy = yd(i - 1);
            for (int r = 0; r < dy.rows(); ++r)
                for (int c = 0; c < dy.cols(); ++c) m.at(xdim(i + 1) + r, xdim(i) + c) = dy.at(r, c);
        }
        cone.d.push_back(std::move(m));
    }
    Diagnostic ok = cone.check();
    if (!ok.ok) throw DgError("mapping_cone: " + ok.message);
    return cone;
}

ProbeVerdict is_pointwise_weq(const DgMorphism& f, const std::vector<Point>& probes) {
    std::vector<char> fail(probes.size(), 0);
    parallel_for(probes.size(), [&](size_t i) {
        TangentChainMap tcm = tangent_chain_map(f, probes[i]);
        fail[i] = is_acyclic(mapping_cone(tcm)) ? 0 : 1;
    });
    for (size_t i = 0; i < probes.size(); ++i) {
        if (fail[i]) {
            ProbeVerdict v;
            v.ok = false;
            v.witness = probes[i];
            v.detail = "mapping cone not acyclic";
            return v;
        }
    }
    return {};
}

ProbeVerdict is_fibration_at(const DgMorphism& f, const std::vector<Point>& probes) {
    auto src_levels = levels_of(*f.source);
    auto tgt_levels = levels_of(*f.target);
    size_t n = std::max(src_levels.size(), tgt_levels.size());
    src_levels.resize(n);
    tgt_levels.resize(n);

    std::vector<std::string> fail(probes.size());
    parallel_for(probes.size(), [&](size_t i) {
        const Point& p = probes[i];
        if (!is_classical_point(*f.source, p)) throw DgError("is_fibration_at: probe is not classical");
        for (size_t k = 0; k < n; ++k) {
            RatMat m(static_cast<int>(tgt_levels[k].size()), static_cast<int>(src_levels[k].size()));
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    m.at(r, c) = evaluate_at_core(left_partial(f.images[tgt_levels[k][r]], src_levels[k][c]), p);
            if (rank(m) != m.rows()) {
                fail[i] = k == 0 ? "base Jacobian not of full row rank"
                                 : "fiber-linear block at degree -" + std::to_string(k) +
                                       " not of full row rank";
                return;
            }
        }
    });
    for (size_t i = 0; i < probes.size(); ++i) {
        if (!fail[i].empty()) {
            ProbeVerdict v;
            v.ok = false;
            v.witness = probes[i];
            v.detail = fail[i];
            return v;
        }
    }
    return {};
}

}  // namespace dgcalc

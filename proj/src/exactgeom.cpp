#include "rotset/exactgeom.hpp"

#include "rotset/errors.hpp"
#include "rotset/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rotset {

namespace {

void require_same_dim(std::size_t expected, const HomologyVector& v, const char* what) {
    if (v.dim() != expected) {
        throw ModelError(std::string(what) + ": dimension mismatch (expected " +
                         std::to_string(expected) + ", got " + std::to_string(v.dim()) + ")");
    }
}

// Row-reduces `rows` in place and returns the rank.
std::size_t eliminate(std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

// Phase-one LP: x = sum w_i p_i, sum w_i = 1, w >= 0.
std::optional<std::vector<Rational>> hull_weights(std::span<const HomologyVector> pts,
                                                  const HomologyVector& x) {
    const std::size_t d = x.dim();
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(pts.size()));
    std::vector<Rational> b(d + 1);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < pts.size(); ++i) a[k][i] = pts[i][k];
        b[k] = x[k];
    }
    for (std::size_t i = 0; i < pts.size(); ++i) a[d][i] = 1;
    b[d] = 1;
    return lp::find_feasible(a, b);
}

bool in_hull(std::span<const HomologyVector> pts, const HomologyVector& x) {
    if (pts.empty()) return false;
    if (std::find(pts.begin(), pts.end(), x) != pts.end()) return true;
    return hull_weights(pts, x).has_value();
}

// Some c with |c_k| <= 1 and c.x > max_v c.v, for x outside conv(pts).
//   variables: c+ (d), c- (d), delta+, delta-, slack per point (m), box slack (d)
//   c.v - delta + s_v = 0 for every point, c+_k + c-_k + u_k = 1
//   minimise delta - c.x
HomologyVector separating_direction(std::span<const HomologyVector> pts, const HomologyVector& x) {
    const std::size_t d = x.dim();
    const std::size_t m = pts.size();
    const std::size_t dp = 2 * d, dm = 2 * d + 1, slack = 2 * d + 2, box = slack + m;
    const std::size_t cols = box + d;
    lp::Problem prob;
    prob.a.assign(m + d, std::vector<Rational>(cols, Rational(0)));
    prob.b.assign(m + d, Rational(0));
    prob.c.assign(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            prob.a[i][k] = pts[i][k];
            prob.a[i][d + k] = -pts[i][k];
        }
        prob.a[i][dp] = -1;
        prob.a[i][dm] = 1;
        prob.a[i][slack + i] = 1;
    }
    for (std::size_t k = 0; k < d; ++k) {
        prob.a[m + k][k] = 1;
        prob.a[m + k][d + k] = 1;
        prob.a[m + k][box + k] = 1;
        prob.b[m + k] = 1;
        prob.c[k] = -x[k];
        prob.c[d + k] = x[k];
    }
    prob.c[dp] = 1;
    prob.c[dm] = -1;
    const auto sol = lp::solve(prob);
    if (sol.status != lp::Status::optimal || sgn(sol.objective) >= 0) {
        throw std::logic_error("separating_direction: point is not separable");
    }
    HomologyVector c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = sol.x[k] - sol.x[d + k];
    return c;
}

// Deterministic small integer directions; argmax points along them are
// guaranteed vertices and seed the incremental hull.
std::vector<HomologyVector> probe_directions(std::size_t dim) {
    std::vector<HomologyVector> dirs;
    for (std::size_t k = 0; k < dim; ++k) {
        dirs.push_back(HomologyVector::unit(dim, k));
        dirs.push_back(Rational(-1) * HomologyVector::unit(dim, k));
    }
    std::uint64_t state = 0x9E3779B97F4A7C15ULL;
    for (int n = 0; n < 24; ++n) {
        HomologyVector v(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            v[k] = static_cast<long>((state >> 33) % 15) - 7;
        }
        dirs.push_back(std::move(v));
    }
    return dirs;
}

}  // namespace

RationalPolytope RationalPolytope::point(HomologyVector p) {
    return RationalPolytope(std::vector<HomologyVector>{std::move(p)});
}

RationalPolytope RationalPolytope::from_canonical(std::vector<HomologyVector> vertices) {
    if (vertices.empty()) throw ModelError("polytope must be nonempty");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        require_same_dim(vertices.front().dim(), vertices[i], "polytope");
        if (!(vertices[i - 1] < vertices[i])) {
            throw ModelError("polytope vertices must be strictly lexicographically increasing");
        }
    }
    return RationalPolytope(std::move(vertices));
}

std::string RationalPolytope::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ", ";
        out += vertices_[i].to_string();
    }
    return out + "}";
}

SubspaceBasis::SubspaceBasis(std::size_t dim_ambient, std::vector<HomologyVector> basis)
    : dim_(dim_ambient), basis_(std::move(basis)) {
    for (const auto& v : basis_) require_same_dim(dim_, v, "subspace basis");
    if (rotset::rank(basis_) != basis_.size()) {
        throw ModelError("subspace basis vectors are linearly dependent");
    }
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
    if (other.dim_ != dim_) throw ModelError("subspace sum: dimension mismatch");
    SubspaceBasis out;
    out.dim_ = dim_;
    for (const auto* src : {&basis_, &other.basis_}) {
        for (const auto& v : *src) {
            if (!out.contains(v)) out.basis_.push_back(v);
        }
    }
    return out;
}

bool SubspaceBasis::contains(const HomologyVector& v) const {
    require_same_dim(dim_, v, "subspace membership");
    if (v.is_zero()) return true;
    std::vector<HomologyVector> ext = basis_;
    ext.push_back(v);
    return rotset::rank(ext) == basis_.size();
}

std::size_t rank(std::span<const HomologyVector> vectors) {
    if (vectors.empty()) return 0;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        require_same_dim(vectors.front().dim(), v, "rank");
        rows.push_back(v.coords());
    }
    return eliminate(rows);
}

RationalPolytope extreme_points(std::span<const HomologyVector> points) {
    if (points.empty()) throw ModelError("extreme_points: empty point set");
    const std::size_t d = points.front().dim();
    for (const auto& p : points) require_same_dim(d, p, "extreme_points");

    std::vector<HomologyVector> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return RationalPolytope(std::move(pts));

    // The lexicographically largest maximiser of a linear functional is a vertex.
    auto argmax = [&](const HomologyVector& dir) {
        std::size_t best = 0;
        Rational best_val = dir.dot(pts[0]);
        for (std::size_t i = 1; i < pts.size(); ++i) {
            Rational val = dir.dot(pts[i]);
            if (val > best_val || (val == best_val && pts[best] < pts[i])) {
                best = i;
                best_val = std::move(val);
            }
        }
        return best;
    };

    std::vector<bool> is_vertex(pts.size(), false);
    std::vector<HomologyVector> verts;
    auto add = [&](std::size_t i) {
        if (is_vertex[i]) return false;
        is_vertex[i] = true;
        verts.push_back(pts[i]);
        return true;
    };
    for (const auto& dir : probe_directions(d)) add(argmax(dir));

    // A point outside the current vertex hull yields a functional that some
    // unseen vertex maximises; only certified vertices ever enter the hull.
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (!is_vertex[i] && !in_hull(verts, pts[i])) {
            if (!add(argmax(separating_direction(verts, pts[i])))) {
                throw std::logic_error("extreme_points: separation found no new vertex");
            }
        }
    }
    std::sort(verts.begin(), verts.end());
    return RationalPolytope(std::move(verts));
}

std::optional<std::vector<Rational>> membership_witness(const RationalPolytope& polytope,
                                                        const HomologyVector& x) {
    require_same_dim(polytope.dim_ambient(), x, "contains_point");
    return hull_weights(polytope.vertices(), x);
}

bool contains_point(const RationalPolytope& polytope, const HomologyVector& x) {
    require_same_dim(polytope.dim_ambient(), x, "contains_point");
    return in_hull(polytope.vertices(), x);
}

std::size_t affine_dim(const RationalPolytope& polytope) {
    const auto& vs = polytope.vertices();
    std::vector<HomologyVector> diffs;
    diffs.reserve(vs.size());
    for (std::size_t i = 1; i < vs.size(); ++i) diffs.push_back(vs[i] - vs[0]);
    return rank(diffs);
}

std::optional<ParamInterval> segment_parameters(const HomologyVector& a, const HomologyVector& b,
                                                const RationalPolytope& polytope) {
    const std::size_t d = polytope.dim_ambient();
    require_same_dim(d, a, "segment");
    require_same_dim(d, b, "segment");
    if (a == b) {
        if (!contains_point(polytope, a)) return std::nullopt;
        return ParamInterval{0, 1};
    }
    const auto& vs = polytope.vertices();
    const std::size_t m = vs.size();
    const std::size_t t_col = m;
    const std::size_t s_col = m + 1;
    // sum w_i v_i - t (b - a) = a ; sum w_i = 1 ; t + s = 1
    lp::Problem prob;
    prob.a.assign(d + 2, std::vector<Rational>(m + 2, Rational(0)));
    prob.b.assign(d + 2, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < m; ++i) prob.a[k][i] = vs[i][k];
        prob.a[k][t_col] = a[k] - b[k];
        prob.b[k] = a[k];
    }
    for (std::size_t i = 0; i < m; ++i) prob.a[d][i] = 1;
    prob.b[d] = 1;
    prob.a[d + 1][t_col] = 1;
    prob.a[d + 1][s_col] = 1;
    prob.b[d + 1] = 1;

    prob.c.assign(m + 2, Rational(0));
    prob.c[t_col] = 1;
    const auto lo = lp::solve(prob);
    if (lo.status != lp::Status::optimal) return std::nullopt;
    prob.c[t_col] = -1;
    const auto hi = lp::solve(prob);
    return ParamInterval{lo.objective, -hi.objective};
}

std::vector<ParamGap> segment_gaps(const HomologyVector& a, const HomologyVector& b,
                                   std::span<const RationalPolytope> family) {
    std::vector<ParamInterval> covered;
    for (const auto& p : family) {
        if (auto iv = segment_parameters(a, b, p)) covered.push_back(std::move(*iv));
    }
    std::sort(covered.begin(), covered.end(),
              [](const ParamInterval& x, const ParamInterval& y) { return x.lo < y.lo; });

    std::vector<ParamGap> gaps;
    Rational pos = 0;
    bool pos_covered = false;
    for (const auto& iv : covered) {
        if (iv.lo > pos) {
            gaps.push_back({pos, iv.lo, !pos_covered, false});
            pos = iv.hi;
            pos_covered = true;
        } else if (iv.hi >= pos) {
            pos = iv.hi;
            pos_covered = true;
        }
    }
    if (pos < 1 || !pos_covered) gaps.push_back({pos, 1, !pos_covered, true});
    return gaps;
}

bool segment_covered(const HomologyVector& a, const HomologyVector& b,
                     std::span<const RationalPolytope> family) {
    return segment_gaps(a, b, family).empty();
}

bool in_span(const SubspaceBasis& subspace, const RationalPolytope& polytope) {
    if (subspace.dim_ambient() != polytope.dim_ambient()) {
        throw ModelError("in_span: dimension mismatch");
    }
    for (const auto& v : polytope.vertices()) {
        if (!subspace.contains(v)) return false;
    }
    return true;
}

bool polytope_contains(const RationalPolytope& outer, const RationalPolytope& inner) {
    for (const auto& v : inner.vertices()) {
        if (!contains_point(outer, v)) return false;
    }
    return true;
}

}  // namespace rotset

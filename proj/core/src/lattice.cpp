#include "k3fm/lattice.hpp"

#include <algorithm>

namespace k3fm {

IntMat int_identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat rat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat c(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat c(n, RatVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IntMat int_transpose(const IntMat& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    IntMat t(m, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

RatMat to_rat(const IntMat& a) {
    RatMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = RatVec(a[i].begin(), a[i].end());
    return r;
}

RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

IntVec int_mat_vec(const IntMat& a, const IntVec& v) {
    IntVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

RatVec rat_mat_vec(const RatMat& a, const RatVec& v) {
    RatVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return is_integer(q); });
}

IntVec to_int(const RatVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument("to_int: non-integral coordinate");
        r[i] = num(v[i]);
    }
    return r;
}

Int int_det(IntMat a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

RatMat rat_inverse(RatMat a) {
    std::size_t n = a.size();
    RatMat inv = rat_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("rat_inverse: singular matrix");
        std::swap(a[c], a[p]);
        std::swap(inv[c], inv[p]);
        Rat piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
    std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        std::swap(b[r], b[p]);
        Rat piv = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= piv;
        b[r] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

namespace {

void snf_swap_rows(IntMat& a, IntMat& u, std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
}

void snf_swap_cols(IntMat& a, IntMat& v, std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
}

void snf_add_row(IntMat& a, IntMat& u, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < a[dst].size(); ++j) a[dst][j] += f * a[src][j];
    for (std::size_t j = 0; j < u[dst].size(); ++j) u[dst][j] += f * u[src][j];
}

void snf_add_col(IntMat& a, IntMat& v, std::size_t dst, std::size_t src, const Int& f) {
    for (auto& row : a) row[dst] += f * row[src];
    for (auto& row : v) row[dst] += f * row[src];
}

void snf_negate_row(IntMat& a, IntMat& u, std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
}

}  // namespace

SmithNF smith_normal_form(const IntMat& m) {
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    SmithNF s{int_identity(rows), m, int_identity(cols)};
    IntMat& a = s.d;
    std::size_t t = 0;
    std::size_t dim = std::min(rows, cols);
    while (t < dim) {
        // locate a nonzero pivot with minimal absolute value
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int v = boost::multiprecision::abs(a[i][j]);
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) snf_swap_rows(a, s.u, t, pi);
        if (pj != t) snf_swap_cols(a, s.v, t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = floor_div(a[i][t], a[t][t]);
                snf_add_row(a, s.u, i, t, -q);
                if (a[i][t] != 0) {
                    snf_swap_rows(a, s.u, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = floor_div(a[t][j], a[t][t]);
                snf_add_col(a, s.v, j, t, -q);
                if (a[t][j] != 0) {
                    snf_swap_cols(a, s.v, t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }
    // sign normalization, then enforce the divisibility chain
    for (std::size_t i = 0; i < dim; ++i)
        if (a[i][i] < 0) snf_negate_row(a, s.u, i);
    bool chain = false;
    while (!chain) {
        chain = true;
        for (std::size_t i = 0; i + 1 < dim; ++i) {
            if (a[i + 1][i + 1] == 0 || a[i][i] == 0) continue;
            if (a[i + 1][i + 1] % a[i][i] == 0) continue;
            chain = false;
            // fold entry (i+1,i+1) into column i and re-reduce the 2x2 block
            snf_add_col(a, s.v, i, i + 1, 1);
            while (a[i + 1][i] != 0) {
                Int q = floor_div(a[i][i], a[i + 1][i]);
                snf_add_row(a, s.u, i, i + 1, -q);
                snf_swap_rows(a, s.u, i, i + 1);
            }
            Int q = floor_div(a[i][i + 1], a[i][i]);
            snf_add_col(a, s.v, i + 1, i, -q);
            if (a[i][i] < 0) snf_negate_row(a, s.u, i);
            if (a[i + 1][i + 1] < 0) snf_negate_row(a, s.u, i + 1);
        }
    }
    return s;
}

IntLattice::IntLattice(IntMat gram) : gram_(std::move(gram)) {
    std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw std::invalid_argument("IntLattice: non-square Gram matrix");
        if (imod(gram_[i][i], 2) != 0)
            throw std::invalid_argument("IntLattice: odd diagonal entry (lattice not even)");
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("IntLattice: Gram matrix not symmetric");
    }
    det_ = int_det(gram_);
    if (det_ == 0) throw std::invalid_argument("IntLattice: degenerate Gram matrix");
}

Int pair(const IntLattice& l, const IntVec& v, const IntVec& w) {
    if (v.size() != l.rank() || w.size() != l.rank())
        throw std::invalid_argument("pair: dimension mismatch");
    Int r = 0;
    IntVec gw = int_mat_vec(l.gram(), w);
    for (std::size_t i = 0; i < v.size(); ++i) r += v[i] * gw[i];
    return r;
}

Rat pair(const IntLattice& l, const RatVec& v, const RatVec& w) {
    if (v.size() != l.rank() || w.size() != l.rank())
        throw std::invalid_argument("pair: dimension mismatch");
    Rat r = 0;
    RatVec gw = rat_mat_vec(to_rat(l.gram()), w);
    for (std::size_t i = 0; i < v.size(); ++i) r += v[i] * gw[i];
    return r;
}

Int divisibility(const IntLattice& l, const IntVec& v) {
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
        throw std::invalid_argument("divisibility: zero vector");
    IntVec gv = int_mat_vec(l.gram(), v);
    Int g = 0;
    for (const Int& x : gv) g = igcd(g, x);
    return g;
}

bool is_primitive(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = igcd(g, x);
    if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
    return g == 1;
}

bool contains(const IntLattice& l, const RatVec& x) {
    if (x.size() != l.rank()) throw std::invalid_argument("contains: dimension mismatch");
    return is_integral(x);
}

Sublattice::Sublattice(IntLattice ambient, IntMat basis)
    : ambient_(std::move(ambient)),
      basis_(std::move(basis)),
      induced_(int_mat_mul(int_mat_mul(basis_, ambient_.gram()), int_transpose(basis_))) {
    for (const auto& row : basis_)
        if (row.size() != ambient_.rank())
            throw std::invalid_argument("Sublattice: basis row length mismatch");
}

RatVec Sublattice::to_ambient(const RatVec& internal) const {
    RatVec r(ambient_.rank(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += internal[i] * basis_[i][j];
    return r;
}

IntVec Sublattice::to_ambient(const IntVec& internal) const {
    IntVec r(ambient_.rank(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += internal[i] * basis_[i][j];
    return r;
}

std::optional<RatVec> Sublattice::span_coords(const RatVec& x) const {
    // solve basis^T c = x
    RatMat bt = to_rat(int_transpose(basis_));
    return rat_solve(bt, x);
}

bool Sublattice::contains_vector(const RatVec& x) const {
    auto c = span_coords(x);
    return c && is_integral(*c);
}

bool Sublattice::in_rational_span(const RatVec& x) const { return span_coords(x).has_value(); }

Sublattice orthogonal_complement(const IntLattice& l, const IntVec& v) {
    if (!is_primitive(v)) throw std::invalid_argument("orthogonal_complement: v not primitive");
    if (pair(l, v, v) == 0) throw std::invalid_argument("orthogonal_complement: v isotropic");
    IntVec w = int_mat_vec(l.gram(), v);
    SmithNF s = smith_normal_form(IntMat{w});
    // columns 1..n-1 of V span the saturated kernel of x -> x.w
    std::size_t n = l.rank();
    IntMat basis;
    for (std::size_t j = 1; j < n; ++j) {
        IntVec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = s.v[i][j];
        basis.push_back(std::move(row));
    }
    return Sublattice(l, basis);
}

}  // namespace k3fm

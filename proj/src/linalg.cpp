#include "mrd/linalg.hpp"

#include <utility>

namespace mrd::linalg {

Echelon rref(const Field& f, std::vector<Vec> rows, std::size_t width) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Elem s = f.inv(rows[r][c]);
        if (s != 1)
            for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            axpy(f, f.neg(rows[k][c]), rows[r], rows[k]);
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(const Field& f, std::vector<Vec> rows, std::size_t width) {
    return rref(f, std::move(rows), width).rows.size();
}

Vec reduce(const Field& f, const Echelon& e, Vec v) {
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const Elem c = v[e.pivots[i]];
        if (c != 0) axpy(f, f.neg(c), e.rows[i], v);
    }
    return v;
}

bool in_span(const Field& f, const Echelon& e, const Vec& v) { return is_zero(reduce(f, e, v)); }

std::optional<Vec> solve(const Field& f, const std::vector<Vec>& rows, const Vec& target, std::size_t width) {
    const std::size_t k = rows.size();
    std::vector<Vec> aug(width, Vec(k + 1, 0));
    for (std::size_t w = 0; w < width; ++w) {
        for (std::size_t i = 0; i < k; ++i) aug[w][i] = rows[i][w];
        aug[w][k] = target[w];
    }
    const Echelon e = rref(f, std::move(aug), k + 1);
    Vec c(k, 0);
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == k) return std::nullopt;
        c[e.pivots[i]] = e.rows[i][k];
    }
    return c;
}

std::vector<Vec> left_kernel(const Field& f, const std::vector<Vec>& rows, std::size_t width) {
    const std::size_t k = rows.size();
    std::vector<Vec> a(width, Vec(k, 0));
    for (std::size_t w = 0; w < width; ++w)
        for (std::size_t i = 0; i < k; ++i) a[w][i] = rows[i][w];
    const Echelon e = rref(f, std::move(a), k);
    std::vector<bool> is_pivot(k, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t j = 0; j < k; ++j) {
        if (is_pivot[j]) continue;
        Vec v(k, 0);
        v[j] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = f.neg(e.rows[i][j]);
        basis.push_back(std::move(v));
    }
    return rref(f, std::move(basis), k).rows;
}

Vec add(const Field& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec sub(const Field& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

Vec scale(const Field& f, Elem c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
    return out;
}

void axpy(const Field& f, Elem c, const Vec& x, Vec& y) {
    if (c == 0) return;
    if (f.characteristic() == 2 && c == 1) {
        for (std::size_t i = 0; i < y.size(); ++i) y[i] ^= x[i];
        return;
    }
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

bool is_zero(const Vec& v) {
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

bool vec_less(const Field& f, const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] == b[i]) continue;
        return f.entry_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

} // namespace mrd::linalg

#include "arclab/unipoly.hpp"

#include <stdexcept>
#include <utility>

namespace arclab::uni {

void trim(Poly& a) {
    while (!a.empty() && a.back().code == 0) a.pop_back();
}

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)].code != 0) return i;
    return -1;
}

bool is_zero(const Poly& a) { return degree(a) < 0; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.add(out[i], b[i]);
    trim(out);
    return out;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.sub(out[i], b[i]);
    trim(out);
    return out;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly out(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].code == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

Poly scale(const Field& F, const Poly& a, Elem s) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], s);
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
    const int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    trim(r);
    const int da = degree(r);
    if (da < db) return {{}, r};
    Poly quot(static_cast<std::size_t>(da - db + 1), F.zero());
    const Elem lead_inv = F.inv(b[static_cast<std::size_t>(db)]);
    for (int i = da; i >= db; --i) {
        const Elem c = r[static_cast<std::size_t>(i)];
        if (c.code == 0) continue;
        const Elem f = F.mul(c, lead_inv);
        quot[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<std::size_t>(i - db + j)];
            slot = F.sub(slot, F.mul(f, b[static_cast<std::size_t>(j)]));
        }
    }
    trim(quot);
    trim(r);
    return {quot, r};
}

Poly exact_div(const Field& F, const Poly& a, const Poly& b) {
    auto [q, r] = divmod(F, a, b);
    if (!is_zero(r)) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly gcd(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        auto r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (is_zero(a)) return a;
    return scale(F, a, F.inv(a.back()));
}

Poly derivative(const Field& F, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]);
    trim(out);
    return out;
}

Elem eval(const Field& F, const Poly& a, Elem x) {
    Elem acc = F.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

int order_at_zero(const Poly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].code != 0) return static_cast<int>(i);
    return -1;
}

int root_multiplicity(const Field& F, Poly a, Elem r) {
    trim(a);
    if (is_zero(a)) throw std::invalid_argument("root multiplicity in the zero polynomial");
    const Poly lin{F.neg(r), F.one()};
    int m = 0;
    for (;;) {
        auto [q, rem] = divmod(F, a, lin);
        if (!is_zero(rem)) return m;
        a = std::move(q);
        ++m;
    }
}

bool is_squarefree(const Field& F, const Poly& a) {
    if (degree(a) <= 0) return true;
    return degree(gcd(F, a, derivative(F, a))) == 0;
}

Poly strip_rational_roots(const Field& F, Poly a, std::vector<Elem>* roots) {
    trim(a);
    if (is_zero(a)) return a;
    for (std::uint32_t c = 0; c < F.q() && degree(a) > 0; ++c) {
        const Elem r{c};
        if (eval(F, a, r).code != 0) continue;
        if (roots) roots->push_back(r);
        const Poly lin{F.neg(r), F.one()};
        for (;;) {
            auto [q, rem] = divmod(F, a, lin);
            if (!is_zero(rem)) break;
            a = std::move(q);
        }
    }
    return a;
}

Poly determinant(const Field& F, std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return {F.one()};
    bool negate = false;
    Poly prev{F.one()};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return {};
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const Poly num = sub(F, mul(F, m[i][j], m[k][k]), mul(F, m[i][k], m[k][j]));
                m[i][j] = exact_div(F, num, prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    if (negate) det = scale(F, det, F.neg(F.one()));
    return det;
}

Poly resultant(const Field& F, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    auto ydeg = [](const std::vector<Poly>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (!is_zero(p[static_cast<std::size_t>(i)])) return i;
        return -1;
    };
    const int m = ydeg(a), n = ydeg(b);
    if (m < 0 || n < 0 || (m == 0 && n == 0)) return {};
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size));
    // Rows 0..n-1 hold shifted copies of a, rows n..n+m-1 of b; highest power first.
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i)
            syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = a[static_cast<std::size_t>(i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = b[static_cast<std::size_t>(i)];
    return determinant(F, std::move(syl));
}

}  // namespace arclab::uni

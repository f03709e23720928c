#include "vcm/exact_matrix.hpp"

#include <algorithm>

#include "vcm/errors.hpp"

namespace vcm {

std::size_t rank_over_q(IntMatrix m) {
    // Bareiss: after eliminating with pivot p_k, divide by the previous pivot;
    // the quotient is exact, which keeps entry growth polynomial.
    std::size_t rank = 0;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
        const Integer pivot = m.at(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            for (std::size_t c = col + 1; c < m.cols(); ++c)
                m.at(r, c) = (pivot * m.at(r, c) - m.at(r, col) * m.at(row, c)) / prev;
            m.at(r, col) = 0;
        }
        prev = pivot;
        ++rank;
        ++row;
    }
    return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
    if (p < 2) throw invalid_input("modulus must be a prime >= 2");
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Integer v = m.at(r, c) % p;
            if (v < 0) v += p;
            a[r][c] = static_cast<std::int64_t>(v);
        }
    auto inv = [p](std::int64_t x) {
        // Fermat; p is prime by contract
        std::int64_t res = 1, base = x % p, e = p - 2;
        while (e > 0) {
            if (e & 1) res = res * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return res;
    };
    std::size_t rank = 0, row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && a[piv][col] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[row]);
        std::int64_t pin = inv(a[row][col]);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (a[r][col] == 0) continue;
            std::int64_t f = a[r][col] * pin % p;
            for (std::size_t c = col; c < m.cols(); ++c)
                a[r][c] = ((a[r][c] - f * a[row][c]) % p + p) % p;
        }
        ++rank;
        ++row;
    }
    return rank;
}

std::vector<Integer> smith_invariant_factors(IntMatrix m) {
    using std::swap;
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<Integer> diag;
    std::size_t s = 0;
    while (s < R && s < C) {
        // find a least-absolute-value nonzero pivot in the trailing block
        std::size_t pr = R, pc = C;
        Integer best = 0;
        for (std::size_t r = s; r < R; ++r)
            for (std::size_t c = s; c < C; ++c) {
                const Integer& v = m.at(r, c);
                if (v == 0) continue;
                Integer av = abs(v);
                if (pr == R || av < best) {
                    best = av;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == R) break; // trailing block is zero
        if (pr != s)
            for (std::size_t c = 0; c < C; ++c) swap(m.at(pr, c), m.at(s, c));
        if (pc != s)
            for (std::size_t r = 0; r < R; ++r) swap(m.at(r, pc), m.at(r, s));

        // chip away at the pivot row/column with remainders until both clear
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t r = s + 1; r < R; ++r) {
                if (m.at(r, s) == 0) continue;
                Integer q = m.at(r, s) / m.at(s, s);
                for (std::size_t c = s; c < C; ++c) m.at(r, c) -= q * m.at(s, c);
                if (m.at(r, s) != 0) {
                    // remainder smaller than the pivot: swap it up and restart
                    for (std::size_t c = 0; c < C; ++c) swap(m.at(r, c), m.at(s, c));
                    dirty = true;
                }
            }
            for (std::size_t c = s + 1; c < C; ++c) {
                if (m.at(s, c) == 0) continue;
                Integer q = m.at(s, c) / m.at(s, s);
                for (std::size_t r = s; r < R; ++r) m.at(r, c) -= q * m.at(r, s);
                if (m.at(s, c) != 0) {
                    for (std::size_t r = 0; r < R; ++r) swap(m.at(r, c), m.at(r, s));
                    dirty = true;
                }
            }
        }
        diag.push_back(abs(m.at(s, s)));
        ++s;
    }
    // Any unimodular diagonalization has the invariant factors as its
    // gcd/lcm normal form: diag(a, b) ~ diag(gcd(a,b), lcm(a,b)).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] == 0) continue;
                Integer g = gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
                changed = true;
            }
    }
    return diag;
}

} // namespace vcm

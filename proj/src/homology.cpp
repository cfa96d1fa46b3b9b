#include "pfh/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pfh {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
    IntegerMatrix out(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("matrix difference: shape mismatch");
    IntegerMatrix out(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        out.entries[i] = entries[i] - o.entries[i];
    return out;
}

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: square only");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) =
                    (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

// Elementary operations applied simultaneously to the working matrix and the
// accumulated unimodular transform.
void row_axpy(IntegerMatrix& d, IntegerMatrix& u, std::size_t dst, std::size_t src,
              const BigInt& q) {
    for (std::size_t j = 0; j < d.cols; ++j) d.at(dst, j) -= q * d.at(src, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) -= q * u.at(src, j);
}

void row_swap(IntegerMatrix& d, IntegerMatrix& u, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
}

void col_axpy(IntegerMatrix& d, IntegerMatrix& v, std::size_t dst, std::size_t src,
              const BigInt& q) {
    for (std::size_t i = 0; i < d.rows; ++i) d.at(i, dst) -= q * d.at(i, src);
    for (std::size_t i = 0; i < v.rows; ++i) v.at(i, dst) -= q * v.at(i, src);
}

void col_swap(IntegerMatrix& d, IntegerMatrix& v, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
    SmithResult out;
    out.d = m;
    out.u = IntegerMatrix::identity(m.rows);
    out.v = IntegerMatrix::identity(m.cols);
    IntegerMatrix& d = out.d;
    std::size_t limit = std::min(m.rows, m.cols);

    for (std::size_t t = 0; t < limit; ++t) {
        // smallest-magnitude nonzero pivot in the remaining block
        std::size_t pr = t, pc = t;
        BigInt best = 0;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                if (d.at(i, j) == 0) continue;
                BigInt a = abs(d.at(i, j));
                if (best == 0 || a < best) best = a, pr = i, pc = j;
            }
        if (best == 0) break;
        if (pr != t) row_swap(d, out.u, t, pr);
        if (pc != t) col_swap(d, out.v, t, pc);

        for (bool stable = false; !stable;) {
            stable = true;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                row_axpy(d, out.u, i, t, floor_div(d.at(i, t), d.at(t, t)));
                if (d.at(i, t) != 0) {  // remainder became the smaller pivot
                    row_swap(d, out.u, t, i);
                    stable = false;
                }
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                col_axpy(d, out.v, j, t, floor_div(d.at(t, j), d.at(t, t)));
                if (d.at(t, j) != 0) {
                    col_swap(d, out.v, t, j);
                    stable = false;
                }
            }
            if (!stable) continue;
            // divisibility: the pivot must divide every remaining entry
            for (std::size_t i = t + 1; i < m.rows && stable; ++i)
                for (std::size_t j = t + 1; j < m.cols && stable; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_axpy(d, out.u, t, i, BigInt(-1));
                        stable = false;
                    }
        }
        if (d.at(t, t) < 0) {
            for (std::size_t j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
            for (std::size_t j = 0; j < out.u.cols; ++j)
                out.u.at(t, j) = -out.u.at(t, j);
        }
        out.factors.push_back(d.at(t, t));
    }
    return out;
}

std::string AbelianGroup::to_string() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::string s;
    if (free_rank > 0) {
        s = "Z";
        if (free_rank > 1) s += "^" + std::to_string(free_rank);
    }
    for (const auto& d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.str();
    }
    return s;
}

AbelianGroup cokernel(const IntegerMatrix& m) {
    SmithResult snf = smith_normal_form(m);
    AbelianGroup g;
    g.free_rank = static_cast<int>(m.rows - snf.factors.size());
    for (const auto& d : snf.factors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

IntegerMatrix dehn_twist_action(int g, bool along_dual) {
    if (g < 1) throw std::domain_error("dehn_twist_action: genus >= 1 required");
    IntegerMatrix m = IntegerMatrix::identity(2 * static_cast<std::size_t>(g));
    if (along_dual)
        m.at(1, 0) = -1;  // a1 -> a1 - b1
    else
        m.at(0, 1) = 1;  // b1 -> b1 + a1
    return m;
}

AbelianGroup h1_mapping_torus(int g) {
    if (g < 1) throw std::domain_error("h1_mapping_torus: genus >= 1 required");
    IntegerMatrix one = IntegerMatrix::identity(2 * static_cast<std::size_t>(g));
    AbelianGroup ck = cokernel(one - dehn_twist_action(g));
    return {ck.free_rank + 1, ck.torsion};
}

LefschetzConstants lefschetz_constants(int g) {
    if (g < 1) throw std::domain_error("lefschetz_constants: genus >= 1 required");
    return {{1, {}},
            {1, {}},
            {2 * g - 1, {}},
            "recorded constants: H2 is generated by the fiber class; H1 loses "
            "one rank to the vanishing cycle"};
}

}  // namespace pfh

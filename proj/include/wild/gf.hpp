#pragma once
// Prime fields GF(p) and dense matrices over them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"

namespace wild {

using Elem = std::uint32_t;

class Field {
public:
    Field() = default;
    explicit Field(std::uint32_t p) : p_(p) {
        if (p < 2 || p > 65521) throw DimensionError("field modulus out of range: " + std::to_string(p));
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw DimensionError("field modulus is not prime: " + std::to_string(p));
    }

    std::uint32_t p() const { return p_; }

    Elem reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    Elem add(Elem a, Elem b) const { return static_cast<Elem>((a + b) % p_); }
    Elem sub(Elem a, Elem b) const { return static_cast<Elem>((a + p_ - b) % p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a % p_ == 0) throw SingularMatrix("inverse of zero in GF(" + std::to_string(p_) + ")");
        return pow(a, p_ - 2);
    }

    // Smallest generator of the multiplicative group.
    Elem primitive_root() const {
        if (p_ == 2) return 1;
        std::vector<std::uint32_t> primes;
        std::uint32_t n = p_ - 1;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                primes.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) primes.push_back(n);
        for (Elem g = 2; g < p_; ++g) {
            bool ok = true;
            for (auto q : primes)
                if (pow(g, (p_ - 1) / q) == 1) { ok = false; break; }
            if (ok) return g;
        }
        return 1;
    }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
    std::uint32_t p_ = 2;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(Field f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
        }
        return m;
    }

    static Matrix from_entries(Field f, std::size_t r, std::size_t c, const std::vector<Elem>& entries) {
        if (entries.size() != r * c) throw DimensionError("matrix entry count mismatch");
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < entries.size(); ++i) m.e_[i] = f.reduce(entries[i]);
        return m;
    }

    static Matrix scalar(Field f, Elem v) {
        Matrix m(f, 1, 1);
        m(0, 0) = f.reduce(v);
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<Elem>& entries() const { return e_; }

    Elem& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](Elem v) { return v == 0; });
    }

    bool is_identity() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("matrix block out of range");
        Matrix b(f_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("matrix block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator<(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.e_ < b.e_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (!(a.f_ == b.f_)) throw DimensionError("field mismatch in product");
        if (a.cols_ != b.rows_) throw DimensionError("shape mismatch in product");
        Matrix c(a.f_, a.rows_, b.cols_);
        const std::uint64_t p = a.f_.p();
        std::vector<std::uint64_t> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                std::uint64_t v = a(i, k);
                if (!v) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + v * b(k, j)) % p;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Elem>(acc[j]);
        }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("shape mismatch in sum");
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = a.f_.add(a.e_[i], b.e_[i]);
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("shape mismatch in difference");
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = a.f_.sub(a.e_[i], b.e_[i]);
        return c;
    }

    Matrix scaled(Elem s) const {
        Matrix c = *this;
        for (auto& v : c.e_) v = f_.mul(v, s);
        return c;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
        }
        return os << "]";
    }

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> e_;
};

// Reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Elem iv = f.inv(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), iv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Elem s = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(s, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const Matrix& m) {
    Matrix t = m;
    return row_reduce(t).size();
}

inline bool is_invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

inline std::optional<Matrix> try_inverse(const Matrix& m) {
    if (!m.square()) return std::nullopt;
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(m.field(), n));
    auto piv = row_reduce(aug);
    if (piv.size() < n || (n > 0 && piv[n - 1] >= n)) return std::nullopt;
    return aug.block(0, n, n, n);
}

inline Matrix inverse(const Matrix& m) {
    if (!m.square()) throw DimensionError("inverse of non-square matrix");
    auto r = try_inverse(m);
    if (!r) throw SingularMatrix("matrix is singular");
    return *r;
}

// S^{-T}
inline Matrix contragredient(const Matrix& m) { return inverse(m).transpose(); }

// Columns span the right kernel {x : m x = 0}.
inline Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    auto piv = row_reduce(r);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free.push_back(c);
    const Field& f = m.field();
    Matrix ns(f, m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        ns(free[k], k) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) ns(piv[i], k) = f.neg(r(i, free[k]));
    }
    return ns;
}

struct LinearSolution {
    Matrix particular;  // one solution X of A X = B
    Matrix kernel;      // columns span {x : A x = 0}
};

// Solve A X = B; nullopt when inconsistent.
inline std::optional<LinearSolution> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve: row mismatch");
    const Field& f = a.field();
    std::size_t n = a.cols(), k = b.cols();
    Matrix aug(f, a.rows(), n + k);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, b);
    auto piv = row_reduce(aug);
    Matrix x(f, n, k);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] >= n) return std::nullopt;
        for (std::size_t j = 0; j < k; ++j) x(piv[i], j) = aug(i, n + j);
    }
    return LinearSolution{x, nullspace(a)};
}

inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), a.cols(), b);
    return c;
}

inline Matrix direct_sum(const std::vector<Matrix>& parts, Field f) {
    std::size_t r = 0, c = 0;
    for (auto& p : parts) r += p.rows(), c += p.cols();
    Matrix out(f, r, c);
    r = c = 0;
    for (auto& p : parts) {
        out.set_block(r, c, p);
        r += p.rows();
        c += p.cols();
    }
    return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a.field().mul(a(i, j), b(k, l));
    return c;
}

// |GL(d,p)|, saturating at UINT64_MAX.
inline std::uint64_t gl_order(std::size_t d, std::uint32_t p) {
    const std::uint64_t cap = UINT64_MAX;
    std::uint64_t pd = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (pd > cap / p) return cap;
        pd *= p;
    }
    std::uint64_t order = 1, pi = 1;
    for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t f = pd - pi;
        if (f != 0 && order > cap / f) return cap;
        order *= f;
        pi *= p;
    }
    return order;
}

// Visits GL(d,p) in lexicographic order of row-major entries. The callback
// returns false to stop early. Throws BudgetExceeded if |GL| > budget.
inline void for_each_gl(Field f, std::size_t d, std::uint64_t budget,
                        const std::function<bool(const Matrix&)>& visit) {
    std::uint64_t order = gl_order(d, f.p());
    if (order > budget)
        throw BudgetExceeded("GL(" + std::to_string(d) + "," + std::to_string(f.p()) + ") exceeds budget");
    if (d == 0) {
        visit(Matrix(f, 0, 0));
        return;
    }
    std::uint64_t vecs = 1;
    for (std::size_t i = 0; i < d; ++i) vecs *= f.p();
    Matrix cur(f, d, d);
    // echelon[r]: reduced basis of the first r rows, with pivot columns
    std::vector<std::vector<Elem>> basis;
    std::vector<std::size_t> pivots;
    bool stop = false;

    auto reduce = [&](std::vector<Elem> v) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Elem c = v[pivots[b]];
            if (!c) continue;
            for (std::size_t j = 0; j < d; ++j) v[j] = f.sub(v[j], f.mul(c, basis[b][j]));
        }
        return v;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t row) {
        if (row == d) {
            if (!visit(cur)) stop = true;
            return;
        }
        std::vector<Elem> v(d);
        for (std::uint64_t code = 0; code < vecs && !stop; ++code) {
            std::uint64_t c = code;
            for (std::size_t j = d; j-- > 0;) {
                v[j] = static_cast<Elem>(c % f.p());
                c /= f.p();
            }
            auto red = reduce(v);
            std::size_t pc = d;
            for (std::size_t j = 0; j < d; ++j)
                if (red[j]) { pc = j; break; }
            if (pc == d) continue;
            Elem iv = f.inv(red[pc]);
            for (auto& x : red) x = f.mul(x, iv);
            // keep basis fully reduced on the new pivot
            auto saved = basis;
            for (auto& b : basis) {
                Elem c2 = b[pc];
                if (!c2) continue;
                for (std::size_t j = 0; j < d; ++j) b[j] = f.sub(b[j], f.mul(c2, red[j]));
            }
            basis.push_back(red);
            pivots.push_back(pc);
            for (std::size_t j = 0; j < d; ++j) cur(row, j) = v[j];
            rec(row + 1);
            basis = std::move(saved);
            pivots.pop_back();
        }
    };
    rec(0);
}

inline std::vector<Matrix> gl_enumerate(Field f, std::size_t d, std::uint64_t budget) {
    std::vector<Matrix> out;
    for_each_gl(f, d, budget, [&](const Matrix& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// Transvections plus one diagonal scaling; together they generate GL(d,p).
inline std::vector<Matrix> gl_generators(Field f, std::size_t d) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            Matrix t = Matrix::identity(f, d);
            t(i, j) = 1;
            gens.push_back(t);
        }
    if (d > 0 && f.p() > 2) {
        Matrix s = Matrix::identity(f, d);
        s(0, 0) = f.primitive_root();
        gens.push_back(s);
    }
    return gens;
}

template <class Rng>
Matrix random_matrix(Field f, std::size_t r, std::size_t c, Rng& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % f.p());
    return m;
}

template <class Rng>
Matrix random_invertible(Field f, std::size_t d, Rng& rng) {
    for (;;) {
        Matrix m = random_matrix(f, d, d, rng);
        if (is_invertible(m)) return m;
    }
}

}  // namespace wild

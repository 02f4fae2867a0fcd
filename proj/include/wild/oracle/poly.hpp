#pragma once
// Univariate polynomials over GF(p) and the Smith normal form of
// polynomial matrices.

#include <utility>
#include <vector>

#include "../gf.hpp"

namespace wild {

// Coefficients low degree first, no trailing zeros; zero is empty.
class Poly {
public:
    Poly() = default;
    Poly(Field f, std::vector<Elem> c) : f_(f), c_(std::move(c)) { trim(); }
    static Poly constant(Field f, Elem v) { return Poly(f, {v}); }
    static Poly linear(Field f, Elem c0, Elem c1) { return Poly(f, {c0, c1}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Elem lead() const { return c_.back(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<Elem>& coeffs() const { return c_; }
    const Field& field() const { return f_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(i), b.coeff(i));
        return Poly(a.f_, c);
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(i), b.coeff(i));
        return Poly(a.f_, c);
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.f_, {});
        std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = a.f_.add(c[i + j], a.f_.mul(a.c_[i], b.c_[j]));
        return Poly(a.f_, c);
    }

    // (quotient, remainder)
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw SingularMatrix("polynomial division by zero");
        std::vector<Elem> r = c_;
        std::vector<Elem> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, 0);
        Elem il = f_.inv(d.lead());
        for (std::size_t top = r.size(); top >= d.c_.size() && top > 0; --top) {
            std::size_t i = top - 1;
            Elem coef = f_.mul(r[i], il);
            if (coef) {
                std::size_t sh = i + 1 - d.c_.size();
                q[sh] = coef;
                for (std::size_t j = 0; j < d.c_.size(); ++j) r[sh + j] = f_.sub(r[sh + j], f_.mul(coef, d.c_[j]));
            }
        }
        return {Poly(f_, q), Poly(f_, r)};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Elem il = f_.inv(lead());
        std::vector<Elem> c = c_;
        for (auto& x : c) x = f_.mul(x, il);
        return Poly(f_, c);
    }

    // multiplicity of x as a factor
    std::size_t x_valuation() const {
        std::size_t v = 0;
        while (v < c_.size() && c_[v] == 0) ++v;
        return v;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        for (auto& x : c_) x = x % f_.p();
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Field f_;
    std::vector<Elem> c_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

// Monic invariant factors d_1 | d_2 | ... (nonzero diagonal of the Smith form).
inline std::vector<Poly> invariant_factors(PolyMatrix m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<Poly> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // pivot of least degree
            long best = -1;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (!m[i][j].is_zero() && (best < 0 || m[i][j].degree() < best)) {
                        best = m[i][j].degree();
                        bi = i, bj = j;
                    }
            if (best < 0) return out;
            std::swap(m[t], m[bi]);
            for (auto& row : m) std::swap(row[t], row[bj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t].is_zero()) continue;
                auto [q, r] = m[i][t].divmod(m[t][t]);
                for (std::size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j].is_zero()) continue;
                auto [q, r] = m[t][j].divmod(m[t][t]);
                for (std::size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!m[i][j].divmod(m[t][t]).second.is_zero()) {
                        for (std::size_t k = t; k < cols; ++k) m[t][k] = m[t][k] + m[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        out.push_back(m[t][t].monic());
    }
    return out;
}

}  // namespace wild

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "weierdiv/errors.hpp"
#include "weierdiv/rational.hpp"

namespace weierdiv {

using cplx = std::complex<double>;

/// Exponent vector for the parameter variables t_1..t_m, padded with zeros
/// when m == 1.
using texp = std::array<int, 2>;

inline int exp_total(const texp& e) { return e[0] + e[1]; }

/// Sparse polynomial in t = (t_1, .., t_m), m <= 2, over a coefficient ring
/// (exact rationals for the algebra, complex doubles for numeric work).
/// Absent monomial == zero coefficient; stored terms are always nonzero.
template <typename C>
class poly_t {
  public:
    poly_t() = default;

    static poly_t constant(C c) {
        poly_t p;
        p.add_term({0, 0}, std::move(c));
        return p;
    }
    static poly_t monomial(texp e, C c) {
        poly_t p;
        p.add_term(e, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, exp_total(e));
        return d;
    }
    int degree_in(int var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    const std::map<texp, C>& terms() const { return terms_; }

    C coeff(const texp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const texp& e, C c) {
        if (c == C(0)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    poly_t& operator+=(const poly_t& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    poly_t& operator-=(const poly_t& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, C(0) - c);
        return *this;
    }
    friend poly_t operator+(poly_t a, const poly_t& b) { return a += b; }
    friend poly_t operator-(poly_t a, const poly_t& b) { return a -= b; }

    friend poly_t operator*(const poly_t& a, const poly_t& b) {
        poly_t r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
        return r;
    }

    poly_t operator-() const {
        poly_t r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(0) - c);
        return r;
    }

    poly_t scaled(const C& s) const {
        poly_t r;
        if (s == C(0)) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    poly_t derivative(int var) const {
        poly_t r;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            texp de = e;
            de[var] -= 1;
            r.add_term(de, c * C(e[var]));
        }
        return r;
    }

    C eval(const std::array<C, 2>& t) const {
        C acc(0);
        for (const auto& [e, c] : terms_) {
            C mono(1);
            for (int v = 0; v < 2; ++v)
                for (int k = 0; k < e[v]; ++k) mono *= t[v];
            acc += c * mono;
        }
        return acc;
    }

    bool operator==(const poly_t& o) const { return terms_ == o.terms_; }

  private:
    std::map<texp, C> terms_;
};

using tpoly = poly_t<rational>;   // exact coefficients
using cpoly_t = poly_t<cplx>;     // numeric coefficients (fixed z slices etc.)

inline cpoly_t to_complex_poly(const tpoly& p) {
    cpoly_t r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, cplx(to_double(c), 0.0));
    return r;
}

inline cplx eval_at(const tpoly& p, const std::array<double, 2>& t) {
    double acc = 0.0;
    for (const auto& [e, c] : p.terms()) {
        double mono = 1.0;
        for (int v = 0; v < 2; ++v)
            for (int k = 0; k < e[v]; ++k) mono *= t[v];
        acc += to_double(c) * mono;
    }
    return {acc, 0.0};
}

}  // namespace weierdiv

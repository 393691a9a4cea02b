#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treestab {

using Rational = mpq_class;
using BigInt = mpz_class;
using Exponent = std::vector<unsigned>;

class PolyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rational from "p", "-p" or "p/q"; throws PolyError otherwise.
Rational parse_rational(std::string_view text);
std::string render_rational(const Rational& r);

/// Descending graded lexicographic order: higher total degree first, then
/// lexicographically larger exponent vectors first (x0^2 > x0*x1 > x1^2).
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial over Q in a fixed number of variables x0..x{nvars-1}.
/// Zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t var);
    /// Sum of the listed variables, each with coefficient 1.
    static MultiPoly sum_of(std::size_t nvars, const std::vector<std::size_t>& vars);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^exp in place; the term disappears if the sum cancels.
    void add_term(const Exponent& exp, const Rational& c);
    Rational coefficient(const Exponent& exp) const;

    unsigned degree_in(std::size_t var) const;
    /// Total degree; throws PolyError on the zero polynomial.
    unsigned total_degree() const;
    bool is_homogeneous() const;
    /// Variables that occur with positive exponent somewhere in the support.
    std::vector<std::size_t> occurring_variables() const;

    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void require_same_nvars(const MultiPoly& q) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

/// Exact complex number with rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool in_upper_half_plane() const { return sgn(im) > 0; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

std::string render_gaussian(const GaussianRational& z);

/// Affine form sum_i coeffs[i] * x_i + constant over the same variables as the polynomial.
struct LinearForm {
    std::vector<Rational> coeffs;
    Rational constant = 0;
};

/// Fixes x_var := a. The result keeps nvars; x_var no longer occurs.
MultiPoly substitute_real(const MultiPoly& p, std::size_t var, const Rational& a);

/// Replaces x_var by an affine form and expands.
MultiPoly substitute_linear(const MultiPoly& p, std::size_t var, const LinearForm& form);

/// x_i -> y_{map[i]} for a polynomial in k new variables; like terms are collected.
MultiPoly identify_variables(const MultiPoly& p, const std::vector<std::size_t>& map, std::size_t k);

/// x_var^d * p(..., -1/x_var, ...) with d the degree of p in x_var.
MultiPoly reverse_variable(const MultiPoly& p, std::size_t var);

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);

Rational eval_rational(const MultiPoly& p, const std::vector<Rational>& point);
GaussianRational eval_gaussian(const MultiPoly& p, const std::vector<GaussianRational>& point);

/// Canonical text: descending grlex terms, e.g. "x0^2 - 3/2*x0*x1 + 1"; the zero polynomial is "0".
std::string render(const MultiPoly& p, std::string_view var_prefix = "x");

/// Inverse of render(). If nvars is absent it is inferred as 1 + the largest variable index.
MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars = std::nullopt,
                     std::string_view var_prefix = "x");

}  // namespace treestab

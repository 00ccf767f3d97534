#pragma once

#include <map>
#include <shared_mutex>
#include <span>
#include <vector>

#include "aptorus/multiindex.hpp"

namespace aptorus {

/// Sparse multivariate polynomial with double coefficients.
///
/// This is the exact-derivative backbone: every field evaluated by the
/// library is piecewise polynomial, so partial derivatives of any order are
/// ordinary polynomial calculus, with no discretization error.
class Poly {
  public:
    explicit Poly(int dim);

    static Poly constant(int dim, double c);
    static Poly variable(int dim, int axis);

    int dim() const { return dim_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(double c) const;
    Poly pow(int e) const;

    /// Partial derivative along one axis.
    Poly derivative(int axis) const;
    /// Repeated partial derivative per a full multi-index.
    Poly derivative(const MultiIndex& a) const;

    double operator()(std::span<const double> x) const;

    /// Substitute x_axis -> c * x_axis for every axis (diagonal dilation).
    Poly dilated(double c) const;

    const std::vector<std::pair<MultiIndex, double>>& terms() const { return terms_; }

    /// Adds c * x^e.
    void add_term(const MultiIndex& e, double c);

  private:
    void normalize();

    int dim_;
    std::vector<std::pair<MultiIndex, double>> terms_;  // sorted by exponent
};

/// Evaluate a univariate polynomial given as a coefficient span (c0 + c1 t + ...).
double eval_poly_1d(std::span<const double> coeffs, double t);

/// A polynomial together with a lazily grown cache of its partial
/// derivatives, safe for concurrent readers.
class JetPoly {
  public:
    JetPoly() : base_(1) {}
    explicit JetPoly(Poly base);
    JetPoly(const JetPoly& o);
    JetPoly& operator=(const JetPoly& o);

    const Poly& base() const { return base_; }

    /// The derivative polynomial for multi-index `a` (cached).
    const Poly& deriv(const MultiIndex& a) const;

    double eval_deriv(std::span<const double> x, const MultiIndex& a) const {
        return deriv(a)(x);
    }

  private:
    Poly base_;
    mutable std::shared_mutex mu_;
    mutable std::map<MultiIndex, Poly> cache_;
};

}  // namespace aptorus

#pragma once

// Exact affine-linear and quadratic polynomials in the angle vector.
// Sparse storage, zero coefficients are absent.

#include <aa/rational.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace aa {

struct LinearForm {
    Rat constant = 0;
    std::map<int, Rat> coeffs; // angle index -> coefficient, never zero

    LinearForm() = default;
    explicit LinearForm(Rat c) : constant(std::move(c)) {}

    static LinearForm variable(int idx, Rat coeff = Rat(1));

    Rat coeff(int idx) const;
    void set_coeff(int idx, Rat value);
    bool is_constant() const { return coeffs.empty(); }
    bool is_zero() const { return constant == 0 && coeffs.empty(); }

    Rat evaluate(const std::vector<Rat>& point) const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rat& t);

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rat& t, LinearForm a) { return a *= t; }
    friend LinearForm operator-(LinearForm a) { return a *= Rat(-1); }

    bool operator==(const LinearForm&) const = default;

    /// Dense coefficient vector of length `dim` (constant excluded).
    std::vector<Rat> dense(int dim) const;

    std::string str() const; // e.g. "2 - b1 + 3*b3", bare indices
};

struct QuadraticForm {
    Rat constant = 0;
    std::map<int, Rat> linear;
    std::map<std::pair<int, int>, Rat> quadratic; // key (i,j) with i <= j

    Rat evaluate(const std::vector<Rat>& point) const;

    /// q(t * dir) = c0 + c1 * t + c2 * t^2; returns {c0, c1, c2}.
    std::array<Rat, 3> along_ray(const std::vector<Rat>& dir) const;

    QuadraticForm& operator+=(const QuadraticForm& o);
    QuadraticForm& operator-=(const QuadraticForm& o);
    QuadraticForm& operator*=(const Rat& t);
    void add_linear(const LinearForm& f, const Rat& scale = Rat(1));

    bool operator==(const QuadraticForm&) const = default;
    std::string str() const;
};

/// Product of two affine-linear forms.
QuadraticForm mul(const LinearForm& a, const LinearForm& b);

/// Angle slot bookkeeping for tail pairs: indices 0..r-1 are beta_1..beta_r,
/// then eta_1..eta_h (alias delta, right tail), then nu_1..nu_v (alias
/// gamma, left tail).  eta_0 == beta_r and nu_0 == beta_1 are resolved at
/// form construction time, never stored.
struct AngleVector {
    int r = 0, h = 0, v = 0;

    int count() const { return r + h + v; }
    int beta(int i) const;   // 1-based, 1..r
    int eta(int i) const;    // 0..h; eta(0) == beta(r)
    int nu(int j) const;     // 0..v; nu(0) == beta(1)
    std::string name(int idx) const;  // "beta1", "eta2", "nu1"
    std::string alias(int idx) const; // proof-section alias: "delta2", "gamma1"
};

} // namespace aa

#pragma once

#include "sl22/numkit/complex.hpp"
#include "sl22/numkit/residual.hpp"

#include <map>
#include <vector>

namespace sl22 {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial with complex coefficients.
template <class R>
class PolyMV {
public:
    using Cx = PrecComplex<R>;
    using TermMap = std::map<Exponents, Cx>;

    PolyMV() = default;
    explicit PolyMV(int nvars) : nvars_(nvars) {}

    static PolyMV constant(int nvars, const Cx& c);
    static PolyMV variable(int nvars, int index);
    static PolyMV monomial(int nvars, const Exponents& e, const Cx& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Adds c to the coefficient of e; exact cancellation removes the term.
    void add_term(const Exponents& e, const Cx& c);
    Cx coefficient(const Exponents& e) const;

    int total_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous(int degree) const;

    PolyMV& operator+=(const PolyMV& o);
    PolyMV& operator-=(const PolyMV& o);
    PolyMV& operator*=(const Cx& s);
    PolyMV operator-() const;

    friend PolyMV operator+(PolyMV a, const PolyMV& b) { return a += b; }
    friend PolyMV operator-(PolyMV a, const PolyMV& b) { return a -= b; }
    friend PolyMV operator*(const PolyMV& a, const PolyMV& b) { return mv_multiply(a, b); }
    friend PolyMV operator*(PolyMV a, const Cx& s) { return a *= s; }
    friend PolyMV operator*(const Cx& s, PolyMV a) { return a *= s; }

    PolyMV derivative(int var) const;
    PolyMV pow(int n) const;

    Cx evaluate(const std::vector<Cx>& v) const;
    // Value of every term at v, in term order.
    std::vector<Cx> term_values(const std::vector<Cx>& v) const;

    // Substitutes variable i by subs[i]; all subs share one variable count.
    PolyMV compose(const std::vector<PolyMV>& subs) const;

    // Coefficients (ascending) in variable `var` after fixing the others at v.
    std::vector<Cx> univariate(int var, const std::vector<Cx>& v) const;

    R max_coefficient_magnitude() const;
    R coefficient_one_norm() const;

    template <class To>
    PolyMV<To> cast() const {
        PolyMV<To> out(nvars_);
        for (const auto& [e, c] : terms_) out.add_term(e, complex_cast<To>(c));
        return out;
    }

private:
    int nvars_ = 0;
    TermMap terms_;
};

template <class R>
PolyMV<R> mv_multiply(const PolyMV<R>& p, const PolyMV<R>& q);

template <class R>
struct ScalarEquality {
    bool equal = false;
    PrecComplex<R> lambda;
    Exponents worst_monomial;
    double worst_relative_error = 0;
};

// p == lambda * q coefficientwise; lambda from the largest coefficient of q.
template <class R>
ScalarEquality<R> mv_equal_up_to_scalar(const PolyMV<R>& p, const PolyMV<R>& q, double tol);

template <class R>
ResidualReport normalized_residual(const PolyMV<R>& p, const std::vector<PrecComplex<R>>& v, double tol);

template <class R>
ResidualReport normalized_residual(const PolyMV<R>& p, const std::vector<PrecComplex<R>>& v) {
    return normalized_residual(p, v, default_tolerance(precision_bits_v<R>));
}

std::string format_monomial(const Exponents& e);

}  // namespace sl22

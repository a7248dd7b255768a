#pragma once

#include "sl22/numkit/complex.hpp"

#include <optional>
#include <string>
#include <utility>

namespace sl22 {

// Coupling as decimal strings so every precision parses it exactly.
struct CouplingSpec {
    std::string q_re = "2", q_im = "0";
    std::string g_re = "0.6", g_im = "0";
    std::optional<std::pair<std::string, std::string>> u;  // replaces g when set
    std::string delta_re = "1", delta_im = "0";

    static CouplingSpec demo_real() { return {}; }
    static CouplingSpec demo_complex() {
        CouplingSpec c;
        c.q_re = "1.5";
        c.q_im = "0.2";
        c.g_re = "0.33333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333333";
        c.g_im = "0.14285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285714285";
        return c;
    }
    std::string label() const;
};

template <class R>
struct ModelParams {
    using Cx = PrecComplex<R>;
    static constexpr int precision_bits = precision_bits_v<R>;

    Cx q, g, xi, U, delta, delta1;
    bool has_g = true;  // false when g could not be recovered from a U override
    double tolerance = default_tolerance(precision_bits_v<R>);

    Cx sqrt_q;               // principal sqrt(q)
    Cx q14;                  // exp(log(q)/4)
    Cx q32;                  // sqrt(q)^3
    Cx sqrt_one_plus_xi2;    // radical of CHAN/MAPC, see README

    static ModelParams from_coupling(const Cx& q, const Cx& g, const Cx& delta = Cx(1), double tol = -1);
    static ModelParams from_hubbard(const Cx& q, const Cx& U, const Cx& delta = Cx(1), double tol = -1);
    static ModelParams from_spec(const CouplingSpec& spec, double tol = -1);
};

template <class R>
void validate_q(const PrecComplex<R>& q);

// sqrt(q)(1 - 2g^2(q-1/q)^2) / (g sqrt(g^2(q-1/q)^2 - 1)), principal branches.
template <class R>
PrecComplex<R> hubbard_u(const PrecComplex<R>& q, const PrecComplex<R>& g);

// U on the degeneration locus qU^2 = 4(q^2+eps)^2: 2(q^2+eps)/sqrt(q).
template <class R>
PrecComplex<R> subm_u(const PrecComplex<R>& q, int eps);

// g with hubbard_u(q, g) = U, or nullopt when no root reproduces U.
template <class R>
std::optional<PrecComplex<R>> coupling_from_hubbard(const PrecComplex<R>& q, const PrecComplex<R>& U);

}  // namespace sl22

#include "sl22/numkit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl22 {

template <class R>
PolyMV<R> PolyMV<R>::constant(int nvars, const Cx& c) {
    PolyMV p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

template <class R>
PolyMV<R> PolyMV<R>::variable(int nvars, int index) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    return monomial(nvars, e, Cx(1));
}

template <class R>
PolyMV<R> PolyMV<R>::monomial(int nvars, const Exponents& e, const Cx& c) {
    PolyMV p(nvars);
    p.add_term(e, c);
    return p;
}

template <class R>
void PolyMV<R>::add_term(const Exponents& e, const Cx& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("PolyMV: exponent length mismatch");
    if (c.re == 0 && c.im == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.re == 0 && it->second.im == 0) terms_.erase(it);
}

template <class R>
typename PolyMV<R>::Cx PolyMV<R>::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cx() : it->second;
}

template <class R>
int PolyMV<R>::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

template <class R>
int PolyMV<R>::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

template <class R>
bool PolyMV<R>::is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        if (s != degree) return false;
    }
    return true;
}

template <class R>
PolyMV<R>& PolyMV<R>::operator+=(const PolyMV& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    if (o.nvars_ != nvars_ && !o.terms_.empty()) throw std::invalid_argument("PolyMV: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

template <class R>
PolyMV<R>& PolyMV<R>::operator-=(const PolyMV& o) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
    if (o.nvars_ != nvars_ && !o.terms_.empty()) throw std::invalid_argument("PolyMV: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

template <class R>
PolyMV<R>& PolyMV<R>::operator*=(const Cx& s) {
    if (s.re == 0 && s.im == 0) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= s;
        if (it->second.re == 0 && it->second.im == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

template <class R>
PolyMV<R> PolyMV<R>::operator-() const {
    PolyMV p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

template <class R>
PolyMV<R> mv_multiply(const PolyMV<R>& p, const PolyMV<R>& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("mv_multiply: nvars mismatch");
    PolyMV<R> out(p.nvars());
    Exponents e(p.nvars());
    for (const auto& [ea, ca] : p.terms()) {
        for (const auto& [eb, cb] : q.terms()) {
            for (int k = 0; k < p.nvars(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

template <class R>
PolyMV<R> PolyMV<R>::derivative(int var) const {
    PolyMV out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        out.add_term(f, c * Cx(e[var]));
    }
    return out;
}

template <class R>
PolyMV<R> PolyMV<R>::pow(int n) const {
    if (n < 0) throw std::invalid_argument("PolyMV::pow: negative exponent");
    PolyMV out = constant(nvars_, Cx(1));
    PolyMV base = *this;
    while (n) {
        if (n & 1) out = mv_multiply(out, base);
        n >>= 1;
        if (n) base = mv_multiply(base, base);
    }
    return out;
}

namespace {

template <class C>
C ipow(const C& x, int n) {
    C out(1);
    C b = x;
    while (n) {
        if (n & 1) out *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return out;
}

}  // namespace

template <class R>
std::vector<typename PolyMV<R>::Cx> PolyMV<R>::term_values(const std::vector<Cx>& v) const {
    if (static_cast<int>(v.size()) != nvars_) throw std::invalid_argument("PolyMV: point dimension mismatch");
    // Powers are cached per variable so each term costs one product per variable.
    std::vector<std::vector<Cx>> powers(nvars_);
    for (int k = 0; k < nvars_; ++k) {
        int d = std::max(0, degree_in(k));
        powers[k].resize(d + 1);
        powers[k][0] = Cx(1);
        for (int j = 1; j <= d; ++j) powers[k][j] = powers[k][j - 1] * v[k];
    }
    std::vector<Cx> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        Cx t = c;
        for (int k = 0; k < nvars_; ++k)
            if (e[k]) t *= powers[k][e[k]];
        out.push_back(t);
    }
    return out;
}

template <class R>
typename PolyMV<R>::Cx PolyMV<R>::evaluate(const std::vector<Cx>& v) const {
    Cx s;
    for (const auto& t : term_values(v)) s += t;
    return s;
}

template <class R>
PolyMV<R> PolyMV<R>::compose(const std::vector<PolyMV>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("PolyMV::compose: arity mismatch");
    int m = subs.empty() ? 0 : subs[0].nvars();
    std::vector<std::vector<PolyMV>> powers(nvars_);
    for (int k = 0; k < nvars_; ++k) {
        int d = std::max(0, degree_in(k));
        powers[k].push_back(constant(m, Cx(1)));
        for (int j = 1; j <= d; ++j) powers[k].push_back(mv_multiply(powers[k].back(), subs[k]));
    }
    PolyMV out(m);
    for (const auto& [e, c] : terms_) {
        PolyMV t = constant(m, c);
        for (int k = 0; k < nvars_; ++k)
            if (e[k]) t = mv_multiply(t, powers[k][e[k]]);
        out += t;
    }
    return out;
}

template <class R>
std::vector<typename PolyMV<R>::Cx> PolyMV<R>::univariate(int var, const std::vector<Cx>& v) const {
    std::vector<Cx> pt = v;
    pt.at(var) = Cx(1);
    int d = std::max(0, degree_in(var));
    std::vector<Cx> coeffs(d + 1);
    std::vector<std::vector<Cx>> powers(nvars_);
    for (int k = 0; k < nvars_; ++k) {
        int dk = std::max(0, degree_in(k));
        powers[k].resize(dk + 1);
        powers[k][0] = Cx(1);
        for (int j = 1; j <= dk; ++j) powers[k][j] = powers[k][j - 1] * pt[k];
    }
    for (const auto& [e, c] : terms_) {
        Cx t = c;
        for (int k = 0; k < nvars_; ++k)
            if (k != var && e[k]) t *= powers[k][e[k]];
        coeffs[e[var]] += t;
    }
    return coeffs;
}

template <class R>
R PolyMV<R>::max_coefficient_magnitude() const {
    R m(0);
    for (const auto& [e, c] : terms_) {
        R a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

template <class R>
R PolyMV<R>::coefficient_one_norm() const {
    R m(0);
    for (const auto& [e, c] : terms_) m += abs(c);
    return m;
}

template <class R>
ScalarEquality<R> mv_equal_up_to_scalar(const PolyMV<R>& p, const PolyMV<R>& q, double tol) {
    ScalarEquality<R> out;
    R pmax = p.max_coefficient_magnitude();
    R qmax = q.max_coefficient_magnitude();
    if (qmax == 0 || pmax == 0) {
        out.equal = (qmax == 0 && pmax == 0);
        out.worst_relative_error = out.equal ? 0.0 : 1.0;
        return out;
    }
    const R pzero = pmax * R(1e-30);
    const R qzero = qmax * R(1e-30);
    Exponents pivot;
    R best(-1);
    for (const auto& [e, c] : q.terms()) {
        R a = abs(c);
        if (a > best) {
            best = a;
            pivot = e;
        }
    }
    out.lambda = p.coefficient(pivot) / q.coefficient(pivot);
    std::map<Exponents, int> keys;
    for (const auto& [e, c] : p.terms()) keys[e] = 1;
    for (const auto& [e, c] : q.terms()) keys[e] = 1;
    double worst = 0;
    for (const auto& [e, unused] : keys) {
        PrecComplex<R> a = p.coefficient(e);
        PrecComplex<R> b = q.coefficient(e);
        bool az = abs(a) <= pzero;
        bool bz = abs(b) <= qzero;
        if (az && bz) continue;
        double rel;
        if (az != bz) {
            rel = 1.0;
        } else {
            rel = to_double(rel_diff(a, out.lambda * b));
        }
        if (rel > worst || out.worst_monomial.empty()) {
            worst = std::max(worst, rel);
            out.worst_monomial = e;
        }
    }
    out.worst_relative_error = worst;
    out.equal = worst <= tol;
    return out;
}

template <class R>
ResidualReport normalized_residual(const PolyMV<R>& p, const std::vector<PrecComplex<R>>& v, double tol) {
    return residual_from_terms(p.term_values(v), tol);
}

std::string format_monomial(const Exponents& e) {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << ']';
    return os.str();
}

#define SL22_INST(R)                                                                                   \
    template class PolyMV<R>;                                                                          \
    template PolyMV<R> mv_multiply(const PolyMV<R>&, const PolyMV<R>&);                                \
    template ScalarEquality<R> mv_equal_up_to_scalar(const PolyMV<R>&, const PolyMV<R>&, double);      \
    template ResidualReport normalized_residual(const PolyMV<R>&, const std::vector<PrecComplex<R>>&, double);
SL22_FOR_EACH_REAL(SL22_INST)
#undef SL22_INST

}  // namespace sl22

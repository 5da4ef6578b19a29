#pragma once

#include <optional>
#include <vector>

#include "graded.hpp"

namespace hcw {

// Graded derivation, defined by its values on generators and extended by the
// graded Leibniz rule D(xy) = D(x)y + (-1)^{deg D * |x|} x D(y).
class Derivation {
  public:
    Derivation(AlgebraPtr alg, int degree)
        : alg_(std::move(alg)), degree_(degree), values_(alg_->size()) {}

    const AlgebraPtr& algebra() const { return alg_; }
    int degree() const { return degree_; }

    void set(GenId g, Element v) {
        if (!v.is_zero()) {
            auto d = v.homogeneous_degree();
            if (!d || *d != alg_->gen(g).degree + degree_)
                throw error("derivation value on '" + alg_->gen(g).name +
                            "' has wrong degree");
        }
        values_[g] = std::move(v);
    }
    void set(const std::string& name, Element v) { set(alg_->id(name), std::move(v)); }

    bool defined_on(GenId g) const { return values_[g].has_value(); }
    const Element& value(GenId g) const {
        if (!values_[g])
            throw undefined_derivation("derivation undefined on generator '" +
                                       alg_->gen(g).name + "'");
        return *values_[g];
    }

    Element apply(const Element& x) const {
        Element r(alg_);
        for (const auto& [m, c] : x.terms()) {
            int prefix_deg = 0;
            for (size_t i = 0; i < m.size(); ++i) {
                const Element& dg = value(m[i]);
                if (!dg.is_zero()) {
                    // c * (g_0 ... g_{i-1}) D(g_i) (g_{i+1} ... )
                    Element left = Element::monomial(alg_, Monomial(m.begin(), m.begin() + i));
                    Element right =
                        Element::monomial(alg_, Monomial(m.begin() + i + 1, m.end()));
                    Element term = left * dg * right;
                    bool flip = (degree_ % 2 != 0) && (prefix_deg % 2 != 0);
                    r += term * (flip ? -c : c);
                }
                prefix_deg += alg_->gen(m[i]).degree;
            }
        }
        return r;
    }

  private:
    AlgebraPtr alg_;
    int degree_;
    std::vector<std::optional<Element>> values_;
};

struct DifferentialCertificate {
    bool ok = true;
    std::string offender;  // generator on which d(d(g)) != 0
    Element residual;
};

// d^2 vanishes everywhere iff it vanishes on generators: for deg(d) = +1 the
// square is (1/2)[d,d], again a derivation.
inline DifferentialCertificate is_differential(const Derivation& d) {
    if (d.degree() != 1) throw error("is_differential expects a degree +1 derivation");
    const auto& A = *d.algebra();
    for (GenId g = 0; g < A.size(); ++g) {
        Element r = d.apply(d.value(g));
        if (!r.is_zero()) return {false, A.gen(g).name, std::move(r)};
    }
    return {};
}

// Algebra morphism determined on generators, extended multiplicatively.
class AlgebraMorphism {
  public:
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target)
        : src_(std::move(source)), tgt_(std::move(target)), values_(src_->size()) {}

    const AlgebraPtr& source() const { return src_; }
    const AlgebraPtr& target() const { return tgt_; }

    void set(GenId g, Element v) {
        if (!v.is_zero()) {
            auto d = v.homogeneous_degree();
            if (!d || *d != src_->gen(g).degree)
                throw invalid_morphism("image of '" + src_->gen(g).name +
                                       "' does not preserve degree");
        }
        values_[g] = std::move(v);
    }
    void set(const std::string& name, Element v) { set(src_->id(name), std::move(v)); }

    const Element& value(GenId g) const {
        if (!values_[g])
            throw invalid_morphism("morphism undefined on generator '" + src_->gen(g).name +
                                   "'");
        return *values_[g];
    }

    Element apply(const Element& x) const {
        Element r(tgt_);
        for (const auto& [m, c] : x.terms()) {
            Element prod = Element::one(tgt_);
            for (GenId g : m) prod = prod * value(g);
            r += prod * c;
        }
        return r;
    }

    static AlgebraMorphism identity(const AlgebraPtr& alg) {
        AlgebraMorphism phi(alg, alg);
        for (GenId g = 0; g < alg->size(); ++g) phi.set(g, Element::generator(alg, g));
        return phi;
    }

  private:
    AlgebraPtr src_, tgt_;
    std::vector<std::optional<Element>> values_;
};

struct ChainMapCertificate {
    bool ok = true;
    std::string offender;
    Element residual;  // phi(d_src g) - d_tgt(phi g), in the target algebra
};

inline ChainMapCertificate morphism_chain_check(const AlgebraMorphism& phi,
                                                const Derivation& d_src,
                                                const Derivation& d_tgt) {
    const auto& A = *phi.source();
    for (GenId g = 0; g < A.size(); ++g) {
        Element lhs = phi.apply(d_src.value(g));
        Element rhs = d_tgt.apply(phi.value(g));
        Element res = lhs - rhs;
        if (!res.is_zero()) return {false, A.gen(g).name, std::move(res)};
    }
    return {};
}

}  // namespace hcw

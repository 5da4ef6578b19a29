#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hcw {

using GenId = std::uint32_t;

struct Generator {
    std::string name;
    int degree = 1;
    bool shifted = false;  // true for the degree-shifted copies in a Weil-type algebra
};

// A free graded-commutative algebra over Q, described by its generators.
// Canonical generator order is (degree, name); everything downstream relies on
// this order being stable, so an algebra is immutable once built.
class GradedAlgebra {
  public:
    explicit GradedAlgebra(std::vector<Generator> gens) : gens_(std::move(gens)) {
        for (const auto& g : gens_) {
            if (g.degree < 1)
                throw error("generator '" + g.name + "' has degree " +
                            std::to_string(g.degree) + "; degree-0 generators are not supported");
        }
        std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) {
            return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
        });
        for (GenId i = 0; i < gens_.size(); ++i) {
            if (!index_.emplace(gens_[i].name, i).second)
                throw error("duplicate generator name '" + gens_[i].name + "'");
        }
    }

    size_t size() const { return gens_.size(); }
    const Generator& gen(GenId i) const { return gens_[i]; }
    const std::vector<Generator>& gens() const { return gens_; }

    GenId id(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw error("unknown generator '" + name + "'");
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    bool same_generators(const GradedAlgebra& o) const {
        if (this == &o) return true;
        if (gens_.size() != o.gens_.size()) return false;
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree ||
                gens_[i].shifted != o.gens_[i].shifted)
                return false;
        }
        return true;
    }

  private:
    std::vector<Generator> gens_;
    std::map<std::string, GenId> index_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

inline AlgebraPtr make_algebra(std::vector<Generator> gens) {
    return std::make_shared<GradedAlgebra>(std::move(gens));
}

// A monomial is a weakly increasing list of generator ids; odd-degree ids occur
// at most once. The empty monomial is the unit.
using Monomial = std::vector<GenId>;

inline int monomial_degree(const Monomial& m, const GradedAlgebra& A) {
    int d = 0;
    for (GenId g : m) d += A.gen(g).degree;
    return d;
}

// Merge two canonical monomials, accumulating the Koszul sign: transposing
// adjacent factors of degrees p and q contributes (-1)^{pq}, so only
// odd-past-odd moves flip the sign. Returns 0 if an odd generator squares.
inline int merge_monomials(const Monomial& a, const Monomial& b, const GradedAlgebra& A,
                           Monomial& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    // odd-degree factors of a remaining to the right of position i
    size_t odd_left = 0;
    for (GenId g : a)
        if (A.gen(g).degree % 2 != 0) ++odd_left;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            if (A.gen(a[i]).degree % 2 != 0) --odd_left;
            out.push_back(a[i++]);
        } else {
            bool odd = A.gen(b[j]).degree % 2 != 0;
            if (odd && odd_left % 2 != 0) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    for (size_t k = 0; k + 1 < out.size(); ++k) {
        if (out[k] == out[k + 1] && A.gen(out[k]).degree % 2 != 0) return 0;
    }
    return sign;
}

// Exact linear combination of monomials. Zero coefficients are never stored,
// so operator== is structural equality.
class Element {
  public:
    Element() = default;
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static Element zero(AlgebraPtr alg) { return Element(std::move(alg)); }
    static Element one(AlgebraPtr alg) {
        Element e(std::move(alg));
        e.terms_[Monomial{}] = Rat(1);
        return e;
    }
    static Element generator(AlgebraPtr alg, GenId g) {
        Element e(std::move(alg));
        e.terms_[Monomial{g}] = Rat(1);
        return e;
    }
    static Element monomial(AlgebraPtr alg, Monomial m, Rat c = Rat(1)) {
        Element e(std::move(alg));
        if (c != 0) e.terms_[std::move(m)] = std::move(c);
        return e;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Common degree of all monomials, or nullopt if inhomogeneous. The zero
    // element reports degree 0.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            int md = monomial_degree(m, *alg_);
            if (!d)
                d = md;
            else if (*d != md)
                return std::nullopt;
        }
        return d ? d : std::optional<int>(0);
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        require_compatible(o);
        if (!alg_) alg_ = o.alg_;
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        require_compatible(o);
        if (!alg_) alg_ = o.alg_;
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Element& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Rat(-1); }
    friend Element operator*(Element a, const Rat& c) { return a *= c; }
    friend Element operator*(const Rat& c, Element a) { return a *= c; }

    friend Element operator*(const Element& a, const Element& b) {
        a.require_compatible(b);
        Element r(a.alg_ ? a.alg_ : b.alg_);
        Monomial buf;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                int s = merge_monomials(ma, mb, *r.alg_, buf);
                if (s != 0) r.add_term(buf, s > 0 ? ca * cb : -(ca * cb));
            }
        }
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) {
        if (a.alg_ && b.alg_ && !a.alg_->same_generators(*b.alg_)) return false;
        return a.terms_ == b.terms_;
    }

    // Projection onto the homogeneous part of a given degree.
    Element degree_part(int d) const {
        Element r(alg_);
        for (const auto& [m, c] : terms_)
            if (monomial_degree(m, *alg_) == d) r.terms_.emplace(m, c);
        return r;
    }

    // Transport to an algebra with a superset of generators (matched by name).
    Element promote(const AlgebraPtr& bigger) const {
        Element r(bigger);
        for (const auto& [m, c] : terms_) {
            Monomial mm;
            mm.reserve(m.size());
            for (GenId g : m) {
                const Generator& src = alg_->gen(g);
                GenId ng = bigger->id(src.name);
                if (bigger->gen(ng).degree != src.degree)
                    throw incompatible_algebras("generator '" + src.name +
                                                "' changes degree under promotion");
                mm.push_back(ng);
            }
            std::sort(mm.begin(), mm.end());  // id order may differ; degrees agree termwise
            r.add_term(mm, c);
        }
        return r;
    }

  private:
    void require_compatible(const Element& o) const {
        if (alg_ && o.alg_ && !alg_->same_generators(*o.alg_))
            throw incompatible_algebras("elements over different generator sets");
    }

    AlgebraPtr alg_;
    std::map<Monomial, Rat> terms_;
};

}  // namespace hcw

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "graded.hpp"
#include "lie.hpp"
#include "qlinalg.hpp"

namespace hcw {

enum class Provenance { ce, weil, inn, string_algebra, fivebrane, w_tilde_string, custom };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::ce: return "ce";
        case Provenance::weil: return "weil";
        case Provenance::inn: return "inn";
        case Provenance::string_algebra: return "string";
        case Provenance::fivebrane: return "fivebrane";
        case Provenance::w_tilde_string: return "w_tilde_string";
        default: return "custom";
    }
}

// Free graded-commutative algebra with a certified square-zero differential of
// degree +1. Weil-type instances remember the unshifted/shifted generator
// pairing and the underlying CE differential.
struct DGCA {
    AlgebraPtr alg;
    Derivation d;
    Provenance tag = Provenance::custom;

    // Weil structure: for an unshifted generator id, the id of its shifted
    // copy; empty when this is not a Weil-type algebra.
    std::map<GenId, GenId> sigma_of;
    std::map<GenId, GenId> unshift_of;
    std::shared_ptr<const DGCA> base_ce;

    bool is_weil_type() const { return !sigma_of.empty(); }

    Element gen(const std::string& name) const {
        return Element::generator(alg, alg->id(name));
    }
};

inline DGCA make_dgca(AlgebraPtr alg, Derivation d, Provenance tag) {
    auto cert = is_differential(d);
    if (!cert.ok)
        throw error(std::string("differential does not square to zero on generator '") +
                    cert.offender + "'");
    return DGCA{std::move(alg), std::move(d), tag, {}, {}, nullptr};
}

// CE(g) for an ordinary Lie algebra: generators t^a in degree 1 and
// d t^a = -1/2 C^a_{bc} t^b t^c. The d^2 = 0 certificate is equivalent to the
// Jacobi identity, which LiePresentation has already validated.
inline DGCA chevalley_eilenberg(const LiePresentation& L, const std::string& prefix = "t") {
    size_t n = L.dim();
    std::vector<Generator> gens;
    for (size_t a = 0; a < n; ++a) gens.push_back({prefix + L.basis()[a], 1, false});
    auto alg = make_algebra(gens);
    Derivation d(alg, +1);
    for (size_t a = 0; a < n; ++a) {
        Element v(alg);
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                const Rat& C = L.C(a, b, c);
                if (C == 0) continue;
                v += Element::generator(alg, alg->id(prefix + L.basis()[b])) *
                     Element::generator(alg, alg->id(prefix + L.basis()[c])) * (C * Rat(-1, 2));
            }
        d.set(alg->id(prefix + L.basis()[a]), std::move(v));
    }
    DGCA A = make_dgca(alg, std::move(d), Provenance::ce);
    return A;
}

// Default naming for shifted copies: t* -> r*, b* -> h*, otherwise "s_" + name.
inline std::string default_shift_name(const std::string& name) {
    if (!name.empty() && name[0] == 't') return "r" + name.substr(1);
    if (!name.empty() && name[0] == 'b') return "h" + name.substr(1);
    return "s_" + name;
}

// W(A) for a CE-type algebra A: one shifted generator per generator, with
// d_W x = d_CE x + sigma(x) and d_W sigma(x) = -sigma(d_CE x), sigma extended
// as a degree +1 derivation vanishing on shifted generators.
inline DGCA weil(const DGCA& ce,
                 const std::function<std::string(const std::string&)>& shift_name =
                     default_shift_name) {
    std::vector<Generator> gens = ce.alg->gens();
    std::vector<std::pair<std::string, std::string>> pairs;  // unshifted -> shifted names
    for (const auto& g : ce.alg->gens()) {
        std::string sn = shift_name(g.name);
        gens.push_back({sn, g.degree + 1, true});
        pairs.emplace_back(g.name, sn);
    }
    auto alg = make_algebra(gens);

    Derivation sigma(alg, +1);
    for (const auto& [un, sh] : pairs) sigma.set(alg->id(un), Element::generator(alg, alg->id(sh)));
    for (const auto& g : ce.alg->gens())
        sigma.set(alg->id(shift_name(g.name)), Element::zero(alg));

    Derivation d(alg, +1);
    for (const auto& [un, sh] : pairs) {
        Element dce = ce.d.value(ce.alg->id(un)).promote(alg);
        d.set(alg->id(un), dce + Element::generator(alg, alg->id(sh)));
        d.set(alg->id(sh), -sigma.apply(dce));
    }

    DGCA W = make_dgca(alg, std::move(d), Provenance::weil);
    for (const auto& [un, sh] : pairs) {
        GenId u = alg->id(un), s = alg->id(sh);
        W.sigma_of[u] = s;
        W.unshift_of[s] = u;
    }
    W.base_ce = std::make_shared<DGCA>(ce);
    return W;
}

// The projection i*: W(g) -> CE(g), identity on unshifted generators and zero
// on shifted ones.
inline AlgebraMorphism restrict_to_fiber(const DGCA& W) {
    if (!W.is_weil_type() || !W.base_ce) throw error("restrict_to_fiber needs a Weil-type algebra");
    const DGCA& ce = *W.base_ce;
    AlgebraMorphism i(W.alg, ce.alg);
    for (GenId g = 0; g < W.alg->size(); ++g) {
        const Generator& gen = W.alg->gen(g);
        if (gen.shifted)
            i.set(g, Element::zero(ce.alg));
        else
            i.set(g, Element::generator(ce.alg, ce.alg->id(gen.name)));
    }
    return i;
}

struct CocycleCertificate {
    bool ok = true;
    Element residual;
};

inline CocycleCertificate is_cocycle(const DGCA& A, const Element& mu) {
    if (!mu.homogeneous_degree()) throw error("is_cocycle expects a homogeneous element");
    Element r = A.d.apply(mu);
    if (r.is_zero()) return {};
    return {false, std::move(r)};
}

struct InvariantPolynomial {
    Element element;              // supported on shifted generators only
    bool degenerate = false;      // e.g. the Killing polynomial of an abelian algebra
};

inline bool is_shifted_only(const DGCA& W, const Element& P) {
    for (const auto& [m, c] : P.terms())
        for (GenId g : m)
            if (!W.alg->gen(g).shifted) return false;
    return true;
}

struct InvariantPolynomialCertificate {
    bool shifted_only = true;
    bool closed = true;
    Element residual;
};

inline InvariantPolynomialCertificate check_invariant_polynomial(const DGCA& W,
                                                                 const Element& P) {
    InvariantPolynomialCertificate c;
    c.shifted_only = is_shifted_only(W, P);
    Element r = W.d.apply(P);
    if (!r.is_zero()) {
        c.closed = false;
        c.residual = std::move(r);
    }
    return c;
}

// Killing polynomial K_{ab} r^a r^b in W(g). Returned even when K vanishes
// identically, with the degenerate flag set.
inline InvariantPolynomial killing_form(const LiePresentation& L, const DGCA& W,
                                        const std::string& prefix = "t") {
    InvariantPolynomial P;
    P.element = Element::zero(W.alg);
    for (size_t a = 0; a < L.dim(); ++a)
        for (size_t b = 0; b < L.dim(); ++b) {
            Rat K = L.killing(a, b);
            if (K == 0) continue;
            GenId ra = W.sigma_of.at(W.alg->id(prefix + L.basis()[a]));
            GenId rb = W.sigma_of.at(W.alg->id(prefix + L.basis()[b]));
            P.element += Element::generator(W.alg, ra) * Element::generator(W.alg, rb) * K;
        }
    P.degenerate = P.element.is_zero();
    if (!P.degenerate) {
        auto cert = check_invariant_polynomial(W, P.element);
        if (!cert.shifted_only || !cert.closed)
            throw error("Killing polynomial failed the invariance certificate");
    }
    return P;
}

namespace detail {

// Cone coordinates on a Weil algebra: u = x, v = d_W x are free differential
// generators. The two substitutions below express elements in either basis.
inline AlgebraMorphism to_cone(const DGCA& W) {
    AlgebraMorphism T(W.alg, W.alg);
    const DGCA& ce = *W.base_ce;
    for (GenId g = 0; g < W.alg->size(); ++g) {
        if (!W.alg->gen(g).shifted) {
            T.set(g, Element::generator(W.alg, g));
        } else {
            GenId u = W.unshift_of.at(g);
            Element dce = ce.d.value(ce.alg->id(W.alg->gen(u).name)).promote(W.alg);
            T.set(g, Element::generator(W.alg, g) - dce);
        }
    }
    return T;
}

inline AlgebraMorphism from_cone(const DGCA& W) {
    AlgebraMorphism F(W.alg, W.alg);
    const DGCA& ce = *W.base_ce;
    for (GenId g = 0; g < W.alg->size(); ++g) {
        if (!W.alg->gen(g).shifted) {
            F.set(g, Element::generator(W.alg, g));
        } else {
            GenId u = W.unshift_of.at(g);
            Element dce = ce.d.value(ce.alg->id(W.alg->gen(u).name)).promote(W.alg);
            F.set(g, Element::generator(W.alg, g) + dce);
        }
    }
    return F;
}

// s(N^{-1} w) where s is the degree -1 derivation with s(v)=u, s(u)=0 and N is
// the generator-count operator [d,s]; w must have no constant term.
inline Element cone_homotopy(const DGCA& W, const Element& w) {
    Derivation s(W.alg, -1);
    for (GenId g = 0; g < W.alg->size(); ++g) {
        if (W.alg->gen(g).shifted)
            s.set(g, Element::generator(W.alg, W.unshift_of.at(g)));
        else
            s.set(g, Element::zero(W.alg));
    }
    Element scaled(W.alg);
    for (const auto& [m, c] : w.terms()) {
        if (m.empty()) throw error("contraction undefined on constants");
        scaled += Element::monomial(W.alg, m, c / Rat(Int(m.size())));
    }
    return s.apply(scaled);
}

}  // namespace detail

struct ChernSimonsElement {
    Element cs;                   // in W(g)
    InvariantPolynomial polynomial;
    Element cocycle;              // mu = i*(cs), in CE(g)
};

// Transgression by the universal contraction in cone coordinates. The result
// satisfies d_W cs = P exactly; it is canonical for this algorithm but unique
// only up to d_W-exact terms.
inline ChernSimonsElement transgress(const DGCA& W, const InvariantPolynomial& P) {
    if (!W.is_weil_type()) throw error("transgress needs a Weil-type algebra");
    if (P.element.terms().count(Monomial{}))
        throw error("contraction undefined on constants");
    auto cert = check_invariant_polynomial(W, P.element);
    if (!cert.closed) throw error("transgress expects a d_W-closed polynomial");

    AlgebraMorphism T = detail::to_cone(W);
    AlgebraMorphism F = detail::from_cone(W);
    Element cs = F.apply(detail::cone_homotopy(W, T.apply(P.element)));

    if (!(W.d.apply(cs) == P.element))
        throw error("internal: transgression failed to trivialize the polynomial");
    Element mu = restrict_to_fiber(W).apply(cs);
    auto mucert = is_cocycle(*W.base_ce, mu);
    if (!mucert.ok) throw error("internal: i*(cs) is not closed");
    return {std::move(cs), P, std::move(mu)};
}

// Constructive exactness test: positive-degree closed elements of W(g) are
// exact, with primitive produced by the same contraction.
inline std::optional<Element> exact_primitive(const DGCA& W, const Element& w) {
    if (w.is_zero()) return Element::zero(W.alg);
    if (w.terms().count(Monomial{})) return std::nullopt;
    if (!W.d.apply(w).is_zero()) return std::nullopt;
    AlgebraMorphism T = detail::to_cone(W);
    AlgebraMorphism F = detail::from_cone(W);
    Element eta = F.apply(detail::cone_homotopy(W, T.apply(w)));
    if (!(W.d.apply(eta) == w)) return std::nullopt;
    return eta;
}

struct CsComparison {
    bool ok = false;
    Rat alpha{0};      // cs_candidate - alpha * cs_reference is exact
    Element witness;   // primitive of the difference
};

// Chern-Simons elements for proportional polynomials agree up to an overall
// rational factor and a d_W-exact term; this finds both or reports failure.
inline CsComparison compare_chern_simons(const DGCA& W, const Element& cs_candidate,
                                         const Element& cs_reference) {
    Element dc = W.d.apply(cs_candidate);
    Element dr = W.d.apply(cs_reference);
    Rat alpha(0);
    if (dr.is_zero()) {
        if (!dc.is_zero()) return {};
        alpha = Rat(1);
    } else {
        const auto& [m0, c0] = *dr.terms().begin();
        auto it = dc.terms().find(m0);
        if (it == dc.terms().end()) return {};
        alpha = it->second / c0;
        if (!(dc == dr * alpha)) return {};
    }
    Element diff = cs_candidate - cs_reference * alpha;
    auto eta = exact_primitive(W, diff);
    if (!eta) return {};
    return {true, alpha, std::move(*eta)};
}

// Adjoin a generator b of degree n-1 with d b = -mu.
inline DGCA extend_by_cocycle(const DGCA& A, const Element& mu, int n,
                              const std::string& gen_name = "b",
                              Provenance tag = Provenance::custom) {
    auto cert = is_cocycle(A, mu);
    if (!cert.ok) throw error("extend_by_cocycle: element is not a cocycle");
    auto deg = mu.homogeneous_degree();
    if (!mu.is_zero() && *deg != n) throw error("extend_by_cocycle: degree mismatch");

    std::vector<Generator> gens = A.alg->gens();
    gens.push_back({gen_name, n - 1, false});
    auto alg = make_algebra(gens);
    Derivation d(alg, +1);
    for (GenId g = 0; g < A.alg->size(); ++g)
        d.set(alg->id(A.alg->gen(g).name), A.d.value(g).promote(alg));
    d.set(alg->id(gen_name), -mu.promote(alg));
    return make_dgca(alg, std::move(d), tag);
}

// mu_3 = 1/2 K_{ad} C^d_{bc} t^a t^b t^c, the canonical 3-cocycle with the raw
// Killing normalization.
inline Element mu3_reference(const LiePresentation& L, const DGCA& ce,
                             const std::string& prefix = "t") {
    size_t n = L.dim();
    Element mu(ce.alg);
    auto t = [&](size_t a) {
        return Element::generator(ce.alg, ce.alg->id(prefix + L.basis()[a]));
    };
    for (size_t a = 0; a < n; ++a)
        for (size_t dd = 0; dd < n; ++dd) {
            Rat K = L.killing(a, dd);
            if (K == 0) continue;
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c) {
                    const Rat& C = L.C(dd, b, c);
                    if (C == 0) continue;
                    mu += t(a) * t(b) * t(c) * (K * C * Rat(1, 2));
                }
        }
    return mu;
}

// The printed Chern-Simons reference <sigma(-),-> + 1/2 <-,[-,-]>, in the two
// slot-normalization conventions encountered in the literature. Which one (and
// with which rational factor) matches the transgressed element is decided by
// compare_chern_simons.
inline std::vector<std::pair<std::string, Element>> cs3_reference_candidates(
    const LiePresentation& L, const DGCA& W, const std::string& prefix = "t") {
    size_t n = L.dim();
    auto t = [&](size_t a) {
        return Element::generator(W.alg, W.alg->id(prefix + L.basis()[a]));
    };
    auto r = [&](size_t a) {
        return Element::generator(W.alg, W.sigma_of.at(W.alg->id(prefix + L.basis()[a])));
    };
    Element pairing(W.alg);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Rat K = L.killing(a, b);
            if (K != 0) pairing += r(a) * t(b) * K;
        }
    DGCA ce = chevalley_eilenberg(L, prefix);
    Element mu3 = mu3_reference(L, ce, prefix).promote(W.alg);
    std::vector<std::pair<std::string, Element>> out;
    out.emplace_back("tensor-evaluation", pairing + mu3);
    out.emplace_back("half-symmetrized", pairing * Rat(1, 2) + mu3 * Rat(1, 6));
    return out;
}

// Fully symmetrized 4-linear trace polynomial sum m_{abcd} r^a r^b r^c r^d.
inline InvariantPolynomial quartic_invariant(const LiePresentation& L, const LieRep& rep,
                                             const DGCA& W, const std::string& prefix = "t") {
    check_representation(L, rep);
    size_t n = L.dim(), md = rep.matdim;

    auto sym_trace = [&](size_t a, size_t b, size_t c, size_t d) -> Rat {
        size_t perm[24][4];
        size_t idx[4] = {a, b, c, d};
        int p = 0;
        size_t order[4] = {0, 1, 2, 3};
        std::sort(order, order + 4);
        do {
            for (int i = 0; i < 4; ++i) perm[p][i] = idx[order[i]];
            ++p;
        } while (std::next_permutation(order, order + 4));
        CRat total;
        for (int q = 0; q < p; ++q) {
            auto M = detail::cmat_mul(rep.mats[perm[q][0]], rep.mats[perm[q][1]], md);
            M = detail::cmat_mul(M, rep.mats[perm[q][2]], md);
            M = detail::cmat_mul(M, rep.mats[perm[q][3]], md);
            total = total + detail::cmat_trace(M, md);
        }
        if (!(total.im == 0))
            throw error("symmetrized 4-trace has nonzero imaginary part");
        return total.re / Rat(Int(p));
    };

    auto r = [&](size_t a) {
        return Element::generator(W.alg, W.sigma_of.at(W.alg->id(prefix + L.basis()[a])));
    };

    InvariantPolynomial P;
    P.element = Element::zero(W.alg);
    // m is symmetric; enumerate multisets a<=b<=c<=d with multiplicity.
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b)
            for (size_t c = b; c < n; ++c)
                for (size_t d = c; d < n; ++d) {
                    Rat m = sym_trace(a, b, c, d);
                    if (m == 0) continue;
                    // number of distinct orderings of the multiset {a,b,c,d}
                    size_t counts[4] = {1, 0, 0, 0};
                    size_t vals[4] = {a, SIZE_MAX, SIZE_MAX, SIZE_MAX};
                    size_t nv = 1;
                    for (size_t x : {b, c, d}) {
                        bool found = false;
                        for (size_t v = 0; v < nv; ++v)
                            if (vals[v] == x) {
                                ++counts[v];
                                found = true;
                                break;
                            }
                        if (!found) {
                            vals[nv] = x;
                            counts[nv++] = 1;
                        }
                    }
                    long mult = 24;
                    for (size_t v = 0; v < nv; ++v)
                        for (size_t f = 2; f <= counts[v]; ++f) mult /= (long)f;
                    P.element += r(a) * r(b) * r(c) * r(d) * (m * Rat(mult));
                }
    P.degenerate = P.element.is_zero();
    if (!P.degenerate) {
        auto cert = check_invariant_polynomial(W, P.element);
        if (!cert.closed) throw error("quartic invariant failed the closure certificate");
    }
    return P;
}

// mu_7 = -1/8 < t, [t,t], [t,t], [t,t] > evaluated with the symmetrized
// 4-trace. Throws degenerate_error when the candidate vanishes identically.
inline Element mu7(const LiePresentation& L, const LieRep& rep, const DGCA& ce,
                   const std::string& prefix = "t") {
    DGCA W = weil(ce);
    InvariantPolynomial P4 = quartic_invariant(L, rep, W, prefix);

    size_t n = L.dim();
    std::vector<Element> bracket;  // [t,t]^b = C^b_{ef} t^e t^f, in CE
    std::vector<Element> tgen;
    for (size_t a = 0; a < n; ++a)
        tgen.push_back(Element::generator(ce.alg, ce.alg->id(prefix + L.basis()[a])));
    for (size_t b = 0; b < n; ++b) {
        Element Br(ce.alg);
        for (size_t e = 0; e < n; ++e)
            for (size_t f = 0; f < n; ++f) {
                const Rat& C = L.C(b, e, f);
                if (C != 0) Br += tgen[e] * tgen[f] * C;
            }
        bracket.push_back(std::move(Br));
    }

    // Expand P4 with r -> [t,t] in all slots but one, which takes t.
    Element out(ce.alg);
    for (const auto& [mono, coef] : P4.element.terms()) {
        std::vector<size_t> slots;  // basis indices of the four r-factors
        for (GenId g : mono) {
            GenId u = W.unshift_of.at(g);
            slots.push_back(ce.alg->id(W.alg->gen(u).name));
        }
        for (size_t i = 0; i < slots.size(); ++i) {
            Element prod = tgen[slots[i]];
            for (size_t j = 0; j < slots.size(); ++j)
                if (j != i) prod = prod * bracket[slots[j]];
            out += prod * coef;
        }
    }
    // each tuple contributed once per slot; the evaluation uses one t-slot
    Element mu = out * Rat(-1, 8 * 4);
    if (mu.is_zero())
        throw degenerate_error("mu_7 vanishes identically for this presentation");
    auto cert = is_cocycle(ce, mu);
    if (!cert.ok) throw error("internal: mu_7 is not closed");
    return mu;
}

struct FivebraneResult {
    DGCA string_algebra;   // CE extended by mu_3
    DGCA fivebrane;        // further extended by mu_7
    Element mu3, mu7;
};

inline FivebraneResult build_fivebrane(const LiePresentation& L, const LieRep& rep,
                                       const std::string& prefix = "t") {
    DGCA ce = chevalley_eilenberg(L, prefix);
    Element m3 = mu3_reference(L, ce, prefix);
    Element m7 = mu7(L, rep, ce, prefix);
    DGCA str = extend_by_cocycle(ce, m3, 3, "b2", Provenance::string_algebra);
    Element m7s = m7.promote(str.alg);
    auto cert = is_cocycle(str, m7s);
    if (!cert.ok) throw error("internal: mu_7 fails to stay a cocycle on the extension");
    DGCA fb = extend_by_cocycle(str, m7s, 7, "b6", Provenance::fivebrane);
    return {std::move(str), std::move(fb), std::move(m3), std::move(m7)};
}

struct ModifiedWeilString {
    DGCA algebra;       // generators t^a, b, c, r^a, h, g
    Element cs3;        // the Chern-Simons element used in d b = c - cs3 + h
    Element killing;    // the invariant polynomial <-,->
};

// Modified Weil algebra of (b R -> string): the d^2 = 0 certificate of this
// presentation carries the Bianchi identities of the twisted string story.
inline ModifiedWeilString build_modified_weil_string(const LiePresentation& L,
                                                     const std::string& prefix = "t") {
    DGCA ce = chevalley_eilenberg(L, prefix);
    DGCA W = weil(ce);
    InvariantPolynomial K = killing_form(L, W, prefix);
    if (K.degenerate) throw degenerate_error("Killing form vanishes; no string extension");
    ChernSimonsElement cs = transgress(W, K);

    std::vector<Generator> gens = W.alg->gens();
    gens.push_back({"b", 2, false});
    gens.push_back({"c", 3, false});
    gens.push_back({"h", 3, true});
    gens.push_back({"g", 4, true});
    auto alg = make_algebra(gens);

    Derivation d(alg, +1);
    for (GenId g = 0; g < W.alg->size(); ++g)
        d.set(alg->id(W.alg->gen(g).name), W.d.value(g).promote(alg));
    Element cs3 = cs.cs.promote(alg);
    Element Kp = K.element.promote(alg);
    auto G = [&](const char* n) { return Element::generator(alg, alg->id(n)); };
    d.set(alg->id("b"), G("c") - cs3 + G("h"));
    d.set(alg->id("c"), G("g"));
    d.set(alg->id("h"), Kp - G("g"));
    d.set(alg->id("g"), Element::zero(alg));

    auto cert = is_differential(d);
    if (!cert.ok)
        throw error("modified Weil algebra is inconsistent on generator '" + cert.offender +
                    "' (wrong cs_3?)");
    DGCA A{alg, std::move(d), Provenance::w_tilde_string, {}, {}, nullptr};
    return {std::move(A), std::move(cs3), std::move(Kp)};
}

// All monomials of a fixed degree, optionally filtered.
inline std::vector<Monomial> monomials_of_degree(
    const GradedAlgebra& A, int degree,
    const std::function<bool(const Monomial&)>& keep = nullptr) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(GenId, int)> rec = [&](GenId start, int remaining) {
        if (remaining == 0) {
            if (!keep || keep(cur)) out.push_back(cur);
            return;
        }
        for (GenId g = start; g < A.size(); ++g) {
            int dg = A.gen(g).degree;
            if (dg > remaining) continue;
            if (dg % 2 != 0 && !cur.empty() && cur.back() == g) continue;  // odd square
            cur.push_back(g);
            rec(g, remaining - dg);
            cur.pop_back();
        }
    };
    if (degree >= 0) rec(0, degree);
    return out;
}

// Solve P1 - P2 = d_W(omega) with omega in ker(i*), i.e. omega supported on
// monomials containing at least one shifted generator. Exact linear algebra.
inline std::optional<Element> horizontal_equivalence(const DGCA& W, const Element& P1,
                                                     const Element& P2) {
    Element target = P1 - P2;
    if (target.is_zero()) return Element::zero(W.alg);
    auto deg = target.homogeneous_degree();
    if (!deg) throw error("horizontal_equivalence expects homogeneous polynomials");

    auto has_shifted = [&](const Monomial& m) {
        for (GenId g : m)
            if (W.alg->gen(g).shifted) return true;
        return false;
    };
    auto basis = monomials_of_degree(*W.alg, *deg - 1, has_shifted);
    if (basis.empty()) return std::nullopt;

    // rows: monomials of degree *deg appearing anywhere; columns: basis.
    std::map<Monomial, size_t> row_index;
    std::vector<Element> images;
    for (const auto& m : basis) {
        Element dm = W.d.apply(Element::monomial(W.alg, m));
        for (const auto& [mm, c] : dm.terms()) row_index.emplace(mm, row_index.size());
        images.push_back(std::move(dm));
    }
    for (const auto& [mm, c] : target.terms()) row_index.emplace(mm, row_index.size());

    QMat A = qmat(row_index.size(), basis.size());
    QVec b(row_index.size(), Rat(0));
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [mm, c] : images[j].terms()) A[row_index[mm]][j] = c;
    for (const auto& [mm, c] : target.terms()) b[row_index[mm]] = c;

    auto x = solve(A, b);
    if (!x) return std::nullopt;
    Element omega(W.alg);
    for (size_t j = 0; j < basis.size(); ++j)
        if ((*x)[j] != 0) omega += Element::monomial(W.alg, basis[j], (*x)[j]);
    return omega;
}

}  // namespace hcw

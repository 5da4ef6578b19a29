#include <catch2/catch_amalgamated.hpp>

#include <hcw/derivation.hpp>
#include <hcw/graded.hpp>
#include <hcw/serialize.hpp>

#include "util.hpp"

using namespace hcw;

namespace {

// Independent sign oracle: multiply by concatenating factor lists, then
// bubble-sort into canonical order accumulating (-1)^{pq} per adjacent swap.
int bubble_sign(std::vector<GenId> seq, const GradedAlgebra& A, Monomial& out) {
    int sign = 1;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = 0; j + 1 < seq.size() - i; ++j) {
            if (seq[j] > seq[j + 1]) {
                int p = A.gen(seq[j]).degree, q = A.gen(seq[j + 1]).degree;
                if ((p % 2) && (q % 2)) sign = -sign;
                std::swap(seq[j], seq[j + 1]);
            }
        }
    for (size_t k = 0; k + 1 < seq.size(); ++k)
        if (seq[k] == seq[k + 1] && A.gen(seq[k]).degree % 2) return 0;
    out = seq;
    return sign;
}

AlgebraPtr mixed_algebra() {
    return make_algebra({{"t1", 1}, {"t2", 1}, {"t3", 1}, {"r1", 2}, {"r2", 2}, {"w", 3}});
}

}  // namespace

TEST_CASE("multiply: Koszul signs on generators") {
    auto A = mixed_algebra();
    Element t1 = Element::generator(A, A->id("t1"));
    Element t2 = Element::generator(A, A->id("t2"));
    Element r1 = Element::generator(A, A->id("r1"));

    SECTION("odd transposition") { REQUIRE(t1 * t2 == -(t2 * t1)); }
    SECTION("odd square vanishes") { REQUIRE((t1 * t1).is_zero()); }
    SECTION("even generators commute") { REQUIRE(r1 * t1 == t1 * r1); }
    SECTION("(t1 t2) r1 sorts with sign +1") {
        Element lhs = (t1 * t2) * r1;
        Monomial expect{A->id("t1"), A->id("t2"), A->id("r1")};
        REQUIRE(lhs.terms().size() == 1);
        REQUIRE(lhs.terms().begin()->first == expect);
        REQUIRE(lhs.terms().begin()->second == Rat(1));
    }
}

TEST_CASE("multiply: random products agree with the bubble-sort sign oracle") {
    auto A = mixed_algebra();
    Rng rng(42);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<GenId> seq;
        int n = (int)rng.int_in(0, 5);
        for (int i = 0; i < n; ++i) seq.push_back((GenId)rng.below(A->size()));

        Element prod = Element::one(A);
        for (GenId g : seq) prod = prod * Element::generator(A, g);

        Monomial sorted;
        int sign = bubble_sign(seq, *A, sorted);
        if (sign == 0) {
            REQUIRE(prod.is_zero());
        } else {
            REQUIRE(prod == Element::monomial(A, sorted, Rat(sign)));
        }
    }
}

TEST_CASE("canonicalization is idempotent") {
    auto A = mixed_algebra();
    Rng rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        Element e = random_element(rng, A, 4);
        for (const auto& [m, c] : e.terms()) {
            Monomial again;
            int s = merge_monomials(m, Monomial{}, *A, again);
            REQUIRE(s == 1);
            REQUIRE(again == m);
        }
    }
}

TEST_CASE("sign coherence: associativity and graded commutativity") {
    auto A = mixed_algebra();
    Rng rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        Element a = random_element(rng, A, 3);
        Element b = random_element(rng, A, 3);
        Element c = random_element(rng, A, 3);
        REQUIRE((a * b) * c == a * (b * c));
    }
    // homogeneous commutation
    for (int iter = 0; iter < 200; ++iter) {
        Monomial ma, mb;
        std::vector<GenId> sa, sb;
        for (int i = 0, n = (int)rng.int_in(0, 3); i < n; ++i)
            sa.push_back((GenId)rng.below(A->size()));
        for (int i = 0, n = (int)rng.int_in(0, 3); i < n; ++i)
            sb.push_back((GenId)rng.below(A->size()));
        Element a = Element::one(A), b = Element::one(A);
        for (GenId g : sa) a = a * Element::generator(A, g);
        for (GenId g : sb) b = b * Element::generator(A, g);
        auto da = a.homogeneous_degree(), db = b.homogeneous_degree();
        REQUIRE(da);
        REQUIRE(db);
        int sign = (*da % 2) && (*db % 2) ? -1 : 1;
        REQUIRE(a * b == b * a * Rat(sign));
    }
}

TEST_CASE("apply_derivation: basic identities") {
    auto A = make_algebra({{"x", 1}, {"y", 2}, {"z", 1}});
    Derivation D(A, +1);
    D.set("x", Element::generator(A, A->id("y")));
    D.set("y", Element::zero(A));
    D.set("z", Element::zero(A));

    Element x = Element::generator(A, A->id("x"));
    Element z = Element::generator(A, A->id("z"));

    SECTION("odd square maps to zero") { REQUIRE(D.apply(x * x).is_zero()); }
    SECTION("Leibniz sign for odd factors") {
        Derivation D2(A, +1);
        D2.set("x", Element::generator(A, A->id("y")));
        D2.set("z", Element::generator(A, A->id("y")));
        D2.set("y", Element::zero(A));
        Element got = D2.apply(x * z);
        Element want = D2.apply(x) * z - x * D2.apply(z);
        REQUIRE(got == want);
    }
    SECTION("undefined generator raises") {
        Derivation partial(A, +1);
        partial.set("x", Element::generator(A, A->id("y")));
        REQUIRE_THROWS_AS(partial.apply(x * z), undefined_derivation);
    }
}

TEST_CASE("Leibniz rule holds exactly on random data") {
    auto A = mixed_algebra();
    Rng rng(1234);
    for (int degD : {1, -1, 2}) {
        Derivation D(A, degD);
        for (GenId g = 0; g < A->size(); ++g) {
            // random homogeneous value of the right degree (possibly zero)
            int want = A->gen(g).degree + degD;
            Element v(A);
            for (const auto& m : monomials_of_degree(*A, want))
                if (rng.below(3) == 0) v += Element::monomial(A, m, rat(rng.int_in(-3, 3)));
            D.set(g, v.degree_part(want));
        }
        for (int iter = 0; iter < 60; ++iter) {
            Element a = random_element(rng, A, 3);
            Element b = random_element(rng, A, 3);
            // split a into homogeneous parts to apply the signed rule
            Element lhs = D.apply(a * b);
            Element rhs(A);
            for (int d = 0; d <= 12; ++d) {
                Element ad = a.degree_part(d);
                if (ad.is_zero()) continue;
                int flip = (degD % 2 != 0) && (d % 2 != 0) ? -1 : 1;
                rhs += D.apply(ad) * b + ad * D.apply(b) * Rat(flip);
            }
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("is_differential") {
    SECTION("zero derivation") {
        auto A = mixed_algebra();
        Derivation D(A, +1);
        for (GenId g = 0; g < A->size(); ++g) D.set(g, Element::zero(A));
        REQUIRE(is_differential(D).ok);
    }
    SECTION("constructed failure reports offender and residual") {
        auto A = make_algebra({{"x", 2}, {"y", 3}});
        Derivation D(A, +1);
        D.set("x", Element::generator(A, A->id("y")));
        Element x = Element::generator(A, A->id("x"));
        D.set("y", x * x);
        auto cert = is_differential(D);
        REQUIRE_FALSE(cert.ok);
        REQUIRE(cert.offender == "x");
        REQUIRE(cert.residual == x * x);
    }
}

TEST_CASE("morphisms") {
    auto A = make_algebra({{"x", 1}, {"y", 2}});
    SECTION("identity chain check succeeds for any differential") {
        Derivation d(A, +1);
        d.set("x", Element::generator(A, A->id("y")));
        d.set("y", Element::zero(A));
        auto cert = morphism_chain_check(AlgebraMorphism::identity(A), d, d);
        REQUIRE(cert.ok);
    }
    SECTION("degree mismatch rejected") {
        AlgebraMorphism phi(A, A);
        REQUIRE_THROWS_AS(phi.set("x", Element::generator(A, A->id("y"))), invalid_morphism);
    }
    SECTION("non-chain morphism carries residual") {
        Derivation d(A, +1);
        d.set("x", Element::generator(A, A->id("y")));
        d.set("y", Element::zero(A));
        AlgebraMorphism phi(A, A);
        phi.set("x", Element::generator(A, A->id("x")));
        phi.set("y", Element::zero(A));  // kills d x
        auto cert = morphism_chain_check(phi, d, d);
        REQUIRE_FALSE(cert.ok);
        REQUIRE(cert.offender == "x");
    }
    SECTION("morphism application is multiplicative") {
        Rng rng(5);
        auto B = mixed_algebra();
        AlgebraMorphism phi(B, B);
        for (GenId g = 0; g < B->size(); ++g) {
            Element v(B);
            for (const auto& m : monomials_of_degree(*B, B->gen(g).degree))
                if (rng.below(2) == 0) v += Element::monomial(B, m, rat(rng.int_in(-2, 2)));
            phi.set(g, v);
        }
        for (int iter = 0; iter < 50; ++iter) {
            Element a = random_element(rng, B, 2);
            Element b = random_element(rng, B, 2);
            REQUIRE(phi.apply(a * b) == phi.apply(a) * phi.apply(b));
        }
    }
}

TEST_CASE("element plumbing") {
    auto A = mixed_algebra();
    SECTION("homogeneous degree query") {
        Element t1 = Element::generator(A, A->id("t1"));
        Element r1 = Element::generator(A, A->id("r1"));
        REQUIRE(*(t1 * t1 + Element::zero(A)).homogeneous_degree() == 0);
        REQUIRE(*(t1 * r1).homogeneous_degree() == 3);
        REQUIRE_FALSE((t1 + r1).homogeneous_degree());
    }
    SECTION("incompatible algebras rejected") {
        auto B = make_algebra({{"q", 1}});
        Element a = Element::generator(A, 0);
        Element b = Element::generator(B, 0);
        REQUIRE_THROWS_AS(a * b, incompatible_algebras);
    }
    SECTION("degree-0 generators rejected") {
        REQUIRE_THROWS_AS(make_algebra({{"f", 0}}), error);
    }
    SECTION("serialization is canonical") {
        Element t1 = Element::generator(A, A->id("t1"));
        Element t2 = Element::generator(A, A->id("t2"));
        Element r1 = Element::generator(A, A->id("r1"));
        Element e = t2 * t1 * r1 * rat(3, 2) + r1 * r1;
        REQUIRE(to_string(e) == "-3/2*t1*t2*r1 + r1^2");
    }
}

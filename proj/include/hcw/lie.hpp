#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hcw {

// Finite-dimensional Lie algebra given by structure constants C^a_{bc} on a
// chosen basis: [e_b, e_c] = sum_a C^a_{bc} e_a.
class LiePresentation {
  public:
    LiePresentation(std::vector<std::string> basis, std::vector<Rat> structure)
        : basis_(std::move(basis)), C_(std::move(structure)) {
        n_ = basis_.size();
        if (C_.size() != n_ * n_ * n_) throw error("structure constant table has wrong size");
        validate();
    }

    size_t dim() const { return n_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const Rat& C(size_t a, size_t b, size_t c) const { return C_[(a * n_ + b) * n_ + c]; }

    bool is_abelian() const {
        for (const auto& c : C_)
            if (c != 0) return false;
        return true;
    }

    // K_{ab} = sum_{c,d} C^c_{ad} C^d_{bc}, i.e. tr(ad_a ad_b).
    Rat killing(size_t a, size_t b) const {
        Rat k(0);
        for (size_t c = 0; c < n_; ++c)
            for (size_t d = 0; d < n_; ++d) k += C(c, a, d) * C(d, b, c);
        return k;
    }

    static LiePresentation abelian(size_t n) {
        std::vector<std::string> names;
        for (size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
        return LiePresentation(std::move(names), std::vector<Rat>(n * n * n, Rat(0)));
    }

    // su(2) in the epsilon basis: C^a_{bc} = eps_{abc}.
    static LiePresentation su2() {
        std::vector<Rat> C(27, Rat(0));
        auto at = [&C](int a, int b, int c) -> Rat& { return C[(a * 3 + b) * 3 + c]; };
        int eps[3][3][3] = {};
        eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
        eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) at(a, b, c) = Rat(eps[a][b][c]);
        return LiePresentation({"1", "2", "3"}, std::move(C));
    }

    // so(n) on the basis E_{ab} = e_ab - e_ba for a < b.
    static LiePresentation so(int n);

  private:
    void validate() const {
        for (size_t a = 0; a < n_; ++a)
            for (size_t b = 0; b < n_; ++b)
                for (size_t c = 0; c < n_; ++c)
                    if (C(a, b, c) != -C(a, c, b))
                        throw invalid_presentation("antisymmetry fails at C^" + basis_[a] +
                                                   "_{" + basis_[b] + "," + basis_[c] + "}");
        for (size_t a = 0; a < n_; ++a)
            for (size_t b = 0; b < n_; ++b)
                for (size_t c = 0; c < n_; ++c)
                    for (size_t d = 0; d < n_; ++d) {
                        Rat s(0);
                        for (size_t e = 0; e < n_; ++e)
                            s += C(e, b, c) * C(a, e, d) + C(e, c, d) * C(a, e, b) +
                                 C(e, d, b) * C(a, e, c);
                        if (s != 0)
                            throw invalid_presentation(
                                "Jacobi identity fails at (" + basis_[a] + "," + basis_[b] +
                                "," + basis_[c] + "," + basis_[d] + ")");
                    }
    }

    size_t n_ = 0;
    std::vector<std::string> basis_;
    std::vector<Rat> C_;  // C[(a*n+b)*n+c] = C^a_{bc}
};

// Matrix representation with exact complex-rational entries.
struct LieRep {
    size_t matdim = 0;
    std::vector<std::vector<CRat>> mats;  // one matdim x matdim matrix per basis element

    const CRat& at(size_t a, size_t i, size_t j) const { return mats[a][i * matdim + j]; }
};

namespace detail {
inline std::vector<CRat> cmat_mul(const std::vector<CRat>& A, const std::vector<CRat>& B,
                                  size_t n) {
    std::vector<CRat> R(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            const CRat& a = A[i * n + k];
            if (a.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) R[i * n + j] = R[i * n + j] + a * B[k * n + j];
        }
    return R;
}
inline CRat cmat_trace(const std::vector<CRat>& A, size_t n) {
    CRat t;
    for (size_t i = 0; i < n; ++i) t = t + A[i * n + i];
    return t;
}
}  // namespace detail

// Checks [rep_b, rep_c] = sum_a C^a_{bc} rep_a exactly; names the failing pair.
inline void check_representation(const LiePresentation& L, const LieRep& rep) {
    size_t n = L.dim(), m = rep.matdim;
    if (rep.mats.size() != n) throw error("representation has wrong number of matrices");
    for (size_t b = 0; b < n; ++b)
        for (size_t c = 0; c < n; ++c) {
            auto lhs = detail::cmat_mul(rep.mats[b], rep.mats[c], m);
            auto rhs = detail::cmat_mul(rep.mats[c], rep.mats[b], m);
            for (size_t i = 0; i < m * m; ++i) {
                CRat want = lhs[i] - rhs[i];
                CRat got;
                for (size_t a = 0; a < n; ++a)
                    got = got + CRat(L.C(a, b, c)) * rep.mats[a][i];
                if (!(want == got))
                    throw error("not a representation: bracket fails on pair (" +
                                L.basis()[b] + "," + L.basis()[c] + ")");
            }
        }
}

inline LiePresentation LiePresentation::so(int n) {
    struct Pair {
        int a, b;
    };
    std::vector<Pair> idx;
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            idx.push_back({a, b});
            names.push_back(std::to_string(a + 1) + std::to_string(b + 1));
        }
    size_t N = idx.size();
    std::vector<Rat> C(N * N * N, Rat(0));
    // coefficient of E_{uv} (u<v, sign-adjusted) accumulated into C^k_{i,j}
    auto add = [&](size_t i, size_t j, int u, int v, long coef) {
        if (u == v || coef == 0) return;
        long s = 1;
        if (u > v) {
            std::swap(u, v);
            s = -1;
        }
        for (size_t k = 0; k < N; ++k)
            if (idx[k].a == u && idx[k].b == v) {
                C[(k * N + i) * N + j] += Rat(coef * s);
                return;
            }
    };
    // [E_ab, E_cd] = d_bc E_ad - d_ac E_bd - d_bd E_ac + d_ad E_bc
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            int a = idx[i].a, b = idx[i].b, c = idx[j].a, d = idx[j].b;
            if (b == c) add(i, j, a, d, 1);
            if (a == c) add(i, j, b, d, -1);
            if (b == d) add(i, j, a, c, -1);
            if (a == d) add(i, j, b, c, 1);
        }
    return LiePresentation(std::move(names), std::move(C));
}

// Defining (vector) representation of so(n): (E_ab)_{ij} = d_ai d_bj - d_bi d_aj.
inline LieRep so_vector_rep(int n) {
    LieRep rep;
    rep.matdim = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<CRat> M(n * n);
            M[a * n + b] = CRat(Rat(1));
            M[b * n + a] = CRat(Rat(-1));
            rep.mats.push_back(std::move(M));
        }
    return rep;
}

// Fundamental representation of su(2) in the epsilon basis: e_a = -(i/2) sigma_a.
inline LieRep su2_fundamental_rep() {
    LieRep rep;
    rep.matdim = 2;
    Rat h(1, 2);
    std::vector<CRat> e1(4), e2(4), e3(4);
    e1[1] = CRat(Rat(0), -h);
    e1[2] = CRat(Rat(0), -h);
    e2[1] = CRat(-h);
    e2[2] = CRat(h);
    e3[0] = CRat(Rat(0), -h);
    e3[3] = CRat(Rat(0), h);
    rep.mats = {e1, e2, e3};
    return rep;
}

}  // namespace hcw

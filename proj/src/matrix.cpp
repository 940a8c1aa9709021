/*
   Copyright 2026 The nodalres Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nodal/matrix.hpp"

namespace nodal {

namespace {

// Z[a] = Z[x]/(m) for monic integer m, elements as k integer coefficients.
class IntegralRing {
public:
    explicit IntegralRing(const FieldPtr& field) : k_(field ? field->degree() : 1) {
        if (field) high_ = field->high_powers();
    }

    int degree() const { return k_; }

    bool is_zero(const std::vector<Integer>& a) const {
        for (const auto& c : a)
            if (sgn(c) != 0) return false;
        return true;
    }

    void mul(const std::vector<Integer>& a, const std::vector<Integer>& b, std::vector<Integer>& out) const {
        if (k_ == 1) {
            out[0] = a[0] * b[0];
            return;
        }
        prod_.assign(2 * k_ - 1, Integer(0));
        for (int i = 0; i < k_; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (int j = 0; j < k_; ++j)
                if (sgn(b[j]) != 0) prod_[i + j] += a[i] * b[j];
        }
        for (int i = 0; i < k_; ++i) out[i] = prod_[i];
        for (int i = 0; i + 1 < k_; ++i) {
            const Integer& c = prod_[k_ + i];
            if (sgn(c) == 0) continue;
            for (int j = 0; j < k_; ++j) out[j] += c * high_[i][j];
        }
    }

    // Prepares exact division by b: a / b = adj(M_b) a / det(M_b).
    void set_divisor(const std::vector<Integer>& b) {
        if (k_ == 1) {
            det_ = b[0];
            return;
        }
        // Multiplication matrix: column j is b * a^j.
        std::vector<std::vector<Integer>> mb(k_, std::vector<Integer>(k_));
        std::vector<Integer> basis(k_), col(k_);
        for (int j = 0; j < k_; ++j) {
            std::fill(basis.begin(), basis.end(), Integer(0));
            basis[j] = 1;
            mul(b, basis, col);
            for (int i = 0; i < k_; ++i) mb[i][j] = col[i];
        }
        det_ = det(mb);
        adj_.assign(k_, std::vector<Integer>(k_));
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) {
                // adj[i][j] = (-1)^(i+j) minor(j, i)
                std::vector<std::vector<Integer>> minor;
                for (int r = 0; r < k_; ++r) {
                    if (r == j) continue;
                    std::vector<Integer> row;
                    for (int c = 0; c < k_; ++c)
                        if (c != i) row.push_back(mb[r][c]);
                    minor.push_back(std::move(row));
                }
                adj_[i][j] = det(minor);
                if ((i + j) % 2) adj_[i][j] = -adj_[i][j];
            }
    }

    void divexact(std::vector<Integer>& a) const {
        if (k_ == 1) {
            mpz_divexact(a[0].get_mpz_t(), a[0].get_mpz_t(), det_.get_mpz_t());
            return;
        }
        tmp_.assign(k_, Integer(0));
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                if (sgn(a[j]) != 0) tmp_[i] += adj_[i][j] * a[j];
        for (int i = 0; i < k_; ++i) mpz_divexact(a[i].get_mpz_t(), tmp_[i].get_mpz_t(), det_.get_mpz_t());
    }

private:
    int k_;
    std::vector<std::vector<Integer>> high_;
    Integer det_ = 1;
    std::vector<std::vector<Integer>> adj_;
    mutable std::vector<Integer> prod_, tmp_;

    static Integer det(std::vector<std::vector<Integer>> a) {
        // Bareiss on a small integer matrix.
        const std::size_t n = a.size();
        if (n == 0) return 1;
        Integer prev = 1;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && sgn(a[p][c]) == 0) ++p;
            if (p == n) return 0;
            if (p != c) {
                std::swap(a[p], a[c]);
                sign = -sign;
            }
            for (std::size_t i = c + 1; i < n; ++i) {
                for (std::size_t j = c + 1; j < n; ++j) {
                    Integer v = a[c][c] * a[i][j] - a[i][c] * a[c][j];
                    mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                }
                a[i][c] = 0;
            }
            prev = a[c][c];
        }
        return sign * a[n - 1][n - 1];
    }
};

// Rank of an integral matrix over Z[a] by fraction-free elimination with
// column skipping. Every intermediate entry is a minor of the input, so the
// division by the previous pivot is exact in Z[a].
std::size_t bareiss_rank(std::vector<std::vector<std::vector<Integer>>> a, std::size_t cols, IntegralRing& ring) {
    const std::size_t rows = a.size();
    const int k = ring.degree();
    std::vector<Integer> prev(k, Integer(0)), t1(k), t2(k);
    prev[0] = 1;
    ring.set_divisor(prev);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && ring.is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const auto& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const bool lead_zero = ring.is_zero(a[i][c]);
            for (std::size_t j = c + 1; j < cols; ++j) {
                ring.mul(piv, a[i][j], t1);
                if (!lead_zero && !ring.is_zero(a[r][j])) {
                    ring.mul(a[i][c], a[r][j], t2);
                    for (int q = 0; q < k; ++q) t1[q] -= t2[q];
                }
                ring.divexact(t1);
                std::swap(a[i][j], t1);
            }
            for (auto& v : a[i][c]) v = 0;
        }
        prev = a[r][c];
        ring.set_divisor(prev);
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const Matrix<Rational>& m) {
    std::vector<std::vector<std::vector<Integer>>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        a[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = {m(i, j).get_num() * (l / m(i, j).get_den())};
    }
    IntegralRing ring(nullptr);
    return bareiss_rank(std::move(a), m.cols(), ring);
}

std::size_t rank(const Matrix<FieldElement>& m) {
    FieldPtr field;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) field = common_field(field, m(i, j).field());
    const int k = field ? field->degree() : 1;
    std::vector<std::vector<std::vector<Integer>>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer dl = m(i, j).denominator_lcm();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dl.get_mpz_t());
        }
        a[i].assign(m.cols(), std::vector<Integer>(k, Integer(0)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& cs = m(i, j).coeffs();
            for (std::size_t q = 0; q < cs.size(); ++q) a[i][j][q] = cs[q].get_num() * (l / cs[q].get_den());
        }
    }
    IntegralRing ring(field);
    return bareiss_rank(std::move(a), m.cols(), ring);
}

std::size_t rank(const Matrix<FfElement>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    FiniteFieldPtr f;
    for (std::size_t i = 0; i < m.rows() && !f; ++i)
        for (std::size_t j = 0; j < m.cols() && !f; ++j) f = m(i, j).field();
    if (!f) return 0;
    return rank_gauss(m);
}

Matrix<FfElement> reduce_matrix(const Matrix<FieldElement>& m, const FiniteFieldPtr& target) {
    Matrix<FfElement> out(m.rows(), m.cols(), FfElement(target, {}));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce_element(m(i, j), target);
    return out;
}

}  // namespace nodal

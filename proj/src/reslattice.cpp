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

#include "nodal/reslattice.hpp"

#include "nodal/lp.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace nodal {

IntersectionMatrix make_intersection_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t s,
                                            std::vector<std::string> labels) {
    IntersectionMatrix m;
    m.rows = Matrix<Rational>(rows.size(), s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != s)
            throw ValidationError("intersection matrix row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " + std::to_string(s));
        for (std::size_t j = 0; j < s; ++j) m.rows(i, j) = rows[i][j];
    }
    if (!labels.empty() && labels.size() != s) throw ValidationError("label count does not match column count");
    m.labels = std::move(labels);
    return m;
}

namespace {
std::vector<std::vector<Rational>> echelon_rows(const std::vector<std::vector<Rational>>& vs, std::size_t s) {
    if (vs.empty()) return {};
    Matrix<Rational> m(vs.size(), s);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < s; ++j) m(i, j) = vs[i][j];
    const auto e = rref(m);
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(e.reduced.row_vector(i));
    return out;
}

std::vector<std::vector<Rational>> complement(const std::vector<std::vector<Rational>>& vs, std::size_t s) {
    Matrix<Rational> m(vs.size(), s);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != s) throw ValidationError("vector length does not match s = " + std::to_string(s));
        for (std::size_t j = 0; j < s; ++j) m(i, j) = vs[i][j];
    }
    return echelon_rows(nullspace(m, Rational(0), Rational(1)), s);
}

template <class S>
S convert(const Rational& q);
template <>
Rational convert<Rational>(const Rational& q) {
    return q;
}
template <>
SmallRational convert<SmallRational>(const Rational& q) {
    return SmallRational::from(q);
}
Rational back(const Rational& q) { return q; }
Rational back(const SmallRational& q) { return q.to_rational(); }

// lambda = lp - lm, t slack: M^T lp - M^T lm - t = 1.
template <class S>
std::optional<ProjectivityResult> primal_impl(const IntersectionMatrix& im) {
    const std::size_t k = im.k(), s = im.s();
    std::vector<std::vector<S>> a(s, std::vector<S>(2 * k + s));
    std::vector<S> b(s, S(1));
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            const S v = convert<S>(im.rows(i, j));
            a[j][i] = v;
            a[j][k + i] = S(0) - v;
        }
        a[j][2 * k + j] = S(-1);
    }
    auto x = simplex_feasible(a, b);
    if (!x) return std::nullopt;
    ProjectivityResult r;
    r.projective = true;
    r.lambda.resize(k);
    for (std::size_t i = 0; i < k; ++i) r.lambda[i] = back((*x)[i]) - back((*x)[k + i]);
    r.certificate.assign(s, Rational(0));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < k; ++i) r.certificate[j] += r.lambda[i] * im.rows(i, j);
    return r;
}

// [M; 1^T] y = (0, ..., 0, 1), y >= 0.
template <class S>
std::optional<ProjectivityResult> dual_impl(const IntersectionMatrix& im) {
    const std::size_t k = im.k(), s = im.s();
    std::vector<std::vector<S>> a(k + 1, std::vector<S>(s));
    std::vector<S> b(k + 1, S(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < s; ++j) a[i][j] = convert<S>(im.rows(i, j));
    for (std::size_t j = 0; j < s; ++j) a[k][j] = S(1);
    b[k] = S(1);
    auto y = simplex_feasible(a, b);
    if (!y) return std::nullopt;
    ProjectivityResult r;
    r.projective = false;
    for (const auto& v : *y) r.certificate.push_back(back(v));
    return r;
}

template <class F>
auto with_fallback(F&& f) {
    try {
        return f(SmallRational());
    } catch (const LpOverflow&) {
        return f(Rational());
    }
}
}  // namespace

std::vector<std::vector<Rational>> relations(const IntersectionMatrix& m) {
    return echelon_rows(nullspace(m.rows, Rational(0), Rational(1)), m.s());
}

IntersectionMatrix build_lattice_from_relations(const std::vector<std::vector<Rational>>& rels, std::size_t s,
                                                std::vector<std::string> labels) {
    return make_intersection_matrix(complement(rels, s), s, std::move(labels));
}

IntersectionMatrix flip(const IntersectionMatrix& m, const std::vector<int>& eps) {
    if (eps.size() != m.s())
        throw ValidationError("sign vector has length " + std::to_string(eps.size()) + ", expected " +
                              std::to_string(m.s()));
    IntersectionMatrix r = m;
    for (std::size_t j = 0; j < m.s(); ++j) {
        if (eps[j] != 1 && eps[j] != -1) throw ValidationError("sign vector entries must be +1 or -1");
        if (eps[j] < 0)
            for (std::size_t i = 0; i < m.k(); ++i) r.rows(i, j) = -r.rows(i, j);
    }
    return r;
}

std::vector<std::size_t> nullhomologous_columns(const IntersectionMatrix& m) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m.s(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m.k() && zero; ++i) zero = is_zero(m.rows(i, j));
        if (zero) out.push_back(j);
    }
    return out;
}

std::optional<ProjectivityResult> primal_oracle(const IntersectionMatrix& m) {
    return with_fallback([&](auto tag) { return primal_impl<decltype(tag)>(m); });
}

std::optional<ProjectivityResult> dual_oracle(const IntersectionMatrix& m) {
    return with_fallback([&](auto tag) { return dual_impl<decltype(tag)>(m); });
}

ProjectivityResult is_projective(const IntersectionMatrix& m) {
    auto p = primal_oracle(m);
    auto d = dual_oracle(m);
    if (p && d) throw Error("duality violation: both a positive divisor and a nonnegative relation exist");
    if (!p && !d) throw Error("duality violation: neither a positive divisor nor a nonnegative relation exists");
    return p ? *p : *d;
}

CountReport count_projective(const IntersectionMatrix& m, const CountOptions& opt) {
    const std::size_t s = m.s();
    if (s == 0) throw ValidationError("count_projective needs at least one column");
    if (s > opt.cap)
        throw ValidationError("s = " + std::to_string(s) + " exceeds the flip cap " + std::to_string(opt.cap) +
                              "; raise it with --cap");
    if (s > 62) throw ValidationError("s too large for enumeration");
    CountReport rep;
    rep.s = s;
    rep.dim_a = rank(m.rows);
    rep.total = Integer(1) << s;
    rep.nullhomologous = nullhomologous_columns(m);

    const std::uint64_t half = std::uint64_t(1) << (s - 1);
    const unsigned workers = std::max(1u, opt.workers);
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::vector<std::pair<std::uint64_t, std::vector<Rational>>>> found(workers);
    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mu;
    std::exception_ptr failure;
    std::mutex failure_mu;

    // Flip index f encodes eps[j] = -1 for bit (j - 1) of f, j >= 1; eps[0] = +1.
    auto eps_of = [s](std::uint64_t f) {
        std::vector<int> eps(s, 1);
        for (std::size_t j = 1; j < s; ++j)
            if ((f >> (j - 1)) & 1) eps[j] = -1;
        return eps;
    };
    auto work = [&](unsigned w) {
        try {
            for (std::uint64_t f = w; f < half; f += workers) {
                const ProjectivityResult r = is_projective(flip(m, eps_of(f)));
                if (r.projective) {
                    ++counts[w];
                    if (opt.witnesses) found[w].emplace_back(f, r.certificate);
                }
                const std::uint64_t n = ++done;
                if (opt.progress && (n % 4096 == 0 || n == half)) {
                    std::lock_guard<std::mutex> lock(progress_mu);
                    opt.progress(n, half);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mu);
            if (!failure) failure = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    rep.projective_count = Integer(static_cast<unsigned long>(total)) * 2;
    if (opt.witnesses) {
        std::vector<std::pair<std::uint64_t, std::vector<Rational>>> all;
        for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [f, v] : all) {
            auto eps = eps_of(f);
            std::vector<int> neg_eps(eps.size());
            for (std::size_t j = 0; j < eps.size(); ++j) neg_eps[j] = -eps[j];
            // flip(M, -eps) = -flip(M, eps) has the same rowspace, so v serves both.
            rep.witnesses.push_back({std::move(eps), v});
            rep.witnesses.push_back({std::move(neg_eps), std::move(v)});
        }
    }
    return rep;
}

}  // namespace nodal

#include "pmaya/tau.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pmaya/hermite.hpp"

namespace pmaya {

TauFunction tau_standard(const MayaDiagram& m) {
    if (!m.is_standard()) throw std::invalid_argument("tau_standard: diagram not in standard form");
    std::vector<Poly> rows;
    for (long t : m.plus()) rows.push_back(hermite(t));  // ascending: H_{t_q}, ..., H_{t_1}
    TauFunction tf;
    tf.diagram = m;
    tf.poly = wronskian(rows);
    tf.translation = 0;
    if (tf.poly.degree() != tau_expected_degree(m))
        throw std::logic_error("tau_standard: degree law violated");
    return tf;
}

long tau_expected_degree(const MayaDiagram& standard) {
    if (!standard.is_standard())
        throw std::invalid_argument("tau_expected_degree: diagram not in standard form");
    long q = 0, sum = 0;
    for (long t : standard.plus()) {
        sum += t;
        ++q;
    }
    return sum - q * (q - 1) / 2;
}

Poly pseudo_wronskian(std::vector<long> s, std::vector<long> t) {
    for (long v : s)
        if (v < 0) throw std::invalid_argument("pseudo_wronskian: negative index");
    for (long v : t)
        if (v < 0) throw std::invalid_argument("pseudo_wronskian: negative index");
    std::sort(s.begin(), s.end(), std::greater<long>());
    std::sort(t.begin(), t.end(), std::greater<long>());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() ||
        std::adjacent_find(t.begin(), t.end()) != t.end())
        throw std::invalid_argument("pseudo_wronskian: repeated index");

    const long r = static_cast<long>(s.size()), q = static_cast<long>(t.size());
    const long n = r + q;
    if (n == 0) return Poly(Scalar(1));
    std::vector<std::vector<Poly>> mat(n, std::vector<Poly>(n));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < n; ++j) mat[i][j] = conjugate_hermite(s[i] + j);
    for (long i = 0; i < q; ++i) {
        // rows H_{t_q}, ..., H_{t_1}: ascending t values
        const Poly& h = hermite(t[q - 1 - i]);
        mat[r + i][0] = h;
        for (long j = 1; j < n; ++j) mat[r + i][j] = mat[r + i][j - 1].derivative();
    }
    return bareiss_determinant(std::move(mat));
}

Poly tau_normalized(const MayaDiagram& m) {
    std::vector<long> s = m.minus(), t = m.plus();
    const long r = static_cast<long>(s.size()), q = static_cast<long>(t.size());
    Poly pw = pseudo_wronskian(s, t);
    // s, t ascending here; the normalization constant is over descending
    // lists: prod_{i<j} (2s_j - 2s_i) with s_1 > ... > s_r, i.e. every pair
    // contributes 2*(smaller - larger).
    mpq_class denom(1);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) denom *= 2 * (s[i] - s[j]);
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) denom *= 2 * (t[j] - t[i]);
    if ((r * q) % 2) denom = -denom;
    return Scalar(mpq_class(1) / denom) * pw;
}

TauFunction tau_of_diagram(const MayaDiagram& m) {
    long to_standard = 0;
    MayaDiagram std_form = m.standardized(&to_standard);

    static std::mutex mu;
    static std::map<std::vector<long>, std::pair<Poly, long>> cache;  // key: standard plus set
    std::vector<long> key = std_form.plus();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            TauFunction tf;
            tf.diagram = m;
            tf.poly = it->second.first;
            tf.translation = it->second.second + to_standard;
            return tf;
        }
    }

    // Pick the translate with the fewest defects: the determinant size is
    // r + q, and a Wronskian of Hermite polynomials (the standard form) is
    // usually far from the smallest representative.
    long best_c = 0, best = std_form.defect_count();
    long lo = std_form.lo(), hi = std_form.hi();
    for (long c = -hi - 1; c <= -lo + 1; ++c) {
        long d = std_form.shifted(c).defect_count();
        if (d < best) {
            best = d;
            best_c = c;
        }
    }
    MayaDiagram small = std_form.shifted(best_c);
    Poly poly = tau_normalized(small);  // translation invariant

    {
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(std::move(key), std::make_pair(poly, best_c));
    }
    TauFunction tf;
    tf.diagram = m;
    tf.poly = std::move(poly);
    tf.translation = best_c + to_standard;
    return tf;
}

MayaDiagram diagram_of_partition(const std::vector<long>& lambda) {
    const long q = static_cast<long>(lambda.size());
    std::vector<long> t;
    for (long i = 1; i <= q; ++i) {
        if (lambda[i - 1] < 1) throw std::invalid_argument("partition entries must be positive");
        if (i > 1 && lambda[i - 1] > lambda[i - 2])
            throw std::invalid_argument("partition entries must be non-increasing");
        t.push_back(lambda[i - 1] + q - i);
    }
    return MayaDiagram::from_frobenius({}, t);
}

std::vector<long> partition_of_diagram(const MayaDiagram& standard) {
    if (!standard.is_standard())
        throw std::invalid_argument("partition_of_diagram: diagram not in standard form");
    std::vector<long> t = standard.plus();  // ascending: t_q, ..., t_1
    std::reverse(t.begin(), t.end());
    const long q = static_cast<long>(t.size());
    std::vector<long> lambda;
    for (long i = 1; i <= q; ++i) lambda.push_back(t[i - 1] - q + i);
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

namespace {
void gen_partitions(long n, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<long>> partitions_up_to(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    for (long m = 0; m <= n; ++m) gen_partitions(m, m > 0 ? m : 1, cur, out);
    return out;
}

Poly schur_tau(const std::vector<long>& lambda) {
    const long n = static_cast<long>(lambda.size());
    if (n == 0) return Poly(Scalar(1));
    for (long i = 1; i < n; ++i)
        if (lambda[i] > lambda[i - 1] || lambda[i] < 1)
            throw std::invalid_argument("schur_tau: not a partition");
    std::vector<std::vector<Poly>> mat(n, std::vector<Poly>(n));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            // entry (i, j) is B_{lambda_i + j - i} with 1-based i, j
            long d = lambda[i] + j - i;
            if (d < 0) {
                mat[i][j] = Poly();
            } else {
                mpz_class fact;
                mpz_fac_ui(fact.get_mpz_t(), d);
                mat[i][j] = Scalar(mpq_class(1) / mpq_class(fact)) * hermite(d);
            }
        }
    }
    Poly det = bareiss_determinant(std::move(mat));
    mpz_class c = 1;
    mpz_class two = 2;
    mpz_pow_ui(c.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(n * (n - 1) / 2));
    for (long i = 1; i <= n; ++i) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), lambda[i - 1] + n - i);
        c *= fact;
    }
    return Scalar(mpq_class(c)) * det;
}

bool proportional(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.degree() != q.degree()) return false;
    return q.leading() * p == p.leading() * q;
}

}  // namespace pmaya

#include "pmaya/maya.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pmaya {

MayaDiagram MayaDiagram::from_frobenius(const std::vector<long>& s, const std::vector<long>& t) {
    MayaDiagram d;
    for (long v : s) {
        if (v < 0) throw std::invalid_argument("from_frobenius: negative index");
        if (!d.minus_.insert(v).second) throw std::invalid_argument("from_frobenius: repeated index");
    }
    for (long v : t) {
        if (v < 0) throw std::invalid_argument("from_frobenius: negative index");
        if (!d.plus_.insert(v).second) throw std::invalid_argument("from_frobenius: repeated index");
    }
    return d;
}

bool MayaDiagram::contains(long m) const {
    if (m >= 0) return plus_.count(m) > 0;
    return minus_.count(-m - 1) == 0;
}

long MayaDiagram::index() const {
    return static_cast<long>(plus_.size()) - static_cast<long>(minus_.size());
}

long MayaDiagram::lo() const { return minus_.empty() ? 0 : -(*minus_.rbegin()) - 1; }

long MayaDiagram::hi() const { return plus_.empty() ? 0 : *plus_.rbegin() + 1; }

MayaDiagram MayaDiagram::shifted(long k) const {
    long a = std::min(lo() + k, 0L), b = std::max(hi() + k, 0L);
    return from_membership(a, b, [&](long m) { return contains(m - k); });
}

std::pair<MayaDiagram, int> MayaDiagram::flip(long m) const {
    MayaDiagram d(*this);
    int sigma;
    if (m >= 0) {
        if (d.plus_.erase(m)) {
            sigma = +1;
        } else {
            d.plus_.insert(m);
            sigma = -1;
        }
    } else {
        long h = -m - 1;
        if (d.minus_.erase(h)) {
            sigma = -1;  // hole removed: m becomes a member, so m was absent
        } else {
            d.minus_.insert(h);
            sigma = +1;
        }
    }
    return {d, sigma};
}

MayaDiagram MayaDiagram::standardized(long* shift_out) const {
    MayaDiagram d(*this);
    long c = 0;
    if (!d.minus_.empty()) {
        long s = *d.minus_.rbegin() + 1;
        d = d.shifted(s);
        c += s;
    }
    while (d.contains(0)) {
        d = d.shifted(-1);
        --c;
    }
    if (shift_out) *shift_out = c;
    return d;
}

std::vector<long> upsilon(const MayaDiagram& a, const MayaDiagram& b) {
    long lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<long> out;
    for (long m = lo; m < hi; ++m)
        if (a.contains(m) != b.contains(m)) out.push_back(m);
    return out;
}

std::vector<long> MayaDiagram::block_coordinates() const { return upsilon(*this, shifted(1)); }

MayaDiagram MayaDiagram::from_blocks(const std::vector<long>& b, bool allow_degenerate) {
    if (b.empty() || b.size() % 2 == 0)
        throw std::invalid_argument("from_blocks: block coordinates must have odd length");
    for (size_t i = 1; i < b.size(); ++i) {
        if (b[i] < b[i - 1] || (!allow_degenerate && b[i] == b[i - 1]))
            throw std::invalid_argument("from_blocks: coordinates must be increasing");
    }
    auto member = [&](long m) {
        if (m < b[0]) return true;
        for (size_t i = 1; i + 1 < b.size(); i += 2)
            if (b[i] <= m && m < b[i + 1]) return true;
        return false;
    };
    long lo = std::min(b.front(), 0L), hi = std::max(b.back(), 0L);
    return from_membership(lo, hi, member);
}

MayaDiagram interlace(const std::vector<MayaDiagram>& ms) {
    const long k = static_cast<long>(ms.size());
    if (k < 1) throw std::invalid_argument("interlace: need at least one diagram");
    long L = 0, H = 0;
    for (const auto& m : ms) {
        L = std::min(L, m.lo());
        H = std::max(H, m.hi());
    }
    auto member = [&](long m) {
        long i = ((m % k) + k) % k;
        long q = (m - i) / k;
        return ms[i].contains(q);
    };
    return MayaDiagram::from_membership(std::min(k * L - k, 0L), std::max(k * H + k, 0L), member);
}

std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, long k) {
    if (k < 1) throw std::invalid_argument("modular_decompose: k must be positive");
    std::vector<MayaDiagram> out;
    long qlo = std::min(m.lo() / k - 1, 0L), qhi = std::max(m.hi() / k + 1, 0L);
    for (long i = 0; i < k; ++i) {
        out.push_back(MayaDiagram::from_membership(qlo, qhi, [&](long q) { return m.contains(k * q + i); }));
    }
    return out;
}

std::vector<long> cyclic_signature(const MayaDiagram& m, long k) {
    std::vector<long> sig;
    for (const auto& comp : modular_decompose(m, k)) sig.push_back(2 * comp.genus() + 1);
    return sig;
}

std::vector<long> admissible_shifts(long p) {
    if (p < 1) throw std::invalid_argument("admissible_shifts: p must be positive");
    std::vector<long> out;
    for (long k = p; k >= 1; k -= 2) out.push_back(k);
    return out;
}

long KBlockCoordinates::p() const {
    long s = 0;
    for (const auto& b : blocks) s += static_cast<long>(b.size());
    return s;
}

std::vector<long> KBlockCoordinates::signature() const {
    std::vector<long> sig;
    for (const auto& b : blocks) sig.push_back(static_cast<long>(b.size()));
    return sig;
}

void KBlockCoordinates::validate() const {
    if (k < 1) throw std::invalid_argument("k-block coordinates: k must be positive");
    if (static_cast<long>(blocks.size()) != k)
        throw std::invalid_argument("k-block coordinates: need exactly k blocks");
    for (const auto& b : blocks) {
        if (b.empty() || b.size() % 2 == 0)
            throw std::invalid_argument("k-block coordinates: blocks must have odd length");
        for (size_t i = 1; i < b.size(); ++i)
            if (b[i] < b[i - 1])
                throw std::invalid_argument("k-block coordinates: blocks must be non-decreasing");
    }
}

std::string KBlockCoordinates::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << "|";
        for (size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) os << ",";
            os << blocks[i][j];
        }
    }
    return os.str();
}

MayaDiagram diagram_of(const KBlockCoordinates& kb) {
    kb.validate();
    std::vector<MayaDiagram> comps;
    for (const auto& b : kb.blocks) comps.push_back(MayaDiagram::from_blocks(b, true));
    return interlace(comps);
}

FlipSequence canonical_flip_sequence(const KBlockCoordinates& kb) {
    kb.validate();
    FlipSequence f;
    f.shift = kb.k;
    for (long i = 0; i < kb.k; ++i)
        for (long b : kb.blocks[i]) f.mus.push_back(kb.k * b + i);
    return f;
}

namespace {

void odd_compositions(long p, long parts, std::vector<long>& cur,
                      std::vector<std::vector<long>>& out) {
    if (parts == 1) {
        if (p >= 1 && p % 2 == 1) {
            cur.push_back(p);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (long v = 1; v <= p - (parts - 1); v += 2) {
        cur.push_back(v);
        odd_compositions(p - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

void gen_blocks(long len, long next_min, long max_coord, bool strict, std::vector<long>& cur,
                std::vector<std::vector<long>>& out) {
    if (len == 0) {
        out.push_back(cur);
        return;
    }
    for (long v = next_min; v <= max_coord; ++v) {
        cur.push_back(v);
        gen_blocks(len - 1, strict ? v + 1 : v, max_coord, strict, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<KBlockCoordinates> enumerate_cyclic(long p, long k, long max_coord,
                                                bool include_degenerate) {
    if (p < 1 || k < 1) throw std::invalid_argument("enumerate_cyclic: p and k must be positive");
    if (k > p || (p - k) % 2 != 0)
        throw std::invalid_argument("enumerate_cyclic: shift k must be in {p, p-2, ...}");
    std::vector<std::vector<long>> sigs;
    std::vector<long> cur;
    odd_compositions(p, k, cur, sigs);

    std::vector<KBlockCoordinates> out;
    const bool strict = !include_degenerate;
    for (const auto& sig : sigs) {
        // candidate blocks per residue class
        std::vector<std::vector<std::vector<long>>> choices(k);
        for (long i = 0; i < k; ++i) {
            std::vector<long> pre;
            if (i == 0) {
                pre.push_back(0);  // translation normalization
                gen_blocks(sig[0] - 1, strict ? 1 : 0, max_coord, strict, pre, choices[0]);
            } else {
                gen_blocks(sig[i], 0, max_coord, strict, pre, choices[i]);
            }
        }
        // cartesian product
        std::vector<size_t> idx(k, 0);
        bool any = true;
        for (long i = 0; i < k; ++i)
            if (choices[i].empty()) any = false;
        while (any) {
            KBlockCoordinates kb;
            kb.k = k;
            for (long i = 0; i < k; ++i) kb.blocks.push_back(choices[i][idx[i]]);
            out.push_back(std::move(kb));
            long pos = k - 1;
            while (pos >= 0) {
                if (++idx[pos] < choices[pos].size()) break;
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

std::string render(const MayaDiagram& m) {
    long a = std::min(m.lo(), 0L) - 2, b = std::max(m.hi(), 0L) + 2;
    std::ostringstream os;
    os << "… ";
    for (long i = a; i < b; ++i) {
        if (i == 0) os << "┃ ";
        os << (m.contains(i) ? "■" : "□") << " ";
    }
    os << "…";
    return os.str();
}

}  // namespace pmaya

#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pmaya {

// A Maya diagram M is a set of integers containing all sufficiently negative
// integers and no sufficiently positive ones. It is stored through its
// Frobenius symbol relative to the origin:
//   minus = { -m-1 : m < 0, m not in M }   (negative defects: holes)
//   plus  = { m >= 0 : m in M }            (positive defects: particles)
// Both sets are finite subsets of the non-negative integers.
class MayaDiagram {
public:
    MayaDiagram() = default;  // the vacuum (-inf, 0)

    static MayaDiagram vacuum() { return MayaDiagram(); }
    // Frobenius data; repeated entries within a list are rejected.
    static MayaDiagram from_frobenius(const std::vector<long>& s, const std::vector<long>& t);
    // Block coordinates (b_0, ..., b_{2g}): strictly increasing required
    // unless allow_degenerate, in which case non-decreasing (empty segments
    // collapse away).
    static MayaDiagram from_blocks(const std::vector<long>& b, bool allow_degenerate = false);

    bool contains(long m) const;
    long index() const;  // |plus| - |minus|
    std::vector<long> minus() const { return {minus_.begin(), minus_.end()}; }
    std::vector<long> plus() const { return {plus_.begin(), plus_.end()}; }
    long defect_count() const { return static_cast<long>(minus_.size() + plus_.size()); }

    // All m < lo() are members; no m >= hi() is a member.
    long lo() const;
    long hi() const;

    MayaDiagram shifted(long k) const;  // M + k
    // Toggle membership of m; second component is +1 when m was a member
    // (the flip removes it), -1 when it was not (the flip adds it).
    std::pair<MayaDiagram, int> flip(long m) const;

    // Standard form: minus empty and 0 the smallest non-member.
    bool is_standard() const { return minus_.empty() && !contains(0); }
    // The unique translate in standard form; *shift_out receives c with
    // result == *this + c.
    MayaDiagram standardized(long* shift_out = nullptr) const;

    // Block coordinates beta = Upsilon(M, M+1), always of odd length.
    std::vector<long> block_coordinates() const;
    long genus() const { return (static_cast<long>(block_coordinates().size()) - 1) / 2; }

    bool operator==(const MayaDiagram& o) const { return minus_ == o.minus_ && plus_ == o.plus_; }
    bool operator!=(const MayaDiagram& o) const { return !(*this == o); }
    bool operator<(const MayaDiagram& o) const {
        return minus_ != o.minus_ ? minus_ < o.minus_ : plus_ < o.plus_;
    }

private:
    std::set<long> minus_, plus_;

    template <class Pred>
    static MayaDiagram from_membership(long lo, long hi, Pred member) {
        MayaDiagram d;
        for (long m = lo; m < hi; ++m) {
            if (m >= 0 && member(m)) d.plus_.insert(m);
            if (m < 0 && !member(m)) d.minus_.insert(-m - 1);
        }
        return d;
    }

    friend MayaDiagram interlace(const std::vector<MayaDiagram>& ms);
    friend std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, long k);
};

// The multiflip set Upsilon(A, B): positions where A and B differ, sorted.
std::vector<long> upsilon(const MayaDiagram& a, const MayaDiagram& b);

// Interlacing Theta(M_0, ..., M_{k-1}) = union_i (k*M_i + i).
MayaDiagram interlace(const std::vector<MayaDiagram>& ms);

// k-modular decomposition, the inverse of interlace: component i is
// { m : k*m + i in M }.
std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, long k);

// Signature of M as a (p,k)-cyclic diagram: entry i is 2*genus + 1 of the
// i-th modular component; the sum p is the number of flips in a k-cycle.
std::vector<long> cyclic_signature(const MayaDiagram& m, long k);

// Shifts k for which p-cyclic chains exist: p, p-2, ..., down to 1 or 2.
std::vector<long> admissible_shifts(long p);

// k-block coordinates: one block of odd length 2g_i+1 per residue class.
struct KBlockCoordinates {
    long k = 1;
    std::vector<std::vector<long>> blocks;

    bool operator==(const KBlockCoordinates&) const = default;

    long p() const;  // sum of block lengths
    std::vector<long> signature() const;
    void validate() const;
    std::string str() const;  // "b|b,b,b|b"
};

// The diagram Xi(blocks) = Theta(Xi(block_0), ..., Xi(block_{k-1})).
MayaDiagram diagram_of(const KBlockCoordinates& kb);

// A multiflip that advances a diagram by `shift`: applying the flips at
// sites mus (in any order) to M yields M + shift.
struct FlipSequence {
    std::vector<long> mus;
    long shift = 0;
};

// Canonical flip sequence mu of a (p,k)-cyclic diagram in k-block
// coordinates: site k*b + i for entry b of block i, classes in ascending
// order, entries within a class in the given (non-decreasing) order.
FlipSequence canonical_flip_sequence(const KBlockCoordinates& kb);

// All normalized k-block coordinate tuples of (p,k)-cyclic diagrams with
// entries in [0, max_coord] and first entry of block 0 pinned to 0. Blocks
// are strictly increasing unless include_degenerate, which also emits
// non-decreasing blocks (diagrams of lower actual genus).
std::vector<KBlockCoordinates> enumerate_cyclic(long p, long k, long max_coord,
                                                bool include_degenerate = false);

// One-line glyph rendering: filled box for members, origin marked by a bar.
std::string render(const MayaDiagram& m);

}  // namespace pmaya

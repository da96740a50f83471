#pragma once

#include "residue_lab/error.hpp"
#include "residue_lab/number.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace rlab {

// Dense subset of F_p, one bit per element, with a cached cardinality.
// Treat values as immutable once built: every operation below returns a new
// set, so sharing across threads is safe. add/remove exist for builders and
// test fixtures only.
class FpSet {
public:
    explicit FpSet(u64 p);
    static FpSet full(u64 p);
    static FpSet of(u64 p, std::initializer_list<u64> xs);

    u64 modulus() const { return p_; }
    u64 size() const { return card_; }
    bool empty() const { return card_ == 0; }
    bool is_full() const { return card_ == p_; }
    bool contains(u64 x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }

    void add(u64 x);
    void remove(u64 x);

    std::vector<u64> elements() const;

    // Ascending element order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            u64 bits = words_[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(static_cast<u64>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    bool subset_of(const FpSet& other) const;
    bool operator==(const FpSet& other) const = default;

private:
    u64 p_ = 0;
    u64 card_ = 0;
    std::vector<u64> words_; // unused tail bits are always zero
};

FpSet complement(const FpSet& a); // F_p \ A (0 included when absent from A)
FpSet set_union(const FpSet& a, const FpSet& b);
FpSet set_intersection(const FpSet& a, const FpSet& b);
FpSet set_difference(const FpSet& a, const FpSet& b);

FpSet shift(const FpSet& a, u64 s);       // A + s
FpSet dilate(const FpSet& a, u64 lambda); // lambda * A; lambda != 0
FpSet invert_set(const FpSet& a);         // {x^-1 : x in A, x != 0}; 0 is dropped

FpSet sumset(const FpSet& a, const FpSet& b);
FpSet difference_set(const FpSet& a, const FpSet& b);
// Product and ratio sets live in F_p^*: zero elements of either operand are
// ignored. ratio_set errors on 0 in B unless the drop flag permits.
FpSet product_set(const FpSet& a, const FpSet& b);
FpSet ratio_set(const FpSet& a, const FpSet& b, bool drop_zero_denominator = false);

bool is_direct_sum(const FpSet& a, const FpSet& b);

// Maximal step-1 runs, cyclic over Z/p. The scanner cuts the circle at the
// smallest non-member and lists runs in encounter order from there; the full
// set is the single run (0, p).
struct Run {
    u64 start = 0;
    u64 length = 0;
    bool operator==(const Run&) const = default;
};
struct RunList {
    std::vector<Run> runs;
};
RunList runs(const FpSet& a);

FpSet interval_set(u64 p, u64 start, u64 length); // {start, ..., start+length-1} mod p

// Text fixture format: "p=<int>; {e1,e2,...}", one set per line.
std::string format_set(const FpSet& a);
FpSet parse_set(const std::string& line);

} // namespace rlab

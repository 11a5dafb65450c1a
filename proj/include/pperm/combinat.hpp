#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace pperm {

// Subset of [m] as a bitmask; bit i-1 stands for element i.
struct Subset {
    std::uint32_t bits = 0;

    static Subset full(int m) { return Subset{m >= 32 ? ~0u : ((1u << m) - 1)}; }
    static Subset of(std::initializer_list<int> elems);
    int size() const { return __builtin_popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
    bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
    std::vector<int> elements() const;

    friend Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
    friend Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
    friend bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
    friend bool operator<(Subset a, Subset b) { return a.bits < b.bits; }
};

// A_1 < A_2 < ... < A_l (strict inclusions); may be the empty chain.
struct Chain {
    std::vector<Subset> sets;

    bool empty() const { return sets.empty(); }
    int length() const { return static_cast<int>(sets.size()); }
    const Subset& front() const { return sets.front(); }
    const Subset& back() const { return sets.back(); }
    bool valid() const;

    friend bool operator==(const Chain& a, const Chain& b) { return a.sets == b.sets; }
    friend bool operator<(const Chain& a, const Chain& b);
};

std::string to_string(const Chain& c);

bool in_cmn(const Chain& c, int m, int n);
std::vector<Chain> enumerate_chains(int m, int n, bool include_empty);
int missing_ranks(const Chain& c);

// Element of R_C: either a single element of [m] or a subset of [m].
struct Marker {
    bool is_element;
    Subset set;  // singleton bitmask when is_element

    friend bool operator<(const Marker& a, const Marker& b)
    {
        if (a.is_element != b.is_element)
            return a.is_element;
        return a.set < b.set;
    }
    friend bool operator==(const Marker& a, const Marker& b)
    {
        return a.is_element == b.is_element && a.set == b.set;
    }
};

using MarkerSet = std::set<Marker>;

MarkerSet r_set(const Chain& c, int m, int n);
// c1 <= c2 iff R_{c2} is contained in R_{c1}
bool chain_leq(const Chain& c1, const Chain& c2, int m, int n);

struct ROrder {
    MarkerSet r1;
    MarkerSet r2;
    bool leq;
};
ROrder r_set_and_order(const Chain& c1, const Chain& c2, int m, int n);

// Index sets I_k: singletons {1}..{m}, then pairs {i,j} (i<j) in lexicographic order.
std::vector<Subset> draconian_index_sets(int m);

using DraconianSeq = std::vector<int>;

enum class DraconianMode { volume, ehrhart };

bool draconian_check(const DraconianSeq& a, int m);
bool draconian_check_scan(const DraconianSeq& a, int m);
std::vector<DraconianSeq> enumerate_draconian(int m, DraconianMode mode);

// b-sequences indexed by pairs only, with the singleton entries forced to zero.
std::vector<DraconianSeq> enumerate_parking(int m, bool volume_mode);

int descents(const std::vector<int>& perm);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

}  // namespace pperm

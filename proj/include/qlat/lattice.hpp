#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlat {

/// Elements are dense indices 0..size-1; bottom is always 0 and top size-1.
using Element = int;

/// Hard cap on any dense tuple space (|X|^n entries).
inline constexpr long long kMaxTupleSpace = 1'000'000;

/// Raised when an explicit order fails a lattice axiom. The witness holds
/// the offending elements in the order's original labeling; unused slots
/// are -1.
struct LatticeError : std::runtime_error {
    LatticeError(const std::string& what, std::array<int, 3> w)
        : std::runtime_error(what), witness(w) {}
    std::array<int, 3> witness;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constructor description for a lattice; nestable through `factors`.
struct LatticeSpec {
    enum class Kind { chain, boolean_algebra, product, explicit_order };
    Kind kind = Kind::chain;
    int param = 1;                        // chain size / atom count / explicit size
    std::vector<LatticeSpec> factors;     // product only
    std::vector<std::vector<int>> leq;    // explicit only
    std::vector<std::string> labels;      // optional, explicit only
};

/// A finite bounded distributive lattice with precomputed meet/join tables.
/// Immutable after construction; every query is O(1).
class Lattice {
public:
    /// Empty placeholder; assign a constructed lattice before use.
    Lattice() = default;

    static Lattice chain(int k);
    static Lattice boolean_algebra(int atoms);
    static Lattice product(const std::vector<Lattice>& factors);
    /// Validates all lattice axioms and relabels so bottom=0, top=size-1.
    static Lattice explicit_order(const std::vector<std::vector<int>>& leq,
                                  std::vector<std::string> labels = {});

    int size() const { return size_; }
    bool leq(Element a, Element b) const { return leq_[a * size_ + b] != 0; }
    Element meet(Element a, Element b) const { return meet_[a * size_ + b]; }
    Element join(Element a, Element b) const { return join_[a * size_ + b]; }
    Element bottom() const { return 0; }
    Element top() const { return size_ - 1; }

    Element med(Element a, Element b, Element c) const {
        return join(join(meet(a, b), meet(b, c)), meet(c, a));
    }

    /// x lies in the interval [a ^ b, a v b].
    bool in_interval(Element x, Element a, Element b) const {
        return leq(meet(a, b), x) && leq(x, join(a, b));
    }

    bool is_chain() const;

    /// Smallest convex subset containing s, as a sorted element list.
    std::vector<Element> convex_hull(const std::vector<Element>& s) const;

    /// Original-index -> canonical-index permutation for explicit specs;
    /// empty when construction already produced the canonical labeling.
    const std::vector<int>& relabeling() const { return relabel_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const LatticeSpec& spec() const { return spec_; }

    /// Re-runs every axiom check on the stored tables.
    void validate() const;

    bool operator==(const Lattice& o) const {
        return size_ == o.size_ && leq_ == o.leq_;
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    static Lattice from_leq(int size, const std::vector<uint8_t>& leq,
                            std::vector<std::string> labels, bool relabel);
    void fill_tables();

    int size_ = 0;
    std::vector<uint8_t> leq_;
    std::vector<Element> meet_, join_;
    std::vector<int> relabel_;
    std::vector<std::string> labels_;
    LatticeSpec spec_;
};

Lattice make_lattice(const LatticeSpec& spec);

// ---- dense tuple enumeration (last coordinate varies fastest) ----

/// base^arity with the desk-scale guard applied.
long long tuple_space_size(int base, int arity);

void decode_tuple(long long index, int base, std::span<Element> out);
long long encode_tuple(std::span<const Element> x, int base);

/// Odometer step; returns false after wrapping back to the all-zero tuple.
bool next_tuple(std::span<Element> x, int base);

/// Index of the 0/1-tuple e_I: coordinate i carries top iff bit i of
/// `mask` is set (bit 0 <-> first coordinate).
long long binary_tuple_index(unsigned mask, int base, int arity);

/// Position in [0, size^n) paired with its mixed-radix tuple.
struct TupleCursor {
    TupleCursor(int arity, const Lattice& domain)
        : arity(arity), base(domain.size()),
          count(tuple_space_size(base, arity)), tuple(arity, 0) {}

    int arity;
    int base;
    long long count;
    long long index = 0;
    std::vector<Element> tuple;

    bool advance() {
        ++index;
        return next_tuple(tuple, base) && index < count;
    }
    void seek(long long i) {
        index = i;
        decode_tuple(i, base, tuple);
    }
};

// ---- tuple surgery (componentwise operators on n-tuples) ----

std::vector<Element> bracket(const Lattice& L, std::span<const Element> x,
                             Element lo, Element hi);
std::vector<Element> substitute(std::span<const Element> x, int coord, Element c);
std::vector<Element> meet_const(const Lattice& L, std::span<const Element> x, Element c);
std::vector<Element> join_const(const Lattice& L, std::span<const Element> x, Element c);
/// Coordinate i becomes bottom when x_i <= c, else stays.
std::vector<Element> clip_floor(const Lattice& L, std::span<const Element> x, Element c);
/// Coordinate i becomes top when x_i >= c, else stays.
std::vector<Element> clip_ceil(const Lattice& L, std::span<const Element> x, Element c);

// ---- unary maps ----

/// A total map between two lattices, tabulated per domain element.
struct UnaryMap {
    Lattice domain;
    Lattice codomain;
    std::vector<Element> table;

    Element operator()(Element x) const { return table[x]; }

    static UnaryMap identity(const Lattice& L);
    static UnaryMap constant(const Lattice& X, const Lattice& Y, Element c);

    bool operator==(const UnaryMap& o) const {
        return domain == o.domain && codomain == o.codomain && table == o.table;
    }
};

struct UnaryReport {
    bool order_preserving = true;
    bool order_reversing = true;
    bool homomorphism = true;
    std::vector<Element> range;
    std::vector<Element> convex_hull_of_range;
    bool range_is_convex = true;
    bool bracket_condition = true;  // phi = <phi>_phi
};

UnaryReport unary_predicates(const UnaryMap& phi);

/// phi(x) = med(phi(0), phi(x), phi(1)) for every x.
bool bracket_condition(const UnaryMap& phi);

bool is_homomorphism(const UnaryMap& phi);
bool is_order_preserving(const UnaryMap& phi);

std::vector<Element> range_of(const std::vector<Element>& table);

}  // namespace qlat

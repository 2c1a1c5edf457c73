#include "qlat/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace qlat {

namespace {

// Greatest lower bound of {a, b} under leq, or -1 if none exists.
int glb(int size, const std::vector<uint8_t>& leq, int a, int b) {
    int best = -1;
    for (int c = 0; c < size; ++c) {
        if (!leq[c * size + a] || !leq[c * size + b]) continue;
        if (best == -1 || leq[best * size + c]) best = c;
    }
    if (best == -1) return -1;
    // best must dominate every common lower bound
    for (int c = 0; c < size; ++c) {
        if (leq[c * size + a] && leq[c * size + b] && !leq[c * size + best])
            return -1;
    }
    return best;
}

int lub(int size, const std::vector<uint8_t>& leq, int a, int b) {
    int best = -1;
    for (int c = 0; c < size; ++c) {
        if (!leq[a * size + c] || !leq[b * size + c]) continue;
        if (best == -1 || leq[c * size + best]) best = c;
    }
    if (best == -1) return -1;
    for (int c = 0; c < size; ++c) {
        if (leq[a * size + c] && leq[b * size + c] && !leq[best * size + c])
            return -1;
    }
    return best;
}

void check_axioms(int size, const std::vector<uint8_t>& leq) {
    for (int a = 0; a < size; ++a)
        if (!leq[a * size + a])
            throw LatticeError("not an order: reflexivity fails", {a, -1, -1});
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (a != b && leq[a * size + b] && leq[b * size + a])
                throw LatticeError("not an order: antisymmetry fails", {a, b, -1});
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            if (!leq[a * size + b]) continue;
            for (int c = 0; c < size; ++c)
                if (leq[b * size + c] && !leq[a * size + c])
                    throw LatticeError("not an order: transitivity fails", {a, b, c});
        }
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            if (glb(size, leq, a, b) == -1)
                throw LatticeError("not a lattice: no meet", {a, b, -1});
            if (lub(size, leq, a, b) == -1)
                throw LatticeError("not a lattice: no join", {a, b, -1});
        }
}

}  // namespace

void Lattice::fill_tables() {
    meet_.assign(static_cast<size_t>(size_) * size_, 0);
    join_.assign(static_cast<size_t>(size_) * size_, 0);
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b) {
            meet_[a * size_ + b] = glb(size_, leq_, a, b);
            join_[a * size_ + b] = lub(size_, leq_, a, b);
        }
}

Lattice Lattice::from_leq(int size, const std::vector<uint8_t>& leq,
                          std::vector<std::string> labels, bool relabel) {
    check_axioms(size, leq);

    // locate bounds (exist for every finite lattice)
    int bot = -1, top = -1;
    for (int a = 0; a < size; ++a) {
        bool least = true, greatest = true;
        for (int b = 0; b < size; ++b) {
            least = least && leq[a * size + b];
            greatest = greatest && leq[b * size + a];
        }
        if (least) bot = a;
        if (greatest) top = a;
    }
    if (bot == -1 || top == -1)
        throw LatticeError("not bounded", {-1, -1, -1});

    Lattice L;
    L.size_ = size;
    if (relabel && (bot != 0 || top != size - 1)) {
        // bottom -> 0, top -> size-1, remaining elements keep original order
        std::vector<int> perm(size, -1);
        perm[bot] = 0;
        perm[top] = size - 1;
        int next = 1;
        for (int a = 0; a < size; ++a)
            if (perm[a] == -1) perm[a] = next++;
        L.leq_.assign(static_cast<size_t>(size) * size, 0);
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b)
                L.leq_[perm[a] * size + perm[b]] = leq[a * size + b];
        L.relabel_ = perm;
        if (!labels.empty()) {
            L.labels_.resize(size);
            for (int a = 0; a < size; ++a) L.labels_[perm[a]] = labels[a];
        }
    } else {
        L.leq_ = leq;
        L.labels_ = std::move(labels);
    }
    L.fill_tables();

    // distributivity, reported in the original labeling when relabeled
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            for (int c = 0; c < size; ++c)
                if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
                    std::array<int, 3> w = {a, b, c};
                    if (!L.relabel_.empty()) {
                        std::vector<int> inv(size);
                        for (int i = 0; i < size; ++i) inv[L.relabel_[i]] = i;
                        w = {inv[a], inv[b], inv[c]};
                    }
                    throw LatticeError("not distributive", w);
                }
    return L;
}

Lattice Lattice::chain(int k) {
    if (k < 1) throw std::invalid_argument("chain size must be >= 1");
    std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) leq[a * k + b] = 1;
    Lattice L = from_leq(k, leq, {}, false);
    L.spec_ = {LatticeSpec::Kind::chain, k, {}, {}, {}};
    return L;
}

Lattice Lattice::boolean_algebra(int atoms) {
    if (atoms < 1 || atoms > 4)
        throw std::invalid_argument("boolean lattice supports 1..4 atoms");
    int k = 1 << atoms;
    std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) leq[a * k + b] = ((a & b) == a) ? 1 : 0;
    Lattice L = from_leq(k, leq, {}, false);
    L.spec_ = {LatticeSpec::Kind::boolean_algebra, atoms, {}, {}, {}};
    return L;
}

Lattice Lattice::product(const std::vector<Lattice>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    long long size = 1;
    for (const auto& f : factors) {
        size *= f.size();
        // O(size^3) validation must stay cheap
        if (size > 1024) throw BudgetError("product lattice too large");
    }
    int k = static_cast<int>(size);
    // index = mixed radix over factor indices, first factor most significant
    auto split = [&](int idx, std::vector<int>& out) {
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            out[i] = idx % factors[i].size();
            idx /= factors[i].size();
        }
    };
    std::vector<int> xa(factors.size()), xb(factors.size());
    std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a) {
        split(a, xa);
        for (int b = 0; b < k; ++b) {
            split(b, xb);
            bool le = true;
            for (size_t i = 0; i < factors.size() && le; ++i)
                le = factors[i].leq(xa[i], xb[i]);
            leq[a * k + b] = le ? 1 : 0;
        }
    }
    Lattice L = from_leq(k, leq, {}, false);
    L.spec_.kind = LatticeSpec::Kind::product;
    for (const auto& f : factors) L.spec_.factors.push_back(f.spec());
    return L;
}

Lattice Lattice::explicit_order(const std::vector<std::vector<int>>& leq,
                                std::vector<std::string> labels) {
    int k = static_cast<int>(leq.size());
    if (k < 1) throw std::invalid_argument("empty order");
    std::vector<uint8_t> flat(static_cast<size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a) {
        if (static_cast<int>(leq[a].size()) != k)
            throw std::invalid_argument("leq matrix is not square");
        for (int b = 0; b < k; ++b) flat[a * k + b] = leq[a][b] ? 1 : 0;
    }
    Lattice L = from_leq(k, flat, std::move(labels), true);
    L.spec_.kind = LatticeSpec::Kind::explicit_order;
    L.spec_.param = k;
    L.spec_.leq.assign(k, std::vector<int>(k, 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) L.spec_.leq[a][b] = L.leq(a, b) ? 1 : 0;
    return L;
}

Lattice make_lattice(const LatticeSpec& spec) {
    switch (spec.kind) {
        case LatticeSpec::Kind::chain:
            return Lattice::chain(spec.param);
        case LatticeSpec::Kind::boolean_algebra:
            return Lattice::boolean_algebra(spec.param);
        case LatticeSpec::Kind::product: {
            std::vector<Lattice> fs;
            fs.reserve(spec.factors.size());
            for (const auto& f : spec.factors) fs.push_back(make_lattice(f));
            return Lattice::product(fs);
        }
        case LatticeSpec::Kind::explicit_order:
            return Lattice::explicit_order(spec.leq, spec.labels);
    }
    throw std::invalid_argument("unknown lattice spec");
}

bool Lattice::is_chain() const {
    for (int a = 0; a < size_; ++a)
        for (int b = a + 1; b < size_; ++b)
            if (!leq(a, b) && !leq(b, a)) return false;
    return true;
}

std::vector<Element> Lattice::convex_hull(const std::vector<Element>& s) const {
    // conv(S) is the union of intervals [a, b] over a, b in S
    std::vector<Element> out;
    for (int c = 0; c < size_; ++c) {
        bool below = false, above = false;
        for (Element a : s) {
            below = below || leq(a, c);
            above = above || leq(c, a);
        }
        if (below && above) out.push_back(c);
    }
    return out;
}

void Lattice::validate() const {
    check_axioms(size_, leq_);
    for (int a = 0; a < size_; ++a) {
        if (!leq(bottom(), a) || !leq(a, top()))
            throw LatticeError("not bounded by indices 0 and size-1", {a, -1, -1});
        for (int b = 0; b < size_; ++b) {
            if (meet(a, b) != glb(size_, leq_, a, b))
                throw LatticeError("meet table mismatch", {a, b, -1});
            if (join(a, b) != lub(size_, leq_, a, b))
                throw LatticeError("join table mismatch", {a, b, -1});
            for (int c = 0; c < size_; ++c)
                if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
                    throw LatticeError("not distributive", {a, b, c});
        }
    }
}

// ---- tuple enumeration ----

long long tuple_space_size(int base, int arity) {
    if (base < 1 || arity < 1) throw std::invalid_argument("bad tuple space");
    long long n = 1;
    for (int i = 0; i < arity; ++i) {
        n *= base;
        if (n > kMaxTupleSpace)
            throw BudgetError("tuple space exceeds the desk-scale guard");
    }
    return n;
}

void decode_tuple(long long index, int base, std::span<Element> out) {
    for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
        out[i] = static_cast<Element>(index % base);
        index /= base;
    }
}

long long encode_tuple(std::span<const Element> x, int base) {
    long long idx = 0;
    for (Element v : x) idx = idx * base + v;
    return idx;
}

bool next_tuple(std::span<Element> x, int base) {
    for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
        if (++x[i] < base) return true;
        x[i] = 0;
    }
    return false;
}

long long binary_tuple_index(unsigned mask, int base, int arity) {
    long long idx = 0;
    for (int i = 0; i < arity; ++i)
        idx = idx * base + ((mask >> i) & 1u ? base - 1 : 0);
    return idx;
}

// ---- tuple surgery ----

std::vector<Element> bracket(const Lattice& L, std::span<const Element> x,
                             Element lo, Element hi) {
    std::vector<Element> out(x.begin(), x.end());
    for (auto& v : out) v = L.med(lo, v, hi);
    return out;
}

std::vector<Element> substitute(std::span<const Element> x, int coord, Element c) {
    if (coord < 0 || coord >= static_cast<int>(x.size()))
        throw std::out_of_range("substitute: coordinate out of range");
    std::vector<Element> out(x.begin(), x.end());
    out[coord] = c;
    return out;
}

std::vector<Element> meet_const(const Lattice& L, std::span<const Element> x, Element c) {
    std::vector<Element> out(x.begin(), x.end());
    for (auto& v : out) v = L.meet(v, c);
    return out;
}

std::vector<Element> join_const(const Lattice& L, std::span<const Element> x, Element c) {
    std::vector<Element> out(x.begin(), x.end());
    for (auto& v : out) v = L.join(v, c);
    return out;
}

std::vector<Element> clip_floor(const Lattice& L, std::span<const Element> x, Element c) {
    std::vector<Element> out(x.begin(), x.end());
    for (auto& v : out)
        if (L.leq(v, c)) v = L.bottom();
    return out;
}

std::vector<Element> clip_ceil(const Lattice& L, std::span<const Element> x, Element c) {
    std::vector<Element> out(x.begin(), x.end());
    for (auto& v : out)
        if (L.leq(c, v)) v = L.top();
    return out;
}

// ---- unary maps ----

UnaryMap UnaryMap::identity(const Lattice& L) {
    UnaryMap m{L, L, std::vector<Element>(L.size())};
    std::iota(m.table.begin(), m.table.end(), 0);
    return m;
}

UnaryMap UnaryMap::constant(const Lattice& X, const Lattice& Y, Element c) {
    return UnaryMap{X, Y, std::vector<Element>(X.size(), c)};
}

bool bracket_condition(const UnaryMap& phi) {
    const Lattice& Y = phi.codomain;
    Element lo = phi.table[phi.domain.bottom()];
    Element hi = phi.table[phi.domain.top()];
    for (Element v : phi.table)
        if (Y.med(lo, v, hi) != v) return false;
    return true;
}

bool is_homomorphism(const UnaryMap& phi) {
    const Lattice& X = phi.domain;
    const Lattice& Y = phi.codomain;
    for (int a = 0; a < X.size(); ++a)
        for (int b = a + 1; b < X.size(); ++b) {
            if (phi(X.meet(a, b)) != Y.meet(phi(a), phi(b))) return false;
            if (phi(X.join(a, b)) != Y.join(phi(a), phi(b))) return false;
        }
    return true;
}

bool is_order_preserving(const UnaryMap& phi) {
    for (int a = 0; a < phi.domain.size(); ++a)
        for (int b = 0; b < phi.domain.size(); ++b)
            if (phi.domain.leq(a, b) && !phi.codomain.leq(phi(a), phi(b)))
                return false;
    return true;
}

std::vector<Element> range_of(const std::vector<Element>& table) {
    std::vector<Element> r = table;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

UnaryReport unary_predicates(const UnaryMap& phi) {
    UnaryReport rep;
    const Lattice& X = phi.domain;
    const Lattice& Y = phi.codomain;
    for (int a = 0; a < X.size(); ++a)
        for (int b = 0; b < X.size(); ++b)
            if (X.leq(a, b)) {
                if (!Y.leq(phi(a), phi(b))) rep.order_preserving = false;
                if (!Y.leq(phi(b), phi(a))) rep.order_reversing = false;
            }
    rep.homomorphism = is_homomorphism(phi);
    rep.range = range_of(phi.table);
    rep.convex_hull_of_range = Y.convex_hull(rep.range);
    rep.range_is_convex = rep.range == rep.convex_hull_of_range;
    rep.bracket_condition = bracket_condition(phi);
    return rep;
}

}  // namespace qlat

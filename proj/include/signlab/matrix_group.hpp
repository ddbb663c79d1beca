#pragma once

// Fully enumerated matrix groups over F_q with conjugacy-class data and
// tagged standard subgroups. Elements are indexed by their canonical
// encoding in ascending order, which fixes element and class numbering
// across runs; everything downstream (tables, reports) inherits that
// determinism.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "signlab/fq_matrix.hpp"

namespace signlab {

constexpr std::uint64_t kDefaultElementCap = 200000;

struct ConjClass {
    std::uint32_t rep = 0;               // element index of the minimal member
    std::uint32_t size = 0;
    std::vector<std::uint32_t> members;  // ascending element indices
};

// Standard parabolic machinery attached to a subset of the simple roots
// (positions 0..n-2). blocks is the Levi block composition of n.
struct ParabolicTags {
    std::uint32_t theta_mask = 0;
    std::vector<int> blocks;
    std::vector<std::uint32_t> parabolic;
    std::vector<std::uint32_t> levi;
    std::vector<std::uint32_t> nilradical;
    std::vector<std::uint32_t> opposite_nilradical;
};

class MatrixGroup {
  public:
    MatrixGroup(FieldSpec field, std::uint8_t n, std::string name, std::vector<FqMat> elements)
        : field_(std::move(field)), n_(n), name_(std::move(name)), elems_(std::move(elements)) {
        std::sort(elems_.begin(), elems_.end(), [&](const FqMat& a, const FqMat& b) {
            return encode(field_, a) < encode(field_, b);
        });
        index_.reserve(elems_.size() * 2);
        for (std::uint32_t i = 0; i < elems_.size(); ++i) {
            const auto key = encode(field_, elems_[i]);
            check(index_.emplace(key, i).second, "duplicate element in group");
        }
        const auto id = index_.find(encode(field_, fq_identity(n_)));
        check(id != index_.end(), "group without identity");
        identity_ = id->second;
        inverse_.resize(elems_.size());
        for (std::uint32_t i = 0; i < elems_.size(); ++i) {
            auto inv = signlab::inverse(field_, elems_[i]);
            if (!inv) throw closure_error("singular matrix in " + name_);
            const auto it = index_.find(encode(field_, *inv));
            if (it == index_.end())
                throw closure_error("inverse of " + to_string(elems_[i]) + " is not in " + name_);
            inverse_[i] = it->second;
        }
        compute_generators();
        compute_classes();
    }

    const FieldSpec& field() const { return field_; }
    std::uint8_t n() const { return n_; }
    const std::string& name() const { return name_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
    std::uint32_t identity() const { return identity_; }
    const FqMat& elem(std::uint32_t i) const { return elems_[i]; }
    std::uint32_t inv(std::uint32_t i) const { return inverse_[i]; }
    const std::vector<std::uint32_t>& generators() const { return generators_; }

    std::optional<std::uint32_t> index_of(const FqMat& m) const {
        const auto it = index_.find(encode(field_, m));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::uint32_t require_index(const FqMat& m, const char* what) const {
        const auto i = index_of(m);
        if (!i) throw closure_error(std::string(what) + ": " + to_string(m) +
                                    " is not in " + name_);
        return *i;
    }

    std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
        return require_index(signlab::mul(field_, elems_[i], elems_[j]), "product left the group");
    }

    std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const {  // x g x^-1
        const FqMat m = signlab::mul(field_, signlab::mul(field_, elems_[x], elems_[g]),
                                     elems_[inverse_[x]]);
        return require_index(m, "conjugate left the group");
    }

    std::uint32_t elem_order(std::uint32_t i) const {
        std::uint32_t n = 1, x = i;
        while (x != identity_) {
            x = mul(x, i);
            ++n;
        }
        return n;
    }

    std::size_t class_count() const { return classes_.size(); }
    const ConjClass& cls(std::size_t c) const { return classes_[c]; }
    std::uint32_t class_of(std::uint32_t i) const { return class_of_[i]; }
    std::uint32_t class_of_inverse(std::uint32_t c) const { return class_inverse_[c]; }

    bool is_central(std::uint32_t i) const {
        for (const std::uint32_t g : generators_)
            if (mul(i, g) != mul(g, i)) return false;
        return true;
    }

    std::vector<std::uint32_t> center() const {
        std::vector<std::uint32_t> z;
        for (std::uint32_t i = 0; i < size(); ++i)
            if (is_central(i)) z.push_back(i);
        return z;
    }

    std::vector<std::uint32_t> torus() const {
        std::vector<std::uint32_t> t;
        for (std::uint32_t i = 0; i < size(); ++i) {
            bool diag = true;
            for (std::size_t r = 0; r < n_ && diag; ++r)
                for (std::size_t c = 0; c < n_; ++c)
                    if (r != c && elems_[i].at(r, c) != 0) {
                        diag = false;
                        break;
                    }
            if (diag) t.push_back(i);
        }
        return t;
    }

  private:
    // Greedy generating set: repeatedly adjoin the smallest element outside
    // the current closure. Small for everything we enumerate.
    void compute_generators() {
        std::vector<bool> in_closure(elems_.size(), false);
        std::vector<std::uint32_t> closure = {identity_};
        in_closure[identity_] = true;
        while (closure.size() < elems_.size()) {
            std::uint32_t fresh = 0;
            while (in_closure[fresh]) ++fresh;
            generators_.push_back(fresh);
            std::vector<std::uint32_t> frontier = closure;
            while (!frontier.empty()) {
                std::vector<std::uint32_t> next;
                for (const std::uint32_t x : frontier)
                    for (const std::uint32_t g : generators_) {
                        const std::uint32_t y = mul(x, g);
                        if (!in_closure[y]) {
                            in_closure[y] = true;
                            closure.push_back(y);
                            next.push_back(y);
                        }
                    }
                frontier = std::move(next);
            }
        }
    }

    void compute_classes() {
        class_of_.assign(elems_.size(), UINT32_MAX);
        std::vector<std::vector<std::uint32_t>> orbits;
        for (std::uint32_t seed = 0; seed < elems_.size(); ++seed) {
            if (class_of_[seed] != UINT32_MAX) continue;
            const auto id = static_cast<std::uint32_t>(orbits.size());
            std::vector<std::uint32_t> orbit = {seed};
            class_of_[seed] = id;
            for (std::size_t head = 0; head < orbit.size(); ++head)
                for (const std::uint32_t g : generators_) {
                    const std::uint32_t y = conjugate(g, orbit[head]);
                    if (class_of_[y] == UINT32_MAX) {
                        class_of_[y] = id;
                        orbit.push_back(y);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            orbits.push_back(std::move(orbit));
        }
        // Deterministic ordering: by (size, minimal element). Seeds are
        // visited in ascending element order, so orbit[0] is minimal.
        std::vector<std::uint32_t> order(orbits.size());
        for (std::uint32_t i = 0; i < orbits.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
            return orbits[a][0] < orbits[b][0];
        });
        classes_.resize(orbits.size());
        for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
            auto& cc = classes_[pos];
            cc.members = std::move(orbits[order[pos]]);
            cc.rep = cc.members[0];
            cc.size = static_cast<std::uint32_t>(cc.members.size());
            for (const std::uint32_t m : cc.members) class_of_[m] = pos;
        }
        check(classes_[0].rep == identity_, "identity class is not first");
        std::uint64_t total = 0;
        for (const auto& c : classes_) {
            check(size() % c.size == 0, "class size does not divide group order");
            total += c.size;
        }
        check(total == size(), "classes do not partition the group");
        class_inverse_.resize(classes_.size());
        for (std::uint32_t c = 0; c < classes_.size(); ++c)
            class_inverse_[c] = class_of_[inverse_[classes_[c].rep]];
    }

    FieldSpec field_;
    std::uint8_t n_;
    std::string name_;
    std::vector<FqMat> elems_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> generators_;
    std::vector<std::uint32_t> class_of_;
    std::vector<ConjClass> classes_;
    std::vector<std::uint32_t> class_inverse_;
};

namespace detail {

inline Int gl_order(int n, std::uint64_t q) {
    Int qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    Int order = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        order *= (qn - qi);
        qi *= q;
    }
    return order;
}

inline void check_encodable(int n, std::uint64_t q) {
    // Canonical keys must fit in 64 bits: q^(n^2) <= 2^64.
    long double bits = n * n * std::log2(static_cast<long double>(q));
    if (bits > 63.9)
        throw cap_error("matrix encoding does not fit 64 bits for n=" + std::to_string(n) +
                        ", q=" + std::to_string(q));
}

inline std::vector<int> blocks_from_mask(int n, std::uint32_t mask) {
    std::vector<int> blocks;
    int cur = 1;
    for (int i = 0; i + 1 < n; ++i) {
        if (mask & (1u << i)) {
            ++cur;
        } else {
            blocks.push_back(cur);
            cur = 1;
        }
    }
    blocks.push_back(cur);
    return blocks;
}

inline std::vector<int> block_id_of_rows(const std::vector<int>& blocks, int n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    int b = 0, used = 0;
    for (int r = 0; r < n; ++r) {
        if (used == blocks[static_cast<std::size_t>(b)]) {
            ++b;
            used = 0;
        }
        id[static_cast<std::size_t>(r)] = b;
        ++used;
    }
    return id;
}

}  // namespace detail

// Parabolic / Levi / unipotent-radical tags for one theta mask, by shape
// predicates over the whole element list.
inline ParabolicTags parabolic_tags(const MatrixGroup& g, std::uint32_t theta_mask) {
    const int n = g.n();
    ParabolicTags t;
    t.theta_mask = theta_mask;
    t.blocks = detail::blocks_from_mask(n, theta_mask);
    const auto bid = detail::block_id_of_rows(t.blocks, n);
    for (std::uint32_t i = 0; i < g.size(); ++i) {
        const FqMat& m = g.elem(i);
        bool lower_zero = true, upper_zero = true, diag_identity = true;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const FqElem v = m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                if (bid[static_cast<std::size_t>(r)] > bid[static_cast<std::size_t>(c)] && v != 0)
                    lower_zero = false;
                if (bid[static_cast<std::size_t>(r)] < bid[static_cast<std::size_t>(c)] && v != 0)
                    upper_zero = false;
                if (bid[static_cast<std::size_t>(r)] == bid[static_cast<std::size_t>(c)] &&
                    v != (r == c ? 1 : 0))
                    diag_identity = false;
            }
        if (lower_zero) t.parabolic.push_back(i);
        if (lower_zero && upper_zero) t.levi.push_back(i);
        if (lower_zero && diag_identity) t.nilradical.push_back(i);
        if (upper_zero && diag_identity) t.opposite_nilradical.push_back(i);
    }
    return t;
}

inline MatrixGroup build_gl(int n, std::uint32_t q, std::uint64_t cap = kDefaultElementCap) {
    if (n < 1 || n > 4) throw config_error("supported matrix sizes are 1..4");
    const FieldSpec f = FieldSpec::of_order(q);
    const Int order = detail::gl_order(n, q);
    if (order > cap)
        throw cap_error("gl(" + std::to_string(n) + "," + std::to_string(q) + ") has order " +
                        order.str() + ", above the cap " + std::to_string(cap));
    detail::check_encodable(n, q);
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    std::vector<FqMat> elems;
    for (std::uint64_t key = 0; key < total; ++key) {
        const FqMat m = decode(f, static_cast<std::uint8_t>(n), key);
        if (det(f, m) != 0) elems.push_back(m);
    }
    check(Int(elems.size()) == order, "gl enumeration does not match the order formula");
    return MatrixGroup(f, static_cast<std::uint8_t>(n),
                       "gl(" + std::to_string(n) + "," + std::to_string(q) + ")",
                       std::move(elems));
}

inline MatrixGroup build_sl(int n, std::uint32_t q, std::uint64_t cap = kDefaultElementCap) {
    if (n < 1 || n > 4) throw config_error("supported matrix sizes are 1..4");
    const FieldSpec f = FieldSpec::of_order(q);
    const Int order = detail::gl_order(n, q) / (q - 1);
    if (order > cap)
        throw cap_error("sl(" + std::to_string(n) + "," + std::to_string(q) + ") has order " +
                        order.str() + ", above the cap " + std::to_string(cap));
    detail::check_encodable(n, q);
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    std::vector<FqMat> elems;
    for (std::uint64_t key = 0; key < total; ++key) {
        const FqMat m = decode(f, static_cast<std::uint8_t>(n), key);
        if (det(f, m) == 1) elems.push_back(m);
    }
    check(Int(elems.size()) == order, "sl enumeration does not match the order formula");
    return MatrixGroup(f, static_cast<std::uint8_t>(n),
                       "sl(" + std::to_string(n) + "," + std::to_string(q) + ")",
                       std::move(elems));
}

// A subgroup (given by parent element indices) as a group in its own right,
// with its own classes. Closure is spot-checked here and exhaustively in
// the parent's invariants tests.
inline MatrixGroup build_subgroup(const MatrixGroup& parent,
                                  const std::vector<std::uint32_t>& members, std::string name) {
    std::vector<FqMat> elems;
    elems.reserve(members.size());
    for (const std::uint32_t i : members) elems.push_back(parent.elem(i));
    MatrixGroup h(parent.field(), parent.n(), std::move(name), std::move(elems));
    if (h.size() <= 1500) {
        for (std::uint32_t i = 0; i < h.size(); ++i)
            for (std::uint32_t j = 0; j < h.size(); ++j) h.mul(i, j);  // throws if not closed
    } else {
        SplitMix64 rng(h.size());
        for (int t = 0; t < 20000; ++t)
            h.mul(static_cast<std::uint32_t>(rng.below(h.size())),
                  static_cast<std::uint32_t>(rng.below(h.size())));
    }
    return h;
}

inline MatrixGroup trivial_group(std::uint32_t q = 2) {
    const FieldSpec f = FieldSpec::of_order(q);
    return MatrixGroup(f, 1, "trivial", {fq_identity(1)});
}

}  // namespace signlab

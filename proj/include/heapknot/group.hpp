#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace heapknot {

// Finite group as a dense multiplication table. Element "handles" are plain
// indices in [0, order); all hot-path operations are table lookups.
struct FiniteGroup {
    int order = 0;
    int identity = 0;
    std::vector<int> mul;   // order x order, row-major
    std::vector<int> inv;
    std::vector<std::string> names;
    std::string spec;

    int op(int a, int b) const { return mul[a * order + b]; }

    // [x,y,z] = x y^-1 z
    int heap(int x, int y, int z) const { return op(op(x, inv[y]), z); }

    int name_to_index(const std::string& name) const {
        for (int i = 0; i < order; ++i)
            if (names[i] == name) return i;
        throw std::invalid_argument("unknown element name: " + name);
    }

    bool is_abelian() const {
        for (int a = 0; a < order; ++a)
            for (int b = a + 1; b < order; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    // Exhaustive table sanity check; intended for tests and small orders.
    void validate() const {
        if (order <= 0) throw std::logic_error("empty group");
        for (int a = 0; a < order; ++a) {
            if (op(identity, a) != a || op(a, identity) != a)
                throw std::logic_error("identity axiom fails");
            if (op(a, inv[a]) != identity || op(inv[a], a) != identity)
                throw std::logic_error("inverse axiom fails");
        }
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (op(op(a, b), c) != op(a, op(b, c)))
                        throw std::logic_error("associativity fails");
    }
};

struct Subgroup {
    std::vector<int> members;      // sorted element indices
    std::vector<char> mask;        // size = owner order

    bool contains(int x) const { return mask[x] != 0; }
    int size() const { return static_cast<int>(members.size()); }
};

struct CosetPartition {
    std::vector<int> coset_of;     // element index -> coset id
    int coset_count = 0;
};

namespace detail {

inline FiniteGroup make_cyclic(int n) {
    FiniteGroup g;
    g.order = n;
    g.identity = 0;
    g.mul.resize(n * n);
    g.inv.resize(n);
    g.names.resize(n);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        g.names[a] = std::to_string(a);
        for (int b = 0; b < n; ++b) g.mul[a * n + b] = (a + b) % n;
    }
    return g;
}

// Dihedral group of order 2n, presentation <a, r | a^2 = r^n = 1, a r a = r^-1>.
// Index j in [0,n) is r^j, index n+j is a r^j.
inline FiniteGroup make_dihedral(int n) {
    FiniteGroup g;
    const int ord = 2 * n;
    g.order = ord;
    g.identity = 0;
    g.mul.resize(ord * ord);
    g.inv.resize(ord);
    g.names.resize(ord);
    auto idx = [n](int s, int j) { return s * n + ((j % n) + n) % n; };
    for (int s1 = 0; s1 < 2; ++s1)
        for (int j1 = 0; j1 < n; ++j1) {
            int a = idx(s1, j1);
            g.names[a] = (s1 ? "ar" : "r") + std::to_string(j1);
            for (int s2 = 0; s2 < 2; ++s2)
                for (int j2 = 0; j2 < n; ++j2) {
                    // (a^s1 r^j1)(a^s2 r^j2) = a^(s1+s2) r^(j2 + (-1)^s2 j1)
                    int b = idx(s2, j2);
                    g.mul[a * ord + b] = idx(s1 ^ s2, j2 + (s2 ? -j1 : j1));
                }
        }
    for (int a = 0; a < ord; ++a)
        for (int b = 0; b < ord; ++b)
            if (g.mul[a * ord + b] == 0) g.inv[a] = b;
    return g;
}

inline FiniteGroup make_product(const FiniteGroup& g1, const FiniteGroup& g2) {
    FiniteGroup g;
    const int o1 = g1.order, o2 = g2.order, ord = o1 * o2;
    g.order = ord;
    g.identity = g1.identity * o2 + g2.identity;
    g.mul.resize(ord * ord);
    g.inv.resize(ord);
    g.names.resize(ord);
    for (int a1 = 0; a1 < o1; ++a1)
        for (int a2 = 0; a2 < o2; ++a2) {
            int a = a1 * o2 + a2;
            g.names[a] = "(" + g1.names[a1] + "," + g2.names[a2] + ")";
            g.inv[a] = g1.inv[a1] * o2 + g2.inv[a2];
            for (int b1 = 0; b1 < o1; ++b1)
                for (int b2 = 0; b2 < o2; ++b2)
                    g.mul[a * ord + b1 * o2 + b2] =
                        g1.op(a1, b1) * o2 + g2.op(a2, b2);
        }
    return g;
}

inline FiniteGroup parse_atom(const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'Z' && tok[0] != 'D'))
        throw std::invalid_argument("bad group spec token: " + tok);
    for (size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw std::invalid_argument("bad group spec token: " + tok);
    int n = std::stoi(tok.substr(1));
    if (n < 1) throw std::invalid_argument("group spec needs n >= 1: " + tok);
    return tok[0] == 'Z' ? make_cyclic(n) : make_dihedral(n);
}

}  // namespace detail

// Grammar: Z<n> | D<n> | spec x spec  (left-associative direct product).
inline FiniteGroup make_group(const std::string& spec) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : spec) {
        if (c == 'x') {
            toks.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    toks.push_back(cur);
    FiniteGroup g = detail::parse_atom(toks[0]);
    for (size_t i = 1; i < toks.size(); ++i)
        g = detail::make_product(g, detail::parse_atom(toks[i]));
    g.spec = spec;
    return g;
}

inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
    if (gens.empty()) throw std::invalid_argument("generated_subgroup: no generators");
    std::vector<char> in(g.order, 0);
    std::vector<int> stack;
    auto push = [&](int x) {
        if (!in[x]) { in[x] = 1; stack.push_back(x); }
    };
    push(g.identity);
    for (int x : gens) {
        if (x < 0 || x >= g.order) throw std::out_of_range("generator index");
        push(x);
    }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        push(g.inv[x]);
        for (int y = 0; y < g.order; ++y)
            if (in[y]) { push(g.op(x, y)); push(g.op(y, x)); }
    }
    Subgroup h;
    h.mask = in;
    for (int x = 0; x < g.order; ++x)
        if (in[x]) h.members.push_back(x);
    return h;
}

inline Subgroup whole_group(const FiniteGroup& g) {
    Subgroup h;
    h.mask.assign(g.order, 1);
    h.members.resize(g.order);
    std::iota(h.members.begin(), h.members.end(), 0);
    return h;
}

// x and y share a coset iff x^-1 y lies in H.
inline bool same_left_coset(const FiniteGroup& g, const Subgroup& h, int x, int y) {
    return h.contains(g.op(g.inv[x], y));
}

inline CosetPartition left_cosets(const FiniteGroup& g, const Subgroup& h) {
    CosetPartition p;
    p.coset_of.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (p.coset_of[x] >= 0) continue;
        for (int s : h.members) p.coset_of[g.op(x, s)] = p.coset_count;
        ++p.coset_count;
    }
    return p;
}

}  // namespace heapknot

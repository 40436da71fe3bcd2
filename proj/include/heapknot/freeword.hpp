#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace heapknot {

// Freely reduced word over integer generator symbols, stored as runs
// (symbol, nonzero exponent) with adjacent symbols distinct.
struct FreeWord {
    std::vector<std::pair<int, long>> runs;

    FreeWord() = default;
    static FreeWord gen(int sym, long exp = 1) {
        FreeWord w;
        if (exp != 0) w.runs.emplace_back(sym, exp);
        return w;
    }

    bool empty() const { return runs.empty(); }

    long length() const {
        long n = 0;
        for (const auto& [s, e] : runs) n += std::labs(e);
        return n;
    }

    void push(int sym, long exp) {
        if (exp == 0) return;
        if (!runs.empty() && runs.back().first == sym) {
            runs.back().second += exp;
            if (runs.back().second == 0) runs.pop_back();
        } else {
            runs.emplace_back(sym, exp);
        }
    }

    FreeWord operator*(const FreeWord& o) const {
        FreeWord out = *this;
        for (const auto& [s, e] : o.runs) out.push(s, e);
        return out;
    }

    FreeWord inverse() const {
        FreeWord out;
        for (auto it = runs.rbegin(); it != runs.rend(); ++it)
            out.runs.emplace_back(it->first, -it->second);
        return out;
    }

    FreeWord pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        FreeWord out;
        for (long i = 0; i < n; ++i) out = out * *this;
        return out;
    }

    bool contains(int sym) const {
        for (const auto& [s, e] : runs)
            if (s == sym) return true;
        return false;
    }

    long occurrences(int sym) const {
        long n = 0;
        for (const auto& [s, e] : runs)
            if (s == sym) n += std::labs(e);
        return n;
    }

    // Substitute each generator by a word (identity substitutions allowed).
    FreeWord substituted(const std::vector<FreeWord>& images) const {
        FreeWord out;
        for (const auto& [s, e] : runs) out = out * images[s].pow(e);
        return out;
    }

    // Strip matching conjugation from the two ends.
    FreeWord cyclically_reduced() const {
        std::vector<int> flat = letters();
        size_t lo = 0, hi = flat.size();
        while (hi - lo >= 2 && flat[lo] + flat[hi - 1] == 0) {
            ++lo;
            --hi;
        }
        FreeWord out;
        for (size_t i = lo; i < hi; ++i) out.push(letter_sym(flat[i]), flat[i] > 0 ? 1 : -1);
        return out;
    }

    // Flat letter encoding: symbol s with exponent +1 -> s+1, with -1 -> -(s+1).
    std::vector<int> letters() const {
        std::vector<int> out;
        for (const auto& [s, e] : runs)
            for (long i = 0; i < std::labs(e); ++i) out.push_back(e > 0 ? s + 1 : -(s + 1));
        return out;
    }
    static int letter_sym(int l) { return std::abs(l) - 1; }

    static FreeWord from_letters(const std::vector<int>& ls) {
        FreeWord out;
        for (int l : ls) out.push(letter_sym(l), l > 0 ? 1 : -1);
        return out;
    }

    bool operator==(const FreeWord& o) const { return runs == o.runs; }
    bool operator<(const FreeWord& o) const { return runs < o.runs; }

    std::string str(const std::vector<std::string>& names) const {
        if (runs.empty()) return "1";
        std::string s;
        for (const auto& [sym, e] : runs) {
            if (!s.empty()) s += " ";
            s += names[sym];
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

// Canonical form of the cyclic word up to rotation and inversion; two relators
// name the same normal closure generator iff these agree.
inline std::vector<int> cyclic_canonical(const FreeWord& w) {
    FreeWord r = w.cyclically_reduced();
    std::vector<int> best;
    bool have = false;
    for (const FreeWord& cand : {r, r.inverse()}) {
        std::vector<int> flat = cand.letters();
        const size_t n = flat.size();
        for (size_t shift = 0; shift < std::max<size_t>(n, 1); ++shift) {
            std::vector<int> rot(n);
            for (size_t i = 0; i < n; ++i) rot[i] = flat[(i + shift) % n];
            if (!have || rot < best) {
                best = rot;
                have = true;
            }
        }
        if (n == 0) break;
    }
    return best;
}

inline bool same_relator(const FreeWord& a, const FreeWord& b) {
    return cyclic_canonical(a) == cyclic_canonical(b);
}

}  // namespace heapknot

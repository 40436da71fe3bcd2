#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace heapknot {

// Braid letter: position in [1, strands) and a crossing sign.
struct BraidLetter {
    int pos;
    int sign;
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    // Permutation taking a strand's top position to its bottom position.
    std::vector<int> permutation() const {
        std::vector<int> strand_at(strands);
        for (int i = 0; i < strands; ++i) strand_at[i] = i;
        for (const auto& l : letters) std::swap(strand_at[l.pos - 1], strand_at[l.pos]);
        std::vector<int> perm(strands);
        for (int slot = 0; slot < strands; ++slot) perm[strand_at[slot]] = slot;
        return perm;
    }
};

// Where a Boltzmann weight lives: a braid letter or a framing kink.
struct CrossingSite {
    enum Kind { Letter, Kink };
    Kind kind;
    int sign;
    int letter_index = -1;  // for letters
    int component = -1;     // for kinks
    int kink_index = -1;
    int strand = -1;        // kink placement strand (0-based)
    int under_component = -1;
};

struct FramedLink {
    BraidWord braid;
    std::vector<long> framings;              // one per component
    std::vector<std::vector<int>> components;  // strand cycles, by minimal strand
    std::vector<int> component_of_strand;
    // Optional override: kink placement strand per component (0-based).
    // Defaults to each component's minimal strand.
    std::vector<int> kink_strand;

    int strand_count() const { return braid.strands; }
    int component_count() const { return static_cast<int>(components.size()); }

    long total_sites() const {
        long n = static_cast<long>(braid.letters.size());
        for (long f : framings) n += std::labs(f);
        return n;
    }
};

inline BraidWord parse_braid_word(const std::string& text, int strands) {
    if (strands < 1) throw std::invalid_argument("strands must be >= 1");
    BraidWord w;
    w.strands = strands;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int k;
        try {
            size_t used = 0;
            k = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad braid letter: " + tok);
        }
        if (k == 0 || std::abs(k) >= strands)
            throw std::invalid_argument("braid letter out of range: " + tok);
        w.letters.push_back({std::abs(k), k > 0 ? 1 : -1});
    }
    return w;
}

inline FramedLink parse_link(const std::string& braid_text, int strands,
                             const std::vector<long>& framings) {
    FramedLink link;
    link.braid = parse_braid_word(braid_text, strands);
    std::vector<int> perm = link.braid.permutation();
    std::vector<char> seen(strands, 0);
    link.component_of_strand.assign(strands, -1);
    for (int s = 0; s < strands; ++s) {
        if (seen[s]) continue;
        std::vector<int> cycle;
        for (int t = s; !seen[t]; t = perm[t]) {
            seen[t] = 1;
            cycle.push_back(t);
            link.component_of_strand[t] = static_cast<int>(link.components.size());
        }
        link.components.push_back(std::move(cycle));
    }
    if (framings.size() != link.components.size())
        throw std::invalid_argument("framing count " + std::to_string(framings.size()) +
                                    " does not match component count " +
                                    std::to_string(link.components.size()));
    link.framings = framings;
    link.kink_strand.resize(link.components.size());
    for (size_t c = 0; c < link.components.size(); ++c)
        link.kink_strand[c] = link.components[c].front();
    return link;
}

// All weight-carrying sites: braid letters in word order, then each
// component's kinks. Under-components for letters come from tracking which
// top strand occupies the under slot at that height.
inline std::vector<CrossingSite> crossing_sites(const FramedLink& link) {
    std::vector<CrossingSite> sites;
    std::vector<int> pos_of(link.strand_count());
    std::vector<int> strand_at(link.strand_count());
    for (int i = 0; i < link.strand_count(); ++i) pos_of[i] = strand_at[i] = i;
    for (size_t li = 0; li < link.braid.letters.size(); ++li) {
        const auto& l = link.braid.letters[li];
        CrossingSite s;
        s.kind = CrossingSite::Letter;
        s.sign = l.sign;
        s.letter_index = static_cast<int>(li);
        // positive: under enters on the left slot; negative: on the right
        int under_slot = l.sign > 0 ? l.pos - 1 : l.pos;
        s.under_component = link.component_of_strand[strand_at[under_slot]];
        sites.push_back(s);
        std::swap(strand_at[l.pos - 1], strand_at[l.pos]);
    }
    for (int c = 0; c < link.component_count(); ++c) {
        long f = link.framings[c];
        for (long k = 0; k < std::labs(f); ++k) {
            CrossingSite s;
            s.kind = CrossingSite::Kink;
            s.sign = f > 0 ? 1 : -1;
            s.component = c;
            s.kink_index = static_cast<int>(k);
            s.strand = link.kink_strand[c];
            s.under_component = c;
            sites.push_back(s);
        }
    }
    return sites;
}

inline long writhe(const FramedLink& link) {
    long w = 0;
    for (const auto& l : link.braid.letters) w += l.sign;
    return w;
}

}  // namespace heapknot

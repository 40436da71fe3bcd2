#pragma once

#include <cstdlib>
#include <thread>

#include "braid.hpp"
#include "group.hpp"

namespace heapknot {

// Pair of labels on a doubled strand.
struct LabelPair {
    int p, q;
    bool operator==(const LabelPair& o) const { return p == o.p && q == o.q; }
};

using LabelState = std::vector<LabelPair>;

// Everything the state sum needs from one crossing of one coloring.
struct SiteRecord {
    CrossingSite::Kind kind;
    int sign;
    int under_component;
    LabelPair under_in;
    LabelPair under_out;
    LabelPair over;  // over pair for letters; see kink conventions below
};

struct Coloring {
    LabelState top;
    std::vector<SiteRecord> records;  // aligned with crossing_sites order
};

namespace color_detail {

// positive: ((x,y),(u,v)) -> ((u,v),(x u'v, y u'v)); negative is its inverse.
inline void apply_letter(const FiniteGroup& X, LabelState& s, const BraidLetter& l,
                         SiteRecord* rec) {
    const int i = l.pos - 1;
    if (l.sign > 0) {
        LabelPair under = s[i], over = s[i + 1];
        int t = X.op(X.inv[over.p], over.q);
        LabelPair out{X.op(under.p, t), X.op(under.q, t)};
        s[i] = over;
        s[i + 1] = out;
        if (rec) *rec = {CrossingSite::Letter, +1, -1, under, out, over};
    } else {
        LabelPair over = s[i], under = s[i + 1];
        int t = X.op(X.inv[over.q], over.p);
        LabelPair out{X.op(under.p, t), X.op(under.q, t)};
        s[i] = out;
        s[i + 1] = over;
        if (rec) *rec = {CrossingSite::Letter, -1, -1, under, out, over};
    }
}

// Positive kink: (p,q) -> (p a, q a) with a = p^-1 q; the outgoing pair is the
// over-arc. Negative kink: (p,q) -> (p a^-1, q a^-1); the incoming pair is the
// over-arc. Both leave a = p^-1 q unchanged.
inline void apply_kink(const FiniteGroup& X, LabelPair& pr, int sign, SiteRecord* rec) {
    int a = X.op(X.inv[pr.p], pr.q);
    if (sign < 0) a = X.inv[a];
    LabelPair out{X.op(pr.p, a), X.op(pr.q, a)};
    if (rec) {
        LabelPair over = sign > 0 ? out : pr;
        *rec = {CrossingSite::Kink, sign, -1, pr, out, over};
    }
    pr = out;
}

}  // namespace color_detail

// One pass through all sites: kinks at the top of their strands, then braid
// letters. Records, if requested, land at crossing_sites positions.
inline LabelState propagate(const FiniteGroup& X, const FramedLink& link, LabelState state,
                            const std::vector<CrossingSite>* sites = nullptr,
                            std::vector<SiteRecord>* records = nullptr) {
    if (records) records->resize(sites->size());
    const size_t nletters = link.braid.letters.size();
    if (sites) {
        for (size_t si = nletters; si < sites->size(); ++si) {
            const auto& s = (*sites)[si];
            color_detail::apply_kink(X, state[s.strand], s.sign,
                                     records ? &(*records)[si] : nullptr);
            if (records) (*records)[si].under_component = s.under_component;
        }
    } else {
        for (int c = 0; c < link.component_count(); ++c) {
            long f = link.framings[c];
            for (long k = 0; k < std::labs(f); ++k)
                color_detail::apply_kink(X, state[link.kink_strand[c]], f > 0 ? 1 : -1, nullptr);
        }
    }
    for (size_t li = 0; li < nletters; ++li) {
        color_detail::apply_letter(X, state, link.braid.letters[li],
                                   records ? &(*records)[li] : nullptr);
        if (records) (*records)[li].under_component = (*sites)[li].under_component;
    }
    return state;
}

inline long long default_state_budget() {
    if (const char* env = std::getenv("HEAPKNOT_STATE_BUDGET")) return std::atoll(env);
    return 100000000LL;  // 1e8
}

inline long long coloring_state_count(const FramedLink& link, const FiniteGroup& X) {
    long long total = 1;
    for (int i = 0; i < 2 * link.strand_count(); ++i) {
        if (total > default_state_budget() / X.order + 1) return -1;
        total *= X.order;
    }
    return total;
}

// Brute force over all top label states; a coloring is a fixed point of the
// full propagation. Partitioned across workers, merged in index order.
inline std::vector<Coloring> enumerate_colorings(const FiniteGroup& X, const FramedLink& link,
                                                 int workers = 0) {
    long long total = coloring_state_count(link, X);
    if (total < 0) throw std::runtime_error("coloring state space exceeds budget");
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw ? static_cast<int>(hw) : 1;
    }
    const int n = link.strand_count();
    std::vector<CrossingSite> sites = crossing_sites(link);

    auto decode = [&](long long idx) {
        LabelState s(n);
        for (int i = n - 1; i >= 0; --i) {
            s[i].q = static_cast<int>(idx % X.order);
            idx /= X.order;
            s[i].p = static_cast<int>(idx % X.order);
            idx /= X.order;
        }
        return s;
    };

    std::vector<std::vector<long long>> found(workers);
    auto scan = [&](int w) {
        long long lo = total * w / workers, hi = total * (w + 1) / workers;
        LabelState state(n);
        for (long long idx = lo; idx < hi; ++idx) {
            LabelState top = decode(idx);
            state = propagate(X, link, top);
            if (state == top) found[w].push_back(idx);
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }

    std::vector<Coloring> out;
    for (int w = 0; w < workers; ++w)
        for (long long idx : found[w]) {
            Coloring c;
            c.top = decode(idx);
            propagate(X, link, c.top, &sites, &c.records);
            out.push_back(std::move(c));
        }
    return out;
}

// Per-component flags; true = monochromatic. The two labels of a component
// agree on one of its arcs iff they agree on all of them.
inline std::vector<bool> classify(const FramedLink& link, const Coloring& c) {
    std::vector<bool> mono(link.component_count());
    for (int k = 0; k < link.component_count(); ++k) {
        int s = link.components[k].front();
        mono[k] = c.top[s].p == c.top[s].q;
    }
    for (const auto& r : c.records) {
        bool in_mono = r.under_in.p == r.under_in.q;
        bool out_mono = r.under_out.p == r.under_out.q;
        if (in_mono != mono[r.under_component] || out_mono != mono[r.under_component])
            throw std::logic_error("mono/bicolor flag inconsistent along a component");
    }
    return mono;
}

struct WirtingerCheck {
    std::vector<int> meridians;  // p^-1 q of the incoming under pair, per site
    bool ok = true;
};

// Meridian images and the conjugation identity at every site:
// (u'v)^-1 (x'y)(u'v) must equal the outgoing under pair's x'y.
inline WirtingerCheck wirtinger_images(const FiniteGroup& X, const Coloring& c) {
    WirtingerCheck w;
    for (const auto& r : c.records) {
        int m_in = X.op(X.inv[r.under_in.p], r.under_in.q);
        int m_out = X.op(X.inv[r.under_out.p], r.under_out.q);
        int t = X.op(X.inv[r.over.p], r.over.q);
        if (r.sign < 0) t = X.inv[t];
        if (X.op(X.op(X.inv[t], m_in), t) != m_out) w.ok = false;
        w.meridians.push_back(m_in);
    }
    return w;
}

}  // namespace heapknot

// Copyright 2026 The mmcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmcodes/confinement.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

#include "mmcodes/enumeration.h"
#include "mmcodes/errors.h"
#include "mmcodes/gf2.h"

namespace mmcodes {

std::string entry_kind_name(EntryKind kind) {
    switch (kind) {
        case EntryKind::Exact:
            return "exact";
        case EntryKind::LowerBound:
            return "lower_bound";
        case EntryKind::UpperBound:
            return "upper_bound";
        case EntryKind::Heuristic:
            return "heuristic";
        case EntryKind::None:
            return "none";
    }
    return "none";
}

std::vector<std::optional<size_t>> ConfinementProfile::values() const {
    std::vector<std::optional<size_t>> out;
    for (const auto &e : entries) {
        out.push_back(e.value);
    }
    return out;
}

namespace {

constexpr size_t kInf = std::numeric_limits<size_t>::max();

std::vector<uint64_t> pack_columns(const BitMatrix &m, size_t words) {
    std::vector<uint64_t> out(m.cols() * words, 0);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row_support(r)) {
            out[c * words + r / kWordBits] |= uint64_t{1} << (r % kWordBits);
        }
    }
    return out;
}

// Open-addressing map from coset key to the least weight seen with that key.
class CosetTable {
  public:
    CosetTable(size_t key_words, uint64_t expected) : key_words_(std::max<size_t>(1, key_words)) {
        size_t cap = 16;
        while (cap < 2 * expected) {
            cap <<= 1;
        }
        mask_ = cap - 1;
        keys_.assign(cap * key_words_, 0);
        weights_.assign(cap, kEmpty);
    }

    void insert_if_absent(std::span<const uint64_t> key, size_t weight) {
        size_t slot = probe(key);
        if (weights_[slot] == kEmpty) {
            std::copy(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * key_words_));
            weights_[slot] = static_cast<uint8_t>(weight);
        }
    }

    std::optional<size_t> lookup(std::span<const uint64_t> key) const {
        size_t slot = probe(key);
        if (weights_[slot] == kEmpty) {
            return std::nullopt;
        }
        return weights_[slot];
    }

  private:
    static constexpr uint8_t kEmpty = 0xFF;

    size_t probe(std::span<const uint64_t> key) const {
        uint64_t h = 0x9E3779B97F4A7C15ULL;
        for (uint64_t w : key) {
            h = mix64(h ^ w);
        }
        size_t slot = static_cast<size_t>(h) & mask_;
        while (weights_[slot] != kEmpty &&
               !std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slot * key_words_))) {
            slot = (slot + 1) & mask_;
        }
        return slot;
    }

    size_t key_words_;
    size_t mask_ = 0;
    std::vector<uint64_t> keys_;
    std::vector<uint8_t> weights_;
};

struct Setup {
    size_t n = 0;
    size_t syn_words = 0;
    size_t key_words = 0;
    std::vector<uint64_t> h_cols;
    std::vector<uint64_t> q_cols;
    std::vector<std::vector<size_t>> neighbors;

    std::span<const uint64_t> h_col(size_t c) const { return {h_cols.data() + c * syn_words, syn_words}; }
    std::span<const uint64_t> q_col(size_t c) const { return {q_cols.data() + c * key_words, key_words}; }
};

Setup make_setup(const BitMatrix &h, const BitMatrix &g) {
    Setup s;
    s.n = h.cols();
    s.syn_words = words_for_bits(h.rows());
    BitMatrix q = kernel_basis(g);
    s.key_words = std::max<size_t>(1, words_for_bits(q.rows()));
    s.h_cols = pack_columns(h, s.syn_words);
    s.q_cols = pack_columns(q, s.key_words);
    s.neighbors.resize(s.n);
    for (size_t r = 0; r < h.rows(); r++) {
        auto support = h.row_support(r);
        for (size_t a : support) {
            for (size_t b : support) {
                if (a != b) {
                    s.neighbors[a].push_back(b);
                }
            }
        }
    }
    for (auto &nb : s.neighbors) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return s;
}

// Keys of every vector of weight <= max_weight, each stored with its least weight.
CosetTable build_table(const Setup &s, size_t max_weight) {
    CosetTable table(s.key_words, binomial_sum(s.n, max_weight));
    std::vector<uint64_t> stack((max_weight + 1) * s.key_words, 0);
    table.insert_if_absent({stack.data(), s.key_words}, 0);
    for (size_t w = 1; w <= max_weight && w <= s.n; w++) {
        auto rec = [&](auto &self, size_t depth, size_t start) -> void {
            std::span<const uint64_t> prev(stack.data() + (depth - 1) * s.key_words, s.key_words);
            std::span<uint64_t> cur(stack.data() + depth * s.key_words, s.key_words);
            for (size_t i = start; i + (w - depth) <= s.n; i++) {
                auto c = s.q_col(i);
                for (size_t k = 0; k < s.key_words; k++) {
                    cur[k] = prev[k] ^ c[k];
                }
                if (depth == w) {
                    table.insert_if_absent(cur, w);
                } else {
                    self(self, depth + 1, i + 1);
                }
            }
        };
        rec(rec, 1, 0);
    }
    return table;
}

struct ConnectedMins {
    std::vector<size_t> nonzero;
    std::vector<bool> zero;

    explicit ConnectedMins(size_t w_max) : nonzero(w_max + 1, kInf), zero(w_max + 1, false) {}

    void merge(const ConnectedMins &o) {
        for (size_t w = 0; w < nonzero.size(); w++) {
            nonzero[w] = std::min(nonzero[w], o.nonzero[w]);
            zero[w] = zero[w] || o.zero[w];
        }
    }
};

struct Aborted {};

// Enumerates every connected support of size <= w_max containing `root` as its
// smallest vertex (ESU enumeration), updating `mins` with irreducible errors.
class ConnectedEnumerator {
  public:
    ConnectedEnumerator(const Setup &s, const CosetTable &table, size_t w_max, std::atomic<uint64_t> &visited,
                        uint64_t limit)
        : s_(s),
          table_(table),
          w_max_(w_max),
          visited_(visited),
          limit_(limit),
          mark_(s.n, 0),
          syn_((w_max + 1) * s.syn_words, 0),
          key_((w_max + 1) * s.key_words, 0) {}

    void run(size_t root, ConnectedMins &mins) {
        root_ = root;
        mins_ = &mins;
        std::vector<size_t> ext;
        for (size_t u : s_.neighbors[root]) {
            if (u > root) {
                ext.push_back(u);
            }
        }
        add(root, 1);
        extend(1, ext);
        remove(root);
    }

  private:
    void add(size_t v, size_t size) {
        mark_[v]++;
        for (size_t u : s_.neighbors[v]) {
            mark_[u]++;
        }
        auto prev_s = syn(size - 1);
        auto cur_s = syn(size);
        auto c = s_.h_col(v);
        for (size_t k = 0; k < cur_s.size(); k++) {
            cur_s[k] = prev_s[k] ^ c[k];
        }
        auto prev_k = key(size - 1);
        auto cur_k = key(size);
        auto q = s_.q_col(v);
        for (size_t k = 0; k < cur_k.size(); k++) {
            cur_k[k] = prev_k[k] ^ q[k];
        }
    }

    void remove(size_t v) {
        mark_[v]--;
        for (size_t u : s_.neighbors[v]) {
            mark_[u]--;
        }
    }

    void record(size_t size) {
        if (++local_visits_ % 4096 == 0) {
            if (visited_.fetch_add(4096) + 4096 > limit_) {
                throw Aborted{};
            }
        }
        auto k = key(size);
        if (words_zero(k)) {
            return;
        }
        auto found = table_.lookup(k);
        if (found && *found < size) {
            return;
        }
        size_t sw = popcount_words(syn(size));
        if (sw == 0) {
            mins_->zero[size] = true;
        } else if (sw < mins_->nonzero[size]) {
            mins_->nonzero[size] = sw;
        }
    }

    void extend(size_t size, std::vector<size_t> ext) {
        record(size);
        if (size == w_max_) {
            return;
        }
        while (!ext.empty()) {
            size_t w = ext.back();
            ext.pop_back();
            std::vector<size_t> next = ext;
            for (size_t u : s_.neighbors[w]) {
                if (u > root_ && mark_[u] == 0) {
                    next.push_back(u);
                }
            }
            add(w, size + 1);
            extend(size + 1, std::move(next));
            remove(w);
        }
    }

    std::span<uint64_t> syn(size_t size) { return {syn_.data() + size * s_.syn_words, s_.syn_words}; }
    std::span<uint64_t> key(size_t size) { return {key_.data() + size * s_.key_words, s_.key_words}; }

    const Setup &s_;
    const CosetTable &table_;
    size_t w_max_;
    std::atomic<uint64_t> &visited_;
    uint64_t limit_;
    uint64_t local_visits_ = 0;
    size_t root_ = 0;
    ConnectedMins *mins_ = nullptr;
    std::vector<uint32_t> mark_;
    std::vector<uint64_t> syn_;
    std::vector<uint64_t> key_;
};

// Least total syndrome weight over combinations of at least two connected
// pieces, at least one with a nonzero syndrome, whose weights sum to w.
std::vector<size_t> closure_of(const ConnectedMins &mins, size_t w_max) {
    // best[w][has_nonzero][min(pieces, 2)]
    std::vector<std::array<std::array<size_t, 3>, 2>> best(w_max + 1);
    for (auto &a : best) {
        for (auto &b : a) {
            b.fill(kInf);
        }
    }
    best[0][0][0] = 0;
    for (size_t w = 1; w <= w_max; w++) {
        for (size_t j = 1; j <= w; j++) {
            for (size_t f = 0; f < 2; f++) {
                for (size_t c = 0; c < 3; c++) {
                    size_t base = best[w - j][f][c];
                    if (base == kInf) {
                        continue;
                    }
                    size_t nc = std::min<size_t>(c + 1, 2);
                    if (mins.nonzero[j] != kInf) {
                        best[w][1][nc] = std::min(best[w][1][nc], base + mins.nonzero[j]);
                    }
                    if (mins.zero[j]) {
                        best[w][f][nc] = std::min(best[w][f][nc], base);
                    }
                }
            }
        }
    }
    std::vector<size_t> out(w_max + 1, kInf);
    for (size_t w = 1; w <= w_max; w++) {
        out[w] = best[w][1][2];
    }
    return out;
}

std::optional<ConfinementProfile> exact_profile(const Setup &s, const ConfinementOptions &opts) {
    uint64_t limit = opts.enumeration_budget ? opts.enumeration_budget : enumeration_budget();
    CosetTable table = build_table(s, opts.w_max - 1);
    std::atomic<uint64_t> visited{0};
    std::atomic<size_t> next{0};
    std::atomic<bool> aborted{false};
    size_t workers = std::max<size_t>(1, opts.workers);
    std::vector<ConnectedMins> partial(workers, ConnectedMins(opts.w_max));

    auto work = [&](size_t worker) {
        ConnectedEnumerator e(s, table, opts.w_max, visited, limit);
        try {
            while (!aborted.load()) {
                size_t root = next.fetch_add(1);
                if (root >= s.n) {
                    return;
                }
                e.run(root, partial[worker]);
            }
        } catch (const Aborted &) {
            aborted.store(true);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < workers; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (aborted.load()) {
        return std::nullopt;
    }
    ConnectedMins mins(opts.w_max);
    for (const auto &p : partial) {
        mins.merge(p);
    }
    auto closure = closure_of(mins, opts.w_max);

    ConfinementProfile profile;
    profile.mode = ConfinementMode::Exact;
    for (size_t w = 1; w <= opts.w_max; w++) {
        ConfinementEntry entry;
        entry.weight = w;
        if (mins.nonzero[w] != kInf && mins.nonzero[w] <= closure[w]) {
            entry.value = mins.nonzero[w];
            entry.kind = EntryKind::Exact;
        } else if (closure[w] != kInf) {
            entry.value = closure[w];
            entry.kind = EntryKind::LowerBound;
        } else {
            entry.kind = EntryKind::None;
        }
        profile.entries.push_back(entry);
    }
    return profile;
}

ConfinementProfile cluster_profile(const Setup &s, const ConfinementOptions &opts) {
    size_t table_weight = 0;
    while (table_weight + 1 < opts.w_max && binomial_sum(s.n, table_weight + 1) <= opts.table_budget) {
        table_weight++;
    }
    CosetTable table = build_table(s, table_weight);
    std::vector<size_t> best(opts.w_max + 1, kInf);
    Rng rng(derive_seed(opts.seed, 0x636c7573ULL));
    std::vector<uint64_t> syn(s.syn_words), key(s.key_words);
    std::vector<uint8_t> in_set(s.n, 0);
    std::vector<size_t> members;
    std::vector<size_t> frontier;

    for (size_t sample = 0; sample < opts.samples && s.n > 0; sample++) {
        std::fill(syn.begin(), syn.end(), 0);
        std::fill(key.begin(), key.end(), 0);
        members.clear();
        frontier.clear();
        size_t v = static_cast<size_t>(rng.below(s.n));
        for (size_t size = 1; size <= opts.w_max; size++) {
            members.push_back(v);
            in_set[v] = 1;
            xor_words(syn, s.h_col(v));
            xor_words(key, s.q_col(v));
            for (size_t u : s.neighbors[v]) {
                if (!in_set[u]) {
                    frontier.push_back(u);
                }
            }
            if (!words_zero(key)) {
                auto found = table.lookup(key);
                size_t sw = popcount_words(syn);
                if (!(found && *found < size) && sw > 0) {
                    best[size] = std::min(best[size], sw);
                }
            }
            frontier.erase(std::remove_if(frontier.begin(), frontier.end(), [&](size_t u) { return in_set[u] != 0; }),
                           frontier.end());
            if (frontier.empty()) {
                break;
            }
            v = frontier[static_cast<size_t>(rng.below(frontier.size()))];
        }
        for (size_t m : members) {
            in_set[m] = 0;
        }
    }

    ConfinementProfile profile;
    profile.mode = ConfinementMode::Cluster;
    for (size_t w = 1; w <= opts.w_max; w++) {
        ConfinementEntry entry;
        entry.weight = w;
        if (best[w] != kInf) {
            entry.value = best[w];
            entry.kind = w - 1 <= table_weight ? EntryKind::UpperBound : EntryKind::Heuristic;
        }
        profile.entries.push_back(entry);
    }
    return profile;
}

}  // namespace

ConfinementProfile confinement(const BitMatrix &h, const BitMatrix &g, const ConfinementOptions &opts) {
    if (h.cols() != g.cols()) {
        throw DimensionError("syndrome matrix has " + std::to_string(h.cols()) + " columns but stabilizer matrix has " +
                             std::to_string(g.cols()));
    }
    if (opts.w_max < 1 || opts.w_max > 200) {
        throw std::invalid_argument("confinement weight must be in 1..200");
    }
    Setup s = make_setup(h, g);
    std::optional<std::string> warning;
    if (opts.mode == ConfinementMode::Exact) {
        uint64_t table_size = binomial_sum(s.n, opts.w_max - 1);
        if (table_size <= opts.table_budget) {
            auto profile = exact_profile(s, opts);
            if (profile) {
                return *profile;
            }
            warning = "connected enumeration exceeded the budget; cluster-mode bounds reported";
        } else {
            warning = "coset table of " + std::to_string(table_size) + " entries exceeds the budget of " +
                      std::to_string(opts.table_budget) + "; cluster-mode bounds reported";
        }
    }
    ConfinementProfile profile = cluster_profile(s, opts);
    profile.warning = warning;
    return profile;
}

}  // namespace mmcodes

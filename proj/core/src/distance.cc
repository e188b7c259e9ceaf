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

#include "mmcodes/distance.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <vector>

#include "mmcodes/enumeration.h"
#include "mmcodes/errors.h"
#include "mmcodes/gf2.h"

namespace mmcodes {

DistanceBound combine(const DistanceBound &a, const DistanceBound &b) {
    DistanceBound out;
    out.lower = std::max(a.lower, b.lower);
    const DistanceBound *best = nullptr;
    if (a.upper && (!b.upper || *a.upper <= *b.upper)) {
        best = &a;
    } else if (b.upper) {
        best = &b;
    }
    if (best != nullptr) {
        out.upper = best->upper;
        out.witness = best->witness;
    }
    return out;
}

namespace {

void require_same_width(const BitMatrix &check, const BitMatrix &trivial) {
    if (check.cols() != trivial.cols()) {
        throw DimensionError("check matrix has " + std::to_string(check.cols()) + " columns but trivial matrix has " +
                             std::to_string(trivial.cols()));
    }
}

uint64_t hash_words(std::span<const uint64_t> words) {
    uint64_t h = 0x2545F4914F6CDD1DULL;
    for (uint64_t w : words) {
        h = mix64(h ^ w);
    }
    return h;
}

// Columns of a matrix packed as bit vectors over its rows, indexed by content.
class ColumnTable {
  public:
    explicit ColumnTable(const BitMatrix &m) : words_(words_for_bits(m.rows())), data_(m.cols() * words_, 0) {
        for (size_t r = 0; r < m.rows(); r++) {
            for (size_t c : m.row_support(r)) {
                data_[c * words_ + r / kWordBits] |= uint64_t{1} << (r % kWordBits);
            }
        }
        for (size_t c = 0; c < m.cols(); c++) {
            buckets_[hash_words(col(c))].push_back(c);
        }
    }

    size_t words() const { return words_; }
    std::span<const uint64_t> col(size_t c) const { return {data_.data() + c * words_, words_}; }

    /// Calls fn(j) for every column j > after equal to `s`, in increasing order,
    /// until fn returns true.
    template <typename Fn>
    bool find_equal(std::span<const uint64_t> s, size_t after, Fn &&fn) const {
        auto it = buckets_.find(hash_words(s));
        if (it == buckets_.end()) {
            return false;
        }
        const auto &list = it->second;
        for (auto p = std::upper_bound(list.begin(), list.end(), after); p != list.end(); ++p) {
            if (std::equal(s.begin(), s.end(), col(*p).begin()) && fn(*p)) {
                return true;
            }
        }
        return false;
    }

  private:
    size_t words_;
    std::vector<uint64_t> data_;
    std::unordered_map<uint64_t, std::vector<size_t>> buckets_;
};

// Depth-first search over supports of fixed weight that start at `first`.
class WeightSearch {
  public:
    WeightSearch(const ColumnTable &cols, const RrefCache &trivial, size_t n, size_t weight)
        : cols_(cols),
          trivial_(trivial),
          n_(n),
          weight_(weight),
          syndromes_(weight * cols.words(), 0),
          support_(weight),
          vec_(words_for_bits(n), 0),
          scratch_(trivial.rref.words_per_row(), 0) {}

    /// Lexicographically smallest qualifying support starting at `first`, if any.
    std::optional<std::vector<size_t>> run(size_t first) {
        support_[0] = first;
        auto s0 = level(0);
        auto c = cols_.col(first);
        std::copy(c.begin(), c.end(), s0.begin());
        if (weight_ == 1) {
            if (words_zero(s0) && accept()) {
                return support_;
            }
            return std::nullopt;
        }
        if (descend(1)) {
            return support_;
        }
        return std::nullopt;
    }

  private:
    std::span<uint64_t> level(size_t k) { return {syndromes_.data() + k * cols_.words(), cols_.words()}; }

    bool descend(size_t depth) {
        auto prev = level(depth - 1);
        if (depth + 1 == weight_) {
            return cols_.find_equal(prev, support_[depth - 1], [&](size_t j) {
                support_[depth] = j;
                return accept();
            });
        }
        auto cur = level(depth);
        size_t last_start = n_ - (weight_ - depth);
        for (size_t i = support_[depth - 1] + 1; i <= last_start; i++) {
            support_[depth] = i;
            auto c = cols_.col(i);
            for (size_t w = 0; w < cur.size(); w++) {
                cur[w] = prev[w] ^ c[w];
            }
            if (descend(depth + 1)) {
                return true;
            }
        }
        return false;
    }

    bool accept() {
        std::fill(vec_.begin(), vec_.end(), 0);
        for (size_t i : support_) {
            vec_[i / kWordBits] |= uint64_t{1} << (i % kWordBits);
        }
        return !in_rowspace(trivial_, vec_, scratch_);
    }

    const ColumnTable &cols_;
    const RrefCache &trivial_;
    size_t n_;
    size_t weight_;
    std::vector<uint64_t> syndromes_;
    std::vector<size_t> support_;
    std::vector<uint64_t> vec_;
    std::vector<uint64_t> scratch_;
};

}  // namespace

DistanceBound min_weight_exhaustive(const BitMatrix &check, const BitMatrix &trivial, const ExhaustiveOptions &opts) {
    require_same_width(check, trivial);
    size_t n = check.cols();
    size_t w_max = std::min(opts.w_max, n);
    uint64_t budget = opts.budget ? opts.budget : enumeration_budget();
    uint64_t cost = binomial_sum(n, w_max);
    if (cost > budget) {
        throw BudgetError("exhaustive search to weight " + std::to_string(w_max) + " over " + std::to_string(n) +
                          " bits needs " + std::to_string(cost) + " candidates, above the budget of " +
                          std::to_string(budget) + "; lower the weight or raise MMCODES_BUDGET");
    }

    ColumnTable cols(check);
    RrefCache trivial_cache = rref(trivial);
    size_t workers = std::max<size_t>(1, opts.workers);

    for (size_t w = 1; w <= w_max; w++) {
        std::atomic<size_t> next{0};
        std::mutex mu;
        size_t best_first = n;
        std::vector<size_t> best_support;
        std::atomic<size_t> best_seen{n};

        auto work = [&]() {
            WeightSearch search(cols, trivial_cache, n, w);
            while (true) {
                size_t first = next.fetch_add(1);
                if (first + w > n || first > best_seen.load()) {
                    return;
                }
                auto found = search.run(first);
                if (found) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (first < best_first) {
                        best_first = first;
                        best_support = *found;
                        best_seen.store(first);
                    }
                    return;
                }
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (size_t t = 0; t < workers; t++) {
                pool.emplace_back(work);
            }
            for (auto &th : pool) {
                th.join();
            }
        }
        if (!best_support.empty()) {
            DistanceBound out;
            out.lower = w;
            out.upper = w;
            out.witness = BitVector::from_support(n, best_support);
            return out;
        }
    }
    DistanceBound out;
    out.lower = w_max + 1;
    return out;
}

DistanceBound min_weight_randomized(const BitMatrix &check, const BitMatrix &trivial, const RandomizedOptions &opts) {
    require_same_width(check, trivial);
    size_t n = check.cols();
    RrefCache base = rref(check);
    size_t r = base.rank;
    std::vector<std::vector<size_t>> col_rows(n);
    for (size_t i = 0; i < r; i++) {
        for (size_t c : base.rref.row_support(i)) {
            col_rows[c].push_back(i);
        }
    }
    RrefCache trivial_cache = rref(trivial);
    size_t workers = std::max<size_t>(1, std::min(opts.workers, std::max<size_t>(1, opts.iterations)));

    struct Best {
        size_t weight = SIZE_MAX;
        BitVector witness;
    };
    std::vector<Best> results(workers);

    auto work = [&](size_t worker) {
        Rng rng(derive_seed(opts.seed, worker));
        Best &best = results[worker];
        std::vector<size_t> perm(n);
        std::vector<uint64_t> scratch(trivial_cache.rref.words_per_row(), 0);
        size_t rw = std::max<size_t>(1, words_for_bits(r));
        std::vector<uint64_t> fcols;
        std::vector<size_t> free_cols;
        std::vector<size_t> pivot_of_row;

        auto consider = [&](size_t weight, std::span<const size_t> frees, std::span<const uint64_t> bits) {
            BitVector v(n);
            for (size_t f : frees) {
                v.flip(perm[f]);
            }
            for (size_t i = 0; i < r; i++) {
                if ((bits[i / kWordBits] >> (i % kWordBits)) & 1) {
                    v.flip(perm[pivot_of_row[i]]);
                }
            }
            if (!in_rowspace(trivial_cache, v.words(), scratch)) {
                best.weight = weight;
                best.witness = std::move(v);
            }
        };

        for (size_t it = worker; it < opts.iterations; it += workers) {
            if (opts.stop_at && best.weight <= *opts.stop_at) {
                break;
            }
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            BitMatrix permuted(r, n);
            for (size_t p = 0; p < n; p++) {
                for (size_t i : col_rows[perm[p]]) {
                    permuted.set(i, p);
                }
            }
            RrefCache cache = rref(std::move(permuted));
            size_t rank = cache.rank;
            pivot_of_row = cache.pivot_cols;
            std::vector<bool> is_pivot(n, false);
            for (size_t p : cache.pivot_cols) {
                is_pivot[p] = true;
            }
            free_cols.clear();
            for (size_t p = 0; p < n; p++) {
                if (!is_pivot[p]) {
                    free_cols.push_back(p);
                }
            }
            size_t nf = free_cols.size();
            fcols.assign(nf * rw, 0);
            for (size_t i = 0; i < rank; i++) {
                auto row = cache.rref.row(i);
                for (size_t a = 0; a < nf; a++) {
                    size_t f = free_cols[a];
                    if ((row[f / kWordBits] >> (f % kWordBits)) & 1) {
                        fcols[a * rw + i / kWordBits] |= uint64_t{1} << (i % kWordBits);
                    }
                }
            }
            std::vector<uint64_t> pair(rw);
            for (size_t a = 0; a < nf; a++) {
                std::span<const uint64_t> fa(fcols.data() + a * rw, rw);
                size_t wa = 1 + popcount_words(fa);
                if (wa < best.weight) {
                    size_t frees[1] = {free_cols[a]};
                    consider(wa, frees, fa);
                }
                for (size_t b = a + 1; b < nf; b++) {
                    const uint64_t *fb = fcols.data() + b * rw;
                    size_t wb = 2;
                    for (size_t k = 0; k < rw; k++) {
                        wb += static_cast<size_t>(std::popcount(fa[k] ^ fb[k]));
                    }
                    if (wb < best.weight) {
                        for (size_t k = 0; k < rw; k++) {
                            pair[k] = fa[k] ^ fb[k];
                        }
                        size_t frees[2] = {free_cols[a], free_cols[b]};
                        consider(wb, frees, pair);
                    }
                }
            }
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

    DistanceBound out;
    out.lower = 1;
    size_t chosen = workers;
    for (size_t t = 0; t < workers; t++) {
        if (results[t].weight != SIZE_MAX && (chosen == workers || results[t].weight < results[chosen].weight)) {
            chosen = t;
        }
    }
    if (chosen != workers) {
        out.upper = results[chosen].weight;
        out.witness = results[chosen].witness;
    }
    return out;
}

}  // namespace mmcodes

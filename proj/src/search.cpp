#include "intersectra/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "intersectra/canonical.hpp"
#include "intersectra/combinatorics.hpp"
#include "intersectra/intersection.hpp"

namespace intersectra {
namespace {

constexpr std::int64_t kNoValue = std::numeric_limits<std::int64_t>::min();

// Dense bitset over candidate indices.
struct IndexBits {
  std::vector<std::uint64_t> w;

  IndexBits() = default;
  explicit IndexBits(int words) : w(words, 0) {}

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  int lowest() const {  // -1 when empty
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) return int(i * 64) + std::countr_zero(w[i]);
    return -1;
  }
  bool subset_of(const IndexBits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
};

void and_to(const IndexBits& a, const IndexBits& b, IndexBits& out) {
  for (std::size_t i = 0; i < a.w.size(); ++i) out.w[i] = a.w[i] & b.w[i];
}

// Immutable per-run data: candidate r-sets in colex order plus the
// compatibility (intersection) graph over them.
struct Problem {
  int n = 0, r = 0, k = 0;
  int m = 0;      // candidate count
  int words = 0;  // IndexBits word count
  bool bounding = false;  // objective mode (beta) vs plain enumeration
  bool symmetry = false;
  bool canon = false;  // ground size admits canonical normalization
  std::uint64_t budget = 0;
  bool verify_bounds = false;
  std::vector<std::uint64_t> cand;
  std::vector<IndexBits> nbr;  // intersecting candidates, self excluded
  IndexBits orbit_min;         // orbit-least sets under the first-member stabilizer
};

Problem make_problem(int n, int r, int k, const SearchConfig& cfg, bool bounding) {
  if (n < 1 || r < 1 || r > n) throw std::invalid_argument("parameter out of range");
  if (bounding && (k < 1 || k > r)) throw std::invalid_argument("parameter out of range");
  if (n > 64 || binomial(n, r) > 4096)
    throw std::invalid_argument("search instance too large");

  Problem p;
  p.n = n;
  p.r = r;
  p.k = k;
  p.bounding = bounding;
  p.symmetry = cfg.symmetry == Symmetry::on;
  p.canon = n <= kCanonicalizationLimit;
  if (p.symmetry && !p.canon) throw std::invalid_argument("canonicalization limit");
  if (bounding && cfg.report_all_optima && !p.canon)
    throw std::invalid_argument("canonicalization limit");
  p.budget = cfg.node_budget;
  p.verify_bounds = cfg.verify_bounds;

  for_each_rset(n, r, [&](const VSet& s) {
    p.cand.push_back(s.low_word());
    return true;
  });
  p.m = (int)p.cand.size();
  p.words = (p.m + 63) / 64;
  p.nbr.assign(p.m, IndexBits(p.words));
  for (int i = 0; i < p.m; ++i)
    for (int j = i + 1; j < p.m; ++j)
      if (p.cand[i] & p.cand[j]) {
        p.nbr[i].set(j);
        p.nbr[j].set(i);
      }

  // The stabilizer of the colex-least r-set permutes {1..r} and {r+1..n}
  // independently, so an orbit is determined by the head/tail split sizes and
  // its least member packs both parts as low as possible.
  p.orbit_min = IndexBits(p.words);
  for (int a = 1; a <= r; ++a) {
    int b = r - a;
    if (b > n - r) continue;
    std::uint64_t mask = a >= 64 ? ~0ull : (1ull << a) - 1;
    if (b > 0) mask |= ((1ull << b) - 1) << r;
    auto it = std::lower_bound(p.cand.begin(), p.cand.end(), mask);
    if (it != p.cand.end() && *it == mask) p.orbit_min.set(int(it - p.cand.begin()));
  }
  return p;
}

// One search subtree: decided members plus the undecided/excluded frontier.
struct Cell {
  std::vector<int> inc;
  IndexBits P, X;
};

class Worker {
 public:
  Worker(const Problem& p, const std::function<bool(const SetFamily&)>* visit,
         bool collect_classes)
      : p_(p),
        visit_(visit),
        collect_(collect_classes),
        fP_(p.m + 1, IndexBits(p.words)),
        fX_(p.m + 1, IndexBits(p.words)) {
    rows_.fill(0);
  }

  void run(const std::vector<int>& inc0, const IndexBits& P0, const IndexBits& X0) {
    inc_ = inc0;
    dfs(0, P0, X0);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool complete() const { return complete_; }
  bool has_witness() const { return wit_has_; }
  std::int64_t value() const { return best_; }
  const IsoInvariant& witness_invariant() const { return wit_inv_; }
  const std::vector<std::uint64_t>& witness_encoding() const { return wit_enc_; }
  const SetFamily& witness() const { return wit_rep_; }
  std::map<std::vector<std::uint64_t>, SetFamily>& classes() { return classes_; }

 private:
  std::int64_t dfs(int depth, const IndexBits& P, const IndexBits& X) {
    if (stopped_ || exhausted_) return kNoValue;
    ++nodes_;
    if (p_.budget != 0 && nodes_ > p_.budget && have_leaf_) {
      exhausted_ = true;
      complete_ = false;
      return kNoValue;
    }

    // A remembered exclusion compatible with everything still undecided
    // extends every completion below: no maximal family down here.
    for (std::size_t wi = 0; wi < X.w.size(); ++wi) {
      std::uint64_t xw = X.w[wi];
      while (xw) {
        int x = int(wi * 64) + std::countr_zero(xw);
        xw &= xw - 1;
        if (P.subset_of(p_.nbr[x])) return kNoValue;
      }
    }

    int q = P.lowest();
    if (q < 0) return leaf();

    std::int64_t bval = 0;
    if (p_.bounding) {
      bval = realized(&P);
      if (bval < best_) return kNoValue;  // strict, so tied optima survive
    }

    bool inc_ok = true, exc_ok = true;
    if (p_.symmetry) {
      if (inc_.empty()) {
        // Every isomorphism class has a member mapped onto the colex-least
        // r-set, so the root include is forced.
        inc_ok = q == 0;
        exc_ok = false;
      } else if (inc_.size() == 1) {
        // Minimizing over the first member's stabilizer makes the second
        // colex-least member orbit-least.
        inc_ok = p_.orbit_min.test(q);
      }
    }

    std::int64_t sub = kNoValue;
    IndexBits& cP = fP_[depth];
    IndexBits& cX = fX_[depth];
    if (inc_ok) {
      and_to(P, p_.nbr[q], cP);  // q is not its own neighbor, so q drops out
      and_to(X, p_.nbr[q], cX);
      inc_.push_back(q);
      sub = std::max(sub, dfs(depth + 1, cP, cX));
      inc_.pop_back();
    }
    if (exc_ok && !stopped_ && !exhausted_) {
      cP = P;
      cP.reset(q);
      cX = X;
      cX.set(q);
      sub = std::max(sub, dfs(depth + 1, cP, cX));
    }
    if (p_.bounding && p_.verify_bounds && sub != kNoValue && bval < sub)
      throw std::logic_error("node bound fell below subtree value");
    return sub;
  }

  std::int64_t leaf() {
    have_leaf_ = true;
    if (!p_.bounding) {
      emit_family();
      return 0;
    }
    std::int64_t v = realized(nullptr);
    if (v < best_) return v;
    SetFamily f = family();
    if (v > best_) {
      best_ = v;
      wit_has_ = false;
      classes_.clear();
    }
    IsoInvariant inv = iso_invariant(f);
    bool maybe_witness = !wit_has_ || !(wit_inv_ < inv);
    if (p_.canon) {
      if (collect_ || maybe_witness) {
        auto [form, rep] = canonicalize(f);
        if (collect_) classes_.emplace(form.encoding, rep);
        if (maybe_witness) offer_witness(inv, form.encoding, rep);
      }
    } else if (maybe_witness) {
      std::vector<std::uint64_t> enc;
      enc.reserve(f.size());
      for (const VSet& s : f) enc.push_back(s.low_word());
      offer_witness(inv, enc, f);
    }
    return v;
  }

  void offer_witness(const IsoInvariant& inv, const std::vector<std::uint64_t>& enc,
                     const SetFamily& rep) {
    if (!wit_has_ || inv < wit_inv_ || (inv == wit_inv_ && enc < wit_enc_)) {
      wit_has_ = true;
      wit_inv_ = inv;
      wit_enc_ = enc;
      wit_rep_ = rep;
    }
  }

  void emit_family() {
    SetFamily f = family();
    if (p_.symmetry) {
      auto [form, rep] = canonicalize(f);
      if (!seen_.insert(std::move(form.encoding)).second) return;
      f = std::move(rep);
    }
    if (visit_ != nullptr && !(*visit_)(f)) {
      stopped_ = true;
      complete_ = false;
    }
  }

  SetFamily family() const {
    std::vector<VSet> ms;
    ms.reserve(inc_.size());
    for (int i : inc_) ms.push_back(VSet::from_mask(p_.n, p_.cand[i]));
    return SetFamily::of(p_.n, std::move(ms), p_.r);
  }

  // k-sized intersections over all pairs (self-pairs included) of the decided
  // members plus, when `extra` is given, the still-undecided candidates.
  // With `extra` this is an upper bound on every leaf value below, since any
  // completion draws its members from that pool.
  std::int64_t realized(const IndexBits* extra) {
    avail_.clear();
    for (int i : inc_) avail_.push_back(p_.cand[i]);
    if (extra != nullptr)
      for (std::size_t wi = 0; wi < extra->w.size(); ++wi) {
        std::uint64_t xw = extra->w[wi];
        while (xw) {
          avail_.push_back(p_.cand[wi * 64 + std::countr_zero(xw)]);
          xw &= xw - 1;
        }
      }
    const int m = (int)avail_.size();
    if (p_.k == p_.r) return m;  // |A & B| = r forces A = B
    if (p_.k == 1) {
      std::uint64_t acc = 0;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          std::uint64_t t = avail_[i] & avail_[j];
          if (std::has_single_bit(t)) acc |= t;
        }
      return std::popcount(acc);
    }
    if (p_.k == 2) {
      std::fill_n(rows_.begin(), p_.n, 0ull);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          std::uint64_t t = avail_[i] & avail_[j];
          if (std::popcount(t) == 2) {
            int lo = std::countr_zero(t);
            t &= t - 1;
            rows_[std::countr_zero(t)] |= 1ull << lo;
          }
        }
      std::int64_t c = 0;
      for (int e = 0; e < p_.n; ++e) c += std::popcount(rows_[e]);
      return c;
    }
    pbuf_.clear();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        std::uint64_t t = avail_[i] & avail_[j];
        if (std::popcount(t) == p_.k) pbuf_.push_back(t);
      }
    std::sort(pbuf_.begin(), pbuf_.end());
    pbuf_.erase(std::unique(pbuf_.begin(), pbuf_.end()), pbuf_.end());
    return (std::int64_t)pbuf_.size();
  }

  const Problem& p_;
  const std::function<bool(const SetFamily&)>* visit_;
  bool collect_;
  std::vector<IndexBits> fP_, fX_;  // child frames, one pair per depth
  std::vector<int> inc_;
  std::vector<std::uint64_t> avail_, pbuf_;
  std::array<std::uint64_t, 64> rows_;
  std::set<std::vector<std::uint64_t>> seen_;

  std::uint64_t nodes_ = 0;
  bool complete_ = true;
  bool stopped_ = false;
  bool exhausted_ = false;
  bool have_leaf_ = false;

  std::int64_t best_ = kNoValue;
  bool wit_has_ = false;
  IsoInvariant wit_inv_;
  std::vector<std::uint64_t> wit_enc_;
  SetFamily wit_rep_;
  std::map<std::vector<std::uint64_t>, SetFamily> classes_;
};

// Breadth-first split of the root into independent subtrees, following the
// exact branching rules (minus pruning) so no leaf is lost or duplicated.
void partition(const Problem& p, const IndexBits& P0, const IndexBits& X0,
               std::size_t target, std::vector<Cell>& cells, std::uint64_t& expanded) {
  std::deque<Cell> work;
  work.push_back(Cell{{}, P0, X0});
  while (!work.empty() && work.size() + cells.size() < target) {
    Cell c = std::move(work.front());
    work.pop_front();
    int q = c.P.lowest();
    if (q < 0) {
      cells.push_back(std::move(c));
      continue;
    }
    ++expanded;
    bool inc_ok = true, exc_ok = true;
    if (p.symmetry) {
      if (c.inc.empty()) {
        inc_ok = q == 0;
        exc_ok = false;
      } else if (c.inc.size() == 1) {
        inc_ok = p.orbit_min.test(q);
      }
    }
    if (inc_ok) {
      Cell ch;
      ch.inc = c.inc;
      ch.inc.push_back(q);
      ch.P = IndexBits(p.words);
      ch.X = IndexBits(p.words);
      and_to(c.P, p.nbr[q], ch.P);
      and_to(c.X, p.nbr[q], ch.X);
      work.push_back(std::move(ch));
    }
    if (exc_ok) {
      Cell ch;
      ch.inc = c.inc;
      ch.P = c.P;
      ch.P.reset(q);
      ch.X = c.X;
      ch.X.set(q);
      work.push_back(std::move(ch));
    }
  }
  for (auto& c : work) cells.push_back(std::move(c));
}

}  // namespace

SearchResult beta_search(int n, int r, int k, const SearchConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Problem p = make_problem(n, r, k, cfg, /*bounding=*/true);

  IndexBits P0(p.words), X0(p.words);
  for (int i = 0; i < p.m; ++i) P0.set(i);

  std::uint64_t total_nodes = 0;
  bool complete = true;
  bool has = false;
  std::int64_t best = kNoValue;
  IsoInvariant best_inv;
  std::vector<std::uint64_t> best_enc;
  SetFamily best_rep;
  std::map<std::vector<std::uint64_t>, SetFamily> classes;

  auto harvest = [&](Worker& w) {
    total_nodes += w.nodes();
    complete = complete && w.complete();
    if (!w.has_witness() || w.value() < best) return;
    if (w.value() > best) {
      best = w.value();
      has = false;
      classes.clear();
    }
    if (!has || w.witness_invariant() < best_inv ||
        (w.witness_invariant() == best_inv && w.witness_encoding() < best_enc)) {
      has = true;
      best_inv = w.witness_invariant();
      best_enc = w.witness_encoding();
      best_rep = w.witness();
    }
    classes.merge(w.classes());
  };

  int width = std::max(1, cfg.parallel_width);
  std::vector<Cell> cells;
  std::uint64_t part_nodes = 0;
  if (cfg.node_budget == 0 && width > 1)
    partition(p, P0, X0, (std::size_t)width * 8, cells, part_nodes);

  if (cells.size() <= 1) {
    Worker w(p, nullptr, cfg.report_all_optima);
    w.run({}, P0, X0);
    harvest(w);
  } else {
    std::vector<std::unique_ptr<Worker>> done(cells.size());
    std::atomic<std::size_t> next{0};
    std::size_t nthreads = std::min<std::size_t>((std::size_t)width, cells.size());
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          auto w = std::make_unique<Worker>(p, nullptr, cfg.report_all_optima);
          w->run(cells[i].inc, cells[i].P, cells[i].X);
          done[i] = std::move(w);
        }
      });
    for (auto& t : pool) t.join();
    for (auto& w : done) harvest(*w);  // merge in cell order: deterministic
    total_nodes += part_nodes;
  }

  if (!has) throw std::logic_error("search produced no leaf");

  SearchResult res;
  res.params = SearchParams{n, r, k};
  res.value = best;
  res.witness = std::move(best_rep);
  res.optimal = complete;
  res.nodes_expanded = total_nodes;
  if (cfg.report_all_optima) {
    res.optima_classes.reserve(classes.size());
    for (auto& [enc, f] : classes) res.optima_classes.push_back(std::move(f));
  }

  if (!is_maximal(res.witness, n, r) ||
      (std::int64_t)k_intersections(res.witness, k).size() != res.value)
    throw std::logic_error("search result failed self-check");

  res.elapsed_ms = (std::uint64_t)std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return res;
}

SearchResult alpha_search(int r, int n, const SearchConfig& cfg) {
  return beta_search(n, r, 1, cfg);
}

EnumerationResult enumerate_maximal_families(
    int n, int r, const SearchConfig& cfg,
    const std::function<bool(const SetFamily&)>& visit) {
  Problem p = make_problem(n, r, /*k=*/1, cfg, /*bounding=*/false);
  IndexBits P0(p.words), X0(p.words);
  for (int i = 0; i < p.m; ++i) P0.set(i);
  Worker w(p, &visit, false);
  w.run({}, P0, X0);
  EnumerationResult res;
  res.complete = w.complete();
  res.nodes_expanded = w.nodes();
  return res;
}

EnumerationResult enumerate_maximal_families(int n, int r, const SearchConfig& cfg) {
  std::vector<SetFamily> out;
  EnumerationResult res = enumerate_maximal_families(
      n, r, cfg, [&](const SetFamily& f) {
        out.push_back(f);
        return true;
      });
  res.families = std::move(out);
  return res;
}

EkrReport ekr_check(int n, int r, const SearchConfig& cfg) {
  if (r < 1 || n < 2 * r) throw std::invalid_argument("parameter out of range");
  EkrReport rep;
  rep.n = n;
  rep.r = r;
  rep.bound = binomial_u64(n - 1, r - 1);
  rep.classes = cfg.symmetry == Symmetry::on;
  rep.bound_holds = true;
  EnumerationResult res = enumerate_maximal_families(
      n, r, cfg, [&](const SetFamily& f) {
        ++rep.families_seen;
        auto sz = (std::int64_t)f.size();
        rep.max_size = std::max(rep.max_size, sz);
        if ((std::uint64_t)sz > rep.bound) rep.bound_holds = false;
        if ((std::uint64_t)sz == rep.bound) ++rep.attaining;
        return true;
      });
  rep.attained = rep.max_size >= 0 && (std::uint64_t)rep.max_size == rep.bound;
  rep.complete = res.complete;
  rep.nodes_expanded = res.nodes_expanded;
  return rep;
}

}  // namespace intersectra

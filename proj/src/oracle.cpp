#include "anglespread/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "anglespread/error.hpp"
#include "anglespread/rng.hpp"
#include "anglespread/spread.hpp"

namespace anglespread {

namespace {

// Best-so-far accumulator. The spread is constant along every chord, so a
// lattice typically holds many maximizers whose cosines differ only by
// rounding. Cosines within kTieTol of the running maximum are kept as
// candidates and the lexicographically smallest key among those within
// kTieTol of the final maximum wins. Both the maximum and that candidate set
// are independent of evaluation order.
template <typename Key>
class Best {
 public:
  static constexpr double kTieTol = 1e-12;

  void offer(double c, const Key& key, std::span<const double> x) {
    if (c > top_) {
      top_ = c;
      std::erase_if(candidates_, [&](const Candidate& cand) { return cand.cosine < top_ - kTieTol; });
    }
    if (c >= top_ - kTieTol) candidates_.push_back(Candidate{c, key, std::vector<double>(x.begin(), x.end())});
  }

  void count() { ++evaluated_; }

  void merge(const Best& other) {
    evaluated_ += other.evaluated_;
    for (const auto& cand : other.candidates_) offer(cand.cosine, cand.key, cand.coords);
  }

  bool found() const { return !candidates_.empty(); }
  std::uint64_t evaluated() const { return evaluated_; }

  /// (cosine, coords) of the lexicographically smallest near-maximizer.
  std::pair<double, std::vector<double>> winner() const {
    const Candidate* best = nullptr;
    for (const auto& cand : candidates_) {
      if (cand.cosine < top_ - kTieTol) continue;
      if (best == nullptr || cand.key < best->key) best = &cand;
    }
    return {best->cosine, best->coords};
  }

 private:
  struct Candidate {
    double cosine;
    Key key;
    std::vector<double> coords;
  };

  double top_ = -std::numeric_limits<double>::infinity();
  std::vector<Candidate> candidates_;
  std::uint64_t evaluated_ = 0;
};

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs work(worker_index) on `threads` workers and rethrows the first failure.
template <typename Work>
void fan_out(unsigned threads, Work&& work) {
  if (threads == 1) {
    work(0u);
    return;
  }
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

template <typename Key>
OracleReport finish(int n, const Best<Key>& best) {
  if (!best.found()) throw Error(ErrorKind::InvalidArgument, "oracle evaluated no admissible points");
  const double bound = min_angle_bound(n).cosine;
  auto [cosine, coords] = best.winner();
  return OracleReport{cosine, make_simplex_point(coords), best.evaluated(), bound, bound - cosine};
}

}  // namespace

std::uint64_t grid_size(int n, int k) {
  if (n < 1 || k < 0) return 0;
  // C(k + n - 1, r) built up incrementally; each partial product is itself a
  // binomial coefficient, so the division is exact.
  const auto r = static_cast<std::uint64_t>(std::min(n - 1, k));
  const auto top = static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(n) - 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t g = std::gcd(acc, i);
    const std::uint64_t factor = (top - r + i) / (i / g);
    if (acc / g > kMax / factor) return kMax;
    acc = acc / g * factor;
  }
  return acc;
}

OracleReport grid_maximize(const GridSpec& spec, unsigned threads) {
  if (spec.n < 3) throw Error(ErrorKind::BadDimension, "grid oracle requires n >= 3");
  if (spec.k < spec.n) throw Error(ErrorKind::InvalidArgument, "grid resolution k must be at least n");
  const std::uint64_t size = grid_size(spec.n, spec.k);
  if (size > kMaxGridPoints) {
    throw Error(ErrorKind::TooLarge, "lattice has " + std::to_string(size) + " points, limit is " +
                                         std::to_string(kMaxGridPoints));
  }

  const auto n = static_cast<std::size_t>(spec.n);
  const int k = spec.k;
  const double center = 1.0 / spec.n;
  threads = std::min(resolve_threads(threads), static_cast<unsigned>(k + 1));

  using Key = std::vector<int>;
  std::vector<Best<Key>> partial(threads);
  std::atomic<int> next_last{0};

  // Colex order has the last coordinate as its most significant part; each
  // task fixes it and enumerates compositions of the remainder into n - 1 parts.
  fan_out(threads, [&](unsigned t) {
    Best<Key>& best = partial[t];
    Key counts(n);
    std::vector<double> x(n);
    for (int last = next_last++; last <= k; last = next_last++) {
      const std::size_t m = n - 1;
      std::fill(counts.begin(), counts.end(), 0);
      counts[0] = k - last;
      counts[n - 1] = last;
      while (true) {
        bool near_uniform = true;
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = static_cast<double>(counts[i]) / k;
          near_uniform = near_uniform && std::abs(x[i] - center) <= spec.exclude_uniform_eps;
        }
        if (!near_uniform) {
          try {
            const double c = cos_spread(make_simplex_point(x)).cosine;
            best.count();
            best.offer(c, counts, x);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::UniformInput) throw;
          }
        }
        std::size_t i = 0;
        while (i < m && counts[i] == 0) ++i;
        if (i + 1 >= m) break;
        const int v = counts[i];
        counts[i] = 0;
        counts[0] = v - 1;
        ++counts[i + 1];
      }
    }
  });

  Best<Key> total;
  for (const auto& b : partial) total.merge(b);
  return finish(spec.n, total);
}

OracleReport random_maximize(int n, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (n < 3) throw Error(ErrorKind::BadDimension, "random oracle requires n >= 3");
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be at least 1");
  threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), samples));
  const CounterRng rng(seed);

  using Key = std::vector<double>;
  std::vector<Best<Key>> partial(threads);
  fan_out(threads, [&](unsigned t) {
    Best<Key>& best = partial[t];
    const std::uint64_t begin = samples * t / threads;
    const std::uint64_t end = samples * (t + 1) / threads;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::vector<double> x = uniform_simplex_sample(rng, i, n);
      const SimplexPoint p = make_simplex_point(x);
      if (is_uniform(p)) continue;
      const double c = cos_spread(p).cosine;
      best.count();
      best.offer(c, x, p.coords());
    }
  });

  Best<Key> total;
  for (const auto& b : partial) total.merge(b);
  return finish(n, total);
}

}  // namespace anglespread

#include "persist/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "persist/errors.hpp"

namespace persist {

std::size_t PiecewisePoly::locate(const Rational& x) const {
  if (x < breakpoints.front() || x > breakpoints.back())
    throw Error(Errc::Domain, "point outside the piecewise support");
  auto it = std::lower_bound(breakpoints.begin() + 1, breakpoints.end(), x);
  return static_cast<std::size_t>(it - breakpoints.begin()) - 1;
}

Rational PiecewisePoly::operator()(const Rational& x) const { return pieces[locate(x)](x); }

Rational PiecewisePoly::integral() const {
  Rational total(0);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const Polynomial& p = pieces[j];
    std::vector<Rational> anti(p.coeffs().size() + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
      anti[k + 1] = p.coeffs()[k] / static_cast<unsigned long>(k + 1);
    const Polynomial F(std::move(anti));
    total += F(breakpoints[j + 1]) - F(breakpoints[j]);
  }
  return total;
}

PiecewisePoly PiecewisePoly::cumulative() const {
  PiecewisePoly out{breakpoints, {}};
  out.pieces.reserve(pieces.size());
  Rational carried(0);
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const Polynomial& p = pieces[j];
    std::vector<Rational> anti(p.coeffs().size() + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
      anti[k + 1] = p.coeffs()[k] / static_cast<unsigned long>(k + 1);
    Polynomial F(std::move(anti));
    F += Polynomial(Rational(carried - F(breakpoints[j])));
    carried = F(breakpoints[j + 1]);
    out.pieces.push_back(std::move(F));
  }
  return out;
}

void PiecewisePoly::merge_equal_pieces() {
  std::vector<Rational> bps{breakpoints.front()};
  std::vector<Polynomial> ps;
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    if (!ps.empty() && ps.back() == pieces[j]) {
      bps.back() = breakpoints[j + 1];
      continue;
    }
    ps.push_back(pieces[j]);
    bps.push_back(breakpoints[j + 1]);
  }
  breakpoints = std::move(bps);
  pieces = std::move(ps);
}

std::size_t default_dp_cap() {
  if (const char* env = std::getenv("PERSIST_MA1_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10;
}

PiecewisePoly dp_step(const Params& params, const PiecewisePoly& f) {
  const Rational& t = params.theta;
  const Rational lo = -params.a;
  const Rational hi(1);
  const Rational scale = 1 / (1 + params.a);
  const PiecewisePoly G = f.cumulative();
  const Rational total = G.pieces.back()(hi);

  std::vector<Rational> cuts{lo, hi};
  if (t == 0) {
    cuts.emplace_back(0);
  } else {
    for (const Rational& b : f.breakpoints) cuts.push_back(t * b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [&](const Rational& c) { return c < lo || c > hi; }),
             cuts.end());

  PiecewisePoly next{cuts, {}};
  next.pieces.reserve(cuts.size() - 1);
  for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
    const Rational mid = (cuts[j] + cuts[j + 1]) / 2;
    Polynomial piece;
    if (t == 0) {
      piece = mid > 0 ? Polynomial(total) : Polynomial();
    } else {
      const Rational u = mid / t;  // boundary of {x : theta x <= y} at y = mid
      const Polynomial inner = (u >= lo && u <= hi)
                                   ? G.pieces[G.locate(u)].rescale(Rational(1 / t))
                                   : Polynomial();
      if (t > 0) {
        // {x <= u} within [lo, hi]
        piece = u < lo ? Polynomial() : (u > hi ? Polynomial(total) : inner);
      } else {
        // {x >= u} within [lo, hi]
        piece = u > hi ? Polynomial() : (u < lo ? Polynomial(total) : Polynomial(total) - inner);
      }
    }
    next.pieces.push_back(piece * scale);
  }
  next.merge_equal_pieces();
  return next;
}

std::vector<Rational> dp_exact_table(const Params& params, std::size_t n, std::size_t cap) {
  if (params.a <= -1) throw Error(Errc::Domain, "a must exceed -1");
  if (n > cap)
    throw Error(Errc::CapExceeded,
                "dp oracle capped at n = " + std::to_string(cap) + " (asked for " + std::to_string(n) + ")");
  PiecewisePoly f{{Rational(-params.a), Rational(1)}, {Polynomial(Rational(1 / (1 + params.a)))}};
  std::vector<Rational> out{Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    f = dp_step(params, f);
    out.push_back(f.integral());
  }
  return out;
}

Rational dp_exact_pn(const Params& params, std::size_t n, std::size_t cap) {
  return dp_exact_table(params, n, cap).back();
}

namespace {

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kBlock = 1u << 16;

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t sample, std::uint64_t coordinate) noexcept {
  const std::uint64_t h = mix(mix(mix(seed) ^ sample) ^ (coordinate * 0xD1B54A32D192ED03ull));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

McEstimate mc_estimate(const Params& params, std::size_t n, std::uint64_t samples, std::uint64_t seed,
                       unsigned workers) {
  if (params.a <= -1) throw Error(Errc::Domain, "a must exceed -1");
  if (samples == 0) throw Error(Errc::Domain, "mc_estimate needs at least one sample");
  const double a = to_double(params.a);
  const double width = 1.0 + a;
  const double theta = to_double(params.theta);

  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t end = std::min(samples, (b + 1) * kBlock);
      std::uint64_t count = 0;
      for (std::uint64_t s = b * kBlock; s < end; ++s) {
        double prev = counter_uniform(seed, s, 0) * width - a;
        bool ok = true;
        for (std::size_t i = 1; i <= n && ok; ++i) {
          const double x = counter_uniform(seed, s, i) * width - a;
          ok = x >= theta * prev;
          prev = x;
        }
        count += ok;
      }
      hits[b] = count;
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = static_cast<double>(total) / static_cast<double>(samples);
  est.std_error = std::sqrt(est.mean * (1 - est.mean) / static_cast<double>(samples));
  return est;
}

}  // namespace persist

#include "persist/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "persist/errors.hpp"
#include "persist/region_formulas.hpp"

namespace persist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxTerms = 4000;

// True value lies in partial +- tail.
struct Bounded {
  Rational partial;
  double tail = 0;
};

double upper(const Rational& q) {
  const double d = q.get_d();
  return from_double(d) >= q ? d : std::nextafter(d, kInf);
}

double lower(const Rational& q) {
  const double d = q.get_d();
  return from_double(d) <= q ? d : std::nextafter(d, -kInf);
}

// Partial sum of E(theta, x) with tail bound |x|^{N+1}/(N+1)! e^{|x|} <= target
// when reachable within kMaxTerms.
Bounded partial_E(const Rational& theta, const Rational& x, double target) {
  if (x == 0) return {Rational(1), 0};
  if (theta == 0) return {Rational(1 + x), 0};
  const double ax = upper(abs(x));
  auto tail_after = [&](std::size_t n) {
    const double log_bound = static_cast<double>(n + 1) * std::log(ax) - std::lgamma(static_cast<double>(n + 2)) + ax;
    return std::exp(log_bound) * (1 + 1e-9);
  };
  Rational sum(1), term(1), theta_pow(1);
  std::size_t n = 0;
  double tail = tail_after(0);
  while (tail > target && n < kMaxTerms) {
    ++n;
    if (n >= 2) theta_pow *= theta;
    term *= theta_pow * x / static_cast<unsigned long>(n);
    sum += term;
    tail = tail_after(n);
  }
  return {sum, tail};
}

using Evaluator = std::function<Bounded(const Rational& z, double target)>;

// Sign of the function at z: 0 only for an exact zero, nothing when the
// tail cannot be pushed below the partial sum.
std::optional<int> rigorous_sign(const Evaluator& f, const Rational& z) {
  double target = 1e-8;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Bounded b = f(z, target);
    if (b.partial == 0 && b.tail == 0) return 0;
    const double mag = lower(abs(b.partial));
    if (mag > b.tail) return sgn(b.partial);
    target = mag > 0 ? mag / 4 : target * 1e-8;
  }
  return std::nullopt;
}

struct Bracket {
  Rational lo, hi;
};

// Scans (0, z_max] geometrically (f(0) > 0) and bisects the first sign change.
std::optional<Bracket> find_first_root(const Evaluator& f, const Rational& start, const Rational& z_max,
                                       double step_factor, double tol) {
  Rational prev(0);
  int prev_sign = 1;
  const Rational step = from_double(step_factor);
  std::optional<Bracket> bracket;
  for (Rational z = start;; z *= step) {
    if (z > z_max) z = z_max;
    const auto s = rigorous_sign(f, z);
    if (s && *s == 0) return Bracket{z, z};
    if (s && *s != prev_sign) {
      bracket = Bracket{prev, z};
      break;
    }
    if (s) prev = z;
    if (z == z_max) break;
  }
  if (!bracket) return std::nullopt;

  const Rational width = from_double(2 * tol);
  while (bracket->hi - bracket->lo > width) {
    // Snap midpoints to doubles to keep denominators short.
    const Rational exact_mid = (bracket->lo + bracket->hi) / 2;
    const Rational mid = from_double(exact_mid.get_d());
    if (mid <= bracket->lo || mid >= bracket->hi) break;
    const auto s = rigorous_sign(f, mid);
    if (!s) break;
    if (*s == 0) return Bracket{mid, mid};
    (*s == prev_sign ? bracket->lo : bracket->hi) = mid;
  }
  return bracket;
}

Enclosure inverse(const Rational& lo, const Rational& hi) {
  return Enclosure::from_bounds(Rational(1 / hi), Rational(1 / lo));
}

void fill_root(ExponentResult& r, const Bracket& b) {
  r.z0 = Enclosure::from_bounds(b.lo, b.hi);
  if (b.lo == b.hi) r.z0_exact = b.lo;
  r.lambda = inverse(b.lo, b.hi);
}

std::size_t sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Smallest convenient mid +- rad covering [l - tail, h + tail].
Enclosure widened(double l, double h, double tail) {
  const double mid = l + (h - l) / 2;
  double rad = std::max(h - mid, mid - l) + tail;
  rad += std::abs(mid) * std::numeric_limits<double>::epsilon() + std::numeric_limits<double>::denorm_min();
  Enclosure e{mid, rad};
  while (e.lo() > l - tail || e.hi() < h + tail) e.rad *= 2;
  return e;
}

}  // namespace

Enclosure Enclosure::from_bounds(const Rational& lo, const Rational& hi) {
  const double l = lower(lo);
  const double h = upper(hi);
  return widened(l, h, 0);
}

Enclosure eval_E_rigorous(const Rational& theta, const Rational& x, double tol) {
  if (abs(theta) > 1) throw Error(Errc::Domain, "eval_E_rigorous needs |theta| <= 1");
  if (!(tol > 0)) throw Error(Errc::Domain, "tolerance must be positive");
  const Bounded b = partial_E(theta, x, tol / 2);
  return widened(lower(b.partial), upper(b.partial), b.tail);
}

std::string_view exponent_kind_name(ExponentKind k) noexcept {
  switch (k) {
    case ExponentKind::RootOfE: return "RootOfE";
    case ExponentKind::YellowEquation: return "YellowEquation";
    case ExponentKind::OrangePolynomial: return "OrangePolynomial";
    case ExponentKind::Superexponential: return "Superexponential";
    case ExponentKind::TrivialOne: return "TrivialOne";
    case ExponentKind::TrivialZero: return "TrivialZero";
    case ExponentKind::NotFound: return "NotFound";
  }
  return "?";
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p};
  if (p.is_zero()) return seq;
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -(seq[seq.size() - 2].divmod(seq.back()).second);
  }
  return seq;
}

std::size_t sturm_count(const std::vector<Polynomial>& seq, const Rational& lo, const Rational& hi) {
  const std::size_t vl = sign_variations(seq, lo), vh = sign_variations(seq, hi);
  return vl > vh ? vl - vh : 0;
}

std::optional<std::pair<Rational, Rational>> smallest_root(const Polynomial& p, const Rational& lo,
                                                           const Rational& hi, const Rational& tol) {
  if (p.is_zero() || p.degree() < 1) return std::nullopt;
  const Polynomial square_free = p.divide_exact(gcd(p, p.derivative()));
  const auto seq = sturm_sequence(square_free);
  Rational l = lo, h = hi;
  if (sturm_count(seq, l, h) == 0) return std::nullopt;
  // Shrink until (l, h] isolates the smallest root.
  while (sturm_count(seq, l, h) > 1) {
    const Rational mid = (l + h) / 2;
    (sturm_count(seq, l, mid) >= 1 ? h : l) = mid;
  }
  if (square_free(h) == 0) return std::pair{h, h};
  const int sign_lo = sgn(square_free(l));
  while (h - l > tol) {
    const Rational mid = (l + h) / 2;
    const int s = sgn(square_free(mid));
    if (s == 0) return std::pair{mid, mid};
    (s == sign_lo ? l : h) = mid;
  }
  return std::pair{l, h};
}

ExponentResult find_exponent(const Params& input, const ExponentOptions& options) {
  RegionAssignment ra = classify(input);
  Params params = input;
  if (ra.dual_target) {
    params = *ra.dual_target;
    ra = classify(params);
  }
  ExponentResult r;
  r.resolved = params;
  r.precision = options.tol;
  const Rational& a = params.a;
  const Rational& t = params.theta;
  const Rational width = 1 + a;
  const Rational z_max = width * from_double(options.z_max_factor);
  r.scanned_max = to_double(z_max);
  const Rational start = width / 16;

  // a = theta = 0 is white and blue at once; the blue root 1 - z carries the constant.
  const Region region = ra.canonical == Region::WhiteOne && ra.has(Region::Blue) ? Region::Blue : ra.canonical;
  switch (region) {
    case Region::WhiteOne:
      r.kind = ExponentKind::TrivialOne;
      r.z0 = Enclosure{1, 0};
      r.z0_exact = Rational(1);
      r.lambda = Enclosure{1, 0};
      return r;
    case Region::ZeroTail:
      r.kind = ExponentKind::TrivialZero;
      r.lambda = Enclosure{0, 0};
      return r;
    case Region::ThetaOne:
    case Region::GreyPiecewise:
      r.kind = ExponentKind::Superexponential;
      r.lambda = Enclosure{0, 0};
      return r;
    case Region::Blue:
    case Region::Green: {
      r.kind = ExponentKind::RootOfE;
      std::optional<Bracket> b;
      if (t == 0) {
        b = Bracket{width, width};  // E(0, -z/(1+a)) = 1 - z/(1+a)
      } else {
        const Rational scale = -1 / width;
        Evaluator f = [&](const Rational& z, double target) { return partial_E(t, Rational(scale * z), target); };
        b = find_first_root(f, start, z_max, options.step_factor, options.tol);
      }
      if (!b) {
        r.kind = ExponentKind::NotFound;
        return r;
      }
      fill_root(r, *b);
      if (region == Region::Blue) r.constant = asymptotic_constant(params, *r.lambda);
      return r;
    }
    case Region::Yellow: {
      r.kind = ExponentKind::YellowEquation;
      const Rational mu = *derived_scalars(params).mu;
      const Rational alpha = a / (t * width), beta = a / width;
      Evaluator g = [&](const Rational& z, double target) {
        const Rational mz = mu * z;
        const double scale = upper(abs(mz));
        const Bounded n = partial_E(t, Rational(alpha * z), target / 2);
        const Bounded d = partial_E(t, Rational(beta * z), target / (2 * std::max(1.0, scale)));
        return Bounded{Rational(n.partial - mz * d.partial), (n.tail + scale * d.tail) * (1 + 1e-12)};
      };
      const auto b = find_first_root(g, start, z_max, options.step_factor, options.tol);
      if (!b) {
        r.kind = ExponentKind::NotFound;
        return r;
      }
      fill_root(r, *b);
      return r;
    }
    case Region::Orange: {
      r.kind = ExponentKind::OrangePolynomial;
      const auto cutoff = derived_scalars(params).p_cutoff;
      if (!cutoff || cutoff->infinite())
        throw Error(Errc::Unreachable, "orange exponent needs a finite cutoff");
      const auto F = orange_F(params, *cutoff->index);
      std::vector<Rational> coeffs(F.order() + 2);
      coeffs[0] = -1;
      for (std::size_t i = 0; i <= F.order(); ++i) coeffs[i + 1] = F[i];
      const auto root = smallest_root(Polynomial(std::move(coeffs)), Rational(0), z_max,
                                      from_double(options.tol));
      if (!root) {
        r.kind = ExponentKind::NotFound;
        return r;
      }
      fill_root(r, Bracket{root->first, root->second});
      return r;
    }
    default: break;
  }
  throw Error(Errc::Unreachable, "no exponent rule for region " + std::string(region_name(ra.canonical)));
}

double asymptotic_constant(const Params& params, const Enclosure& lambda) {
  if (!classify(params).has(Region::Blue))
    throw Error(Errc::Domain, "asymptotic_constant is defined for the blue region");
  if (!(lambda.mid > 0)) throw Error(Errc::Domain, "asymptotic_constant needs lambda > 0");
  const Rational lam = from_double(lambda.mid);
  const Rational width = 1 + params.a;
  const Rational& t = params.theta;
  const Enclosure num = eval_E_rigorous(t, Rational(params.a / (lam * width)), 1e-15);
  const Enclosure den = eval_E_rigorous(t, Rational(-t / (lam * width)), 1e-15);
  return to_double(width) * num.mid / den.mid;
}

}  // namespace persist

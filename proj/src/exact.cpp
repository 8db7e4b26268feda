#include "eqlines/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace eqlines {

namespace {

using RatPoly = std::vector<Rational>;  // constant term first

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

IntPolynomial from_rat(const RatPoly& p) {
  BigInt lcm = 1;
  for (const auto& c : p) {
    const BigInt den = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.push_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
  return IntPolynomial(std::move(coeffs)).primitive();
}

// Returns {quotient, remainder} with deg(remainder) < deg(divisor).
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  if (den.empty()) throw std::invalid_argument("polynomial division by zero");
  trim(num);
  if (num.size() < den.size()) return {RatPoly{}, num};
  RatPoly quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = num[k + den.size() - 1] / lead;
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  trim(quot);
  return {quot, num};
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Rational eval_rat(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed integer: " + text);
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer: " + text);
  BigInt value(text.substr(start));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ') text.push_back(ch);
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num = parse_bigint(text.substr(0, slash));
    const BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + raw);
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits = (whole.empty() || whole == "-" || whole == "+" ? "0" : whole) ;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt int_part = parse_bigint(digits);
    const BigInt frac_part = frac.empty() ? BigInt(0) : parse_bigint(frac);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) throw std::invalid_argument("malformed decimal: " + raw);
    const BigInt magnitude = boost::multiprecision::abs(int_part) * scale + frac_part;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_bigint(text));
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].convert_to<double>();
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const { return sign_of(evaluate(x)); }

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
  std::vector<BigInt> out = coeffs_;
  if (leading() < 0) g = -g;
  for (auto& c : out) c /= g;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

IntPolynomial char_poly(const Graph& g) {
  const std::size_t n = g.order();
  // Berkowitz: p_k = T_k p_{k-1}, coefficients highest degree first.
  std::vector<BigInt> p{1};
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<BigInt> t(k + 2);
    t[0] = 1;
    t[1] = 0;  // -a_kk, no loops
    // vec starts as column C = A[0..k-1][k].
    std::vector<BigInt> vec(k, 0);
    for (std::size_t i = 0; i < k; ++i) vec[i] = g.adjacent(i, k) ? 1 : 0;
    for (std::size_t j = 0; j < k; ++j) {
      BigInt rc = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (g.adjacent(k, i)) rc += vec[i];
      t[j + 2] = -rc;
      if (j + 1 == k) break;
      std::vector<BigInt> next(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (Vertex w : nbrs[i])
          if (w < k) next[i] += vec[w];
      vec = std::move(next);
    }
    std::vector<BigInt> q(k + 2, 0);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::move(p));
}

bool poly_divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (d.is_zero()) throw std::invalid_argument("poly_divides: divisor is zero");
  return divmod(to_rat(p), to_rat(d)).second.empty();
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return from_rat(rat_gcd(to_rat(a), to_rat(b)));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  const RatPoly g = rat_gcd(to_rat(p), to_rat(p.derivative()));
  return from_rat(divmod(to_rat(p), g).first);
}

IntPolynomial mobius_transform(const IntPolynomial& p, const BigInt& a, const BigInt& b,
                               const BigInt& c, const BigInt& d) {
  const int deg = p.degree();
  if (deg < 0) return {};
  const IntPolynomial num(std::vector<BigInt>{b, a});
  const IntPolynomial den(std::vector<BigInt>{d, c});
  std::vector<IntPolynomial> num_pow{IntPolynomial{1}};
  std::vector<IntPolynomial> den_pow{IntPolynomial{1}};
  for (int i = 1; i <= deg; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  IntPolynomial out;
  for (int i = 0; i <= deg; ++i) {
    const BigInt& coeff = p.coefficients()[static_cast<std::size_t>(i)];
    if (coeff == 0) continue;
    out = out + IntPolynomial(std::vector<BigInt>{coeff}) * num_pow[static_cast<std::size_t>(i)] *
                    den_pow[static_cast<std::size_t>(deg - i)];
  }
  return out.primitive();
}

Rational root_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational worst = 0;
  const Rational lead = boost::multiprecision::abs(Rational(p.leading()));
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = boost::multiprecision::abs(Rational(p.coefficients()[static_cast<std::size_t>(i)])) / lead;
    worst = std::max(worst, r);
  }
  return worst + 1;
}

// ---------------------------------------------------------------------------
// SturmSequence

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(to_rat(p));
  chain_.push_back(to_rat(p.derivative()));
  trim(chain_.back());
  while (!chain_.back().empty()) {
    RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
  chain_.pop_back();
}

std::size_t SturmSequence::variations_at(const Rational& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_of(eval_rat(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::variations_at_infinity(bool positive) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign_of(q.back());
    if (!positive && (q.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  return variations_at(a) - variations_at(b);
}

std::size_t SturmSequence::count_above(const Rational& a) const {
  return variations_at(a) - variations_at_infinity(true);
}

std::size_t SturmSequence::count_below(const Rational& b) const {
  return variations_at_infinity(false) - variations_at(b);
}

std::size_t SturmSequence::count_real() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

// ---------------------------------------------------------------------------
// AlgebraicReal

AlgebraicReal::AlgebraicReal(const IntPolynomial& poly, Rational lo, Rational hi)
    : minpoly_(squarefree_part(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (minpoly_.degree() < 1) throw std::invalid_argument("algebraic number needs a nonconstant polynomial");
  if (!(lo_ < hi_)) throw std::invalid_argument("isolating interval must satisfy lo < hi");
  if (minpoly_.sign_at(lo_) == 0 || minpoly_.sign_at(hi_) == 0)
    throw std::invalid_argument("isolating interval endpoint is a root");
  if (SturmSequence(minpoly_).count(lo_, hi_) != 1)
    throw std::invalid_argument("interval does not isolate exactly one root of " + minpoly_.to_string());
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return AlgebraicReal(IntPolynomial(std::vector<BigInt>{-num, den}), q - 1, q + 1);
}

std::vector<AlgebraicReal> AlgebraicReal::real_roots(const IntPolynomial& p) {
  const IntPolynomial sq = squarefree_part(p);
  std::vector<AlgebraicReal> out;
  if (sq.degree() < 1) return out;
  const SturmSequence sturm(sq);
  const Rational bound = root_bound(sq);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const std::size_t c = sturm.count(a, b);
    if (c == 0) continue;
    if (c == 1) {
      AlgebraicReal x;
      x.minpoly_ = sq;
      x.lo_ = a;
      x.hi_ = b;
      out.push_back(std::move(x));
      continue;
    }
    Rational m = (a + b) / 2;
    while (sq.sign_at(m) == 0) m = (a + m) / 2;
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& x, const AlgebraicReal& y) { return x.lo_ < y.lo_; });
  return out;
}

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("algebraic number is not rational");
  const auto& c = minpoly_.coefficients();
  return Rational(-c[0], c[1]);
}

void AlgebraicReal::bisect() {
  const Rational mid = (lo_ + hi_) / 2;
  const int s = minpoly_.sign_at(mid);
  if (s == 0) {
    lo_ = (lo_ + mid) / 2;
    hi_ = (mid + hi_) / 2;
  } else if (s != minpoly_.sign_at(lo_)) {
    hi_ = mid;
  } else {
    lo_ = mid;
  }
}

AlgebraicReal AlgebraicReal::refine(const Rational& width) const {
  if (width <= 0) throw std::invalid_argument("refine: width must be positive");
  AlgebraicReal x = *this;
  while (x.hi_ - x.lo_ > width) x.bisect();
  return x;
}

std::strong_ordering AlgebraicReal::compare(const Rational& q) const {
  AlgebraicReal x = *this;
  while (true) {
    if (q <= x.lo_) return std::strong_ordering::greater;
    if (q >= x.hi_) return std::strong_ordering::less;
    if (x.minpoly_.sign_at(q) == 0) return std::strong_ordering::equal;
    x.bisect();
  }
}

AlgebraicReal::Approximation AlgebraicReal::approximate() const {
  const Rational scale = std::max(Rational(1), Rational(boost::multiprecision::abs(lo_)));
  const AlgebraicReal x = refine(scale / Rational(BigInt(1) << 60));
  const Rational mid = (x.lo_ + x.hi_) / 2;
  const double value = mid.convert_to<double>();
  const double half_width = Rational((x.hi_ - x.lo_) / 2).convert_to<double>();
  return {value, half_width + std::abs(value) * 1.2e-16};
}

bool AlgebraicReal::operator==(const AlgebraicReal& other) const {
  if (!(minpoly_ == other.minpoly_)) return false;
  // Each interval isolates one root, so both name the same root iff their
  // overlap still contains a root.
  const Rational lo = std::max(lo_, other.lo_);
  const Rational hi = std::min(hi_, other.hi_);
  if (!(lo < hi)) return false;
  const std::size_t half_open = SturmSequence(minpoly_).count(lo, hi);
  return half_open - (minpoly_.sign_at(hi) == 0 ? 1 : 0) == 1;
}

// ---------------------------------------------------------------------------

Rational alpha_to_lambda(const Rational& alpha) {
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0, 1)");
  return (1 - alpha) / (2 * alpha);
}

Rational lambda_to_alpha(const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  return 1 / (2 * lambda + 1);
}

AlgebraicReal alpha_to_lambda(const AlgebraicReal& alpha) {
  if (alpha.compare(0) != std::strong_ordering::greater || alpha.compare(1) != std::strong_ordering::less)
    throw std::invalid_argument("alpha must lie in (0, 1)");
  if (alpha.is_rational()) return AlgebraicReal::from_rational(alpha_to_lambda(alpha.rational_value()));
  AlgebraicReal a = alpha;
  while (a.lo() <= 0 || a.hi() >= 1) a = a.refine((a.hi() - a.lo()) / 2);
  // alpha = 1 / (2 lambda + 1)
  const IntPolynomial q = mobius_transform(a.minpoly(), 0, 1, 2, 1);
  return AlgebraicReal(q, alpha_to_lambda(a.hi()), alpha_to_lambda(a.lo()));
}

AlgebraicReal lambda_to_alpha(const AlgebraicReal& lambda) {
  if (lambda.compare(0) != std::strong_ordering::greater) throw std::invalid_argument("lambda must be positive");
  if (lambda.is_rational()) return AlgebraicReal::from_rational(lambda_to_alpha(lambda.rational_value()));
  AlgebraicReal l = lambda;
  while (l.lo() <= 0) l = l.refine((l.hi() - l.lo()) / 2);
  // lambda = (1 - alpha) / (2 alpha)
  const IntPolynomial q = mobius_transform(l.minpoly(), -1, 1, 2, 0);
  return AlgebraicReal(q, lambda_to_alpha(l.hi()), lambda_to_alpha(l.lo()));
}

namespace {

bool shares_root(const IntPolynomial& q, const AlgebraicReal& x) {
  const IntPolynomial g = poly_gcd(q, x.minpoly());
  if (g.degree() < 1) return false;
  return SturmSequence(g).count(x.lo(), x.hi()) >= 1;
}

IntPolynomial reflect(const IntPolynomial& p) {
  std::vector<BigInt> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

}  // namespace

std::size_t roots_above(const IntPolynomial& p, const AlgebraicReal& lambda) {
  const IntPolynomial sq = squarefree_part(p);
  if (sq.degree() < 1) return 0;
  const SturmSequence sturm(sq);
  const std::size_t own = shares_root(sq, lambda) ? 1 : 0;
  AlgebraicReal x = lambda;
  // Shrink until the only root of p inside (lo, hi) is lambda itself.
  while (true) {
    const std::size_t inside = sturm.count(x.lo(), x.hi()) - (sq.sign_at(x.hi()) == 0 ? 1 : 0);
    if (inside == own) break;
    x = x.refine((x.hi() - x.lo()) / 2);
  }
  return sturm.count_above(x.hi()) + (sq.sign_at(x.hi()) == 0 ? 1 : 0);
}

namespace {

void require_monic(const AlgebraicReal& lambda) {
  if (!lambda.minpoly().monic())
    throw std::invalid_argument("Perron check needs an algebraic integer (monic minpoly), got " +
                                lambda.minpoly().to_string());
}

bool perron_common(const AlgebraicReal& lambda) {
  if (lambda.compare(0) != std::strong_ordering::greater) return false;
  const IntPolynomial& p = lambda.minpoly();
  if (SturmSequence(p).count_real() != static_cast<std::size_t>(p.degree())) return false;
  if (roots_above(p, lambda) != 0) return false;
  // Roots of p below -lambda are roots of p(-x) above lambda.
  return roots_above(reflect(p), lambda) == 0;
}

}  // namespace

bool is_weak_perron(const AlgebraicReal& lambda) {
  require_monic(lambda);
  return perron_common(lambda);
}

bool is_strict_perron(const AlgebraicReal& lambda) {
  require_monic(lambda);
  return perron_common(lambda) && !shares_root(reflect(lambda.minpoly()), lambda);
}

nlohmann::json algebraic_to_json(const AlgebraicReal& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : x.minpoly().coefficients()) coeffs.push_back(c.str());
  return {{"minpoly", coeffs}, {"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}};
}

AlgebraicReal algebraic_from_json(const nlohmann::json& j) {
  try {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("minpoly")) {
      if (!c.is_string()) throw std::invalid_argument("algebraic json: coefficients must be decimal strings");
      coeffs.push_back(parse_bigint(c.get<std::string>()));
    }
    return AlgebraicReal(IntPolynomial(std::move(coeffs)), parse_rational(j.at("lo").get<std::string>()),
                         parse_rational(j.at("hi").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("algebraic json: ") + e.what());
  }
}

}  // namespace eqlines

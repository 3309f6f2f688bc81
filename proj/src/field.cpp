#include "hitchin/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace hitchin {

namespace {

int64_t mod_norm(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Arithmetic on raw coefficient vectors over F_p (low-to-high, no
// normalization invariants; used only for modulus selection).
using Vec = std::vector<int64_t>;

Vec vec_mulmod(const Vec& a, const Vec& b, const Vec& m, int64_t p) {
  Vec r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  // reduce mod monic m of degree d
  int d = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
    int64_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (int j = 0; j < d; ++j) r[i - d + j] = mod_norm(r[i - d + j] - c * m[j], p);
  }
  r.resize(d);
  return r;
}

Vec vec_powmod(Vec base, int64_t e, const Vec& m, int64_t p) {
  int d = static_cast<int>(m.size()) - 1;
  Vec r(d, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = vec_mulmod(r, base, m, p);
    base = vec_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

bool vec_is_x(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    int64_t want = (i == 1) ? 1 : 0;
    if (v[i] != want) return false;
  }
  return true;
}

Vec vec_gcd(Vec a, Vec b, int64_t p) {
  auto deg = [](const Vec& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (v[i] != 0) return i;
    return -1;
  };
  while (deg(b) >= 0) {
    // a mod b
    int db = deg(b);
    int64_t lead_inv = 1;
    {  // inverse of b[db] mod p
      int64_t x = b[db] % p, r = 1;
      for (int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
      }
      lead_inv = r;
    }
    while (deg(a) >= db) {
      int da = deg(a);
      int64_t c = a[da] * lead_inv % p;
      for (int j = 0; j <= db; ++j)
        a[da - db + j] = mod_norm(a[da - db + j] - c * b[j], p);
    }
    std::swap(a, b);
  }
  return a;
}

// Irreducibility over F_p: x^{p^k} == x mod m and gcd(x^{p^{k/l}} - x, m)
// is constant for every prime l | k.
bool irreducible(const Vec& m, int64_t p) {
  int k = static_cast<int>(m.size()) - 1;
  Vec x(k, 0);
  if (k == 1) return true;
  x[1] = 1;
  Vec fr = x;
  // fr_j = x^{p^j} mod m
  std::vector<Vec> frob(k + 1);
  frob[0] = x;
  for (int j = 1; j <= k; ++j) frob[j] = vec_powmod(frob[j - 1], p, m, p);
  if (!vec_is_x(frob[k])) return false;
  for (int l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool lp = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) lp = false;
    if (!lp) continue;
    Vec diff = frob[k / l];
    diff[1] = mod_norm(diff[1] - 1, p);
    Vec g = vec_gcd(m, diff, p);
    int dg = -1;
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i)
      if (g[i] != 0) { dg = i; break; }
    if (dg != 0) return false;
  }
  return true;
}

Vec pick_modulus(int64_t p, int k) {
  // Lexicographically smallest monic irreducible of degree k: iterate over
  // the low coefficient tuple (c_0, ..., c_{k-1}) in base-p counting order.
  Vec m(k + 1, 0);
  m[k] = 1;
  int64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (int64_t idx = 0; idx < total; ++idx) {
    int64_t t = idx;
    for (int i = k - 1; i >= 0; --i) {
      // lexicographic on (c_0, c_1, ...): c_0 is the most significant digit
      m[i] = 0;
    }
    int64_t rem = idx;
    for (int i = 0; i < k; ++i) {
      int64_t place = 1;
      for (int j = i + 1; j < k; ++j) place *= p;
      m[i] = rem / place;
      rem %= place;
    }
    if (irreducible(m, p)) return m;
  }
  throw Error("no irreducible modulus found");  // unreachable for prime p
}

}  // namespace

FieldCtx::FieldCtx(int64_t p, int k) : p_(p), k_(k) {
  if (p < 5 || !is_prime(p))
    throw BadCharacteristic("characteristic must be a prime >= 5, got " + std::to_string(p));
  if (k < 1) throw Error("extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    q_ *= p;
    if (q_ > (int64_t)4e18 / p) throw SearchBoundExceeded("field order overflows");
  }
  mod_ = pick_modulus(p, k);
}

const FieldCtx& FieldCtx::get(int64_t p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int64_t, int>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<FieldCtx>(new FieldCtx(p, k))).first;
  return *it->second;
}

Fq::Fq(const FieldCtx& F, int64_t n) : F_(&F), c_(F.k(), 0) {
  c_[0] = mod_norm(n, F.p());
}

Fq::Fq(const FieldCtx& F, std::vector<int64_t> coords) : F_(&F), c_(std::move(coords)) {
  c_.resize(F.k(), 0);
  for (auto& x : c_) x = mod_norm(x, F.p());
}

const FieldCtx& Fq::ctx() const {
  if (!F_) throw Error("uninitialized field element");
  return *F_;
}

bool Fq::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

bool Fq::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

static void check_same(const Fq& a, const Fq& b) {
  if (&a.ctx() != &b.ctx()) throw FieldMismatch("elements of different fields");
}

Fq Fq::operator+(const Fq& o) const {
  check_same(*this, o);
  std::vector<int64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % F_->p();
  return Fq(*F_, std::move(r));
}

Fq Fq::operator-(const Fq& o) const {
  check_same(*this, o);
  std::vector<int64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_norm(c_[i] - o.c_[i], F_->p());
  return Fq(*F_, std::move(r));
}

Fq Fq::operator-() const {
  std::vector<int64_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_norm(-c_[i], ctx().p());
  return Fq(*F_, std::move(r));
}

Fq Fq::operator*(const Fq& o) const {
  check_same(*this, o);
  return Fq(*F_, vec_mulmod(c_, o.c_, F_->modulus(), F_->p()));
}

Fq Fq::inv() const {
  if (is_zero()) throw Error("division by zero");
  return pow(F_->order() - 2);
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

Fq Fq::pow(int64_t e) const {
  const FieldCtx& F = ctx();
  if (e < 0) return inv().pow(-e);
  Fq base = *this, r = Fq::one(F);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Fq Fq::frobenius() const { return pow(ctx().p()); }

bool Fq::in_subfield(int j) const {
  const FieldCtx& F = ctx();
  if (F.k() % j != 0) return false;
  Fq t = *this;
  for (int i = 0; i < j; ++i) t = t.frobenius();
  return t == *this;
}

bool Fq::operator==(const Fq& o) const {
  check_same(*this, o);
  return c_ == o.c_;
}

std::strong_ordering Fq::operator<=>(const Fq& o) const {
  check_same(*this, o);
  return c_ <=> o.c_;
}

int64_t Fq::index() const {
  const FieldCtx& F = ctx();
  int64_t idx = 0;
  for (int i = F.k() - 1; i >= 0; --i) idx = idx * F.p() + c_[i];
  return idx;
}

Fq Fq::from_index(const FieldCtx& F, int64_t idx) {
  std::vector<int64_t> c(F.k());
  for (int i = 0; i < F.k(); ++i) {
    c[i] = idx % F.p();
    idx /= F.p();
  }
  return Fq(F, std::move(c));
}

std::string Fq::str() const {
  const FieldCtx& F = ctx();
  if (F.k() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < F.k(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ']';
  return os.str();
}

std::optional<std::pair<Fq, Fq>> sqrt_fq(const Fq& a) {
  const FieldCtx& F = a.ctx();
  if (a.is_zero()) return std::make_pair(Fq::zero(F), Fq::zero(F));
  if (!a.pow((F.order() - 1) / 2).is_one()) return std::nullopt;
  for (int64_t i = 0; i < F.order(); ++i) {
    Fq r = Fq::from_index(F, i);
    if (r * r == a) {
      Fq s = -r;
      return r <= s ? std::make_pair(r, s) : std::make_pair(s, r);
    }
  }
  return std::nullopt;  // unreachable
}

}  // namespace hitchin

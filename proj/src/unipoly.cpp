#include "flatband/unipoly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "flatband/common.hpp"

namespace flatband {

std::string rat_to_string(const Rat& a) { return a.get_str(); }

std::string rat_to_fraction_string(const Rat& a) {
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_decimal(const Rat& a, int digits) {
  mpz_class num = a.get_num();
  mpz_class den = a.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = num * scale / den;  // truncates toward zero
  mpz_class ipart = scaled / scale;
  mpz_class fpart = scaled % scale;
  std::string frac = fpart.get_str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  std::string out = neg && (ipart != 0 || fpart != 0) ? "-" : "";
  out += ipart.get_str() + "." + frac;
  return out;
}

UniPoly::UniPoly(Rat constant) {
  if (!rat_is_zero(constant)) c_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

UniPoly UniPoly::linear(Rat c0, Rat c1) {
  return UniPoly(std::vector<Rat>{std::move(c0), std::move(c1)});
}

bool UniPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rat& UniPoly::coeff(int k) const {
  static const Rat zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(k)];
}

const Rat& UniPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

void UniPoly::trim() {
  while (!c_.empty() && rat_is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x = -x;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (rat_is_zero(s)) return UniPoly();
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator/(const Rat& s) const {
  if (rat_is_zero(s)) throw std::invalid_argument("division by zero scalar");
  std::vector<Rat> r = c_;
  for (auto& x : r) x /= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw std::invalid_argument("monic of zero polynomial");
  return *this / leading();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::shift_argument(const Rat& a) const {
  UniPoly acc;
  UniPoly xa = UniPoly::linear(a, Rat(1));
  for (size_t i = c_.size(); i-- > 0;) acc = acc * xa + UniPoly(c_[i]);
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (num.degree() < den.degree()) return {UniPoly(), num};
  std::vector<Rat> rem = num.c_;
  std::vector<Rat> quo(static_cast<size_t>(num.degree() - den.degree()) + 1, Rat(0));
  const Rat& lc = den.leading();
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    Rat q = rem[static_cast<size_t>(k + den.degree())] / lc;
    if (!rat_is_zero(q)) {
      quo[static_cast<size_t>(k)] = q;
      for (int i = 0; i <= den.degree(); ++i)
        rem[static_cast<size_t>(k + i)] -= q * den.c_[static_cast<size_t>(i)];
    }
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& den) const {
  auto [q, r] = divmod(*this, den);
  if (!r.is_zero()) throw EngineError("inexact univariate division");
  return q;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coeff(k);
    if (rat_is_zero(c)) continue;
    if (!first) out += " + ";
    first = false;
    std::string cs = rat_to_string(c);
    bool bare = (sgn(c) > 0 && rat_is_integer(c));
    if (k == 0) {
      out += bare ? cs : "(" + cs + ")";
    } else {
      std::string mono(var);
      if (k > 1) mono += "^" + std::to_string(k);
      if (c == 1)
        out += mono;
      else
        out += (bare ? cs : "(" + cs + ")") + "*" + mono;
    }
  }
  return out;
}

UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd of two zero polynomials");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    cancel::checkpoint();
    auto [q, r] = UniPoly::divmod(x, y);
    (void)q;
    x = y;
    y = r.is_zero() ? r : r.monic();  // keeps coefficient growth in check
  }
  return x.monic();
}

UniPoly unipoly_gcd(std::span<const UniPoly> ps) {
  UniPoly g;
  bool any = false;
  for (const UniPoly& p : ps) {
    if (p.is_zero()) continue;
    g = any ? unipoly_gcd(g, p) : p.monic();
    any = true;
    if (g.degree() == 0) break;  // gcd is already 1
  }
  if (!any) throw std::invalid_argument("gcd of all-zero list");
  return g;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = p.monic();
  if (f.degree() == 0) return out;
  UniPoly fp = f.derivative();
  UniPoly g = unipoly_gcd(f, fp);
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  // Yun
  UniPoly b = f.divide_exact(g);
  UniPoly c = fp.divide_exact(g);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    cancel::checkpoint();
    UniPoly a = d.is_zero() ? b.monic() : unipoly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = b.divide_exact(a);
    c = d.divide_exact(a);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace flatband

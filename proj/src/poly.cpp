#include "ghost/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace ghost {

std::string rat_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::optional<Rat> rationalize(double x, double tol, unsigned long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued fraction convergents
  double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 < 0 || static_cast<unsigned long>(q2) > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
      Rat r(static_cast<long>(p1), static_cast<long>(q1));
      r.canonicalize();
      return r;
    }
    double rem = v - fl;
    if (rem < 1e-15) break;
    v = 1.0 / rem;
  }
  return std::nullopt;
}

std::string QuadCtx::minpoly_string() const {
  // z^2 - s*z - t
  std::ostringstream os;
  os << "z^2";
  if (s != 0) {
    Rat ms = -s;
    os << (ms < 0 ? "-" : "+");
    Rat a = abs(ms);
    if (a != 1) os << rat_string(a) << "*";
    os << "z";
  }
  if (t != 0) {
    Rat mt = -t;
    os << (mt < 0 ? "-" : "+") << rat_string(abs(mt));
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// MultiPoly

std::shared_ptr<const std::vector<std::string>> MultiPoly::intern_vars(std::vector<std::string> names) {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  if (names.empty()) return empty;
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPoly::MultiPoly() : vars_(intern_vars({})) {}

MultiPoly::MultiPoly(std::shared_ptr<const std::vector<std::string>> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  trim();
}

MultiPoly::MultiPoly(std::shared_ptr<const std::vector<std::string>> vars, TermMap terms, RawTag)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

MultiPoly MultiPoly::constant(const Rat& c) {
  MultiPoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

MultiPoly MultiPoly::var(const std::string& name) {
  TermMap t;
  t[{1u}] = Rat(1);
  return MultiPoly(intern_vars({name}), std::move(t));
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw InternalError("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

unsigned MultiPoly::degree_in(const std::string& name) const {
  auto it = std::lower_bound(vars_->begin(), vars_->end(), name);
  if (it == vars_->end() || *it != name) return 0;
  size_t idx = static_cast<size_t>(it - vars_->begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    if (idx < e.size()) d = std::max(d, e[idx]);
  return d;
}

void MultiPoly::trim() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  if (terms_.empty()) {
    vars_ = intern_vars({});
    return;
  }
  // drop variables with zero exponent everywhere
  size_t nv = vars_->size();
  std::vector<bool> used(nv, false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  bool all = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
  if (all) return;
  std::vector<std::string> nv_names;
  std::vector<size_t> keep;
  for (size_t i = 0; i < nv; ++i)
    if (used[i]) {
      keep.push_back(i);
      nv_names.push_back((*vars_)[i]);
    }
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Expo ne(keep.size(), 0);
    for (size_t k = 0; k < keep.size(); ++k)
      if (keep[k] < e.size()) ne[k] = e[keep[k]];
    nt[std::move(ne)] = c;
  }
  vars_ = intern_vars(std::move(nv_names));
  terms_ = std::move(nt);
}

MultiPoly align(const MultiPoly& p, const std::shared_ptr<const std::vector<std::string>>& vars) {
  if (p.vars_ == vars || *p.vars_ == *vars) {
    MultiPoly::TermMap nt;
    for (const auto& [e, c] : p.terms_) {
      MultiPoly::Expo ne = e;
      ne.resize(vars->size(), 0);
      nt[std::move(ne)] = c;
    }
    return MultiPoly(vars, std::move(nt), MultiPoly::RawTag{});
  }
  std::vector<size_t> pos(p.vars_->size());
  for (size_t i = 0; i < p.vars_->size(); ++i) {
    auto it = std::lower_bound(vars->begin(), vars->end(), (*p.vars_)[i]);
    if (it == vars->end() || *it != (*p.vars_)[i]) throw InternalError("align: missing variable");
    pos[i] = static_cast<size_t>(it - vars->begin());
  }
  MultiPoly::TermMap nt;
  for (const auto& [e, c] : p.terms_) {
    MultiPoly::Expo ne(vars->size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    nt[std::move(ne)] = c;
  }
  return MultiPoly(vars, std::move(nt), MultiPoly::RawTag{});
}

std::pair<MultiPoly, MultiPoly> merge_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() == b.vars()) return {a, b};
  std::vector<std::string> u;
  std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(), std::back_inserter(u));
  auto shared = MultiPoly::intern_vars(std::move(u));
  return {align(a, shared), align(b, shared)};
}

MultiPoly MultiPoly::operator-() const {
  TermMap t = terms_;
  for (auto& [e, c] : t) c = -c;
  return MultiPoly(vars_, std::move(t));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  auto [a, b] = merge_vars(*this, o);
  TermMap t = a.terms_;
  for (const auto& [e, c] : b.terms_) {
    auto [it, fresh] = t.emplace(e, c);
    if (!fresh) it->second += c;
  }
  return MultiPoly(a.vars_, std::move(t));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return MultiPoly();
  auto [a, b] = merge_vars(*this, o);
  TermMap t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Expo e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rat c = ca * cb;
      auto [it, fresh] = t.emplace(std::move(e), c);
      if (!fresh) it->second += c;
    }
  }
  return MultiPoly(a.vars_, std::move(t));
}

MultiPoly MultiPoly::operator*(const Rat& k) const {
  if (k == 0) return MultiPoly();
  TermMap t = terms_;
  for (auto& [e, c] : t) c *= k;
  return MultiPoly(vars_, std::move(t));
}

MultiPoly operator*(const Rat& k, const MultiPoly& p) { return p * k; }

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  auto [a, b] = merge_vars(*this, o);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(Rat(1));
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  // cache powers of each substituted variable
  std::vector<std::optional<size_t>> sub_idx(vars_->size());
  std::vector<const MultiPoly*> subs;
  std::vector<std::vector<MultiPoly>> powers;
  bool any = false;
  for (size_t i = 0; i < vars_->size(); ++i) {
    auto it = bindings.find((*vars_)[i]);
    if (it != bindings.end()) {
      sub_idx[i] = subs.size();
      subs.push_back(&it->second);
      powers.push_back({MultiPoly::constant(Rat(1))});
      any = true;
    }
  }
  if (!any) return *this;
  auto power = [&](size_t which, unsigned k) -> const MultiPoly& {
    auto& tab = powers[which];
    while (tab.size() <= k) tab.push_back(tab.back() * (*subs[which]));
    return tab[k];
  };
  MultiPoly acc;
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(c);
    Expo kept(e.size(), 0);
    bool has_kept = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (sub_idx[i]) {
        term = term * power(*sub_idx[i], e[i]);
      } else {
        kept[i] = e[i];
        has_kept = true;
      }
    }
    if (has_kept) {
      TermMap single;
      single[kept] = Rat(1);
      term = term * MultiPoly(vars_, std::move(single));
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  auto it = std::lower_bound(vars_->begin(), vars_->end(), name);
  if (it == vars_->end() || *it != name) return MultiPoly();
  size_t idx = static_cast<size_t>(it - vars_->begin());
  TermMap t;
  for (const auto& [e, c] : terms_) {
    if (idx >= e.size() || e[idx] == 0) continue;
    Expo ne = e;
    ne[idx] -= 1;
    t[std::move(ne)] = c * Rat(static_cast<long>(e[idx]));
  }
  return MultiPoly(vars_, std::move(t));
}

Cpx MultiPoly::eval_complex(const std::map<std::string, Cpx>& vals) const {
  std::vector<Cpx> v(vars_->size());
  for (size_t i = 0; i < vars_->size(); ++i) {
    auto it = vals.find((*vars_)[i]);
    if (it == vals.end()) throw InternalError("eval_complex: missing value for " + (*vars_)[i]);
    v[i] = it->second;
  }
  // power tables
  std::vector<std::vector<Cpx>> pw(v.size());
  for (size_t i = 0; i < v.size(); ++i) pw[i] = {Cpx(1.0, 0.0)};
  auto power = [&](size_t i, unsigned k) {
    auto& tab = pw[i];
    while (tab.size() <= k) tab.push_back(tab.back() * v[i]);
    return tab[k];
  };
  Cpx acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    Cpx t(to_double(c), 0.0);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= power(i, e[i]);
    acc += t;
  }
  return acc;
}

Rat MultiPoly::eval_rat(const std::map<std::string, Rat>& vals) const {
  std::vector<Rat> v(vars_->size());
  for (size_t i = 0; i < vars_->size(); ++i) {
    auto it = vals.find((*vars_)[i]);
    if (it == vals.end()) throw InternalError("eval_rat: missing value for " + (*vars_)[i]);
    v[i] = it->second;
  }
  std::vector<std::vector<Rat>> pw(v.size());
  for (size_t i = 0; i < v.size(); ++i) pw[i] = {Rat(1)};
  auto power = [&](size_t i, unsigned k) {
    auto& tab = pw[i];
    while (tab.size() <= k) tab.push_back(tab.back() * v[i]);
    return tab[k];
  };
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= power(i, e[i]);
    acc += t;
  }
  return acc;
}

QuadVal MultiPoly::eval_quad(const std::map<std::string, QuadVal>& vals, const QuadCtx& ctx) const {
  std::vector<QuadVal> v(vars_->size());
  for (size_t i = 0; i < vars_->size(); ++i) {
    auto it = vals.find((*vars_)[i]);
    if (it == vals.end()) throw InternalError("eval_quad: missing value for " + (*vars_)[i]);
    v[i] = it->second;
  }
  std::vector<std::vector<QuadVal>> pw(v.size());
  for (size_t i = 0; i < v.size(); ++i) pw[i] = {QuadVal(Rat(1))};
  auto power = [&](size_t i, unsigned k) {
    auto& tab = pw[i];
    while (tab.size() <= k) tab.push_back(qmul(tab.back(), v[i], ctx));
    return tab[k];
  };
  QuadVal acc;
  for (const auto& [e, c] : terms_) {
    QuadVal t{c, Rat(0)};
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = qmul(t, power(i, e[i]), ctx);
    acc = qadd(acc, t);
  }
  return acc;
}

Rat MultiPoly::content() const {
  if (terms_.empty()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat g(num_gcd, den_lcm);
  g.canonicalize();
  return g;
}

MultiPoly MultiPoly::primitive_part() const {
  if (is_zero()) return *this;
  Rat c = content();
  Rat inv(c.get_den(), c.get_num());
  inv.canonicalize();
  MultiPoly p = *this * inv;
  // make the canonical leading coefficient positive
  if (p.terms_.rbegin()->second < 0) p = -p;
  return p;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& name) const {
  unsigned d = degree_in(name);
  std::vector<TermMap> maps(d + 1);
  auto it = std::lower_bound(vars_->begin(), vars_->end(), name);
  std::optional<size_t> idx;
  if (it != vars_->end() && *it == name) idx = static_cast<size_t>(it - vars_->begin());
  for (const auto& [e, c] : terms_) {
    unsigned k = (idx && *idx < e.size()) ? e[*idx] : 0;
    Expo ne = e;
    if (idx && *idx < ne.size()) ne[*idx] = 0;
    auto [jt, fresh] = maps[k].emplace(std::move(ne), c);
    if (!fresh) jt->second += c;
  }
  std::vector<MultiPoly> out;
  out.reserve(d + 1);
  for (auto& m : maps) out.emplace_back(vars_, std::move(m));
  return out;
}

std::vector<Rat> MultiPoly::uni_coeffs() const {
  if (vars_->size() > 1) throw InternalError("uni_coeffs: polynomial is multivariate");
  if (is_zero()) return {};
  if (vars_->empty()) return {constant_value()};
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0]);
  std::vector<Rat> out(d + 1, Rat(0));
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

MultiPoly MultiPoly::from_uni_coeffs(const std::string& name, const std::vector<Rat>& coeffs) {
  auto vars = intern_vars({name});
  TermMap t;
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) t[{static_cast<unsigned>(k)}] = coeffs[k];
  return MultiPoly(vars, std::move(t));
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  // print in graded-lex descending order for readability
  std::vector<std::pair<Expo, Rat>> ts(terms_.begin(), terms_.end());
  auto deg = [](const Expo& e) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    return s;
  };
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    unsigned da = deg(a.first), db = deg(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool mono = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
    if (a != 1 || !mono) {
      os << rat_string(a);
      if (mono) os << "*";
    }
    bool started = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (started) os << "*";
      os << (*vars_)[i];
      if (e[i] > 1) os << "^" << e[i];
      started = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& text) : s(text) {}
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip();
    return s[i++];
  }
};

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : lx_(text) {}
  MultiPoly run() {
    MultiPoly p = expr();
    if (!lx_.eof()) throw ParseError("polynomial: trailing input at position " + std::to_string(lx_.i));
    return p;
  }

 private:
  Lexer lx_;

  MultiPoly expr() {
    MultiPoly acc;
    int sign = 1;
    char c = lx_.peek();
    if (c == '+' || c == '-') {
      lx_.get();
      sign = (c == '-') ? -1 : 1;
    }
    acc = term() * Rat(sign);
    while (!lx_.eof()) {
      c = lx_.peek();
      if (c != '+' && c != '-') break;
      lx_.get();
      MultiPoly t = term();
      acc = (c == '-') ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (!lx_.eof() && lx_.peek() == '*') {
      lx_.get();
      acc = acc * factor();
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (!lx_.eof() && lx_.peek() == '^') {
      lx_.get();
      unsigned k = uint_lit();
      base = base.pow(k);
    }
    return base;
  }

  MultiPoly atom() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.get();
      MultiPoly p = expr();
      if (lx_.peek() != ')') throw ParseError("polynomial: expected ')'");
      lx_.get();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rat num(static_cast<long>(uint_lit_big()));
      if (!lx_.eof() && lx_.peek() == '/') {
        lx_.get();
        long den = static_cast<long>(uint_lit_big());
        if (den == 0) throw ParseError("polynomial: zero denominator");
        num /= den;
      }
      return MultiPoly::constant(num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      lx_.skip();
      while (lx_.i < lx_.s.size()) {
        char d = lx_.s[lx_.i];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          name += d;
          ++lx_.i;
        } else {
          break;
        }
      }
      return MultiPoly::var(name);
    }
    throw ParseError(std::string("polynomial: unexpected character '") + c + "'");
  }

  unsigned uint_lit() {
    unsigned long long v = uint_lit_big();
    if (v > 1000000) throw ParseError("polynomial: exponent too large");
    return static_cast<unsigned>(v);
  }

  unsigned long long uint_lit_big() {
    lx_.skip();
    if (lx_.i >= lx_.s.size() || !std::isdigit(static_cast<unsigned char>(lx_.s[lx_.i])))
      throw ParseError("polynomial: expected number");
    unsigned long long v = 0;
    while (lx_.i < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.i]))) {
      v = v * 10 + static_cast<unsigned long long>(lx_.s[lx_.i] - '0');
      if (v > (1ull << 62)) throw ParseError("polynomial: literal too large");
      ++lx_.i;
    }
    return v;
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) { return PolyParser(text).run(); }

// ---------------------------------------------------------------------------
// exact division

MultiPoly divexact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw InternalError("divexact by zero");
  if (p.is_zero()) return MultiPoly();
  if (q.is_constant()) {
    Rat c = q.constant_value();
    Rat inv(c.get_den(), c.get_num());
    inv.canonicalize();
    return p * inv;
  }
  auto [a, b] = merge_vars(p, q);
  auto shared = MultiPoly::intern_vars(std::vector<std::string>(a.vars()));
  // divide with respect to the canonical (map-order) leading monomial; keep
  // the remainder aligned to the shared ring so exponent vectors stay
  // comparable
  const auto bl = std::prev(b.terms().end());
  MultiPoly r = a;
  MultiPoly quot;
  while (!r.is_zero()) {
    auto rl = std::prev(r.terms().end());
    MultiPoly::Expo e = rl->first;
    bool ok = e.size() == bl->first.size();
    for (size_t i = 0; ok && i < e.size(); ++i) {
      if (e[i] < bl->first[i]) {
        ok = false;
        break;
      }
      e[i] -= bl->first[i];
    }
    if (!ok) throw InternalError("divexact: not divisible");
    Rat c = rl->second / bl->second;
    MultiPoly::TermMap single;
    single[e] = c;
    MultiPoly t(shared, std::move(single));
    quot += t;
    r = align(r - t * b, shared);
  }
  return quot;
}

// ---------------------------------------------------------------------------
// univariate dense helpers

std::vector<Rat> uni_trim(std::vector<Rat> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::vector<Rat> uni_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return uni_trim(std::move(out));
}

std::pair<std::vector<Rat>, std::vector<Rat>> uni_divmod(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> r = uni_trim(a), d = uni_trim(b);
  if (d.empty()) throw InternalError("uni_divmod by zero");
  if (r.size() < d.size()) return {{}, r};
  std::vector<Rat> q(r.size() - d.size() + 1, Rat(0));
  while (r.size() >= d.size()) {
    Rat c = r.back() / d.back();
    size_t shift = r.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r = uni_trim(std::move(r));
    if (r.empty()) break;
  }
  return {uni_trim(std::move(q)), r};
}

std::vector<Rat> uni_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = uni_trim(std::move(a));
  b = uni_trim(std::move(b));
  while (!b.empty()) {
    auto [q, r] = uni_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    // normalize to keep coefficients tame
    if (!b.empty()) {
      Rat lead = b.back();
      for (auto& c : b) c /= lead;
    }
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<Rat> uni_derivative(const std::vector<Rat>& a) {
  if (a.size() <= 1) return {};
  std::vector<Rat> out(a.size() - 1);
  for (size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * Rat(static_cast<long>(k));
  return uni_trim(std::move(out));
}

}  // namespace ghost

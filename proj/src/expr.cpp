#include "homothety/expr.hpp"

#include <stdexcept>
#include <utility>

namespace homothety {

struct Expr::Node {
  Kind kind;
  mpq_class value;
  std::string name;
  ExprList kids;
  std::size_t hash = 0;
};

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_mpz(const mpz_class& z) {
  // Deterministic within a process; mod by a large prime plus the sign.
  std::size_t h = mpz_fdiv_ui(z.get_mpz_t(), 0x1fffffffffffffffULL);
  return hash_combine(h, static_cast<std::size_t>(sgn(z) + 1));
}

std::size_t hash_string(const std::string& s) {
  std::size_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int kind_rank(Kind k) { return static_cast<int>(k); }

}  // namespace

Expr Expr::make(Kind k, mpq_class value, std::string name, ExprList kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->value = std::move(value);
  n->name = std::move(name);
  n->kids = std::move(kids);
  std::size_t h = hash_combine(0x51ed270b, static_cast<std::size_t>(k));
  if (k == Kind::Integer || k == Kind::Rational) {
    h = hash_combine(h, hash_mpz(n->value.get_num()));
    h = hash_combine(h, hash_mpz(n->value.get_den()));
  } else if (k == Kind::Symbol) {
    h = hash_combine(h, hash_string(n->name));
  }
  for (const Expr& kid : n->kids) h = hash_combine(h, kid.hash());
  n->hash = h;
  return Expr(std::move(n));
}

Expr::Expr() : Expr(integer(0)) {}

Expr Expr::integer(long v) { return integer(mpz_class(v)); }

Expr Expr::integer(mpz_class v) {
  return make(Kind::Integer, mpq_class(std::move(v)), "", {});
}

Expr Expr::rational(mpq_class v) {
  v.canonicalize();
  Kind k = v.get_den() == 1 ? Kind::Integer : Kind::Rational;
  return make(k, std::move(v), "", {});
}

Expr Expr::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return rational(mpq_class(num, den));
}

Expr Expr::symbol(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  return make(Kind::Symbol, 0, std::move(name), {});
}

Expr Expr::sum(ExprList terms) {
  if (terms.empty()) return integer(0);
  if (terms.size() == 1) return terms.front();
  return make(Kind::Sum, 0, "", std::move(terms));
}

Expr Expr::product(ExprList factors) {
  if (factors.empty()) return integer(1);
  if (factors.size() == 1) return factors.front();
  return make(Kind::Product, 0, "", std::move(factors));
}

Expr Expr::power(Expr base, Expr exponent) {
  return make(Kind::Power, 0, "", {std::move(base), std::move(exponent)});
}

Expr Expr::exp(Expr arg) { return make(Kind::Exp, 0, "", {std::move(arg)}); }
Expr Expr::ln(Expr arg) { return make(Kind::Ln, 0, "", {std::move(arg)}); }
Expr Expr::sin(Expr arg) { return make(Kind::Sin, 0, "", {std::move(arg)}); }
Expr Expr::cos(Expr arg) { return make(Kind::Cos, 0, "", {std::move(arg)}); }
Expr Expr::tan(Expr arg) { return make(Kind::Tan, 0, "", {std::move(arg)}); }
Expr Expr::cot(Expr arg) { return make(Kind::Cot, 0, "", {std::move(arg)}); }
Expr Expr::csc(Expr arg) { return make(Kind::Csc, 0, "", {std::move(arg)}); }
Expr Expr::negate(Expr arg) { return make(Kind::Negate, 0, "", {std::move(arg)}); }

Kind Expr::kind() const { return node_->kind; }

bool Expr::is_number() const {
  return node_->kind == Kind::Integer || node_->kind == Kind::Rational;
}

const mpq_class& Expr::value() const {
  if (!is_number()) throw std::logic_error("value() on non-numeric node");
  return node_->value;
}

const std::string& Expr::name() const {
  if (node_->kind != Kind::Symbol) throw std::logic_error("name() on non-symbol node");
  return node_->name;
}

const ExprList& Expr::children() const { return node_->kids; }

std::size_t Expr::hash() const { return node_->hash; }

bool Expr::is_integer(long v) const {
  return node_->kind == Kind::Integer && node_->value == v;
}

namespace {
void collect_symbols(const Expr& e, std::set<std::string>& out) {
  if (e.kind() == Kind::Symbol) {
    out.insert(e.name());
    return;
  }
  for (const Expr& kid : e.children()) collect_symbols(kid, out);
}
}  // namespace

std::set<std::string> Expr::free_symbols() const {
  std::set<std::string> out;
  collect_symbols(*this, out);
  return out;
}

bool Expr::depends_on(const std::string& symbol) const {
  if (kind() == Kind::Symbol) return name() == symbol;
  for (const Expr& kid : children())
    if (kid.depends_on(symbol)) return true;
  return false;
}

int Expr::compare(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return 0;
  int ra = kind_rank(a.kind());
  int rb = kind_rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Integer:
    case Kind::Rational: {
      int c = cmp(a.value(), b.value());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Symbol: {
      int c = a.name().compare(b.name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    default: {
      const ExprList& ka = a.children();
      const ExprList& kb = b.children();
      std::size_t n = std::min(ka.size(), kb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = compare(ka[i], kb[i]);
        if (c != 0) return c;
      }
      if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
      return 0;
    }
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return Expr::compare(a, b) == 0;
}

Expr operator+(Expr a, Expr b) {
  ExprList kids;
  if (a.kind() == Kind::Sum) {
    kids = a.children();
  } else {
    kids.push_back(std::move(a));
  }
  if (b.kind() == Kind::Sum) {
    for (const Expr& kid : b.children()) kids.push_back(kid);
  } else {
    kids.push_back(std::move(b));
  }
  return Expr::sum(std::move(kids));
}

Expr operator-(Expr a, Expr b) { return std::move(a) + Expr::negate(std::move(b)); }

Expr operator*(Expr a, Expr b) {
  ExprList kids;
  if (a.kind() == Kind::Product) {
    kids = a.children();
  } else {
    kids.push_back(std::move(a));
  }
  if (b.kind() == Kind::Product) {
    for (const Expr& kid : b.children()) kids.push_back(kid);
  } else {
    kids.push_back(std::move(b));
  }
  return Expr::product(std::move(kids));
}

Expr operator/(Expr a, Expr b) {
  return std::move(a) * Expr::power(std::move(b), Expr::integer(-1));
}

Expr operator-(Expr a) { return Expr::negate(std::move(a)); }

Expr pow(Expr base, Expr exponent) {
  return Expr::power(std::move(base), std::move(exponent));
}

}  // namespace homothety

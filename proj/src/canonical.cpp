#include "homothety/simplify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace homothety {

namespace {

// Base of the exponential factor accumulator. The name cannot collide with a
// parsed symbol (identifiers cannot contain control characters).
const Expr& exp_base() {
  static const Expr e = Expr::symbol("\x01" "e");
  return e;
}

bool is_exp_base(const Expr& e) {
  return e.kind() == Kind::Symbol && e.name() == exp_base().name();
}

// ---------------------------------------------------------------------------
// exact number helpers

mpq_class mpq_pow_int(const mpq_class& base, long k) {
  if (k == 0) return 1;
  unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), a);
  mpq_class r = k > 0 ? mpq_class(num, den) : mpq_class(den, num);
  r.canonicalize();
  return r;
}

bool fits_long(const mpz_class& z) { return z.fits_slong_p(); }

// ---------------------------------------------------------------------------
// canonical data model: sum of terms over a factored denominator

struct Factor {
  Expr base;
  Expr exp;  // canonical expression; Integer when the power is plain
};

int factor_cmp(const Factor& a, const Factor& b) {
  int c = Expr::compare(a.base, b.base);
  if (c != 0) return c;
  return Expr::compare(a.exp, b.exp);
}

struct Term {
  mpq_class coeff = 1;
  std::vector<Factor> factors;  // sorted by (base, exp)
};

int monomial_cmp(const Term& a, const Term& b) {
  std::size_t n = std::min(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = factor_cmp(a.factors[i], b.factors[i]);
    if (c != 0) return c;
  }
  if (a.factors.size() != b.factors.size())
    return a.factors.size() < b.factors.size() ? -1 : 1;
  return 0;
}

struct Poly {
  std::vector<Term> terms;  // sorted by monomial, no zero coefficients
};

// Denominator factors carry positive integer exponents; the rational content
// of the value lives in the numerator coefficients.
struct Fraction {
  Poly num;
  std::vector<Factor> den;  // sorted by base
};

bool frac_is_zero(const Fraction& f) { return f.num.terms.empty(); }

Poly poly_one() { return Poly{{Term{}}}; }

Poly poly_const(mpq_class c) {
  if (c == 0) return {};
  Term t;
  t.coeff = std::move(c);
  return Poly{{std::move(t)}};
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = monomial_cmp(a.terms[i], b.terms[j]);
    if (c < 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c > 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      Term t = a.terms[i++];
      t.coeff += b.terms[j++].coeff;
      if (t.coeff != 0) out.terms.push_back(std::move(t));
    }
  }
  while (i < a.terms.size()) out.terms.push_back(a.terms[i++]);
  while (j < b.terms.size()) out.terms.push_back(b.terms[j++]);
  return out;
}

Poly poly_neg(Poly p) {
  for (Term& t : p.terms) t.coeff = -t.coeff;
  return p;
}

long int_exp_of(const Term& t, const Expr& base) {
  long total = 0;
  for (const Factor& f : t.factors) {
    if (f.base == base && f.exp.kind() == Kind::Integer &&
        fits_long(f.exp.value().get_num())) {
      total += f.exp.value().get_num().get_si();
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Positivity heuristic driving power-law collapses with non-integer
// exponents. Symbols count as positive: every sampling interval of this
// engine lies in the positive half line.

bool positive_on_domain(const Expr& e) {
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
      return sgn(e.value()) > 0;
    case Kind::Symbol:
    case Kind::Exp:
      return true;
    case Kind::Power:
      return positive_on_domain(e.children()[0]);
    case Kind::Sum:
    case Kind::Product: {
      for (const Expr& kid : e.children())
        if (!positive_on_domain(kid)) return false;
      return true;
    }
    default:
      return false;
  }
}

class Canonicalizer {
 public:
  Expr run(const Expr& e) { return rebuild(canon(e)); }

 private:
  Fraction canon(const Expr& e);
  Expr canon_expr(const Expr& e) { return rebuild(canon(e)); }
  Expr rebuild(const Fraction& f) const;

  Fraction frac_add(const Fraction& a, const Fraction& b);
  Fraction frac_mul(const Fraction& a, const Fraction& b);
  Fraction frac_pow(const Fraction& base, const Expr& exponent);
  static Fraction frac_neg(Fraction f) {
    f.num = poly_neg(std::move(f.num));
    return f;
  }

  Poly poly_mul(const Poly& a, const Poly& b);
  std::optional<Poly> poly_pow(const Poly& p, long k);
  Fraction normalize(Poly p);
  void reduce(Fraction& f);
  std::optional<Poly> poly_divide(const Poly& num, const Poly& div);

  Poly term_mul(const Term& a, const Term& b);

  Expr term_to_expr(const Term& t, const std::vector<Factor>& extra_den) const;
  static Expr factor_to_expr(const Factor& f);

  struct Builder {
    mpq_class coeff = 1;
    bool zero = false;
    std::map<Expr, ExprList, Expr::Less> pows;  // base -> exponent pieces
    std::vector<Factor> done;                   // terminal factors
    std::vector<Poly> pending;                  // polynomial multipliers
    ExprList exp_residual;                      // opaque exp() argument terms
  };
  static void builder_add(Builder& tb, Expr base, Expr exp_piece);
  void handle_base(Builder& tb, const Expr& base, const Expr& exponent);
  void handle_number(Builder& tb, const mpq_class& base, const Expr& exponent);
  void drain_exponentials(Builder& tb);
  Poly builder_finalize(Builder& tb);

  std::pair<long, Expr> split_exponent(const Expr& e);

  // Pins each memoized expression so its node address cannot be recycled
  // and collide with a later key.
  std::unordered_map<const void*, std::pair<Expr, Fraction>> memo_;
};

// Split a canonical exponent into its integer part and the remainder, so
// exponents differing by an integer share one remainder. Works on the
// fraction form: numerator terms that are exact integer multiples of the
// denominator monomial are extracted; the fractional part of a rational
// constant stays in the remainder (floor semantics).
std::pair<long, Expr> Canonicalizer::split_exponent(const Expr& e) {
  if (e.kind() == Kind::Integer) {
    if (!fits_long(e.value().get_num())) return {0, e};
    return {e.value().get_num().get_si(), Expr::integer(0)};
  }
  Fraction f = canon(e);
  mpz_class k = 0;
  Poly rest;
  for (const Term& t : f.num.terms) {
    bool matches_den = t.factors.size() == f.den.size();
    if (matches_den) {
      for (std::size_t i = 0; i < t.factors.size(); ++i) {
        if (factor_cmp(t.factors[i], f.den[i]) != 0) {
          matches_den = false;
          break;
        }
      }
    }
    if (matches_den) {
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), t.coeff.get_num().get_mpz_t(),
                 t.coeff.get_den().get_mpz_t());
      k += fl;
      mpq_class leftover = t.coeff - mpq_class(fl);
      if (leftover != 0) {
        Term lt = t;
        lt.coeff = leftover;
        rest.terms.push_back(std::move(lt));
      }
    } else {
      rest.terms.push_back(t);
    }
  }
  if (!fits_long(k) || k == 0) return {0, e};
  Fraction rem_frac{std::move(rest), f.den};
  return {k.get_si(), rebuild(rem_frac)};
}

void Canonicalizer::builder_add(Builder& tb, Expr base, Expr exp_piece) {
  if (tb.zero) return;
  tb.pows[std::move(base)].push_back(std::move(exp_piece));
}

void Canonicalizer::handle_number(Builder& tb, const mpq_class& base, const Expr& exponent) {
  if (base == 1) return;
  if (exponent.kind() == Kind::Integer) {
    if (!fits_long(exponent.value().get_num())) {
      tb.done.push_back({Expr::rational(base), exponent});
      return;
    }
    long k = exponent.value().get_num().get_si();
    if (base == 0) {
      if (k > 0) {
        tb.zero = true;
      } else {
        tb.done.push_back({Expr::integer(0), exponent});  // undefined; kept verbatim
      }
      return;
    }
    tb.coeff *= mpq_pow_int(base, k);
    return;
  }
  if (base == 0) {
    tb.done.push_back({Expr::integer(0), exponent});
    return;
  }
  if (base < 0) {
    tb.done.push_back({Expr::rational(base), exponent});
    return;
  }
  auto [k, rem] = split_exponent(exponent);
  if (k != 0) tb.coeff *= mpq_pow_int(base, k);
  if (rem.is_zero_literal()) return;
  if (rem.kind() == Kind::Rational && fits_long(rem.value().get_den()) &&
      fits_long(rem.value().get_num()) &&
      std::abs(rem.value().get_num().get_si()) <= 64) {
    // Fold exact roots: 4^(1/2) -> 2; 8^(1/2) stays opaque.
    unsigned long q = rem.value().get_den().get_ui();
    long p = rem.value().get_num().get_si();
    mpz_class rn, rd;
    mpz_class bn = base.get_num(), bd = base.get_den();
    bool exact_n = mpz_root(rn.get_mpz_t(), bn.get_mpz_t(), q) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), bd.get_mpz_t(), q) != 0;
    if (exact_n && exact_d) {
      tb.coeff *= mpq_pow_int(mpq_class(rn, rd), p);
      return;
    }
  }
  if (base.get_den() != 1) {
    // (p/q)^E = p^E * q^-E for positive p, q.
    builder_add(tb, Expr::integer(base.get_num()), rem);
    builder_add(tb, Expr::integer(base.get_den()), Expr::negate(rem));
    return;
  }
  tb.done.push_back({Expr::rational(base), rem});
}

void Canonicalizer::handle_base(Builder& tb, const Expr& base, const Expr& exponent) {
  if (tb.zero || exponent.is_zero_literal()) return;
  bool int_exp = exponent.kind() == Kind::Integer;

  switch (base.kind()) {
    case Kind::Integer:
    case Kind::Rational:
      handle_number(tb, base.value(), exponent);
      return;
    case Kind::Exp:
      builder_add(tb, exp_base(), base.children().front() * exponent);
      return;
    case Kind::Negate: {
      if (int_exp && fits_long(exponent.value().get_num())) {
        if (exponent.value().get_num().get_si() % 2 != 0) tb.coeff = -tb.coeff;
        builder_add(tb, base.children().front(), exponent);
        return;
      }
      tb.done.push_back({base, exponent});
      return;
    }
    case Kind::Power: {
      const Expr& inner = base.children()[0];
      const Expr& inner_exp = base.children()[1];
      bool inner_odd_int = inner_exp.kind() == Kind::Integer &&
                           fits_long(inner_exp.value().get_num()) &&
                           inner_exp.value().get_num().get_si() % 2 != 0;
      if (int_exp || positive_on_domain(inner) || inner_odd_int) {
        builder_add(tb, inner, inner_exp * exponent);
        return;
      }
      tb.done.push_back({base, exponent});
      return;
    }
    case Kind::Product: {
      if (int_exp || positive_on_domain(base)) {
        for (const Expr& kid : base.children()) builder_add(tb, kid, exponent);
        return;
      }
      tb.done.push_back({base, exponent});
      return;
    }
    case Kind::Sum: {
      auto [k, rem] = split_exponent(exponent);
      Expr b = base;
      if (rem.is_zero_literal() && k != 0) {
        // Pull the sign out of negative-leading polynomial bases.
        Fraction bf = canon(b);
        if (!bf.num.terms.empty() && bf.num.terms.front().coeff < 0 && bf.den.empty()) {
          b = rebuild(frac_neg(std::move(bf)));
          if (k % 2 != 0) tb.coeff = -tb.coeff;
        }
      }
      if (!rem.is_zero_literal()) tb.done.push_back({b, rem});
      if (k > 0) {
        Fraction bf = canon(b);
        if (bf.den.empty()) {
          if (auto p = poly_pow(bf.num, k)) {
            tb.pending.push_back(std::move(*p));
            return;
          }
        }
        tb.done.push_back({b, Expr::integer(k)});
      } else if (k < 0) {
        tb.done.push_back({b, Expr::integer(k)});
      }
      return;
    }
    case Kind::Cos: {
      auto [k, rem] = split_exponent(exponent);
      if (!rem.is_zero_literal()) tb.done.push_back({base, rem});
      if (k >= 2) {
        // cos^2 -> 1 - sin^2, keeping cosine degree at most one.
        Term sin2;
        sin2.coeff = -1;
        sin2.factors.push_back({Expr::sin(base.children().front()), Expr::integer(2)});
        Poly one_minus = poly_add(poly_one(), Poly{{sin2}});
        if (auto p = poly_pow(one_minus, k / 2)) {
          tb.pending.push_back(std::move(*p));
          if (k % 2 != 0) tb.done.push_back({base, Expr::integer(1)});
          return;
        }
        tb.done.push_back({base, Expr::integer(k)});
      } else if (k != 0) {
        tb.done.push_back({base, Expr::integer(k)});
      }
      return;
    }
    default: {
      auto [k, rem] = split_exponent(exponent);
      if (!rem.is_zero_literal()) tb.done.push_back({base, rem});
      if (k != 0) tb.done.push_back({base, Expr::integer(k)});
      return;
    }
  }
}

// exp(c*ln(u) + rest) contributes u^c factors plus an opaque exp(rest) atom.
void Canonicalizer::drain_exponentials(Builder& tb) {
  auto it = tb.pows.find(exp_base());
  if (it == tb.pows.end()) return;
  ExprList pieces = std::move(it->second);
  tb.pows.erase(it);
  Fraction arg = canon(Expr::sum(std::move(pieces)));
  Expr den_recip = Expr::integer(1);
  if (!arg.den.empty()) {
    ExprList dp;
    for (const Factor& f : arg.den) dp.push_back(factor_to_expr(f));
    den_recip = Expr::power(dp.size() == 1 ? dp.front() : Expr::product(dp),
                            Expr::integer(-1));
  }
  for (const Term& t : arg.num.terms) {
    std::size_t ln_index = t.factors.size();
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      if (t.factors[i].base.kind() == Kind::Ln && t.factors[i].exp.is_one_literal()) {
        ln_index = i;
        break;
      }
    }
    if (ln_index < t.factors.size()) {
      Term rest = t;
      Expr ln_arg = rest.factors[ln_index].base.children().front();
      rest.factors.erase(rest.factors.begin() + ln_index);
      Expr cofactor = term_to_expr(rest, {}) * den_recip;
      builder_add(tb, ln_arg, cofactor);
    } else {
      tb.exp_residual.push_back(term_to_expr(t, {}) * den_recip);
    }
  }
}

Poly Canonicalizer::builder_finalize(Builder& tb) {
  for (int round = 0; round < 64; ++round) {
    if (tb.zero) return {};
    drain_exponentials(tb);
    if (tb.pows.empty()) {
      // Merge duplicate terminal bases; a merge can reactivate a rewrite
      // (two stray cos factors forming an even power, say). The canonical
      // split pair (base, remainder) + (base, integer) is terminal.
      std::map<Expr, ExprList, Expr::Less> merged;
      for (const Factor& f : tb.done) merged[f.base].push_back(f.exp);
      auto canonical_group = [&](const ExprList& exps) {
        if (exps.size() == 1) return true;
        if (exps.size() != 2) return false;
        const Expr* whole = &exps[0];
        const Expr* part = &exps[1];
        if (whole->kind() != Kind::Integer) std::swap(whole, part);
        if (whole->kind() != Kind::Integer || part->kind() == Kind::Integer)
          return false;
        return split_exponent(*part).first == 0;
      };
      bool reprocess = false;
      for (const auto& [base, exps] : merged) {
        if (!canonical_group(exps)) {
          reprocess = true;
          break;
        }
      }
      if (!reprocess) break;
      tb.done.clear();
      tb.pows = std::move(merged);
      continue;
    }
    std::map<Expr, ExprList, Expr::Less> batch;
    batch.swap(tb.pows);
    for (auto& [base, pieces] : batch) {
      Expr e = canon_expr(Expr::sum(std::move(pieces)));
      handle_base(tb, base, e);
    }
  }
  if (tb.zero) return {};

  Term t;
  t.coeff = std::move(tb.coeff);
  if (t.coeff == 0) return {};
  if (!tb.exp_residual.empty()) {
    Expr res = canon_expr(Expr::sum(tb.exp_residual));
    tb.exp_residual.clear();
    if (!res.is_zero_literal()) t.factors.push_back({exp_base(), res});
  }
  for (Factor& f : tb.done) t.factors.push_back(std::move(f));
  std::sort(t.factors.begin(), t.factors.end(),
            [](const Factor& a, const Factor& b) { return factor_cmp(a, b) < 0; });
  Poly out{{std::move(t)}};
  for (const Poly& p : tb.pending) out = poly_mul(out, p);
  return out;
}

Poly Canonicalizer::term_mul(const Term& a, const Term& b) {
  Builder tb;
  tb.coeff = a.coeff * b.coeff;
  for (const Factor& f : a.factors) builder_add(tb, f.base, f.exp);
  for (const Factor& f : b.factors) builder_add(tb, f.base, f.exp);
  return builder_finalize(tb);
}

Poly Canonicalizer::poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const Term& ta : a.terms)
    for (const Term& tb : b.terms) out = poly_add(out, term_mul(ta, tb));
  return out;
}

std::optional<Poly> Canonicalizer::poly_pow(const Poly& p, long k) {
  if (k < 0 || k > 64) return std::nullopt;
  Poly out = poly_one();
  for (long i = 0; i < k; ++i) {
    out = poly_mul(out, p);
    if (out.terms.size() > 5000) return std::nullopt;
  }
  return out;
}

// Bring negative integer powers into a shared denominator.
Fraction Canonicalizer::normalize(Poly p) {
  std::map<Expr, long, Expr::Less> need;
  for (const Term& t : p.terms) {
    for (const Factor& f : t.factors) {
      if (f.exp.kind() == Kind::Integer && sgn(f.exp.value()) < 0 &&
          fits_long(f.exp.value().get_num())) {
        long k = -f.exp.value().get_num().get_si();
        long& cur = need[f.base];
        cur = std::max(cur, k);
      }
    }
  }
  Fraction out;
  if (need.empty()) {
    out.num = std::move(p);
    return out;
  }
  Term mult;
  for (const auto& [base, k] : need) {
    mult.factors.push_back({base, Expr::integer(k)});
    out.den.push_back({base, Expr::integer(k)});
  }
  std::sort(mult.factors.begin(), mult.factors.end(),
            [](const Factor& a, const Factor& b) { return factor_cmp(a, b) < 0; });
  out.num = poly_mul(p, Poly{{mult}});
  reduce(out);
  return out;
}

std::optional<Poly> Canonicalizer::poly_divide(const Poly& num, const Poly& div) {
  if (div.terms.empty()) return std::nullopt;
  const Term& lead = div.terms.back();
  Poly quotient;
  Poly rem = num;
  for (int guard = 0; guard < 256; ++guard) {
    if (rem.terms.empty()) return quotient;
    const Term& top = rem.terms.back();
    Term q;
    q.coeff = top.coeff / lead.coeff;
    std::size_t i = 0;
    bool ok = true;
    for (const Factor& lf : lead.factors) {
      while (i < top.factors.size() && Expr::compare(top.factors[i].base, lf.base) < 0) {
        q.factors.push_back(top.factors[i]);
        ++i;
      }
      if (i >= top.factors.size() || top.factors[i].base != lf.base ||
          top.factors[i].exp.kind() != Kind::Integer ||
          lf.exp.kind() != Kind::Integer) {
        ok = false;
        break;
      }
      mpz_class diff = top.factors[i].exp.value().get_num() - lf.exp.value().get_num();
      if (diff < 0) {
        ok = false;
        break;
      }
      if (diff != 0) q.factors.push_back({lf.base, Expr::integer(diff)});
      ++i;
    }
    if (!ok) return std::nullopt;
    while (i < top.factors.size()) {
      q.factors.push_back(top.factors[i]);
      ++i;
    }
    Poly qp{{q}};
    quotient = poly_add(quotient, qp);
    rem = poly_add(rem, poly_neg(poly_mul(qp, div)));
  }
  return std::nullopt;
}

void Canonicalizer::reduce(Fraction& f) {
  if (f.num.terms.empty()) {
    f.den.clear();
    return;
  }
  std::vector<Factor> kept;
  for (Factor& d : f.den) {
    long k = d.exp.value().get_num().get_si();
    if (d.base.kind() == Kind::Sum) {
      while (k > 0) {
        Fraction bf = canon(d.base);
        if (!bf.den.empty()) break;
        auto q = poly_divide(f.num, bf.num);
        if (!q) break;
        f.num = std::move(*q);
        --k;
      }
    } else {
      long m = -1;
      for (const Term& t : f.num.terms) {
        long e = int_exp_of(t, d.base);
        if (e <= 0) {
          m = 0;
          break;
        }
        m = m < 0 ? e : std::min(m, e);
      }
      if (m > 0) {
        long cancel = std::min(m, k);
        Term divterm;
        divterm.factors.push_back({d.base, Expr::integer(-cancel)});
        f.num = poly_mul(f.num, Poly{{divterm}});
        k -= cancel;
      }
    }
    if (k > 0) kept.push_back({d.base, Expr::integer(k)});
  }
  f.den = std::move(kept);
}

Fraction Canonicalizer::frac_add(const Fraction& a, const Fraction& b) {
  if (frac_is_zero(a)) return b;
  if (frac_is_zero(b)) return a;
  std::map<Expr, long, Expr::Less> lcm;
  for (const Factor& f : a.den) lcm[f.base] = f.exp.value().get_num().get_si();
  for (const Factor& f : b.den) {
    long k = f.exp.value().get_num().get_si();
    long& cur = lcm[f.base];
    cur = std::max(cur, k);
  }
  auto quotient = [&](const std::vector<Factor>& own) {
    std::map<Expr, long, Expr::Less> q = lcm;
    for (const Factor& f : own) q[f.base] -= f.exp.value().get_num().get_si();
    Term t;
    for (const auto& [base, k] : q)
      if (k > 0) t.factors.push_back({base, Expr::integer(k)});
    return t;
  };
  Poly na = poly_mul(a.num, Poly{{quotient(a.den)}});
  Poly nb = poly_mul(b.num, Poly{{quotient(b.den)}});
  Fraction out = normalize(poly_add(na, nb));
  std::map<Expr, long, Expr::Less> den;
  for (const auto& [base, k] : lcm)
    if (k > 0) den[base] += k;
  for (const Factor& f : out.den) den[f.base] += f.exp.value().get_num().get_si();
  out.den.clear();
  for (const auto& [base, k] : den) out.den.push_back({base, Expr::integer(k)});
  reduce(out);
  return out;
}

Fraction Canonicalizer::frac_mul(const Fraction& a, const Fraction& b) {
  if (frac_is_zero(a) || frac_is_zero(b)) return {};
  Fraction prod = normalize(poly_mul(a.num, b.num));
  std::map<Expr, long, Expr::Less> den;
  for (const Factor& f : a.den) den[f.base] += f.exp.value().get_num().get_si();
  for (const Factor& f : b.den) den[f.base] += f.exp.value().get_num().get_si();
  for (const Factor& f : prod.den) den[f.base] += f.exp.value().get_num().get_si();
  prod.den.clear();
  for (const auto& [base, k] : den) prod.den.push_back({base, Expr::integer(k)});
  reduce(prod);
  return prod;
}

Fraction Canonicalizer::frac_pow(const Fraction& base, const Expr& exponent) {
  if (exponent.is_zero_literal()) return Fraction{poly_one(), {}};
  if (exponent.is_one_literal()) return base;
  Builder tb;
  builder_add(tb, rebuild(base), exponent);
  Fraction out = normalize(builder_finalize(tb));
  reduce(out);
  return out;
}

Fraction Canonicalizer::canon(const Expr& e) {
  const void* key = ExprAccess::id(e);
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second.second;

  Fraction out;
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
      out.num = poly_const(e.value());
      break;
    case Kind::Symbol: {
      Term t;
      t.factors.push_back({e, Expr::integer(1)});
      out.num.terms.push_back(std::move(t));
      break;
    }
    case Kind::Sum: {
      for (const Expr& kid : e.children()) out = frac_add(out, canon(kid));
      break;
    }
    case Kind::Product: {
      out = Fraction{poly_one(), {}};
      for (const Expr& kid : e.children()) {
        out = frac_mul(out, canon(kid));
        if (frac_is_zero(out)) break;
      }
      break;
    }
    case Kind::Power:
      out = frac_pow(canon(e.children()[0]), canon_expr(e.children()[1]));
      break;
    case Kind::Negate:
      out = frac_neg(canon(e.children().front()));
      break;
    case Kind::Exp: {
      Builder tb;
      builder_add(tb, exp_base(), e.children().front());
      out = normalize(builder_finalize(tb));
      reduce(out);
      break;
    }
    case Kind::Ln: {
      Expr arg = canon_expr(e.children().front());
      if (arg.is_one_literal()) {
        out = {};
      } else if (arg.kind() == Kind::Exp) {
        out = canon(arg.children().front());
      } else {
        Term t;
        t.factors.push_back({Expr::ln(arg), Expr::integer(1)});
        out.num.terms.push_back(std::move(t));
      }
      break;
    }
    case Kind::Sin:
    case Kind::Cos: {
      Fraction af = canon(e.children().front());
      bool flip = false;
      if (!af.num.terms.empty() && af.num.terms.front().coeff < 0) {
        flip = true;
        af = frac_neg(std::move(af));
      }
      Expr arg = rebuild(af);
      if (e.kind() == Kind::Sin) {
        if (arg.is_zero_literal()) {
          out = {};
        } else {
          Term t;
          t.coeff = flip ? -1 : 1;
          t.factors.push_back({Expr::sin(arg), Expr::integer(1)});
          out.num.terms.push_back(std::move(t));
        }
      } else {
        if (arg.is_zero_literal()) {
          out = Fraction{poly_one(), {}};
        } else {
          Term t;
          t.factors.push_back({Expr::cos(arg), Expr::integer(1)});
          out.num.terms.push_back(std::move(t));
        }
      }
      break;
    }
    case Kind::Tan: {
      const Expr& a = e.children().front();
      out = canon(Expr::sin(a) / Expr::cos(a));
      break;
    }
    case Kind::Cot: {
      const Expr& a = e.children().front();
      out = canon(Expr::cos(a) / Expr::sin(a));
      break;
    }
    case Kind::Csc: {
      const Expr& a = e.children().front();
      out = canon(Expr::integer(1) / Expr::sin(a));
      break;
    }
  }
  memo_.emplace(key, std::make_pair(e, out));
  return out;
}

// ---------------------------------------------------------------------------
// canonical tree construction

Expr Canonicalizer::factor_to_expr(const Factor& f) {
  if (is_exp_base(f.base)) return Expr::exp(f.exp);
  if (f.exp.is_one_literal()) return f.base;
  return Expr::power(f.base, f.exp);
}

Expr Canonicalizer::term_to_expr(const Term& t, const std::vector<Factor>& extra_den) const {
  if (t.factors.empty() && extra_den.empty()) return Expr::rational(t.coeff);
  const mpz_class& p = t.coeff.get_num();
  const mpz_class& q = t.coeff.get_den();
  bool negative = p < 0;
  mpz_class abs_p = abs(p);

  ExprList parts;
  if (abs_p != 1) parts.push_back(Expr::integer(p));
  for (const Factor& f : t.factors) parts.push_back(factor_to_expr(f));

  ExprList den_parts;
  if (q != 1) den_parts.push_back(Expr::integer(q));
  for (const Factor& d : extra_den) den_parts.push_back(factor_to_expr(d));
  if (!den_parts.empty()) {
    std::sort(den_parts.begin(), den_parts.end(),
              [](const Expr& a, const Expr& b) { return Expr::compare(a, b) < 0; });
    Expr den_tree =
        den_parts.size() == 1 ? den_parts.front() : Expr::product(std::move(den_parts));
    parts.push_back(Expr::power(den_tree, Expr::integer(-1)));
  }
  auto reciprocal = [](const Expr& x) {
    return x.kind() == Kind::Power && x.children()[1].is_integer(-1);
  };
  std::sort(parts.begin(), parts.end(), [&](const Expr& a, const Expr& b) {
    bool ra = reciprocal(a), rb = reciprocal(b);
    if (ra != rb) return rb;
    return Expr::compare(a, b) < 0;
  });
  Expr core = parts.size() == 1 ? parts.front() : Expr::product(std::move(parts));
  if (negative && abs_p == 1) core = Expr::negate(core);
  return core;
}

Expr Canonicalizer::rebuild(const Fraction& f) const {
  if (f.num.terms.empty()) return Expr::integer(0);
  if (f.num.terms.size() == 1) return term_to_expr(f.num.terms.front(), f.den);

  ExprList terms;
  for (const Term& t : f.num.terms) terms.push_back(term_to_expr(t, {}));
  Expr num_tree = Expr::sum(std::move(terms));
  if (f.den.empty()) return num_tree;
  ExprList den_parts;
  for (const Factor& d : f.den) den_parts.push_back(factor_to_expr(d));
  std::sort(den_parts.begin(), den_parts.end(),
            [](const Expr& a, const Expr& b) { return Expr::compare(a, b) < 0; });
  Expr den_tree =
      den_parts.size() == 1 ? den_parts.front() : Expr::product(std::move(den_parts));
  return Expr::product({num_tree, Expr::power(den_tree, Expr::integer(-1))});
}

}  // namespace

Expr simplify(const Expr& e) {
  Canonicalizer c;
  return c.run(e);
}

}  // namespace homothety

#include "gradus/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gradus {

int vterm_cmp(const MonoOrder& o, int32_t pa, const Mono& ma, int32_t pb, const Mono& mb) {
  if (pa != pb) return pa < pb ? 1 : -1;
  return o.cmp(ma, mb);
}

Vec vec_make(const RingCtx& ctx, std::vector<VTerm> terms) {
  for (auto& t : terms) t.c = ctx.field.normalize(t.c);
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) {
    return vterm_cmp(ctx.order, a.pos, a.m, b.pos, b.m) > 0;
  });
  Vec r;
  r.t.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.t.empty() && r.t.back().pos == t.pos && r.t.back().m == t.m) {
      r.t.back().c = ctx.field.add(r.t.back().c, t.c);
      if (r.t.back().c == 0) r.t.pop_back();
    } else if (t.c != 0) {
      r.t.push_back(std::move(t));
    }
  }
  return r;
}

/* merge two sorted term lists; scale/shift the second by (c, m) */
static Vec merge_impl(const RingCtx& ctx, const Vec& a, const mpq_class& c,
                      const Mono* m, const Vec& b) {
  Vec r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j >= b.t.size()) { r.t.push_back(a.t[i++]); continue; }
    Mono bm = m ? mono_mul(*m, b.t[j].m) : b.t[j].m;
    if (i >= a.t.size()) {
      mpq_class nc = ctx.field.mul(c, b.t[j].c);
      if (nc != 0) r.t.push_back(VTerm{b.t[j].pos, std::move(bm), std::move(nc)});
      ++j;
      continue;
    }
    int cv = vterm_cmp(ctx.order, a.t[i].pos, a.t[i].m, b.t[j].pos, bm);
    if (cv > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cv < 0) {
      mpq_class nc = ctx.field.mul(c, b.t[j].c);
      if (nc != 0) r.t.push_back(VTerm{b.t[j].pos, std::move(bm), std::move(nc)});
      ++j;
    } else {
      mpq_class nc = ctx.field.add(a.t[i].c, ctx.field.mul(c, b.t[j].c));
      if (nc != 0) r.t.push_back(VTerm{a.t[i].pos, a.t[i].m, std::move(nc)});
      ++i; ++j;
    }
  }
  return r;
}

Vec vec_add(const RingCtx& ctx, const Vec& a, const Vec& b) {
  return merge_impl(ctx, a, mpq_class(1), nullptr, b);
}
Vec vec_sub(const RingCtx& ctx, const Vec& a, const Vec& b) {
  return merge_impl(ctx, a, mpq_class(-1), nullptr, b);
}
Vec vec_sub_mul(const RingCtx& ctx, const Vec& a, const mpq_class& c, const Mono& m, const Vec& b) {
  return merge_impl(ctx, a, ctx.field.neg(c), &m, b);
}

Vec vec_neg(const RingCtx& ctx, const Vec& a) {
  Vec r = a;
  for (auto& t : r.t) t.c = ctx.field.neg(t.c);
  return r;
}

Vec vec_scale(const RingCtx& ctx, const Vec& a, const mpq_class& c) {
  if (c == 0) return Vec{};
  Vec r = a;
  for (auto& t : r.t) t.c = ctx.field.mul(t.c, c);
  return r;
}

Vec vec_mul_term(const RingCtx& ctx, const Vec& a, const mpq_class& c, const Mono& m) {
  if (c == 0) return Vec{};
  Vec r;
  r.t.reserve(a.t.size());
  for (auto& t : a.t) {
    mpq_class nc = ctx.field.mul(t.c, c);
    if (nc != 0) r.t.push_back(VTerm{t.pos, mono_mul(m, t.m), std::move(nc)});
  }
  return r;  // multiplying by a monomial preserves the term order
}

Vec vec_shift_pos(const Vec& a, int32_t shift) {
  Vec r = a;
  for (auto& t : r.t) t.pos += shift;
  return r;
}

Vec poly_mul(const RingCtx& ctx, const Vec& a, const Vec& b) {
  Vec acc;
  for (auto& t : a.t) acc = vec_add(ctx, acc, vec_mul_term(ctx, b, t.c, t.m));
  return acc;
}

Vec vec_monic(const RingCtx& ctx, const Vec& a) {
  if (a.is_zero()) return a;
  return vec_scale(ctx, a, ctx.field.inv(a.lead().c));
}

Vec poly_one(const RingCtx& ctx) {
  Vec v;
  v.t.push_back(VTerm{0, Mono(ctx.nvars()), mpq_class(1)});
  return v;
}
Vec poly_const(const RingCtx& ctx, const mpq_class& c) {
  Vec v;
  mpq_class n = ctx.field.normalize(c);
  if (n != 0) v.t.push_back(VTerm{0, Mono(ctx.nvars()), std::move(n)});
  return v;
}
Vec poly_var(const RingCtx& ctx, int i) {
  Vec v;
  Mono m(ctx.nvars());
  m.e[i] = 1;
  v.t.push_back(VTerm{0, std::move(m), mpq_class(1)});
  return v;
}

std::optional<int64_t> vec_degree_checked(const RingCtx& ctx, const Vec& v,
                                          const std::vector<int64_t>& twists) {
  if (v.is_zero()) return std::nullopt;
  int64_t d = weighted_deg(v.t[0].m, ctx.weights) + twists[v.t[0].pos];
  for (auto& t : v.t) {
    int64_t dt = weighted_deg(t.m, ctx.weights) + twists[t.pos];
    if (dt != d) throw EngineError("element is not homogeneous");
  }
  return d;
}

bool vec_is_homogeneous(const RingCtx& ctx, const Vec& v,
                        const std::vector<int64_t>& twists) {
  if (v.is_zero()) return true;
  int64_t d = weighted_deg(v.t[0].m, ctx.weights) + twists[v.t[0].pos];
  for (auto& t : v.t)
    if (weighted_deg(t.m, ctx.weights) + twists[t.pos] != d) return false;
  return true;
}

std::string mono_str(const RingCtx& ctx, const Mono& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ctx.nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!first) os << "*";
    os << ctx.vars[i];
    if (m.e[i] != 1) os << "^" << m.e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

static void term_str(const RingCtx& ctx, const VTerm& t, bool lead, std::ostringstream& os) {
  mpq_class c = t.c;
  bool neg = c < 0;
  if (neg) c = -c;
  if (lead) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  if (t.m.is_one()) {
    os << c.get_str();
  } else {
    if (c != 1) os << c.get_str() << "*";
    os << mono_str(ctx, t.m);
  }
}

std::string poly_str(const RingCtx& ctx, const Vec& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < v.t.size(); ++i) term_str(ctx, v.t[i], i == 0, os);
  return os.str();
}

std::string vec_str(const RingCtx& ctx, const Vec& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  int32_t cur = -1;
  bool firstpos = true;
  for (size_t i = 0; i < v.t.size(); ++i) {
    if (v.t[i].pos != cur) {
      cur = v.t[i].pos;
      if (!firstpos) os << " ";
      firstpos = false;
      os << "[" << cur << "]";
      // gather the positional slice and print as polynomial
      Vec slice;
      for (size_t j = i; j < v.t.size() && v.t[j].pos == cur; ++j)
        slice.t.push_back(v.t[j]);
      os << "(" << poly_str(ctx, slice) << ")";
    }
  }
  return os.str();
}

/* --- parser --- */
namespace {
struct Parser {
  const RingCtx& ctx;
  const std::string& s;
  size_t i = 0;

  Parser(const RingCtx& c, const std::string& text) : ctx(c), s(text) {}

  void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw EngineError("parse error at offset " + std::to_string(i) + ": " + why +
                      " in \"" + s + "\"");
  }

  Vec expr() {
    skip();
    bool neg = false;
    while (true) {
      if (eat('-')) { neg = !neg; continue; }
      if (eat('+')) continue;
      break;
    }
    Vec v = term();
    if (neg) v = vec_neg(ctx, v);
    while (true) {
      skip();
      if (i >= s.size()) break;
      if (s[i] == '+' || s[i] == '-') {
        bool sub = s[i] == '-';
        ++i;
        Vec rhs = term();
        v = sub ? vec_sub(ctx, v, rhs) : vec_add(ctx, v, rhs);
      } else {
        break;
      }
    }
    return v;
  }

  Vec term() {
    Vec v = factor();
    while (true) {
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        v = poly_mul(ctx, v, factor());
      } else {
        break;
      }
    }
    return v;
  }

  Vec factor() {
    Vec base = atom();
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      long e = natural();
      Vec acc = poly_one(ctx);
      for (long k = 0; k < e; ++k) acc = poly_mul(ctx, acc, base);
      return acc;
    }
    return base;
  }

  long natural() {
    skip();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected number");
    long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000000) fail("number too large");
      ++i;
    }
    return v;
  }

  Vec atom() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    if (s[i] == '(') {
      ++i;
      Vec v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit((unsigned char)s[i])) {
      long num = natural();
      skip();
      if (i < s.size() && s[i] == '/') {
        ++i;
        long den = natural();
        if (den == 0) fail("zero denominator");
        return poly_const(ctx, mpq_class(num, den));
      }
      return poly_const(ctx, mpq_class(num));
    }
    if (std::isalpha((unsigned char)s[i]) || s[i] == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
      std::string name = s.substr(i, j - i);
      int vi = ctx.var_index(name);
      if (vi < 0) fail("unknown variable '" + name + "'");
      i = j;
      return poly_var(ctx, vi);
    }
    fail("unexpected character");
  }
};
}  // namespace

Vec parse_poly(const RingCtx& ctx, const std::string& text) {
  Parser p(ctx, text);
  Vec v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace gradus

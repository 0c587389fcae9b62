#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "starcat/scalar.hpp"

namespace starcat {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Rat parse_rat_token(const std::string& t) {
  std::string s = t;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  size_t slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  require(all_digits(num) && all_digits(den), Errc::Parse, "bad rational literal '" + t + "'");
  mpz_class n(num), d(den);
  require(d != 0, Errc::Parse, "zero denominator in '" + t + "'");
  if (negative) n = -n;
  return Rat(n, d);
}

// splits "a+b-c" into signed terms {"a", "+b", "-c"}
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && i > 0) {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(c);
  }
  if (!cur.empty()) terms.push_back(cur);
  require(!terms.empty(), Errc::Parse, "empty literal");
  return terms;
}

std::string strip_sign(const std::string& t, bool& negative) {
  negative = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    negative = t[0] == '-';
    return t.substr(1);
  }
  return t;
}

// term forms: "R", "R*u", "u" where u is one of the given unit names
struct UnitTerm {
  int unit;  // -1 = scalar part
  Rat coeff;
};

UnitTerm parse_unit_term(const std::string& term, const std::vector<std::string>& units) {
  bool negative = false;
  std::string t = strip_sign(term, negative);
  require(!t.empty(), Errc::Parse, "empty term");
  UnitTerm out{-1, Rat(0)};
  for (size_t u = 0; u < units.size(); ++u) {
    const std::string& name = units[u];
    if (t == name) {
      out.unit = static_cast<int>(u);
      out.coeff = Rat(1);
    } else if (t.size() > name.size() + 1 && t.compare(t.size() - name.size() - 1, name.size() + 1, "*" + name) == 0) {
      out.unit = static_cast<int>(u);
      out.coeff = parse_rat_token(t.substr(0, t.size() - name.size() - 1));
    } else {
      continue;
    }
    if (negative) out.coeff = -out.coeff;
    return out;
  }
  out.coeff = parse_rat_token(t);
  if (negative) out.coeff = -out.coeff;
  return out;
}

// "R", "R*x", "R*x^k", "x", "x^k"
void parse_poly_term(const std::string& term, std::vector<Rat>& coeffs) {
  bool negative = false;
  std::string t = strip_sign(term, negative);
  require(!t.empty(), Errc::Parse, "empty polynomial term");
  Rat coeff(1);
  long power = 0;
  size_t xpos = t.find('x');
  if (xpos == std::string::npos) {
    coeff = parse_rat_token(t);
  } else {
    std::string head = t.substr(0, xpos);
    std::string tail = t.substr(xpos + 1);
    if (head.empty()) {
      coeff = Rat(1);
    } else {
      require(head.back() == '*', Errc::Parse, "bad polynomial term '" + term + "'");
      coeff = parse_rat_token(head.substr(0, head.size() - 1));
    }
    if (tail.empty()) {
      power = 1;
    } else {
      require(tail[0] == '^' && all_digits(tail.substr(1)), Errc::Parse,
              "bad polynomial power in '" + term + "'");
      power = std::stol(tail.substr(1));
      require(power >= 0 && power <= 4096, Errc::Parse, "polynomial power out of range");
    }
  }
  if (negative) coeff = -coeff;
  if (static_cast<size_t>(power) >= coeffs.size()) coeffs.resize(static_cast<size_t>(power) + 1, Rat(0));
  coeffs[static_cast<size_t>(power)] += coeff;
}

Poly parse_poly(const std::string& s) {
  std::vector<Rat> coeffs;
  for (const std::string& term : split_terms(s)) parse_poly_term(term, coeffs);
  return Poly(std::move(coeffs));
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    Rat c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string term = c.str();
    if (k >= 1) term += "*x";
    if (k >= 2) term += "^" + std::to_string(k);
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::string join_unit_terms(const std::vector<std::pair<Rat, std::string>>& parts) {
  std::string out;
  for (const auto& [coeff, unit] : parts) {
    if (coeff.is_zero()) continue;
    std::string term = coeff.str();
    if (!unit.empty()) term += "*" + unit;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Rat parse_rat(const std::string& text) { return parse_rat_token(strip_spaces(text)); }

Scalar parse_scalar(RingId ring, const std::string& text) {
  std::string s = strip_spaces(text);
  require(!s.empty(), Errc::Parse, "empty scalar literal");
  switch (ring) {
    case RingId::Rational:
      return Scalar::rational(parse_rat_token(s));
    case RingId::Gaussian: {
      Rat re(0), im(0);
      for (const std::string& term : split_terms(s)) {
        UnitTerm t = parse_unit_term(term, {"i"});
        if (t.unit < 0)
          re += t.coeff;
        else
          im += t.coeff;
      }
      return Scalar::gaussian(re, im);
    }
    case RingId::Quaternion: {
      Rat comps[4] = {Rat(0), Rat(0), Rat(0), Rat(0)};
      for (const std::string& term : split_terms(s)) {
        UnitTerm t = parse_unit_term(term, {"i", "j", "k"});
        comps[t.unit + 1] += t.coeff;
      }
      return Scalar::quaternion(comps[0], comps[1], comps[2], comps[3]);
    }
    case RingId::RatFun: {
      if (s[0] == '(') {
        size_t close = s.find(')');
        require(close != std::string::npos, Errc::Parse, "unbalanced parenthesis in '" + text + "'");
        Poly num = parse_poly(s.substr(1, close - 1));
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return Scalar::ratfun(num, Poly::constant(Rat(1)));
        require(rest.size() >= 4 && rest[0] == '/' && rest[1] == '(' && rest.back() == ')', Errc::Parse,
                "bad rational-function literal '" + text + "'");
        Poly den = parse_poly(rest.substr(2, rest.size() - 3));
        require(!den.is_zero(), Errc::Parse, "zero denominator in '" + text + "'");
        return Scalar::ratfun(num, den);
      }
      if (s.find('x') == std::string::npos)
        return Scalar::from_rational(RingId::RatFun, parse_rat_token(s));
      require(s.find('/') == std::string::npos, Errc::Parse,
              "rational-function literal with '/' needs the (num)/(den) form: '" + text + "'");
      return Scalar::ratfun(parse_poly(s), Poly::constant(Rat(1)));
    }
  }
  fail(Errc::Parse, "bad ring id");
}

std::string format_scalar(const Scalar& s) {
  switch (s.ring()) {
    case RingId::Rational:
      return s.as_rational().str();
    case RingId::Gaussian: {
      const auto& g = s.as_gaussian();
      return join_unit_terms({{g.re, ""}, {g.im, "i"}});
    }
    case RingId::Quaternion: {
      const auto& q = s.as_quaternion();
      return join_unit_terms({{q.a, ""}, {q.b, "i"}, {q.c, "j"}, {q.d, "k"}});
    }
    case RingId::RatFun: {
      const auto& r = s.as_ratfun();
      return "(" + poly_str(r.num) + ")/(" + poly_str(r.den) + ")";
    }
  }
  fail(Errc::Parse, "bad ring id");
}

}  // namespace starcat

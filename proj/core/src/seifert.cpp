#include "finsurg/seifert.hpp"

#include "finsurg/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace finsurg {

void validate(const SeifertPresentation& p) {
  if (p.fibers.size() > 3)
    throw std::invalid_argument("presentation: at most three exceptional fibers supported");
  for (const Fiber& f : p.fibers) {
    if (f.alpha < 1) throw std::invalid_argument("presentation: fiber multiplicity must be >= 1");
    if (std::gcd(f.alpha, std::llabs(f.omega)) != 1)
      throw std::invalid_argument("presentation: fiber invariants must be coprime");
  }
}

bool is_normalized(const SeifertPresentation& p) {
  for (const Fiber& f : p.fibers)
    if (f.alpha < 2 || f.omega <= 0 || f.omega >= f.alpha) return false;
  return true;
}

Rational euler_number(const SeifertPresentation& p) {
  Rational e(p.b);
  for (const Fiber& f : p.fibers) e += Rational(f.omega, f.alpha);
  return e;
}

SeifertPresentation normalize(const SeifertPresentation& p) {
  validate(p);
  SeifertPresentation out;
  out.b = p.b;
  for (const Fiber& f : p.fibers) {
    if (f.alpha == 1) {
      out.b += f.omega;
      continue;
    }
    long long w = mod_floor(f.omega, f.alpha);  // w != 0 since gcd = 1, alpha >= 2
    out.b += (f.omega - w) / f.alpha;
    out.fibers.push_back({f.alpha, w});
  }
  return out;
}

SeifertPresentation reverse_orientation(const SeifertPresentation& p) {
  validate(p);
  SeifertPresentation neg;
  neg.b = -p.b;
  for (const Fiber& f : p.fibers) neg.fibers.push_back({f.alpha, -f.omega});
  return normalize(neg);
}

Rational h1_order(const SeifertPresentation& p) {
  validate(p);
  Rational prod(1);
  for (const Fiber& f : p.fibers) prod *= Rational(f.alpha);
  return (prod * euler_number(p)).abs();
}

std::string elliptic_tag_name(EllipticTag tag) {
  switch (tag) {
    case EllipticTag::Icosahedral: return "Icosahedral";
    case EllipticTag::Octahedral: return "Octahedral";
    case EllipticTag::Tetrahedral: return "Tetrahedral";
    case EllipticTag::Dihedral: return "Dihedral";
    case EllipticTag::Lens: return "Lens";
    case EllipticTag::NotElliptic: return "NotElliptic";
  }
  return "NotElliptic";
}

EllipticType classify_elliptic(const SeifertPresentation& p) {
  if (!is_normalized(p))
    throw std::invalid_argument("classify_elliptic: presentation must be normalized");

  EllipticType out;
  Rational h1 = h1_order(p);
  out.h1 = h1.is_integer() ? static_cast<long long>(h1.num()) : 0;

  if (p.fibers.size() <= 2) {
    out.tag = EllipticTag::Lens;
    out.cyclic_h1 = true;
    return out;
  }

  std::array<long long, 3> mult{p.fibers[0].alpha, p.fibers[1].alpha, p.fibers[2].alpha};
  std::sort(mult.begin(), mult.end());

  if (mult[0] == 2 && mult[1] == 2) {
    out.tag = EllipticTag::Dihedral;
    out.cyclic_h1 = (mult[2] % 2 != 0);  // odd third multiplicity: Z_{4m}; even: Z_2 x Z_{2m}
    return out;
  }
  if (mult[0] == 2 && mult[1] == 3 && mult[2] == 3) {
    out.tag = EllipticTag::Tetrahedral;
    out.cyclic_h1 = true;
    return out;
  }
  if (mult[0] == 2 && mult[1] == 3 && mult[2] == 4) {
    out.tag = EllipticTag::Octahedral;
    out.cyclic_h1 = true;
    return out;
  }
  if (mult[0] == 2 && mult[1] == 3 && mult[2] == 5) {
    out.tag = EllipticTag::Icosahedral;
    out.cyclic_h1 = true;
    return out;
  }
  out.tag = EllipticTag::NotElliptic;
  out.cyclic_h1 = false;
  return out;
}

SeifertPresentation dihedral_family(long long m, long long n) {
  if (m < 1) throw std::invalid_argument("dihedral_family: m must be positive");
  if (n == 0) throw std::invalid_argument("dihedral_family: n must be nonzero");
  if (std::gcd(m, std::llabs(n)) != 1)
    throw std::invalid_argument("dihedral_family: m and n must be coprime");
  if (n < 0) return reverse_orientation(dihedral_family(m, -n));
  SeifertPresentation raw;
  raw.b = -1;
  raw.fibers = {{2, 1}, {2, 1}, {n, m}};
  return normalize(raw);
}

NemethiInvariants nemethi_form(const SeifertPresentation& p) {
  if (!is_normalized(p))
    throw std::invalid_argument("nemethi_form: presentation must be normalized");
  if (p.fibers.size() != 3)
    throw std::invalid_argument("nemethi_form: unsupported shape (exactly three fibers required)");

  NemethiInvariants inv;
  inv.e0 = p.b;
  Rational one_over_alpha_sum(0);
  for (int l = 0; l < 3; ++l) {
    const Fiber& f = p.fibers[static_cast<size_t>(l)];
    inv.fibers[static_cast<size_t>(l)] = {f.alpha, f.omega, mod_inverse(f.omega, f.alpha)};
    one_over_alpha_sum += Rational(1, f.alpha);
  }
  inv.e = euler_number(p);
  if (!inv.e.is_negative())
    throw std::invalid_argument("nemethi_form: not negative definite (e >= 0); reverse orientation first");
  inv.eps = (Rational(-1) + one_over_alpha_sum) / inv.e;
  return inv;
}

namespace {

// Integer scanner for the presentation text format.
struct Scanner {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("presentation: expected integer");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }

  [[noreturn]] void fail(const char* msg) { throw std::invalid_argument(std::string("presentation: ") + msg); }
};

}  // namespace

SeifertPresentation parse_presentation(std::string_view text) {
  Scanner sc{text};
  if (!sc.eat('(')) sc.fail("expected '('");
  SeifertPresentation p;
  p.b = sc.integer();
  if (sc.eat(')')) {
    sc.skip_ws();
    if (sc.pos != text.size()) sc.fail("trailing characters");
    validate(p);
    return p;
  }
  if (!sc.eat(';')) sc.fail("expected ';' after b");
  if (sc.peek() != ')') {
    do {
      long long omega = sc.integer();
      if (!sc.eat('/')) sc.fail("expected '/' in fiber");
      long long alpha = sc.integer();
      p.fibers.push_back({alpha, omega});
    } while (sc.eat(','));
  }
  if (!sc.eat(')')) sc.fail("expected ')'");
  sc.skip_ws();
  if (sc.pos != text.size()) sc.fail("trailing characters");
  validate(p);
  return p;
}

std::string format_presentation(const SeifertPresentation& p) {
  std::string out = "(" + std::to_string(p.b) + ";";
  bool first = true;
  for (const Fiber& f : p.fibers) {
    out += first ? " " : ", ";
    out += std::to_string(f.omega) + "/" + std::to_string(f.alpha);
    first = false;
  }
  out += ")";
  return out;
}

}  // namespace finsurg

#include "terms.hpp"

#include <cctype>
#include <stdexcept>

namespace bgw::detail {

void append_term(std::string& out, const Term& t, bool first) {
  Rational mag = t.coeff.abs();
  if (first) {
    if (t.coeff.sign() < 0) out += "-";
  } else {
    out += t.coeff.sign() < 0 ? " - " : " + ";
  }
  bool bare = t.radicand == 1 && t.unit == 0;
  if (!(mag == Rational(1)) || bare) {
    if (mag.is_integer()) {
      out += mag.to_string();
    } else {
      out += "(" + mag.to_string() + ")";
    }
  }
  if (t.radicand != 1) out += "r" + std::to_string(t.radicand);
  if (t.unit != 0) out += t.unit;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  std::string digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in \"" +
                                std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational read_fraction(Scanner& sc, bool in_parens) {
  sc.skip_ws();
  bool neg = false;
  if (in_parens && (sc.peek() == '-' || sc.peek() == '+')) {
    neg = sc.get() == '-';
    sc.skip_ws();
  }
  std::string n = sc.digits();
  if (n.empty()) sc.fail("expected integer");
  Rational r = Rational::parse(n);
  sc.skip_ws();
  if (sc.peek() == '/') {
    sc.get();
    sc.skip_ws();
    std::string d = sc.digits();
    if (d.empty()) sc.fail("expected denominator");
    r = Rational(r.num(), BigInt(d));
  }
  return neg ? -r : r;
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text, std::string_view units) {
  Scanner sc(text);
  std::vector<Term> terms;
  if (sc.done()) throw std::invalid_argument("empty expression");
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sc.get();
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      sc.fail("expected '+' or '-'");
    }
    first = false;
    sc.skip_ws();
    Term t;
    bool have = false;
    t.coeff = Rational(1);
    if (sc.peek() == '(') {
      sc.get();
      t.coeff = read_fraction(sc, true);
      sc.skip_ws();
      if (sc.get() != ')') sc.fail("expected ')'");
      have = true;
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      t.coeff = read_fraction(sc, false);
      have = true;
    }
    sc.skip_ws();
    if (sc.peek() == 'r') {
      sc.get();
      std::string d = sc.digits();
      if (d.empty()) sc.fail("expected radicand");
      t.radicand = std::stoi(d);
      have = true;
    }
    sc.skip_ws();
    char u = sc.peek();
    if (u != '\0' && units.find(u) != std::string_view::npos) {
      sc.get();
      t.unit = u;
      have = true;
    }
    if (!have) sc.fail("expected term");
    if (sign < 0) t.coeff = -t.coeff;
    terms.push_back(t);
  }
  return terms;
}

}  // namespace bgw::detail

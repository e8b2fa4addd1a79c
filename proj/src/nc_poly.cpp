#include <algorithm>
#include <cctype>
#include <sstream>

#include "qcpn/errors.hpp"
#include "qcpn/qsphere.hpp"

namespace qcpn {
namespace {

// Serialization key: starred letters first, then ascending index.
std::pair<int, int> letter_key(const Generator& g) { return {g.starred ? 0 : 1, g.index}; }

}  // namespace

std::string Generator::to_string() const {
  return "z" + std::to_string(index) + (starred ? "s" : "");
}

bool CanonicalWordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ka = letter_key(a[i]);
    auto kb = letter_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += w[i].to_string();
  }
  return out;
}

NCPoly::NCPoly(int n) : n_(n) {
  if (n < 0) throw DomainError("ambient n must be nonnegative");
}

NCPoly NCPoly::constant(int n, const LaurentQ& c) { return monomial(n, {}, c); }

NCPoly NCPoly::monomial(int n, Word word, const LaurentQ& c) {
  NCPoly p(n);
  p.add_term(word, c);
  return p;
}

NCPoly NCPoly::generator(int n, int index, bool starred) {
  return monomial(n, {Generator{index, starred}});
}

LaurentQ NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentQ() : it->second;
}

void NCPoly::check_word(const Word& w) const {
  for (const auto& g : w)
    if (g.index < 0 || g.index > n_)
      throw DomainError("generator index " + std::to_string(g.index) +
                        " out of range 0.." + std::to_string(n_));
}

void NCPoly::add_term(const Word& w, const LaurentQ& c) {
  if (c.is_zero()) return;
  check_word(w);
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  if (rhs.n_ != n_) throw OrderMismatch(n_, rhs.n_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  if (rhs.n_ != n_) throw OrderMismatch(n_, rhs.n_);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const LaurentQ& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.n_ != b.n_) throw OrderMismatch(a.n_, b.n_);
  NCPoly out(a.n_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (c.is_monomial()) {
      const auto& [e, k] = *c.terms().begin();
      const bool negative = k < 0;
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      const LaurentQ magnitude = LaurentQ::monomial(abs(k), e);
      if (w.empty()) {
        out << magnitude.to_string();
      } else {
        if (magnitude != LaurentQ(1)) out << magnitude.to_string() << "*";
        out << word_to_string(w);
      }
    } else {
      out << (first ? "" : " + ") << "(" << c.to_string() << ")";
      if (!w.empty()) out << "*" << word_to_string(w);
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  NCPoly run() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    NCPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int small_int(bool allow_negative) {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (negative && !allow_negative) {
      pos_ = start;
      fail("negative exponent");
    }
    BigInt value = integer();
    if (!value.fits_sint_p() || value > 1'000'000) {
      pos_ = start;
      fail("exponent too large");
    }
    int v = static_cast<int>(value.get_si());
    return negative ? -v : v;
  }

  NCPoly expr() {
    NCPoly acc(n_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    NCPoly first = term();
    acc += negate ? -first : first;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  NCPoly term() {
    NCPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  NCPoly factor() {
    NCPoly base = primary();
    while (accept('^')) {
      int e = small_int(false);
      NCPoly power = NCPoly::constant(n_, 1);
      for (int i = 0; i < e; ++i) power = power * base;
      base = std::move(power);
    }
    return base;
  }

  NCPoly primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return NCPoly::constant(n_, LaurentQ(integer()));
    if (c == 'q') {
      ++pos_;
      int e = 1;
      // q^k binds its (possibly negative) exponent directly.
      std::size_t save = pos_;
      if (accept('^')) {
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_]))))
          e = small_int(true);
        else
          pos_ = save;
      }
      return NCPoly::constant(n_, LaurentQ::q(e));
    }
    if (c == 'z') {
      const std::size_t at = pos_;
      ++pos_;
      BigInt index = integer();
      bool starred = false;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 's') {
        starred = true;
        ++pos_;
      }
      if (index > n_) {
        pos_ = at;
        fail("generator index " + index.get_str() + " exceeds n=" + std::to_string(n_));
      }
      return NCPoly::generator(n_, static_cast<int>(index.get_si()), starred);
    }
    if (c == '(') {
      ++pos_;
      NCPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_nc(std::string_view text, int n) {
  if (n < 0) throw DomainError("ambient n must be nonnegative");
  return Parser(text, n).run();
}

NCPoly parse_nc(std::string_view text) {
  // Parse against a generous ambient, then shrink to the largest index seen.
  constexpr int kUnbounded = 1 << 20;
  NCPoly wide = Parser(text, kUnbounded).run();
  int n = 0;
  for (const auto& [w, c] : wide.terms())
    for (const auto& g : w) n = std::max(n, g.index);
  NCPoly out(n);
  for (const auto& [w, c] : wide.terms()) out.add_term(w, c);
  return out;
}

}  // namespace qcpn

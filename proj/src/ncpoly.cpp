#include "cdindex/ncpoly.hpp"

#include <cctype>

#include "cdindex/errors.hpp"

namespace cdindex {

// ---- UniPolynomial -------------------------------------------------------

void UniPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPolynomial UniPolynomial::x_power(int k) {
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return UniPolynomial(std::move(c));
}

UniPolynomial UniPolynomial::x_minus_one_power(int k) {
  // binomial expansion, coefficient of x^i is C(k,i) (-1)^(k-i)
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1);
  Integer binom = 1;
  for (int i = 0; i <= k; ++i) {
    c[static_cast<std::size_t>(i)] = (k - i) % 2 ? Integer(-binom) : binom;
    binom = binom * (k - i) / (i + 1);
  }
  return UniPolynomial(std::move(c));
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator-=(const UniPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator*=(const Integer& s) {
  for (auto& k : c_) k *= s;
  trim();
  return *this;
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPolynomial(std::move(c));
}

bool UniPolynomial::is_palindrome(int n) const {
  if (degree() > n) return false;
  for (int i = 0; i <= n; ++i)
    if ((*this)[i] != (*this)[n - i]) return false;
  return true;
}

UniPolynomial truncate(const UniPolynomial& f, int m) {
  if (m < 0) return {};
  std::vector<Integer> c = f.coeffs();
  if (static_cast<int>(c.size()) > m + 1) c.resize(static_cast<std::size_t>(m) + 1);
  return UniPolynomial(std::move(c));
}

UniPolynomial reverse(const UniPolynomial& f, int n) {
  if (f.degree() > n)
    fail(ErrorKind::DegreeTooHigh, "degree " + std::to_string(f.degree()) + " exceeds " + std::to_string(n));
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(n - i)] = f[i];
  return UniPolynomial(std::move(c));
}

// ---- substitution and the cd basis ---------------------------------------

AbPolynomial substitute(const AbPolynomial& p, const AbPolynomial& image_a, const AbPolynomial& image_b) {
  AbPolynomial out;
  for (const auto& [w, k] : p.terms()) {
    AbPolynomial term = AbPolynomial::one();
    for (char ch : w) term = term * (ch == 'a' ? image_a : image_b);
    out += term * k;
  }
  return out;
}

namespace {

// Every ab-word in the expansion of one cd-word, each with coefficient 1.
void expand_word(const std::string& cd, std::size_t pos, std::string& acc,
                 const std::function<void(const std::string&)>& emit) {
  if (pos == cd.size()) {
    emit(acc);
    return;
  }
  const std::size_t mark = acc.size();
  if (cd[pos] == 'c') {
    for (const char* s : {"a", "b"}) {
      acc += s;
      expand_word(cd, pos + 1, acc, emit);
      acc.resize(mark);
    }
  } else {
    for (const char* s : {"ab", "ba"}) {
      acc += s;
      expand_word(cd, pos + 1, acc, emit);
      acc.resize(mark);
    }
  }
}

bool pivot_less(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace

AbPolynomial expand_cd(const CdPolynomial& p) {
  AbPolynomial out;
  std::string acc;
  for (const auto& [w, k] : p.terms())
    expand_word(w, 0, acc, [&, &k = k](const std::string& ab) { out.add_term(ab, k); });
  return out;
}

CdConversion try_to_cd(const AbPolynomial& p) {
  AbPolynomial rest = p;
  CdPolynomial cd;
  while (!rest.is_zero()) {
    const std::string* pivot = nullptr;
    for (const auto& [w, k] : rest.terms())
      if (!pivot || pivot_less(w, *pivot)) pivot = &w;
    const std::string w = *pivot;
    const Integer k = rest.coefficient(w);

    // a followed by b reads as d, any other a as c; a b not preceded by a
    // cannot start a cd-word's lex-minimal expansion.
    std::string word;
    for (std::size_t i = 0; i < w.size();) {
      if (w[i] == 'b') return {std::nullopt, rest};
      if (i + 1 < w.size() && w[i + 1] == 'b') {
        word += 'd';
        i += 2;
      } else {
        word += 'c';
        i += 1;
      }
    }
    cd.add_term(word, k);
    std::string acc;
    expand_word(word, 0, acc, [&](const std::string& ab) { rest.add_term(ab, -k); });
  }
  return {std::move(cd), AbPolynomial{}};
}

CdPolynomial to_cd(const AbPolynomial& p) {
  auto r = try_to_cd(p);
  if (!r.cd) fail(ErrorKind::NotCdExpressible, "residual " + to_text(r.residual));
  return std::move(*r.cd);
}

std::vector<std::string> cd_words(int degree) {
  std::vector<std::vector<std::string>> by(static_cast<std::size_t>(std::max(degree, 0)) + 1);
  by[0] = {""};
  for (int n = 1; n <= degree; ++n) {
    auto& cur = by[static_cast<std::size_t>(n)];
    for (const auto& w : by[static_cast<std::size_t>(n - 1)]) cur.push_back(w + "c");
    if (n >= 2)
      for (const auto& w : by[static_cast<std::size_t>(n - 2)]) cur.push_back(w + "d");
  }
  if (degree < 0) return {};
  auto out = by[static_cast<std::size_t>(degree)];
  std::sort(out.begin(), out.end(), &CdPolynomial::display_less);
  return out;
}

// ---- coproduct and kappa -------------------------------------------------

void TensorSum::add(const std::string& left, const std::string& right, const Integer& k) {
  if (k == 0) return;
  auto [it, fresh] = terms_.try_emplace({left, right}, k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorSum coproduct(const AbPolynomial& p) {
  TensorSum t;
  for (const auto& [w, k] : p.terms())
    for (std::size_t i = 0; i < w.size(); ++i) t.add(w.substr(0, i), w.substr(i + 1), k);
  return t;
}

UniPolynomial tensor_collapse(const TensorSum& t,
                              const std::function<UniPolynomial(const AbPolynomial&)>& left,
                              const std::function<UniPolynomial(const AbPolynomial&)>& right) {
  UniPolynomial out;
  for (const auto& [key, k] : t.terms())
    out += left(AbPolynomial::monomial(key.first)) * right(AbPolynomial::monomial(key.second)) * k;
  return out;
}

UniPolynomial kappa(const AbPolynomial& p) {
  UniPolynomial out;
  for (const auto& [w, k] : p.terms()) {
    if (w.find('b') != std::string::npos) continue;
    out += UniPolynomial::x_minus_one_power(static_cast<int>(w.size())) * k;
  }
  return out;
}

// ---- text ----------------------------------------------------------------

namespace {

std::string compress(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i >= 2) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

void append_term(std::string& out, const Integer& k, const std::string& body) {
  const bool neg = k < 0;
  const Integer mag = neg ? Integer(-k) : k;
  if (out.empty())
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  if (body.empty())
    out += mag.str();
  else if (mag == 1)
    out += body;
  else
    out += mag.str() + "*" + body;
}

template <class L>
std::string nc_text(const NcPoly<L>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [w, k] : p.display_terms()) append_term(out, k, compress(w));
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip();
    return i_ >= s_.size();
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++i_;
    return true;
  }
  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  Integer number() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) error("expected a number");
    Integer v(std::string(s_.substr(i_, j - i_)));
    i_ = j;
    return v;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

// Shared term grammar: [sign] [integer ['*']] [letter ['^' n]]* with at least
// one of number or letter. `on_term` receives the coefficient and the word.
void parse_terms(std::string_view text, const std::string& letters,
                 const std::function<void(const Integer&, const std::string&)>& on_term) {
  Reader r(text);
  if (r.done()) r.error("empty polynomial");
  bool first = true;
  while (!r.done()) {
    Integer sign = 1;
    if (r.accept('+')) {
    } else if (r.accept('-')) {
      sign = -1;
    } else if (!first) {
      r.error("expected '+' or '-'");
    }
    first = false;
    bool have = false;
    Integer k = 1;
    if (r.digit_next()) {
      k = r.number();
      have = true;
      r.accept('*');
    }
    std::string word;
    while (letters.find(r.peek()) != std::string::npos && r.peek() != '\0') {
      const char ch = r.peek();
      r.accept(ch);
      std::size_t reps = 1;
      if (r.accept('^')) {
        const Integer e = r.number();
        if (e > 4096) r.error("exponent too large");
        reps = e.convert_to<std::size_t>();
      }
      word.append(reps, ch);
      have = true;
      r.accept('*');
    }
    if (!have) r.error("expected a term");
    on_term(sign * k, word);
  }
}

}  // namespace

std::string to_text(const AbPolynomial& p) { return nc_text(p); }
std::string to_text(const CdPolynomial& p) { return nc_text(p); }

std::string to_text(const UniPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i] == 0) continue;
    std::string body = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
    append_term(out, p[i], body);
  }
  return out;
}

AbPolynomial parse_ab(std::string_view text) {
  AbPolynomial p;
  parse_terms(text, "ab", [&](const Integer& k, const std::string& w) { p.add_term(w, k); });
  return p;
}

CdPolynomial parse_cd(std::string_view text) {
  CdPolynomial p;
  parse_terms(text, "cd", [&](const Integer& k, const std::string& w) { p.add_term(w, k); });
  return p;
}

UniPolynomial parse_uni(std::string_view text) {
  UniPolynomial p;
  parse_terms(text, "x", [&](const Integer& k, const std::string& w) {
    p += UniPolynomial::x_power(static_cast<int>(w.size())) * k;
  });
  return p;
}

}  // namespace cdindex

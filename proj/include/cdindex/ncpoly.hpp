#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdindex {

using Integer = boost::multiprecision::cpp_int;

struct AbLetters {
  static constexpr char first = 'a';
  static constexpr char second = 'b';
  static constexpr int second_weight = 1;
};

struct CdLetters {
  static constexpr char first = 'c';
  static constexpr char second = 'd';
  static constexpr int second_weight = 2;
};

// Noncommutative polynomial over a two-letter alphabet with integer
// coefficients. Words are plain strings; zero coefficients are never stored.
// The map is keyed lexicographically (first < second), which is also the
// order the cd reduction pivots on.
template <class L>
class NcPoly {
 public:
  using Word = std::string;
  using Terms = std::map<Word, Integer>;

  NcPoly() = default;
  static NcPoly one() { return monomial(""); }
  static NcPoly monomial(Word w, Integer k = 1) {
    NcPoly p;
    p.add_term(std::move(w), k);
    return p;
  }
  static NcPoly letter_first() { return monomial(Word(1, L::first)); }
  static NcPoly letter_second() { return monomial(Word(1, L::second)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Word& w, const Integer& k) {
    if (k == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, k);
    if (!fresh) {
      it->second += k;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static int word_degree(const Word& w) {
    int d = 0;
    for (char ch : w) d += ch == L::second ? L::second_weight : 1;
    return d;
  }

  // -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [w, k] : terms_) d = std::max(d, word_degree(w));
    return d;
  }

  bool is_homogeneous() const {
    int d = -2;
    for (const auto& [w, k] : terms_) {
      const int e = word_degree(w);
      if (d != -2 && e != d) return false;
      d = e;
    }
    return true;
  }

  NcPoly homogeneous_part(int deg) const {
    NcPoly out;
    for (const auto& [w, k] : terms_)
      if (word_degree(w) == deg) out.terms_.emplace(w, k);
    return out;
  }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, k] : o.terms_) add_term(w, k);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, k] : o.terms_) add_term(w, -k);
    return *this;
  }
  NcPoly& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, k] : terms_) k *= s;
    return *this;
  }
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Integer(-1); }
  friend NcPoly operator*(NcPoly a, const Integer& s) { return a *= s; }
  friend NcPoly operator*(const Integer& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (const auto& [u, x] : a.terms_)
      for (const auto& [v, y] : b.terms_) out.add_term(u + v, x * y);
    return out;
  }
  NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

  bool operator==(const NcPoly&) const = default;

  // Exchange the two letters (a <-> b, or c <-> d).
  NcPoly swapped() const {
    NcPoly out;
    for (const auto& [w, k] : terms_) {
      Word s = w;
      for (char& ch : s) ch = ch == L::first ? L::second : L::first;
      out.terms_.emplace(std::move(s), k);
    }
    return out;
  }

  // Terms in display order: degree ascending, then fewer second letters
  // first, then lexicographic with second < first.
  std::vector<std::pair<Word, Integer>> display_terms() const {
    std::vector<std::pair<Word, Integer>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      return display_less(x.first, y.first);
    });
    return out;
  }

  static bool display_less(const Word& x, const Word& y) {
    const int dx = word_degree(x), dy = word_degree(y);
    if (dx != dy) return dx < dy;
    const auto sx = std::count(x.begin(), x.end(), L::second);
    const auto sy = std::count(y.begin(), y.end(), L::second);
    if (sx != sy) return sx < sy;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
      if (x[i] != y[i]) return x[i] == L::second;
    return x.size() < y.size();
  }

 private:
  Terms terms_;
};

using AbPolynomial = NcPoly<AbLetters>;
using CdPolynomial = NcPoly<CdLetters>;

// Dense univariate polynomial in x; index = power.
class UniPolynomial {
 public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPolynomial constant(const Integer& k) { return UniPolynomial({k}); }
  static UniPolynomial x_power(int k);
  static UniPolynomial x_minus_one_power(int k);  // (x - 1)^k

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Integer operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Integer(0);
  }

  UniPolynomial& operator+=(const UniPolynomial& o);
  UniPolynomial& operator-=(const UniPolynomial& o);
  UniPolynomial& operator*=(const Integer& s);
  friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
  friend UniPolynomial operator-(UniPolynomial a, const UniPolynomial& b) { return a -= b; }
  friend UniPolynomial operator*(UniPolynomial a, const Integer& s) { return a *= s; }
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  bool operator==(const UniPolynomial&) const = default;

  // Coefficients read the same both ways when padded to degree n.
  bool is_palindrome(int n) const;

 private:
  void trim();
  std::vector<Integer> c_;
};

UniPolynomial truncate(const UniPolynomial& f, int m);  // drop terms of degree > m
UniPolynomial reverse(const UniPolynomial& f, int n);   // x^n f(1/x); throws DegreeTooHigh

// Word-by-word homomorphic substitution a -> image_a, b -> image_b.
AbPolynomial substitute(const AbPolynomial& p, const AbPolynomial& image_a, const AbPolynomial& image_b);

// c -> a+b, d -> ab+ba.
AbPolynomial expand_cd(const CdPolynomial& p);

// Triangular reduction into the cd basis. On failure `cd` is empty and
// `residual` holds the remainder at the first unparsable pivot.
struct CdConversion {
  std::optional<CdPolynomial> cd;
  AbPolynomial residual;
};
CdConversion try_to_cd(const AbPolynomial& p);
CdPolynomial to_cd(const AbPolynomial& p);  // throws NotCdExpressible

// All cd-words of the given degree, in display order.
std::vector<std::string> cd_words(int degree);

// Deletion coproduct: C(w1...wn) = sum_i w1..w(i-1) (x) w(i+1)..wn.
class TensorSum {
 public:
  using Key = std::pair<std::string, std::string>;
  void add(const std::string& left, const std::string& right, const Integer& k);
  const std::map<Key, Integer>& terms() const noexcept { return terms_; }
  bool operator==(const TensorSum&) const = default;

 private:
  std::map<Key, Integer> terms_;
};
TensorSum coproduct(const AbPolynomial& p);
UniPolynomial tensor_collapse(const TensorSum& t,
                              const std::function<UniPolynomial(const AbPolynomial&)>& left,
                              const std::function<UniPolynomial(const AbPolynomial&)>& right);

// Algebra map a -> x-1, b -> 0.
UniPolynomial kappa(const AbPolynomial& p);

// Coefficientwise p >= q, missing terms read as zero.
template <class L>
bool dominates(const NcPoly<L>& p, const NcPoly<L>& q) {
  for (const auto& [w, k] : q.terms())
    if (p.coefficient(w) < k) return false;
  for (const auto& [w, k] : p.terms())
    if (k < 0 && q.coefficient(w) == 0) return false;
  return true;
}

template <class L>
bool nonnegative(const NcPoly<L>& p) {
  for (const auto& [w, k] : p.terms())
    if (k < 0) return false;
  return true;
}

// Text forms. Polynomials print as "c^3 + 3*dc + 4*cd"; a run of one letter
// is written with a caret. The parsers accept the same syntax, with or
// without '*', with whitespace anywhere.
std::string to_text(const AbPolynomial& p);
std::string to_text(const CdPolynomial& p);
std::string to_text(const UniPolynomial& p);
AbPolynomial parse_ab(std::string_view text);
CdPolynomial parse_cd(std::string_view text);
UniPolynomial parse_uni(std::string_view text);

}  // namespace cdindex

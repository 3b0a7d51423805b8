#include "jantzenlab/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jantzenlab {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly::LaurentPoly(int low, std::initializer_list<long> coeffs) : low_(low) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

int LaurentPoly::low() const {
  if (is_zero()) throw std::domain_error("low() of the zero polynomial");
  return low_;
}

int LaurentPoly::high() const {
  if (is_zero()) throw std::domain_error("high() of the zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

const Rational& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading_coeff() of the zero polynomial");
  return coeffs_.back();
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

bool LaurentPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high(), std::move(rev));
}

LaurentPoly LaurentPoly::negate_variable() const {
  LaurentPoly p = *this;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    if ((p.low_ + static_cast<int>(i)) % 2 != 0) p.coeffs_[i] = -p.coeffs_[i];
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw std::domain_error("substitute_power: exponent must be nonzero");
  LaurentPoly out;
  for (const auto& [e, c] : terms()) out += monomial(e * k, c);
  return out;
}

LaurentPoly LaurentPoly::slice(int lo, int hi) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms())
    if (e >= lo && e <= hi) out += monomial(e, c);
  return out;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_ < 0) throw std::domain_error("evaluate: negative power at zero");
  // Horner on the dense block, then scale by x^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Rational scale = 1;
  const Rational base = low_ >= 0 ? x : Rational(1) / x;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

Rational LaurentPoly::at_one() const {
  Rational s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    const bool unit = mag == 1;
    if (e == 0 || !unit) {
      if (mag.get_den() == 1)
        out += mag.get_num().get_str();
      else
        out += "(" + mag.get_str() + ")";
    }
    if (e != 0) {
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  if (s == "0") return {};
  LaurentPoly out;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("cannot parse polynomial: " + text); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    Rational c = 1;
    bool have_coeff = false;
    if (i < s.size() && s[i] == '(') {
      const auto close = s.find(')', i);
      if (close == std::string::npos) fail();
      c = Rational(s.substr(i + 1, close - i - 1));
      c.canonicalize();
      i = close + 1;
      have_coeff = true;
    } else {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j > i) {
        c = Rational(s.substr(i, j - i));
        i = j;
        have_coeff = true;
      }
    }
    int e = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        if (j < s.size() && s[j] == '-') ++j;
        const std::size_t digits = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == digits) fail();
        e = std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coeff) {
      fail();
    }
    out += monomial(e, sign * c);
  }
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return {};
  // Normalise both to ordinary polynomials, divide, then restore the shift.
  const LaurentPoly an = a.shifted(-a.low());
  const LaurentPoly bn = b.shifted(-b.low());
  auto [quot, rem] = divmod(an, bn);
  if (!rem.is_zero()) throw std::domain_error("divide_exact: not divisible");
  return quot.shifted(a.low() - b.low());
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero");
  if (!a.is_zero() && a.low() < 0) throw std::domain_error("divmod: negative exponent");
  if (b.low() < 0) throw std::domain_error("divmod: negative exponent");
  LaurentPoly rem = a;
  LaurentPoly quot;
  const int db = b.high();
  const Rational& lb = b.leading_coeff();
  while (!rem.is_zero() && rem.high() >= db) {
    const int shift = rem.high() - db;
    const Rational c = rem.leading_coeff() / lb;
    const LaurentPoly t = LaurentPoly::monomial(shift, c);
    quot += t;
    rem -= t * b;
  }
  return {quot, rem};
}

LaurentPoly quantum_integer(int k) {
  LaurentPoly out;
  for (int j = 0; j < k; ++j) out += LaurentPoly::monomial(k - 1 - 2 * j);
  return out;
}

}  // namespace jantzenlab

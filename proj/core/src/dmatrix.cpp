#include "jantzenlab/dmatrix.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "jantzenlab/errors.hpp"

namespace jantzenlab {

DMatrix::DMatrix(int n, int r) : n_(n), r_(r), order_(partitions_of(n)) {}

LaurentPoly DMatrix::at(const Partition& lam, const Partition& mu) const {
  auto it = entries_.find({lam, mu});
  return it == entries_.end() ? LaurentPoly() : it->second;
}

void DMatrix::set(const Partition& lam, const Partition& mu, LaurentPoly value) {
  if (lam.size() != n_ || mu.size() != n_) throw std::domain_error("DMatrix: partition of wrong size");
  if (value.is_zero())
    entries_.erase({lam, mu});
  else
    entries_[{lam, mu}] = std::move(value);
}

bool DMatrix::is_identity() const {
  if (entries_.size() != order_.size()) return false;
  for (const auto& [key, c] : entries_)
    if (key.first != key.second || c != LaurentPoly(1)) return false;
  return true;
}

std::map<std::pair<Partition, Partition>, Rational> DMatrix::at_one() const {
  std::map<std::pair<Partition, Partition>, Rational> out;
  for (const auto& [key, c] : entries_) {
    Rational v = c.at_one();
    if (v != 0) out.emplace(key, v);
  }
  return out;
}

DMatrix DMatrix::conjugated() const {
  DMatrix out(n_, r_);
  for (const auto& [key, c] : entries_) out.set(conjugate(key.first), conjugate(key.second), c);
  return out;
}

std::optional<EntryDifference> first_difference(const DMatrix& a, const DMatrix& b) {
  for (const Partition& mu : a.order())
    for (const Partition& lam : a.order()) {
      LaurentPoly x = a.at(lam, mu), y = b.at(lam, mu);
      if (x != y) return EntryDifference{lam, mu, x, y};
    }
  if (a.n() != b.n()) return EntryDifference{{}, {}, LaurentPoly(a.n()), LaurentPoly(b.n())};
  return std::nullopt;
}

void check_unitriangular(const DMatrix& d) {
  for (const Partition& mu : d.order())
    ensure(d.at(mu, mu) == LaurentPoly(1), "diagonal entry is not 1 at " + mu.to_string());
  for (const auto& [key, c] : d.entries()) {
    const auto& [lam, mu] = key;
    if (lam == mu) continue;
    ensure(c.low() >= 1 && c.has_integer_coeffs(),
           "off-diagonal entry not in qZ[q] at (" + lam.to_string() + ", " + mu.to_string() + ")");
    ensure(dominates(mu, lam),
           "entry outside dominance support at (" + lam.to_string() + ", " + mu.to_string() + ")");
  }
}

std::string to_json(const DMatrix& d, const std::string& method) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Partition& mu : d.order()) {
    nlohmann::json entries = nlohmann::json::object();
    for (const Partition& lam : d.order()) {
      const LaurentPoly c = d.at(lam, mu);
      if (!c.is_zero()) entries[lam.to_string()] = c.to_string();
    }
    rows.push_back({{"mu", mu.to_string()}, {"entries", entries}});
  }
  nlohmann::json j = {{"n", d.n()}, {"r", d.r()}, {"method", method}, {"rows", rows}};
  return j.dump(2);
}

std::string to_csv(const DMatrix& d) {
  std::ostringstream out;
  out << "lambda";
  for (const Partition& mu : d.order()) out << ",\"" << mu.to_string() << '"';
  out << '\n';
  for (const Partition& lam : d.order()) {
    out << '"' << lam.to_string() << '"';
    for (const Partition& mu : d.order()) out << ',' << d.at(lam, mu).to_string();
    out << '\n';
  }
  return out.str();
}

namespace {

std::string tex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "\\cdot";
  std::string s = p.to_string();
  std::string out;
  // q^12 -> q^{12}, q^-1 -> q^{-1}
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '^') {
      std::size_t j = i + 1;
      if (j < s.size() && s[j] == '-') ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string tex_partition(const Partition& p) { return "(" + p.to_string() + ")"; }

}  // namespace

std::string to_tex(const DMatrix& d) {
  std::ostringstream out;
  out << "\\begin{tabular}{l|" << std::string(d.order().size(), 'c') << "}\n";
  out << "$\\lambda \\backslash \\mu$";
  for (const Partition& mu : d.order()) out << " & $" << tex_partition(mu) << "$";
  out << " \\\\\n\\hline\n";
  for (const Partition& lam : d.order()) {
    out << "$" << tex_partition(lam) << "$";
    for (const Partition& mu : d.order()) out << " & $" << tex_poly(d.at(lam, mu)) << "$";
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

}  // namespace jantzenlab

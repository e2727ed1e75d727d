#include "ppoly.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "error.hpp"

namespace qsrank {

PPoly PPoly::constant(const mpq_class& c) { return monomial(Partition{}, c); }

PPoly PPoly::monomial(Partition nu, const mpq_class& c) {
  PPoly p;
  p.add_term(nu, c);
  return p;
}

mpq_class PPoly::coefficient(const Partition& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void PPoly::add_term(const Partition& nu, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PPoly& PPoly::operator+=(const PPoly& other) {
  for (const auto& [nu, c] : other.terms_) add_term(nu, c);
  return *this;
}

PPoly& PPoly::operator-=(const PPoly& other) {
  for (const auto& [nu, c] : other.terms_) add_term(nu, -c);
  return *this;
}

PPoly& PPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [nu, coeff] : terms_) coeff *= c;
  return *this;
}

PPoly PPoly::operator-() const {
  PPoly out = *this;
  for (auto& [nu, coeff] : out.terms_) coeff = -coeff;
  return out;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
  PPoly out;
  std::vector<int> merged;
  for (const auto& [nu_a, ca] : a.terms_) {
    for (const auto& [nu_b, cb] : b.terms_) {
      merged.resize(nu_a.length() + nu_b.length());
      std::merge(nu_a.vec().begin(), nu_a.vec().end(), nu_b.vec().begin(), nu_b.vec().end(), merged.begin(),
                 std::greater<>());
      out.add_term(Partition(merged), ca * cb);
    }
  }
  return out;
}

std::optional<int> PPoly::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.begin()->first.weight();
  for (const auto& [nu, c] : terms_)
    if (nu.weight() != w) return std::nullopt;
  return w;
}

int PPoly::lowest_degree() const {
  if (terms_.empty()) throw InvalidArgument("lowest degree of the zero polynomial is undefined");
  return static_cast<int>(terms_.begin()->first.length());
}

PPoly PPoly::bottom() const {
  const std::size_t degree = static_cast<std::size_t>(lowest_degree());
  PPoly out;
  for (const auto& [nu, c] : terms_) {
    if (nu.length() != degree) break;
    out.terms_.emplace(nu, c);
  }
  return out;
}

std::string PPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [nu, c] : terms_) {
    mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (nu.empty()) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "p[";
    for (std::size_t i = 0; i < nu.length(); ++i) {
      if (i) out += ',';
      out += std::to_string(nu.vec()[i]);
    }
    out += "]";
  }
  return out;
}

std::string PPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [nu, c] : terms_) {
    arr.push_back({{"nu", nu.vec()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return arr.dump();
}

PPoly PPoly::from_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!arr.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  PPoly out;
  for (const auto& term : arr) {
    if (!term.is_object() || !term.contains("nu") || !term.contains("num") || !term.contains("den"))
      throw ParseError("each term needs \"nu\", \"num\" and \"den\"");
    std::vector<int> parts;
    try {
      parts = term.at("nu").get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("\"nu\" must be an array of integers");
    }
    if (!term.at("num").is_string() || !term.at("den").is_string())
      throw ParseError("\"num\" and \"den\" must be decimal strings");
    mpz_class num, den;
    if (num.set_str(term.at("num").get<std::string>(), 10) != 0 ||
        den.set_str(term.at("den").get<std::string>(), 10) != 0 || den == 0)
      throw ParseError("malformed coefficient");
    mpq_class c(num, den);
    c.canonicalize();
    try {
      out.add_term(Partition::from_unsorted(std::move(parts)), c);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

}  // namespace qsrank

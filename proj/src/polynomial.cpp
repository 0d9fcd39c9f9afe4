#include "cdo/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace cdo {

namespace {

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i) {
    int e = a[i] + b[i];
    if (e > 255) throw std::overflow_error("Polynomial: exponent overflow");
    r[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

void accumulate(Polynomial::Terms& terms, const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string name_of(int slot, const VariableNames& names) {
  if (slot < static_cast<int>(names.size()) && !names[slot].empty()) return names[slot];
  return default_variable_name(slot);
}

}  // namespace

std::string default_variable_name(int slot) {
  static const char* params[] = {"t", "u", "v", "w"};
  if (slot < 4) return params[slot];
  return "y" + std::to_string(slot);
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(int slot) {
  if (slot < 0 || slot >= kMaxVars) throw std::out_of_range("Polynomial: variable slot");
  Exponents e{};
  e[slot] = 1;
  return term(e, Rational(1));
}

Polynomial Polynomial::term(const Exponents& e, const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

std::optional<Rational> Polynomial::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::uses_only_slots_below(int limit) const {
  for (const auto& [e, c] : terms_)
    for (int i = limit; i < kMaxVars; ++i)
      if (e[i]) return false;
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

void Polynomial::add_scaled(const Polynomial& o, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [e, k] : o.terms_) accumulate(terms_, e, k * c);
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b) {
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) accumulate(terms_, add(ea, eb), ca * cb);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.add_product(a, b);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial r;
  r.add_product(*this, o);
  return *this = std::move(r);
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, k] : terms_) k *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
  if (c.is_zero()) throw std::domain_error("Polynomial: division by zero");
  for (auto& [e, k] : terms_) k /= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, k] : r.terms_) k = -k;
  return r;
}

Polynomial Polynomial::derivative(int slot) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (!e[slot]) continue;
    Exponents f = e;
    --f[slot];
    accumulate(r.terms_, f, c * Rational(static_cast<long>(e[slot])));
  }
  return r;
}

Polynomial Polynomial::evaluate(const std::vector<std::pair<int, Rational>>& values) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    Rational k = c;
    for (const auto& [slot, value] : values) {
      for (int p = 0; p < f[slot]; ++p) k *= value;
      f[slot] = 0;
    }
    accumulate(r.terms_, f, k);
  }
  return r;
}

std::map<Exponents, Polynomial> Polynomial::split_by_slots_below(int limit) const {
  std::map<Exponents, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    Exponents lo{}, hi{};
    for (int i = 0; i < kMaxVars; ++i) (i < limit ? lo : hi)[i] = e[i];
    accumulate(out[lo].terms_, hi, c);
  }
  return out;
}

std::string Polynomial::str(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += name_of(i, names);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational mag = abs(c);
    std::string body;
    if (mono.empty()) body = mag.str();
    else if (mag == Rational(1)) body = mono;
    else body = mag.str() + "*" + mono;
    if (first) out = (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text, const VariableNames& names) {
  std::map<std::string, int> slots;
  for (int i = kMaxVars - 1; i >= 0; --i) slots[name_of(i, names)] = i;

  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };

  Polynomial result;
  skip();
  if (pos == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected sign");
    }
    first = false;
    Rational coef(sign);
    Exponents e{};
    bool have_factor = false;
    while (true) {
      skip();
      if (pos == text.size()) break;
      char ch = text[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        coef *= Rational::parse(text.substr(start, pos - start));
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string name(text.substr(start, pos - start));
        auto it = slots.find(name);
        if (it == slots.end()) fail("unknown variable " + name);
        int power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          std::size_t s = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (s == pos) fail("missing exponent");
          power = std::stoi(std::string(text.substr(s, pos - s)));
        }
        e[it->second] = static_cast<std::uint8_t>(e[it->second] + power);
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("dangling sign");
    accumulate(result.terms_, e, coef);
  }
  return result;
}

}  // namespace cdo

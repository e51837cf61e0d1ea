#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "entanglement.hpp"
#include "errors.hpp"
#include "pure_state.hpp"

namespace fockmodes {

namespace detail {

/// Recursive-descent parser for ket sums such as
///   (1/sqrt(2))*|0,1> - 0.5i*|20> + |02>
///
///   state   := ['+'|'-'] term (('+'|'-') term)*
///   term    := [product '*'] ket
///   product := unary (('*'|'/') unary)*
///   unary   := '-' unary | '+' unary | primary
///   primary := number ['i'] | 'i' | 'sqrt' '(' sum ')' | '(' sum ')'
///   sum     := product (('+'|'-') product)*
///   ket     := '|' digit+ '>' | '|' uint (',' uint)* [','] '>'
///
/// A ket without commas uses one digit per mode. Any comma switches to the
/// comma form; a trailing comma marks a one-mode ket such as |12,>.
class KetParser {
 public:
  explicit KetParser(std::string_view text) : text_(text) {}

  PureState parse() {
    PureState::AmplitudeMap amps;
    std::optional<std::size_t> modes;
    std::size_t first_ket = 0;

    skip_ws();
    if (at_end()) fail("empty state expression");
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1.0 : 1.0;
    }
    while (true) {
      skip_ws();
      const auto [coef, occ, ket_pos] = term();
      if (!modes) {
        modes = occ.size();
        first_ket = ket_pos;
      } else if (occ.size() != *modes) {
        throw DimensionError("ket at offset " + std::to_string(ket_pos) + " has " +
                             std::to_string(occ.size()) + " modes but the ket at offset " +
                             std::to_string(first_ket) + " has " + std::to_string(*modes));
      }
      amps[occ] += sign * coef;
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-' between terms");
      take();
      sign = c == '-' ? -1.0 : 1.0;
    }
    return PureState(static_cast<int>(*modes), std::move(amps));
  }

 private:
  struct Term {
    Complex coefficient;
    Occupation occupation;
    std::size_t ket_offset;
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Term term() {
    skip_ws();
    Complex coef{1.0, 0.0};
    if (peek() != '|') {
      coef = product();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      }
      if (peek() != '|') fail("expected a ket");
    }
    const std::size_t at = pos_;
    return {coef, ket(), at};
  }

  Occupation ket() {
    expect('|');
    std::vector<std::string_view> fields;
    bool comma = false;
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == start) {
        if (comma && peek() == '>' && !fields.empty()) break;  // trailing comma
        fail("expected photon count inside ket");
      }
      fields.push_back(text_.substr(start, pos_ - start));
      skip_ws();
      if (peek() == ',') {
        comma = true;
        ++pos_;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(peek()))) continue;  // "|0 1>"
      break;
    }
    expect('>');

    std::vector<int> counts;
    if (comma) {
      for (auto f : fields) {
        int v = 0;
        auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc{} || p != f.data() + f.size()) {
          throw ParseError("photon count out of range", static_cast<std::size_t>(f.data() - text_.data()));
        }
        counts.push_back(v);
      }
    } else {
      for (auto f : fields)
        for (char d : f) counts.push_back(d - '0');
    }
    return Occupation(std::move(counts));
  }

  Complex sum() {
    Complex v = product();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        v += product();
      } else if (peek() == '-') {
        ++pos_;
        v -= product();
      } else {
        return v;
      }
    }
  }

  Complex nested() {
    if (++depth_ > kMaxDepth) fail("expression nested too deeply");
    const Complex v = sum();
    --depth_;
    return v;
  }

  Complex product() {
    Complex v = unary();
    while (true) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') return v;
      // "coef * |ket>": the '*' belongs to the term
      std::size_t look = pos_ + 1;
      while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
      if (c == '*' && look < text_.size() && text_[look] == '|') return v;
      ++pos_;
      const Complex rhs = unary();
      if (c == '*') {
        v *= rhs;
      } else {
        if (rhs == Complex{}) fail("division by zero");
        v /= rhs;
      }
    }
  }

  Complex unary() {
    bool negate = false;
    for (skip_ws(); peek() == '-' || peek() == '+'; skip_ws()) {
      negate ^= take() == '-';
    }
    const Complex v = primary();
    return negate ? -v : v;
  }

  Complex primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const Complex v = nested();
      expect(')');
      return v;
    }
    if (text_.substr(pos_).starts_with("sqrt")) {
      pos_ += 4;
      expect('(');
      const std::size_t at = pos_;
      const Complex v = nested();
      expect(')');
      if (v.imag() != 0.0 || v.real() < 0.0) throw ParseError("sqrt of a negative or complex value", at);
      return std::sqrt(v.real());
    }
    if (c == 'i') {
      ++pos_;
      return {0.0, 1.0};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const double v = number();
      if (peek() == 'i') {
        ++pos_;
        return {0.0, v};
      }
      return {v, 0.0};
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  double number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return pos_ - s;
    };
    std::size_t n = digits();
    if (peek() == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) fail("malformed number");
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (digits() == 0) fail("malformed exponent");
    }
    double v = 0.0;
    const auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{} || p != text_.data() + pos_) throw ParseError("number out of range", start);
    return v;
  }

  static constexpr int kMaxDepth = 200;

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace detail

/// Parses a ket sum exactly as written; like kets are merged.
inline PureState parse_state_raw(std::string_view text) {
  return detail::KetParser(text).parse();
}

/// Parses a ket sum and normalizes it.
inline PureState parse_state(std::string_view text) {
  const PureState raw = parse_state_raw(text);
  if (raw.empty() || raw.norm() <= kPruneThreshold) {
    throw DegenerateStateError("state expression sums to zero");
  }
  return normalize(raw);
}

/// "0,1|2,3": comma-separated zero-based mode indices on each side of '|'.
inline Partition parse_partition(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("partition needs a '|'", 0);
  auto side = [&](std::string_view part, std::size_t base) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < part.size()) {
      while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
      const std::size_t s = i;
      while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) ++i;
      if (s == i) throw ParseError("expected a mode index", base + i);
      int v = 0;
      std::from_chars(part.data() + s, part.data() + i, v);
      out.push_back(v);
      while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
      if (i < part.size()) {
        if (part[i] != ',') throw ParseError("expected ','", base + i);
        ++i;
        if (i == part.size()) throw ParseError("expected a mode index", base + i);
      }
    }
    return out;
  };
  return Partition(side(text.substr(0, bar), 0), side(text.substr(bar + 1), bar + 1));
}

namespace detail {

inline std::string format_real(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

inline std::string format_ket(const Occupation& occ, bool compact) {
  std::string s = "|";
  if (compact) {
    for (int c : occ.counts()) s += static_cast<char>('0' + c);
  } else {
    for (std::size_t i = 0; i < occ.size(); ++i) s += (i ? "," : "") + std::to_string(occ[i]);
    if (occ.size() == 1) s += ',';
  }
  return s + ">";
}

}  // namespace detail

/// Renders a state as a ket sum in canonical order, with the global phase
/// chosen so the first amplitude is real and positive. Amplitudes print with
/// `precision` digits after the decimal point; a unit amplitude is omitted.
inline std::string format_state(const PureState& s, int precision = 7) {
  const PureState c = canonical_phase(s);
  bool compact = true;
  for (const auto& [occ, a] : c.amplitudes())
    for (int n : occ.counts()) compact = compact && n <= 9;

  const double eps = 0.5 * std::pow(10.0, -precision);
  std::string out;
  bool first = true;
  for (const auto& [occ, a] : c.amplitudes()) {
    double re = std::abs(a.real()) < eps ? 0.0 : a.real();
    double im = std::abs(a.imag()) < eps ? 0.0 : a.imag();
    std::string coef;
    char sign = '+';
    if (im == 0.0) {
      if (re < 0) {
        sign = '-';
        re = -re;
      }
      if (std::abs(re - 1.0) >= eps) coef = detail::format_real(re, precision);
    } else if (re == 0.0) {
      if (im < 0) {
        sign = '-';
        im = -im;
      }
      coef = detail::format_real(im, precision) + "i";
    } else {
      coef = "(" + detail::format_real(re, precision) + (im < 0 ? "-" : "+") +
             detail::format_real(std::abs(im), precision) + "i)";
    }
    if (first) {
      if (sign == '-') out += "-";
    } else {
      out += sign == '-' ? " - " : " + ";
    }
    first = false;
    if (!coef.empty()) out += coef + "*";
    out += detail::format_ket(occ, compact);
  }
  return out;
}

}  // namespace fockmodes

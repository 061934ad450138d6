#include "wreath/literal.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "wreath/error.hpp"

namespace wreath {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::int64_t integer(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    const std::size_t digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == digits) fail(std::string("expected ") + what);
    std::int64_t value = 0;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end) fail(std::string(what) + " out of range");
    pos_ = end;
    return value;
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) { fail_at(message, pos_); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t at) {
    throw ParseError(message, std::string(text_), at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses lamps up to (not including) the terminator character.
LampConfig parse_lamp_list(const GroupSpec& spec, Cursor& in, char terminator) {
  std::vector<LampConfig::Entry> entries;
  if (in.peek() == terminator) return LampConfig(spec);
  while (true) {
    in.skip_space();
    const std::size_t value_at = in.position();
    const std::int64_t value = in.integer("lamp value");
    if (!spec.is_valid(value))
      in.fail_at("lamp value outside the canonical range of " + spec.to_string(), value_at);
    if (value == 0) in.fail_at("identity lamp values are not written", value_at);
    in.expect('@', "'@' after lamp value");
    in.skip_space();
    const std::size_t pos_at = in.position();
    const std::int64_t position = in.integer("lamp position");
    if (!entries.empty() && position <= entries.back().first)
      in.fail_at("lamp positions must be strictly increasing", pos_at);
    entries.emplace_back(position, value);
    if (in.peek() == terminator) break;
    in.expect(',', "',' or end of lamp list");
  }
  return LampConfig::from_entries(spec, std::move(entries));
}

}  // namespace

GroupSpec parse_group(std::string_view text) {
  Cursor in(text);
  if (!in.accept('Z')) in.fail("expected group 'Z' or 'Z/k'");
  if (in.at_end()) return GroupSpec::integers();
  in.expect('/', "'/' or end of group literal");
  in.skip_space();
  const std::size_t at = in.position();
  const std::int64_t k = in.integer("cyclic order");
  if (k < 2) in.fail_at("cyclic order must be at least 2", at);
  if (!in.at_end()) in.fail("unexpected trailing characters");
  return GroupSpec::cyclic(k);
}

WreathElement parse_element(const GroupSpec& spec, std::string_view text) {
  Cursor in(text);
  in.expect('(', "'(' to open element literal");
  LampConfig lamps = parse_lamp_list(spec, in, ';');
  in.expect(';', "';' before shift");
  const std::int64_t shift = in.integer("shift");
  in.expect(')', "')' to close element literal");
  if (!in.at_end()) in.fail("unexpected trailing characters");
  return {std::move(lamps), shift};
}

std::string format_lamps(const LampConfig& lamps) {
  std::string out;
  for (const auto& [position, value] : lamps.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(value) + '@' + std::to_string(position);
  }
  return out;
}

std::string format_element(const WreathElement& x) {
  return '(' + format_lamps(x.lamps()) + ';' + std::to_string(x.shift()) + ')';
}

Rational parse_rational(std::string_view text) {
  Cursor in(text);
  in.skip_space();
  const bool negative = in.peek() == '-';
  const std::int64_t whole = in.integer("number");
  Rational out(whole);
  if (in.accept('/')) {
    in.skip_space();
    const std::size_t at = in.position();
    const std::int64_t den = in.integer("denominator");
    if (den <= 0) in.fail_at("denominator must be positive", at);
    out = Rational(whole, den);
  } else if (in.accept('.')) {
    const std::size_t at = in.position();
    std::int64_t frac = 0, scale = 1;
    while (!in.at_end() && std::isdigit(static_cast<unsigned char>(in.peek()))) {
      if (scale > 100'000'000'000'000LL) in.fail("too many decimal digits");
      frac = frac * 10 + (in.peek() - '0');
      scale *= 10;
      in.accept(in.peek());
    }
    if (scale == 1) in.fail_at("expected digits after '.'", at);
    out = Rational(whole) + Rational(negative ? -frac : frac, scale);
  }
  if (!in.at_end()) in.fail("unexpected trailing characters");
  return out;
}

TreeVertex parse_vertex(const GroupSpec& spec, std::string_view text) {
  Cursor in(text);
  TreeSide side;
  if (in.accept_word("T+")) {
    side = TreeSide::Plus;
  } else if (in.accept_word("T-")) {
    side = TreeSide::Minus;
  } else {
    in.fail("expected 'T+' or 'T-'");
  }
  in.expect('[', "'[' to open vertex");
  const std::int64_t level = in.integer("level");
  in.expect('|', "'|' after level");
  in.skip_space();
  const std::size_t tail_at = in.position();
  LampConfig tail = parse_lamp_list(spec, in, ']');
  in.expect(']', "']' to close vertex");
  if (!in.at_end()) in.fail("unexpected trailing characters");
  try {
    return TreeVertex(side, level, std::move(tail));
  } catch (const DomainError& e) {
    in.fail_at(e.what(), tail_at);
  }
}

std::string format_vertex(const TreeVertex& v) {
  std::string out = std::string(to_string(v.side())) + " [" + std::to_string(v.level()) + " |";
  if (!v.tail().empty()) out += ' ' + format_lamps(v.tail());
  return out + ']';
}

}  // namespace wreath

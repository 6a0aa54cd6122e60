#include "intpos/orientation.hpp"

#include <cctype>
#include <sstream>

namespace intpos {

namespace {

std::uint16_t checked_mask(int n, std::uint16_t m, const char* side) {
  if (m & ~((std::uint16_t(1) << n) - 1))
    throw domain_error(std::string("orientation ") + side +
                       " set has elements outside [n]");
  return m;
}

}  // namespace

Orientation::Orientation(int n_, std::uint16_t up_, std::uint16_t down_)
    : n(n_), up(checked_mask(n_, up_, "up")), down(checked_mask(n_, down_, "down")) {
  if (n < 1 || n > max_ground_size)
    throw domain_error("orientation size out of range");
}

Orientation::Orientation(int n_, std::initializer_list<int> up_,
                         std::initializer_list<int> down_)
    : Orientation(n_, 0, 0) {
  for (int v : up_) {
    if (v < 1 || v > n) throw domain_error("orientation up element outside [n]");
    up |= std::uint16_t(1) << (v - 1);
  }
  for (int v : down_) {
    if (v < 1 || v > n)
      throw domain_error("orientation down element outside [n]");
    down |= std::uint16_t(1) << (v - 1);
  }
}

bool Orientation::covering() const {
  for (int v = 2; v < n; ++v)
    if (!in_up(v) && !in_down(v)) return false;
  return true;
}

Orientation Orientation::tamari(int n) {
  return Orientation(n, 0, std::uint16_t((1u << n) - 1));
}

Orientation Orientation::boolean(int n) {
  return Orientation(n, std::uint16_t((1u << n) - 1),
                     std::uint16_t((1u << n) - 1));
}

std::string to_text(const Orientation& o) {
  std::ostringstream out;
  out << "n=" << o.n << "; up:";
  bool any = false;
  for (int v = 1; v <= o.n; ++v)
    if (o.in_up(v)) {
      out << (any ? ", " : " ") << v;
      any = true;
    }
  if (!any) out << " -";
  out << "; down:";
  any = false;
  for (int v = 1; v <= o.n; ++v)
    if (o.in_down(v)) {
      out << (any ? ", " : " ") << v;
      any = true;
    }
  if (!any) out << " -";
  return out.str();
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw parse_error("malformed orientation text");
  }
  void expect_word(std::string_view w) {
    skip_ws();
    if (s.substr(i, w.size()) != w) throw parse_error("malformed orientation text");
    i += w.size();
  }
  int number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected a number in orientation text");
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

std::uint16_t parse_set(Cursor& c, int n) {
  std::uint16_t m = 0;
  if (c.eat('-')) return m;
  for (;;) {
    int v = c.number();
    if (v < 1 || v > n) throw parse_error("orientation element outside [n]");
    m |= std::uint16_t(1) << (v - 1);
    if (!c.eat(',')) break;
  }
  return m;
}

}  // namespace

Orientation parse_orientation(std::string_view text) {
  Cursor c{text};
  c.expect_word("n");
  c.expect('=');
  const int n = c.number();
  if (n < 1 || n > max_ground_size)
    throw parse_error("orientation size out of range");
  c.expect(';');
  c.expect_word("up");
  c.expect(':');
  std::uint16_t up = parse_set(c, n);
  c.expect(';');
  c.expect_word("down");
  c.expect(':');
  std::uint16_t down = parse_set(c, n);
  if (!c.done()) throw parse_error("trailing characters after orientation text");
  return Orientation(n, up, down);
}

std::vector<Orientation> all_orientations(int n) {
  std::vector<Orientation> out;
  const std::uint16_t top = std::uint16_t(1u << n);
  out.reserve(std::size_t(top) * top);
  for (std::uint16_t up = 0; up < top; ++up)
    for (std::uint16_t down = 0; down < top; ++down)
      out.push_back(Orientation(n, up, down));
  return out;
}

}  // namespace intpos

#include "pg/spec.hpp"

#include <cctype>
#include <limits>

#include "pg/error.hpp"

namespace pg {

namespace {

constexpr std::uint64_t kMaxParam = 1'000'000'000;

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    if (text_.empty()) error("empty group spec");
    std::vector<GroupSpec> factors;
    while (true) {
      if (at_end() || is_sep(peek())) error("empty factor");
      factors.push_back(atom());
      if (at_end()) break;
      if (!is_sep(peek())) error(std::string("unexpected character '") + peek() + "'");
      ++pos_;
    }
    if (factors.size() == 1) return std::move(factors.front());
    return GroupSpec::product(std::move(factors));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_]))); }
  static bool is_sep(char c) { return c == 'X'; }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Usage, "spec parse error at byte " + std::to_string(pos_) + ": " + msg);
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > kMaxParam) {
        pos_ = start;
        error("integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) error("expected integer");
    if (v == 0) {
      pos_ = start;
      error("integer must be positive");
    }
    return v;
  }

  GroupSpec atom() {
    const std::size_t start = pos_;
    const char c = peek();
    ++pos_;
    switch (c) {
      case 'C':
      case 'Z':
        return GroupSpec::cyclic(integer());
      case 'S':
        return GroupSpec::symmetric(integer());
      case 'A':
        return GroupSpec::alternating(integer());
      case 'D':
        if (pos_ + 1 < text_.size() && peek() == 'I' &&
            std::toupper(static_cast<unsigned char>(text_[pos_ + 1])) == 'C') {
          pos_ += 2;
          return GroupSpec::dicyclic(integer());
        }
        return GroupSpec::dihedral(integer());
      case 'Q': {
        const std::size_t num = pos_;
        const std::uint64_t m = integer();
        if (m < 8 || (m & (m - 1)) != 0) {
          pos_ = num;
          error("Q<m> needs m a power of two >= 8 (use Dic<n> for other dicyclic groups)");
        }
        return GroupSpec::dicyclic(m / 4);
      }
      case 'E': {
        const std::uint64_t p = integer();
        if (at_end() || text_[pos_] != '^') error("expected '^' in E<p>^<k>");
        ++pos_;
        return GroupSpec::elem_abelian(p, integer());
      }
      default:
        pos_ = start;
        error(std::string("unknown group family '") + text_[start] + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const GroupSpec& spec, std::string& out) {
  if (spec.is_product()) {
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      if (i) out += 'x';
      render_into(spec.factors[i], out);
    }
    return;
  }
  const auto& p = spec.atom.params;
  switch (spec.atom.family) {
    case Family::Cyclic: out += "C" + std::to_string(p.at(0)); break;
    case Family::Dihedral: out += "D" + std::to_string(p.at(0)); break;
    case Family::Symmetric: out += "S" + std::to_string(p.at(0)); break;
    case Family::Alternating: out += "A" + std::to_string(p.at(0)); break;
    case Family::Dicyclic: out += "Dic" + std::to_string(p.at(0)); break;
    case Family::ElemAbelian:
      out += "E" + std::to_string(p.at(0)) + "^" + std::to_string(p.at(1));
      break;
  }
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f = sat_mul(f, k);
  return f;
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string render_spec(const GroupSpec& spec) {
  std::string out;
  render_into(spec, out);
  return out;
}

std::uint64_t spec_order(const GroupSpec& spec) {
  if (spec.is_product()) {
    std::uint64_t n = 1;
    for (const auto& f : spec.factors) n = sat_mul(n, spec_order(f));
    return n;
  }
  const auto& p = spec.atom.params;
  switch (spec.atom.family) {
    case Family::Cyclic: return p.at(0);
    case Family::Dihedral: return sat_mul(2, p.at(0));
    case Family::Symmetric: return factorial(p.at(0));
    case Family::Alternating: return p.at(0) < 2 ? 1 : factorial(p.at(0)) / 2;
    case Family::Dicyclic: return sat_mul(4, p.at(0));
    case Family::ElemAbelian: {
      std::uint64_t n = 1;
      for (std::uint64_t i = 0; i < p.at(1); ++i) n = sat_mul(n, p.at(0));
      return n;
    }
  }
  return 0;
}

}  // namespace pg

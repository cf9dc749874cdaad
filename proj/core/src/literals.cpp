#include "trioscan/literals.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "trioscan/error.hpp"

namespace trioscan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

int parse_number(std::string_view token, const char* what) {
  std::string_view t = trim(token);
  int value = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc{} || ptr != last) {
    throw ContractError(std::string("bad ") + what + " token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string render_set(const Subset& s) {
  std::string out;
  bool first = true;
  s.for_each([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  return out;
}

std::string render_sets(std::span<const Subset> sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ';';
    out += render_set(sets[i]);
  }
  return out;
}

Group parse_group(const std::string& literal) {
  std::vector<int> factors;
  for (std::string_view token : split(literal, 'x')) {
    int f = parse_number(token, "group literal");
    if (f < 1) throw ContractError("bad group literal token '" + std::string(token) + "'");
    factors.push_back(f);
  }
  return make_group(factors);
}

Subset parse_set(const Group& g, const std::string& literal) {
  Subset s(g.order());
  if (trim(literal).empty()) return s;
  for (std::string_view token : split(literal, ',')) {
    int e = parse_number(token, "set literal");
    if (e < 0 || e >= g.order()) {
      throw ContractError("set element '" + std::string(trim(token)) + "' out of range for group " +
                          g.literal());
    }
    s.insert(e);
  }
  return s;
}

std::vector<Subset> parse_sets(const Group& g, const std::string& literal) {
  std::vector<Subset> out;
  for (std::string_view piece : split(literal, ';')) {
    out.push_back(parse_set(g, std::string(piece)));
  }
  return out;
}

}  // namespace trioscan

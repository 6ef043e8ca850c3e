#include "posetcodes/parse.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetcodes {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " from '" +
                                std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    std::size_t pos = s.find(sep);
    if (pos == std::string_view::npos) {
      parts.push_back(s);
      return parts;
    }
    parts.push_back(s.substr(0, pos));
    s.remove_prefix(pos + 1);
  }
}

}  // namespace

Poset parse_poset(std::string_view spec) {
  spec = trim(spec);
  if (spec.starts_with("hier:")) {
    auto parts = split(spec.substr(5), ',');
    if (parts.size() != 2) {
      throw std::invalid_argument("poset spec: expected hier:<m>,<n>");
    }
    return make_hierarchical(parse_int(parts[0], "m"), parse_int(parts[1], "n"));
  }
  if (!spec.starts_with("n=")) {
    throw std::invalid_argument("poset spec: expected 'hier:<m>,<n>' or 'n=<int>[; cover=...]'");
  }
  auto sections = split(spec, ';');
  int n = parse_int(trim(sections[0]).substr(2), "n");
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 1; i < sections.size(); ++i) {
    std::string_view section = trim(sections[i]);
    if (section.empty()) continue;
    if (!section.starts_with("cover=")) {
      throw std::invalid_argument("poset spec: unknown section '" + std::string(section) + "'");
    }
    for (std::string_view pair : split(section.substr(6), ',')) {
      pair = trim(pair);
      if (pair.empty()) continue;
      std::size_t lt = pair.find('<');
      if (lt == std::string_view::npos) {
        throw std::invalid_argument("poset spec: cover pair '" + std::string(pair) +
                                    "' must look like i<j");
      }
      covers.emplace_back(parse_int(pair.substr(0, lt), "cover element"),
                          parse_int(pair.substr(lt + 1), "cover element"));
    }
  }
  return Poset::from_covers(n, covers);
}

IdealFamily parse_ideal_family(const Poset& poset, std::string_view spec) {
  std::vector<Mask> ideals;
  for (std::string_view list : split(trim(spec), ';')) {
    list = trim(list);
    if (list.empty()) {
      throw std::invalid_argument("ideal spec: empty generator list");
    }
    Mask generators = 0;
    for (std::string_view token : split(list, ',')) {
      int element = parse_int(token, "generator");
      if (element < 1 || element > poset.size()) {
        throw std::invalid_argument("ideal spec: element " + std::to_string(element) +
                                    " outside the ground set");
      }
      generators |= singleton(element);
    }
    ideals.push_back(poset.ideal_closure(generators));
  }
  return IdealFamily(poset, std::move(ideals));
}

CodeKind parse_kind(std::string_view kind) {
  kind = trim(kind);
  if (kind == "D") return CodeKind::DefiningSet;
  if (kind == "f") return CodeKind::BooleanFunction;
  throw std::invalid_argument("kind must be 'D' or 'f'");
}

}  // namespace posetcodes

#include "intersectra/family_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace intersectra {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool parse_header(const std::string& line, int& n, int& r, bool& has_r, int lineno) {
  if (line.rfind("n=", 0) != 0) return false;
  std::istringstream ss(line.substr(2));
  if (!(ss >> n) || n < 0) throw ParseError(lineno, "bad ground size in header");
  std::string rest;
  ss >> rest;
  if (!rest.empty()) {
    if (rest.rfind("r=", 0) != 0) throw ParseError(lineno, "bad header field: " + rest);
    std::istringstream rs(rest.substr(2));
    if (!(rs >> r) || r < 1) throw ParseError(lineno, "bad rank in header");
    has_r = true;
  }
  if (ss >> rest) throw ParseError(lineno, "trailing header field: " + rest);
  return true;
}

}  // namespace

SetFamily parse_family(std::istream& in) {
  int n = -1, r = 0;
  bool has_header = false, has_r = false;
  std::vector<std::vector<int>> rows;
  std::string line;
  int lineno = 0, max_elem = 0;

  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::string body = line.substr(start);

    if (!has_header && rows.empty()) {
      has_header = parse_header(body, n, r, has_r, lineno);
      if (has_header) continue;
    }

    std::istringstream ss(body);
    std::vector<int> elems;
    int e;
    while (ss >> e) {
      if (e < 1) throw ParseError(lineno, "elements must be positive");
      if (!elems.empty() && e <= elems.back())
        throw ParseError(lineno, "elements must be strictly increasing");
      elems.push_back(e);
      max_elem = std::max(max_elem, e);
    }
    std::string junk;
    if (ss.clear(), ss >> junk) throw ParseError(lineno, "bad token: " + junk);
    rows.push_back(std::move(elems));
  }

  if (!has_header) {
    if (rows.empty()) throw ParseError(lineno, "no header and no sets: ground size unknown");
    n = max_elem;
  } else if (max_elem > n) {
    throw ParseError(lineno, "element exceeds declared ground size");
  }

  std::vector<VSet> members;
  members.reserve(rows.size());
  for (const auto& row : rows) members.push_back(VSet::from_elements(n, row));
  if (has_r) return SetFamily::of(n, std::move(members), r);
  return SetFamily::infer_rank(n, std::move(members));
}

SetFamily parse_family(const std::string& text) {
  std::istringstream ss(text);
  return parse_family(ss);
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_family(in);
}

std::string serialize_family(const SetFamily& f) {
  std::ostringstream out;
  out << "n=" << f.ground_size();
  if (f.rank()) out << " r=" << *f.rank();
  out << "\n";
  for (const VSet& m : f.members()) {
    if (m.empty())
      throw std::invalid_argument("text format cannot express an empty member");
    bool first = true;
    for (int e : m.elements()) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

void save_family(const SetFamily& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << serialize_family(f);
}

}  // namespace intersectra

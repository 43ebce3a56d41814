#include "shortres/algebra_file.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace shortres {

namespace {

struct Field {
  std::string value;
  std::size_t line, column;  // position of the value's first character
};

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

unsigned parse_count(const Field& f, const char* key, unsigned long max) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(f.value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != f.value.size() || f.value[0] == '-' || v > max)
    throw AlgebraFileError(std::string(key) + " must be an integer in [0, " + std::to_string(max) + "]", f.line,
                           f.column);
  return static_cast<unsigned>(v);
}

// Pieces of a comma list with their offsets; commas inside parentheses do
// not split.
std::vector<std::pair<std::string, std::size_t>> split_list(const std::string& s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.emplace_back(s.substr(start, i - start), start);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

AlgebraDefinition parse_algebra(std::string_view text) {
  static const std::vector<std::string> known{"p", "vars", "relations", "cap", "local", "trunc"};
  std::map<std::string, Field> fields;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = rtrim(line);
    std::size_t k0 = skip_space(line, 0);
    if (k0 == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw AlgebraFileError("expected 'key = value'", line_no, k0 + 1);
    std::string key(rtrim(line.substr(k0, eq - k0)));
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw AlgebraFileError("unknown key '" + key + "'", line_no, k0 + 1);
    if (fields.count(key)) throw AlgebraFileError("duplicate key '" + key + "'", line_no, k0 + 1);
    std::size_t v0 = skip_space(line, eq + 1);
    fields[key] = Field{std::string(line.substr(v0)), line_no, v0 + 1};
    if (end == text.size()) break;
  }

  AlgebraDefinition def;
  auto missing = [&](const char* key) { return AlgebraFileError(std::string("missing key '") + key + "'", line_no, 1); };
  if (!fields.count("p")) throw missing("p");
  if (!fields.count("vars")) throw missing("vars");

  const Field& pf = fields["p"];
  def.p = parse_count(pf, "p", 2147483647ul);
  if (!is_prime(def.p)) throw AlgebraFileError("p must be a prime", pf.line, pf.column);

  const Field& vf = fields["vars"];
  for (const auto& [piece, off] : split_list(vf.value)) {
    std::size_t a = skip_space(piece, 0);
    std::string name(rtrim(std::string_view(piece).substr(a)));
    bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
    for (char ch : name) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw AlgebraFileError("bad variable name '" + name + "'", vf.line, vf.column + off + a);
    if (std::find(def.vars.begin(), def.vars.end(), name) != def.vars.end())
      throw AlgebraFileError("variable '" + name + "' repeated", vf.line, vf.column + off + a);
    def.vars.push_back(name);
  }

  if (auto it = fields.find("local"); it != fields.end()) {
    if (it->second.value == "true")
      def.local = true;
    else if (it->second.value != "false")
      throw AlgebraFileError("local must be true or false", it->second.line, it->second.column);
  }
  if (auto it = fields.find("cap"); it != fields.end()) {
    if (def.local) throw AlgebraFileError("cap applies to graded algebras; use trunc", it->second.line, 1);
    def.cap = parse_count(it->second, "cap", 64);
  }
  if (auto it = fields.find("trunc"); it != fields.end()) {
    if (!def.local) throw AlgebraFileError("trunc needs local = true", it->second.line, 1);
    def.trunc = parse_count(it->second, "trunc", 64);
  }

  if (auto it = fields.find("relations"); it != fields.end()) {
    const Field& rf = it->second;
    PrimeField F(def.p);
    if (!rf.value.empty()) {
      for (const auto& [piece, off] : split_list(rf.value)) {
        try {
          def.relations.push_back(parse_poly(piece, def.vars, F));
        } catch (const ParseError& e) {
          std::string msg = e.what();
          msg = msg.substr(0, msg.rfind(" at column"));
          throw AlgebraFileError(msg, rf.line, rf.column + off + e.position);
        }
      }
    }
  }
  return def;
}

AlgebraDefinition load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string AlgebraDefinition::canonical() const {
  std::string s = "p = " + std::to_string(p) + "\nvars = ";
  for (std::size_t k = 0; k < vars.size(); ++k) s += (k ? ", " : "") + vars[k];
  s += "\nrelations = ";
  for (std::size_t k = 0; k < relations.size(); ++k) s += (k ? ", " : "") + to_string(relations[k], vars);
  s += "\n";
  if (local) s += "local = true\ntrunc = " + std::to_string(trunc.value_or(3)) + "\n";
  else s += "cap = " + std::to_string(cap.value_or(10)) + "\n";
  return s;
}

BuiltAlgebra build_algebra(const AlgebraDefinition& def) {
  if (def.local) return LocalAlgebra::build(def.field(), def.vars, def.relations, def.trunc.value_or(3));
  return build_graded(def.field(), def.vars, def.relations, def.cap.value_or(10));
}

std::string text_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string algebra_hash(const GradedAlgebra& R) {
  AlgebraDefinition d{R.field().p(), R.names(), R.relations(), R.cap(), false, std::nullopt};
  return text_hash(d.canonical());
}

std::string algebra_hash(const LocalAlgebra& R) {
  AlgebraDefinition d{R.field().p(), R.names(), R.relations(), std::nullopt, true, R.trunc()};
  return text_hash(d.canonical());
}

}  // namespace shortres

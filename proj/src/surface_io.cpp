#include "fmlat/surface_io.hpp"

#include "fmlat/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace fmlat {
namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Entry {
  int line;
  std::string value;
};

std::int64_t parse_int(const Entry& e, const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(e.line, key, "expected an integer, got '" + text + "'");
  }
}

IVec parse_ivec(const Entry& e, const std::string& key) {
  IVec out;
  for (const auto& part : split(e.value, ',')) {
    if (part.empty()) throw ParseError(e.line, key, "empty vector entry");
    out.push_back(parse_int(e, key, part));
  }
  return out;
}

const std::vector<std::string> kKnownKeys = {"name",  "chi_O",     "basis",  "gram",
                                             "fiber", "section",   "canonical", "lambda"};

std::string key_for_message(const std::string& msg) {
  for (const char* k : {"gram", "fiber.fiber", "section", "fiber", "canonical", "lambda", "basis"})
    if (msg.find(k) != std::string::npos) {
      std::string key = k;
      return key == "fiber.fiber" ? "fiber" : key;
    }
  return {};
}

}  // namespace

SurfaceDescriptor parse_surface(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "", "expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw ParseError(line_no, key, "unknown key");
    if (entries.count(key)) throw ParseError(line_no, key, "duplicate key");
    if (value.empty()) throw ParseError(line_no, key, "empty value");
    entries[key] = Entry{line_no, value};
  }
  for (const char* k : {"name", "chi_O", "basis", "gram", "fiber", "canonical"})
    if (!entries.count(k)) throw ParseError(line_no, k, "missing required key");

  const auto& basis_e = entries["basis"];
  auto basis = split(basis_e.value, ',');
  for (const auto& b : basis)
    if (b.empty()) throw ParseError(basis_e.line, "basis", "empty basis name");

  const auto& gram_e = entries["gram"];
  std::vector<IVec> gram;
  for (const auto& row : split(gram_e.value, ';')) {
    if (row.empty()) throw ParseError(gram_e.line, "gram", "empty row");
    gram.push_back(parse_ivec(Entry{gram_e.line, row}, "gram"));
  }

  std::optional<IVec> section;
  if (entries.count("section")) section = parse_ivec(entries["section"], "section");
  std::optional<std::int64_t> lambda;
  if (entries.count("lambda")) lambda = parse_int(entries["lambda"], "lambda", entries["lambda"].value);

  try {
    return SurfaceDescriptor::create(entries["name"].value,
                                     parse_int(entries["chi_O"], "chi_O", entries["chi_O"].value),
                                     basis, gram, parse_ivec(entries["fiber"], "fiber"), section,
                                     parse_ivec(entries["canonical"], "canonical"), lambda);
  } catch (const InputError& err) {
    std::string key = key_for_message(err.what());
    int line = key.empty() || !entries.count(key) ? line_no : entries[key].line;
    throw ParseError(line, key, err.what());
  }
}

SurfaceDescriptor load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open surface file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

std::string format_surface(const SurfaceDescriptor& S) {
  auto join = [](const IVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
  };
  std::ostringstream os;
  os << "name = " << S.name() << "\n";
  os << "chi_O = " << S.chi_O() << "\n";
  os << "basis = ";
  for (std::size_t i = 0; i < S.basis_names().size(); ++i) os << (i ? ", " : "") << S.basis_names()[i];
  os << "\ngram = ";
  for (std::size_t i = 0; i < S.gram().size(); ++i) os << (i ? "; " : "") << join(S.gram()[i]);
  os << "\nfiber = " << join(S.fiber()) << "\n";
  if (S.section()) os << "section = " << join(*S.section()) << "\n";
  os << "canonical = " << join(S.canonical()) << "\n";
  os << "lambda = " << S.lambda() << "\n";
  return os.str();
}

}  // namespace fmlat

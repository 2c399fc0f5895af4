#include "autorbit/group_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "autorbit/error.hpp"

namespace autorbit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view value, std::string_view key, int line) {
  if (value.empty()) throw ParseError(std::string(key) + ": missing value", line);
  std::size_t v = 0;
  for (char c : value) {
    if (c < '0' || c > '9')
      throw ParseError(std::string(key) + ": expected a non-negative integer, got '" +
                           std::string(value) + "'",
                       line);
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) throw ParseError(std::string(key) + ": value too large", line);
  }
  return v;
}

Permutation parse_image_list(std::string_view token, std::size_t degree) {
  if (token.size() < 2 || token.front() != '[' || token.back() != ']')
    throw ParseError("malformed image list '" + std::string(token) + "'");
  std::vector<Point> images;
  std::string_view body = token.substr(1, token.size() - 2);
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (item.empty()) throw ParseError("malformed image list: empty entry");
    std::uint64_t v = 0;
    for (char c : item) {
      if (c < '0' || c > '9')
        throw ParseError("malformed image list: unexpected '" + std::string(1, c) + "'");
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > 0xffffffffULL) throw ParseError("malformed image list: point out of range");
    }
    images.push_back(static_cast<Point>(v));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (images.size() != degree)
    throw DegreeMismatch("image list has " + std::to_string(images.size()) +
                         " entries but degree is " + std::to_string(degree));
  return Permutation::from_images(images);
}

Permutation parse_generator(std::string_view token, std::size_t degree) {
  if (!token.empty() && token.front() == '[') return parse_image_list(token, degree);
  return Permutation::from_cycles(token, degree);
}

// Splits a generator list at commas outside brackets.
std::vector<std::string_view> split_generators(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

struct PendingGenerator {
  std::string text;
  int line;
};

}  // namespace

catalog::GroupDescriptor GroupFile::descriptor() const {
  catalog::GroupDescriptor d{name, degree, 0, generators, "group file"};
  d.order = PermGroup(degree, generators).order();
  return d;
}

PermGroup GroupFile::group() const { return PermGroup(degree, generators, name); }

GroupFile parse_group_file(std::string_view text) {
  GroupFile out;
  std::optional<std::size_t> degree;
  std::vector<PendingGenerator> pending;
  bool in_gens = false, saw_gens = false, saw_name = false;

  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '(' || line.front() == '[') {
      if (!in_gens) throw ParseError("generator outside the gens: block", line_no);
      for (auto token : split_generators(line)) {
        if (token.empty()) throw ParseError("empty generator", line_no);
        pending.push_back({std::string(token), line_no});
      }
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'key: value', got '" + std::string(line) + "'", line_no);
    std::string_view key = trim(line.substr(0, colon));
    std::string_view value = trim(line.substr(colon + 1));
    in_gens = false;
    if (key == "name") {
      if (saw_name) throw ParseError("duplicate name:", line_no);
      saw_name = true;
      out.name = std::string(value);
    } else if (key == "degree") {
      if (degree) throw ParseError("duplicate degree:", line_no);
      degree = parse_count(value, key, line_no);
      if (*degree == 0) throw ParseError("degree must be positive", line_no);
    } else if (key == "gens") {
      if (saw_gens) throw ParseError("duplicate gens:", line_no);
      saw_gens = in_gens = true;
      if (!value.empty())
        for (auto token : split_generators(value)) {
          if (token.empty()) throw ParseError("empty generator", line_no);
          pending.push_back({std::string(token), line_no});
        }
    } else if (key == "omega") {
      if (out.omega_claim) throw ParseError("duplicate omega:", line_no);
      out.omega_claim = parse_count(value, key, line_no);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }

  if (!degree) throw ParseError("missing degree:");
  if (!saw_gens) throw ParseError("missing gens:");
  out.degree = *degree;
  for (const auto& g : pending) {
    try {
      out.generators.push_back(parse_generator(g.text, out.degree));
    } catch (const DegreeMismatch& e) {
      throw DegreeMismatch("line " + std::to_string(g.line) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), g.line);
    }
  }
  return out;
}

std::string serialize(const GroupFile& file) {
  std::string out;
  if (!file.name.empty()) out += "name: " + file.name + "\n";
  out += "degree: " + std::to_string(file.degree) + "\n";
  out += "gens:\n";
  for (const auto& g : file.generators) out += g.to_cycles() + "\n";
  if (file.omega_claim) out += "omega: " + std::to_string(*file.omega_claim) + "\n";
  return out;
}

GroupFile load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  GroupFile f;
  try {
    f = parse_group_file(buf.str());
  } catch (const Error& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
  if (f.name.empty()) f.name = path.stem().string();
  return f;
}

}  // namespace autorbit

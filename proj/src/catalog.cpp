#include "lienil/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lienil/error.hpp"

namespace lienil {

using nlohmann::json;

namespace {

[[noreturn]] void fail(std::size_t entry, const std::string &msg) {
  throw Error(Errc::ParseError, "entry " + std::to_string(entry) + ": " + msg);
}

GroupSpec parse_entry(const json &j, std::size_t entry) {
  if (!j.is_object())
    fail(entry, "expected an object");
  for (const char *key : {"name", "degree", "generators", "primes"})
    if (!j.contains(key))
      fail(entry, std::string("missing key \"") + key + "\"");

  GroupSpec spec;
  if (!j["name"].is_string())
    fail(entry, "\"name\" must be a string");
  spec.name = j["name"].get<std::string>();
  if (!j["degree"].is_number_integer() || j["degree"].get<long long>() < 1)
    fail(entry, "\"degree\" must be a positive integer");
  spec.degree = j["degree"].get<std::size_t>();

  if (!j["generators"].is_array() || j["generators"].empty())
    fail(entry, "\"generators\" must be a nonempty list");
  for (const auto &g : j["generators"]) {
    if (!g.is_array())
      fail(entry, "generator must be a list of images");
    std::vector<std::uint32_t> images;
    for (const auto &x : g) {
      if (!x.is_number_integer() || x.get<long long>() < 1)
        fail(entry, "images must be positive integers");
      images.push_back(x.get<std::uint32_t>());
    }
    if (images.size() != spec.degree)
      throw Error(Errc::DegreeMismatch,
                  "entry " + std::to_string(entry) + " (" + spec.name + "): generator has " +
                      std::to_string(images.size()) + " images, degree is " +
                      std::to_string(spec.degree));
    try {
      spec.generators.emplace_back(std::move(images));
    } catch (const Error &e) {
      fail(entry, e.what());
    }
  }

  if (!j["primes"].is_array())
    fail(entry, "\"primes\" must be a list");
  for (const auto &p : j["primes"]) {
    if (!p.is_number_integer() || !is_prime(p.get<long long>()) || p.get<long long>() > 251)
      fail(entry, "\"primes\" entries must be primes below 256");
    spec.primes.push_back(p.get<unsigned>());
  }
  return spec;
}

} // namespace

std::vector<GroupSpec> parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    // byte offset -> line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                      std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_array())
    throw Error(Errc::ParseError, "line 1, column 1: catalog must be a JSON list");

  std::vector<GroupSpec> out;
  for (std::size_t i = 0; i < doc.size(); ++i)
    out.push_back(parse_entry(doc[i], i));
  return out;
}

std::vector<GroupSpec> load_catalog(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::ParseError, "cannot open catalog " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

std::string to_catalog_entry(const GroupSpec &spec) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::array();
  for (const auto &g : spec.generators)
    gens.push_back(g.images());
  nlohmann::ordered_json j;
  j["name"] = spec.name;
  j["degree"] = spec.degree;
  j["generators"] = std::move(gens);
  j["primes"] = spec.primes;
  return j.dump();
}

} // namespace lienil

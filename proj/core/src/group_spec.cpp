#include "grpiso/group_spec.hpp"

#include <charconv>
#include <string>

#include "grpiso/catalog.hpp"
#include "grpiso/error.hpp"
#include "grpiso/table_io.hpp"

namespace grpiso {

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Group parse_all() {
    Group g = parse(0);
    if (pos_ != text_.size())
      throw fail("trailing input");
    return g;
  }

private:
  Group parse(int depth) {
    const std::size_t colon = text_.find(':', pos_);
    if (colon == std::string_view::npos)
      throw fail("expected 'family:argument'");
    const std::string_view family = text_.substr(pos_, colon - pos_);
    pos_ = colon + 1;

    if (family == "product") {
      expect('(');
      Group a = parse(depth + 1);
      expect(',');
      Group b = parse(depth + 1);
      expect(')');
      return direct_product(a, b).group;
    }
    if (family == "file") {
      std::size_t end = text_.size();
      if (depth > 0)
        end = std::min(text_.find(',', pos_), text_.find(')', pos_));
      if (end == std::string_view::npos)
        end = text_.size();
      const std::string path(text_.substr(pos_, end - pos_));
      if (path.empty())
        throw fail("empty file path");
      pos_ = end;
      return read_cayley_file(path);
    }
    if (family == "elem") {
      const std::size_t p = number();
      expect('^');
      const std::size_t k = number();
      return catalog::elementary_abelian(p, k);
    }
    const std::size_t start = pos_;
    const std::size_t n = number();
    try {
      if (family == "cyclic")
        return catalog::cyclic(n);
      if (family == "dihedral")
        return catalog::dihedral(n);
      if (family == "quaternion")
        return catalog::quaternion(n);
      if (family == "sym")
        return catalog::symmetric(n);
      if (family == "alt")
        return catalog::alternating(n);
    } catch (const Error &e) {
      pos_ = start;
      throw fail(e.what());
    }
    pos_ = colon - family.size();
    throw fail("unknown group family '" + std::string(family) + "'");
  }

  std::size_t number() {
    std::size_t v = 0;
    const char *first = text_.data() + pos_;
    const char *last = text_.data() + text_.size();
    auto [end, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || end == first)
      throw fail("expected a number");
    if (v > 100000)
      throw fail("number too large");
    pos_ += static_cast<std::size_t>(end - first);
    return v;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Error fail(const std::string &msg) const {
    std::size_t end = pos_;
    while (end < text_.size() && text_[end] != ',' && text_[end] != ')' &&
           text_[end] != '(')
      ++end;
    std::string token(text_.substr(pos_, end - pos_));
    if (token.empty())
      token = pos_ < text_.size() ? std::string(1, text_[pos_]) : "<end>";
    return Error(Errc::ParseError, msg + " at offset " + std::to_string(pos_) +
                                       " near '" + token + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Group parse_group_spec(std::string_view text) {
  return SpecParser(text).parse_all();
}

const std::vector<CatalogEntry> &standard_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"Z1", "cyclic:1"});
    for (int n = 2; n <= 16; ++n)
      v.push_back({"Z" + std::to_string(n), "cyclic:" + std::to_string(n)});
    v.push_back({"Z2^2", "elem:2^2"});
    v.push_back({"Z2^3", "elem:2^3"});
    v.push_back({"Z2^4", "elem:2^4"});
    v.push_back({"Z3^2", "elem:3^2"});
    v.push_back({"Z4xZ2", "product:(cyclic:4,cyclic:2)"});
    for (int n = 3; n <= 8; ++n)
      v.push_back({"D" + std::to_string(n),
                   "dihedral:" + std::to_string(n)});
    v.push_back({"Q8", "quaternion:8"});
    v.push_back({"Q16", "quaternion:16"});
    v.push_back({"S3", "sym:3"});
    v.push_back({"S4", "sym:4"});
    v.push_back({"A4", "alt:4"});
    v.push_back({"Z2xZ3", "product:(cyclic:2,cyclic:3)"});
    v.push_back({"Z2xZ8", "product:(cyclic:2,cyclic:8)"});
    v.push_back({"Z4xZ4", "product:(cyclic:4,cyclic:4)"});
    v.push_back({"Z2xZ2xZ2", "product:(cyclic:2,product:(cyclic:2,cyclic:2))"});
    v.push_back({"S3xZ2", "product:(sym:3,cyclic:2)"});
    v.push_back({"S3xZ3", "product:(sym:3,cyclic:3)"});
    v.push_back({"S3xZ4", "product:(sym:3,cyclic:4)"});
    v.push_back({"Z4xS3", "product:(cyclic:4,sym:3)"});
    v.push_back({"D4xZ2", "product:(dihedral:4,cyclic:2)"});
    v.push_back({"Q8xZ2", "product:(quaternion:8,cyclic:2)"});
    v.push_back({"D5xZ2", "product:(dihedral:5,cyclic:2)"});
    v.push_back({"A4xZ2", "product:(alt:4,cyclic:2)"});
    v.push_back({"D4xZ3", "product:(dihedral:4,cyclic:3)"});
    v.push_back({"Q8xZ3", "product:(quaternion:8,cyclic:3)"});
    v.push_back({"S3xS3", "product:(sym:3,sym:3)"});
    v.push_back({"S4xZ2", "product:(sym:4,cyclic:2)"});
    v.push_back({"S3xD4", "product:(sym:3,dihedral:4)"});
    v.push_back({"A4xZ4", "product:(alt:4,cyclic:4)"});
    v.push_back({"D4xQ8", "product:(dihedral:4,quaternion:8)"});
    v.push_back({"Q8xQ8", "product:(quaternion:8,quaternion:8)"});
    return v;
  }();
  return entries;
}

} // namespace grpiso

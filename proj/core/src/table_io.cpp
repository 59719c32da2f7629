#include "grpiso/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "grpiso/error.hpp"

namespace grpiso {

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool done() const { return pos >= text.size(); }

  std::string_view next() {
    const std::size_t nl = text.find('\n', pos);
    ++line_no;
    if (nl == std::string_view::npos)
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": missing newline");
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  }

  Error fail(const std::string &msg) const {
    return Error(Errc::ParseError,
                 "line " + std::to_string(line_no) + ": " + msg);
  }
};

std::uint64_t parse_decimal(std::string_view tok, const LineReader &r) {
  std::uint64_t v = 0;
  if (tok.empty())
    throw r.fail("empty field");
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw r.fail("bad number '" + std::string(tok) + "'");
  return v;
}

std::vector<std::uint64_t> split_fields(std::string_view line, char sep,
                                        const LineReader &r) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = line.find(sep, start);
    out.push_back(parse_decimal(line.substr(start, at - start), r));
    if (at == std::string_view::npos)
      break;
    start = at + 1;
  }
  return out;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

Group parse_cayley_table(std::string_view text) {
  LineReader r{text};
  std::string_view line = r.next();
  while (!line.empty() && line.front() == '#')
    line = r.next();
  const std::uint64_t n = parse_decimal(line, r);
  if (n == 0)
    throw r.fail("group order must be positive");
  if (n > 65536)
    throw r.fail("group order too large for an explicit table");

  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (r.done())
      throw Error(Errc::ParseError, "expected " + std::to_string(n) +
                                        " table rows, got " +
                                        std::to_string(i));
    const auto row = split_fields(r.next(), ' ', r);
    if (row.size() != n)
      throw r.fail("expected " + std::to_string(n) + " entries, got " +
                   std::to_string(row.size()));
    for (std::uint64_t v : row) {
      if (v >= n)
        throw Error(Errc::EntryOutOfRange,
                    "line " + std::to_string(r.line_no) + ": entry " +
                        std::to_string(v) + " out of range");
      flat.push_back(static_cast<Element>(v));
    }
  }
  if (!r.done())
    throw Error(Errc::ParseError, "trailing content after the table");

  BuiltGroup built = build_group(n, flat);
  if (built.relabeled)
    throw Error(Errc::NoIdentity, "element 0 is not the identity");
  return built.group;
}

Group read_cayley_file(const std::string &path) {
  return parse_cayley_table(slurp(path));
}

std::string format_cayley_table(const Group &G) {
  std::string out = std::to_string(G.order()) + "\n";
  for (Element a = 0; a < G.order(); ++a) {
    const auto row = G.row(a);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j)
        out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

void write_cayley_file(const Group &G, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(Errc::ParseError, "cannot write '" + path + "'");
  out << format_cayley_table(G);
}

std::string format_pair_list(const Homomorphism &phi) {
  std::string out;
  for (Element g = 0; g < phi.source().order(); ++g)
    out += std::to_string(g) + '\t' + std::to_string(phi(g)) + '\n';
  return out;
}

Homomorphism parse_pair_list(std::string_view text, const Group &source,
                             const Group &target) {
  const std::size_t n = source.order();
  constexpr Element unset = ~Element{0};
  std::vector<Element> images(n, unset);
  LineReader r{text};
  std::size_t count = 0;
  while (!r.done()) {
    const auto fields = split_fields(r.next(), '\t', r);
    if (fields.size() != 2)
      throw r.fail("expected 'g<TAB>image'");
    if (fields[0] >= n || fields[1] >= target.order())
      throw r.fail("element out of range");
    if (images[fields[0]] != unset)
      throw r.fail("element " + std::to_string(fields[0]) + " listed twice");
    images[fields[0]] = static_cast<Element>(fields[1]);
    ++count;
  }
  if (count != n)
    throw Error(Errc::ParseError, "pair list covers " + std::to_string(count) +
                                      " of " + std::to_string(n) +
                                      " elements");
  return build_hom(source, target, std::move(images));
}

} // namespace grpiso

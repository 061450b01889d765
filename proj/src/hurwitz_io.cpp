#include "twistcalc/hurwitz_io.hpp"

#include <sstream>

#include "twistcalc/errors.hpp"
#include "text_util.hpp"

namespace twistcalc {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  s = detail::trim(s);
  if (s.empty()) return false;
  std::string str(s);
  if (str.front() == '+') str.erase(0, 1);
  return out.set_str(str, 10) == 0;
}

}  // namespace

TwistTuple parse_tuple(std::string_view text) {
  unsigned genus = 0;
  std::vector<HomologyClass> chain;
  TwistTuple t(1);
  std::size_t line_no = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++line_no;
    const auto line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    const auto words = detail::split_ws(line);
    if (genus == 0) {
      if (words.size() != 2 || words[0] != "genus" || !detail::parse_unsigned(words[1], genus) || genus == 0)
        throw ParseError("tuple file must start with 'genus <g>'", line_no);
      chain = chain_classes(genus);
      t = TwistTuple(genus);
      continue;
    }
    if (words[0] == "gen") {
      unsigned idx = 0;
      if (words.size() != 2 || !detail::parse_unsigned(words[1], idx) || idx == 0 || idx > chain.size())
        throw ParseError("expected 'gen <i>' with 1 <= i <= " + std::to_string(chain.size()), line_no);
      t.push_back(chain[idx - 1]);
    } else if (words[0] == "class") {
      const auto rest = detail::trim(line.substr(5));
      std::vector<Integer> coords;
      std::size_t start = 0;
      while (start <= rest.size()) {
        const auto comma = rest.find(',', start);
        const auto piece = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        Integer v;
        if (!parse_integer(piece, v)) throw ParseError("bad integer '" + std::string(piece) + "'", line_no);
        coords.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (coords.size() != 2 * genus)
        throw ParseError("class needs " + std::to_string(2 * genus) + " coordinates", line_no);
      t.push_back(HomologyClass(std::move(coords)));
    } else {
      throw ParseError("expected 'gen <i>' or 'class <coords>'", line_no);
    }
  }
  if (genus == 0) throw ParseError("empty tuple file: missing 'genus <g>'");
  return t;
}

TwistTuple load_tuple(const std::filesystem::path& path) { return parse_tuple(detail::read_file(path)); }

std::string format_tuple(const TwistTuple& t) {
  const auto chain = chain_classes(t.genus());
  std::ostringstream out;
  out << "genus " << t.genus() << '\n';
  for (const auto& e : t.entries()) {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < chain.size() && idx == 0; ++c)
      if (chain[c] == e) idx = c + 1;
    if (idx) {
      out << "gen " << idx << '\n';
    } else {
      out << "class ";
      for (std::size_t k = 0; k < e.dimension(); ++k) out << (k ? "," : "") << e[k].get_str();
      out << '\n';
    }
  }
  return out.str();
}

HurwitzMove parse_move(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'L' && token[0] != 'R'))
    throw ParseError("bad move token '" + std::string(token) + "'");
  unsigned k = 0;
  if (!detail::parse_unsigned(token.substr(1), k) || k == 0)
    throw ParseError("bad move index in '" + std::string(token) + "'");
  return HurwitzMove{token[0] == 'L' ? Side::L : Side::R, k};
}

MoveSequence parse_moves(std::string_view text) {
  MoveSequence q;
  std::size_t line_no = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++line_no;
    for (const auto& tok : detail::split_ws(detail::strip_comment(raw))) {
      try {
        q.push_back(parse_move(tok));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
    }
  }
  return q;
}

MoveSequence load_moves(const std::filesystem::path& path) { return parse_moves(detail::read_file(path)); }

std::string format_moves(const MoveSequence& q) {
  std::ostringstream out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    out << q[i].to_string();
    out << ((i + 1) % 20 == 0 || i + 1 == q.size() ? '\n' : ' ');
  }
  return out.str();
}

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::size_t line_no = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++line_no;
    const auto line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    std::vector<Integer> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto piece = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      Integer v;
      if (!parse_integer(piece, v)) throw ParseError("bad integer '" + std::string(piece) + "'", line_no);
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix row", line_no);
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

IntMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix(detail::read_file(path)); }

void save_text(const std::filesystem::path& path, std::string_view contents) { detail::write_file(path, contents); }

}  // namespace twistcalc

#include "afprov/formats.hpp"

#include <sstream>
#include <vector>

#include "afprov/error.hpp"

namespace afprov {

namespace {

class ApxReader {
 public:
  explicit ApxReader(std::string_view text) : text_(text) {}

  ArgumentationFramework read() {
    std::vector<ArgumentId> args;
    std::vector<AttackEdge> attacks;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) break;
      const auto [line, col] = where();
      const std::string keyword = token();
      if (keyword == "arg") {
        expect('(');
        args.push_back(name());
        expect(')');
      } else if (keyword == "att") {
        expect('(');
        auto from = name();
        expect(',');
        auto to = name();
        expect(')');
        attacks.push_back({std::move(from), std::move(to)});
      } else {
        throw SyntaxError(ErrorCode::SyntaxError, line, col,
                          keyword.empty() ? "expected a statement"
                                          : "unknown directive '" + keyword + "'");
      }
      expect('.');
    }
    return build_af(std::move(args), std::move(attacks));
  }

 private:
  static bool is_token_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u != 0x7f && c != '(' && c != ')' && c != ',' && c != '.' &&
           c != '%';
  }

  std::pair<std::size_t, std::size_t> where() const { return {line_, pos_ - line_start_ + 1}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (static_cast<unsigned char>(c) <= 0x20) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_token_char(text_[pos_])) advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  ArgumentId name() {
    skip_blank();
    const auto [line, col] = where();
    auto t = token();
    if (t.empty()) throw SyntaxError(ErrorCode::SyntaxError, line, col, "expected an argument name");
    return ArgumentId(std::move(t));
  }

  void expect(char c) {
    skip_blank();
    const auto [line, col] = where();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw SyntaxError(ErrorCode::SyntaxError, line, col,
                        std::string("expected '") + c + "'");
    }
    advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && static_cast<unsigned char>(line[i]) <= 0x20) ++i;
    const std::size_t start = i;
    while (i < line.size() && static_cast<unsigned char>(line[i]) > 0x20) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

ArgumentId tgf_name(const std::string& token, std::size_t line) {
  if (!ArgumentId::is_valid(token)) {
    throw SyntaxError(ErrorCode::SyntaxError, line, 1, "invalid argument name '" + token + "'");
  }
  return ArgumentId(token);
}

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) { return ApxReader(text).read(); }

ArgumentationFramework parse_tgf(std::string_view text) {
  std::vector<ArgumentId> args;
  std::vector<AttackEdge> attacks;
  bool in_edges = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    const auto tokens = split_ws(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!in_edges && tokens[0] == "#") {
      in_edges = true;
    } else if (!in_edges) {
      args.push_back(tgf_name(tokens[0], line_no));
    } else {
      if (tokens.size() < 2) {
        throw SyntaxError(ErrorCode::SyntaxError, line_no, 1, "expected 'source target'");
      }
      attacks.push_back({tgf_name(tokens[0], line_no), tgf_name(tokens[1], line_no)});
    }
    if (end == text.size()) break;
  }
  if (!in_edges) {
    throw SyntaxError(ErrorCode::MissingSeparator, line_no == 0 ? 1 : line_no, 1,
                      "missing '#' separator");
  }
  return build_af(std::move(args), std::move(attacks));
}

std::string write_apx(const ArgumentationFramework& af) {
  std::ostringstream os;
  for (const auto& a : af.arguments()) os << "arg(" << a.str() << ").\n";
  for (const auto& e : af.attacks()) {
    os << "att(" << e.attacker.str() << "," << e.target.str() << ").\n";
  }
  return os.str();
}

std::string write_tgf(const ArgumentationFramework& af) {
  std::ostringstream os;
  for (const auto& a : af.arguments()) os << a.str() << "\n";
  os << "#\n";
  for (const auto& e : af.attacks()) os << e.attacker.str() << " " << e.target.str() << "\n";
  return os.str();
}

std::optional<InputFormat> parse_input_format(std::string_view name) noexcept {
  if (name == "apx") return InputFormat::Apx;
  if (name == "tgf") return InputFormat::Tgf;
  if (name == "json") return InputFormat::Json;
  return std::nullopt;
}

std::optional<InputFormat> sniff_format(std::string_view path) noexcept {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return parse_input_format(path.substr(dot + 1));
}

}  // namespace afprov

#include "boolspec/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace boolspec::io {

namespace {

std::string position(int line, int col) {
  return "line " + std::to_string(line) + ", col " + std::to_string(col);
}

// Splits off one line, tolerating a trailing '\r' (CRLF input).
std::string_view take_line(std::string_view& rest) {
  const std::size_t nl = rest.find('\n');
  std::string_view line = rest.substr(0, nl);
  rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int col)
    : std::runtime_error(position(line, col) + ": " + message),
      line_(line),
      col_(col) {}

TruthTable parse_truth_table(std::string_view text) {
  std::string_view rest = text;
  const std::string_view header = take_line(rest);
  if (header.substr(0, 2) != "n=") {
    throw ParseError("expected header of the form n=<arity>", 1, 1);
  }
  unsigned n = 0;
  const char* first = header.data() + 2;
  const char* last = header.data() + header.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("invalid arity '" + std::string(header.substr(2)) + "'",
                     1, 3);
  }
  if (n < 1 || n > kMaxArity) {
    throw ParseError("arity must be in [1, " + std::to_string(kMaxArity) + "]",
                     1, 3);
  }

  const std::string_view outputs = take_line(rest);
  const std::size_t expected = std::size_t{1} << n;
  if (outputs.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) +
                         " output characters, got " +
                         std::to_string(outputs.size()),
                     2, static_cast<int>(outputs.size()) + 1);
  }
  TruthTable tt(n);
  for (std::size_t k = 0; k < expected; ++k) {
    if (outputs[k] == '0') {
      tt.set_bit(static_cast<AssignmentIndex>(k), false);
    } else if (outputs[k] == '1') {
      tt.set_bit(static_cast<AssignmentIndex>(k), true);
    } else {
      throw ParseError("output characters must be 0 or 1", 2,
                       static_cast<int>(k) + 1);
    }
  }
  if (!rest.empty() && rest != "\n") {
    const std::string_view extra = take_line(rest);
    if (!extra.empty() || !rest.empty()) {
      throw ParseError("unexpected content after the output line", 3, 1);
    }
  }
  return tt;
}

std::string format_truth_table(const TruthTable& tt) {
  std::string out = "n=" + std::to_string(tt.arity()) + "\n";
  out.reserve(out.size() + tt.size() + 1);
  for (AssignmentIndex k = 0; k < tt.size(); ++k) {
    out.push_back(tt.bit(k) ? '1' : '0');
  }
  out.push_back('\n');
  return out;
}

TruthTable load_truth_table(const std::filesystem::path& path) {
  return parse_truth_table(read_file(path));
}

void save_truth_table(const TruthTable& tt, const std::filesystem::path& path) {
  write_file(path, format_truth_table(tt));
}

std::string spectrum_csv(const FourierSpectrum& s) {
  std::ostringstream out;
  out << "mask,coeff\n";
  const std::int64_t denominator = std::int64_t{1} << s.arity();
  for (SubsetMask mask = 0; mask < s.size(); ++mask) {
    if (s.kind() == SpectrumKind::Exact) {
      out << mask << ',' << s.numerator(mask) << '/' << denominator << '\n';
    } else {
      out << mask << ',' << format_double17(s.value(mask)) << '\n';
    }
  }
  return out.str();
}

std::string canalizing_json_lines(const CanalizingReport& report) {
  std::ostringstream out;
  for (const auto& vr : report.variables) {
    out << "{\"variable\":" << vr.variable << ",\"canalizing\":"
        << (vr.canalizing ? "true" : "false") << ",\"witnesses\":[";
    for (std::size_t w = 0; w < vr.witnesses.size(); ++w) {
      if (w > 0) out << ',';
      out << '[' << vr.witnesses[w].a << ',' << vr.witnesses[w].b << ']';
    }
    out << "]}\n";
  }
  return out.str();
}

std::string format_double17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace boolspec::io

#include "segcover/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "segcover/error.hpp"
#include "segcover/rng.hpp"
#include "segcover/union_find.hpp"

namespace segcover {
namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  std::size_t offset() const noexcept { return pos_; }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::uint64_t next_uint(const char* what) {
    const std::string_view tok = next_token(what);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size()) {
      throw ParseError("expected non-negative integer for " + std::string(what) +
                           ", got '" + std::string(tok) + "'",
                       token_start_);
    }
    return value;
  }

  // Costs may be written as integers or reals; they are validated and dropped.
  void skip_number(const char* what) {
    const std::string_view tok = next_token(what);
    double value = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size()) {
      throw ParseError("expected number for " + std::string(what) + ", got '" +
                           std::string(tok) + "'",
                       token_start_);
    }
  }

  std::size_t token_start() const noexcept { return token_start_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view next_token(const char* what) {
    skip_space();
    if (pos_ == text_.size()) {
      throw ParseError("truncated input: missing " + std::string(what), pos_);
    }
    token_start_ = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(token_start_, pos_ - token_start_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
};

std::uint32_t read_id(TokenReader& in, std::uint64_t limit, const char* what) {
  const std::uint64_t id = in.next_uint(what);
  if (id == 0 || id > limit) {
    throw ParseError(std::string(what) + " " + std::to_string(id) + " out of range [1, " +
                         std::to_string(limit) + "]",
                     in.token_start());
  }
  return static_cast<std::uint32_t>(id - 1);
}

void expect_end(TokenReader& in) {
  if (!in.at_end()) throw ParseError("trailing data after last record", in.offset());
}

Instance build(std::size_t rows, std::vector<std::vector<ElementId>> columns,
               std::size_t end_offset) {
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].empty()) {
      throw ParseError("column " + std::to_string(j + 1) + " covers no rows", end_offset);
    }
  }
  try {
    return Instance(rows, std::move(columns));
  } catch (const UsageError& e) {
    throw ParseError(e.what(), end_offset);
  }
}

}  // namespace

FileFormat parse_format_name(std::string_view name) {
  if (name == "auto") return FileFormat::automatic;
  if (name == "scp") return FileFormat::scp;
  if (name == "rail") return FileFormat::rail;
  if (name == "rail-count-first") return FileFormat::rail_count_first;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

Instance parse_scp(std::string_view text) {
  TokenReader in(text);
  const std::uint64_t rows = in.next_uint("row count");
  const std::uint64_t cols = in.next_uint("column count");
  for (std::uint64_t j = 0; j < cols; ++j) in.skip_number("column cost");
  std::vector<std::vector<ElementId>> columns(cols);
  for (std::uint64_t i = 0; i < rows; ++i) {
    const std::uint64_t count = in.next_uint("row cover count");
    if (count == 0) {
      throw ParseError("row " + std::to_string(i + 1) + " has no covering columns",
                       in.token_start());
    }
    for (std::uint64_t k = 0; k < count; ++k) {
      columns[read_id(in, cols, "column id")].push_back(static_cast<ElementId>(i));
    }
  }
  expect_end(in);
  return build(rows, std::move(columns), in.offset());
}

Instance parse_rail(std::string_view text, bool count_first) {
  TokenReader in(text);
  const std::uint64_t rows = in.next_uint("row count");
  const std::uint64_t cols = in.next_uint("column count");
  std::vector<std::vector<ElementId>> columns(cols);
  for (std::uint64_t j = 0; j < cols; ++j) {
    std::uint64_t count = 0;
    if (count_first) {
      count = in.next_uint("column row count");
      in.skip_number("column cost");
    } else {
      in.skip_number("column cost");
      count = in.next_uint("column row count");
    }
    if (count == 0) {
      throw ParseError("column " + std::to_string(j + 1) + " covers no rows",
                       in.token_start());
    }
    columns[j].reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
      columns[j].push_back(read_id(in, rows, "row id"));
    }
  }
  expect_end(in);
  return build(rows, std::move(columns), in.offset());
}

Instance parse_instance(std::string_view text, FileFormat format) {
  switch (format) {
    case FileFormat::scp:
      return parse_scp(text);
    case FileFormat::rail:
      return parse_rail(text, false);
    case FileFormat::rail_count_first:
      return parse_rail(text, true);
    case FileFormat::automatic:
      break;
  }
  try {
    return parse_rail(text, false);
  } catch (const ParseError&) {
    return parse_scp(text);
  }
}

Instance read_instance_file(const std::filesystem::path& path, FileFormat format) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open instance file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_instance(buffer.str(), format);
}

std::string write_scp(const Instance& inst) {
  const std::size_t n = inst.universe_size();
  const std::size_t m = inst.subset_count();
  std::vector<std::vector<SubsetId>> rows(n);
  for (SubsetId j = 0; j < m; ++j) {
    for (const ElementId e : inst.members(j)) rows[e].push_back(j);
  }
  std::ostringstream out;
  out << n << ' ' << m << '\n';
  // Unit costs, twenty per line.
  for (std::size_t j = 0; j < m; ++j) {
    out << (j % 20 == 0 ? "" : " ") << 1;
    if (j % 20 == 19 || j + 1 == m) out << '\n';
  }
  for (const auto& row : rows) {
    out << row.size() << '\n';
    for (std::size_t k = 0; k < row.size(); ++k) out << (k == 0 ? "" : " ") << row[k] + 1;
    out << '\n';
  }
  return out.str();
}

std::string write_rail(const Instance& inst) {
  std::ostringstream out;
  out << inst.universe_size() << ' ' << inst.subset_count() << '\n';
  for (SubsetId j = 0; j < inst.subset_count(); ++j) {
    const auto members = inst.members(j);
    out << 1 << ' ' << members.size();
    for (const ElementId e : members) out << ' ' << e + 1;
    out << '\n';
  }
  return out.str();
}

Instance generate_segmentable(const GeneratorConfig& cfg) {
  if (cfg.groups < 1 || cfg.groups > cfg.n || cfg.groups > cfg.m) {
    throw UsageError("generator needs 1 <= groups <= min(n, m); got groups=" +
                     std::to_string(cfg.groups) + ", n=" + std::to_string(cfg.n) +
                     ", m=" + std::to_string(cfg.m));
  }
  if (!(cfg.density > 0.0 && cfg.density <= 1.0)) {
    throw UsageError("generator density must lie in (0, 1]");
  }
  Rng rng(cfg.seed);
  const std::size_t k = cfg.groups;
  auto block_begin = [&](std::size_t b) { return static_cast<ElementId>(cfg.n * b / k); };

  std::vector<std::vector<ElementId>> subsets(cfg.m);
  std::vector<std::uint8_t> mark(cfg.n, 0);
  for (std::size_t j = 0; j < cfg.m; ++j) {
    const std::size_t b = j % k;
    const ElementId lo = block_begin(b);
    const std::size_t width = block_begin(b + 1) - lo;
    const auto mean = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(cfg.density * static_cast<double>(width))));
    const std::size_t size = std::min(width, 1 + rng.uniform(2 * mean - 1));
    // Floyd's sampling: `size` distinct offsets out of `width`.
    std::vector<ElementId> picked;
    picked.reserve(size);
    for (std::size_t t = width - size; t < width; ++t) {
      auto e = static_cast<ElementId>(lo + rng.uniform(t + 1));
      if (mark[e]) e = static_cast<ElementId>(lo + t);
      mark[e] = 1;
      picked.push_back(e);
    }
    for (const ElementId e : picked) mark[e] = 0;
    std::sort(picked.begin(), picked.end());
    subsets[j] = std::move(picked);
  }

  // Repair per block: cover stray elements, then chain the pieces of the
  // block's co-occurrence graph into one component.
  for (std::size_t b = 0; b < k; ++b) {
    const ElementId lo = block_begin(b);
    const ElementId hi = block_begin(b + 1);
    std::vector<SubsetId> block_subsets;
    for (std::size_t j = b; j < cfg.m; j += k) block_subsets.push_back(static_cast<SubsetId>(j));

    std::vector<std::optional<SubsetId>> holder(hi - lo);
    for (const SubsetId j : block_subsets) {
      for (const ElementId e : subsets[j]) {
        if (!holder[e - lo]) holder[e - lo] = j;
      }
    }
    for (ElementId e = lo; e < hi; ++e) {
      if (holder[e - lo]) continue;
      const SubsetId j = block_subsets[rng.uniform(block_subsets.size())];
      subsets[j].insert(std::upper_bound(subsets[j].begin(), subsets[j].end(), e), e);
      holder[e - lo] = j;
    }

    UnionFind uf(hi - lo);
    for (const SubsetId j : block_subsets) {
      for (const ElementId e : subsets[j]) uf.unite(subsets[j].front() - lo, e - lo);
    }
    // Pieces in order of their smallest element.
    std::vector<ElementId> piece_min;
    std::vector<bool> seen_root(hi - lo, false);
    for (ElementId e = lo; e < hi; ++e) {
      const std::uint32_t r = uf.find(e - lo);
      if (!seen_root[r]) {
        seen_root[r] = true;
        piece_min.push_back(e);
      }
    }
    for (std::size_t p = 1; p < piece_min.size(); ++p) {
      const SubsetId j = *holder[piece_min[p] - lo];
      const ElementId bridge = piece_min[p - 1];
      subsets[j].insert(std::upper_bound(subsets[j].begin(), subsets[j].end(), bridge), bridge);
    }
  }
  return Instance(cfg.n, std::move(subsets));
}

}  // namespace segcover

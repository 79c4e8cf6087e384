#include "fibquiver/cli/bfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fibquiver/fibcore.hpp"
#include "fibquiver/profiles.hpp"

namespace fibquiver::cli {

BFile parse_bfile(std::istream& in) {
  BFile file;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string n_text, value_text, extra;
    fields >> n_text >> value_text;
    if (value_text.empty()) throw BFileParseError(line_no, "expected 'n value'");
    if (fields >> extra) throw BFileParseError(line_no, "trailing field '" + extra + "'");
    BFileRecord rec;
    try {
      std::size_t used = 0;
      rec.n = std::stoll(n_text, &used);
      if (used != n_text.size()) throw std::invalid_argument(n_text);
      rec.value = parse_decimal(value_text);
    } catch (const std::exception&) {
      throw BFileParseError(line_no, "not an integer pair: '" + line + "'");
    }
    if (!file.records.empty() && rec.n <= file.records.back().n) {
      throw BFileParseError(line_no, "index " + std::to_string(rec.n) + " is not increasing");
    }
    file.records.push_back(std::move(rec));
  }
  return file;
}

BFile load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open b-file '" + path + "'");
  return parse_bfile(in);
}

std::vector<std::string> generator_names() { return {"fib", "radial_rows", "u_rows"}; }

namespace {

// Terms 0..count-1 of a triangle read by rows.
template <typename Rows>
std::vector<BigInt> flatten_rows(long long count, Rows&& next_row) {
  std::vector<BigInt> out;
  while (static_cast<long long>(out.size()) < count) {
    for (auto& v : next_row()) {
      if (static_cast<long long>(out.size()) == count) break;
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

std::vector<BigInt> generate(const std::string& generator, long long from, long long to, long long offset) {
  if (from > to) return {};
  if (generator == "fib") return fib_range(from, to);
  if (from < offset) throw Error("index " + std::to_string(from) + " precedes the offset " + std::to_string(offset));
  const long long count = to - offset + 1;
  std::vector<BigInt> terms;
  if (generator == "radial_rows") {
    RadialProfile p = radial_initial();
    bool first = true;
    terms = flatten_rows(count, [&] {
      if (!first) p = radial_step(p);
      first = false;
      return p.values;
    });
  } else if (generator == "u_rows") {
    BiRadialProfile u = u_initial();
    bool first = true;
    terms = flatten_rows(count, [&] {
      if (!first) u = u_step(u);
      first = false;
      return u.values.dense();
    });
  } else {
    throw Error("unknown generator '" + generator + "'");
  }
  return {terms.begin() + (from - offset), terms.end()};
}

std::vector<SequenceMapping> load_sequence_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open sequence map '" + path + "'");
  const auto doc = nlohmann::json::parse(in);
  std::vector<SequenceMapping> out;
  for (const auto& [id, entry] : doc.at("sequences").items()) {
    SequenceMapping m;
    m.sequence_id = id;
    if (entry.contains("generator") && !entry.at("generator").is_null()) {
      m.generator = entry.at("generator").get<std::string>();
    }
    m.offset = entry.value("offset", 0LL);
    m.status = entry.value("status", std::string("unverified"));
    m.note = entry.value("note", std::string());
    out.push_back(std::move(m));
  }
  return out;
}

OeisOutcome compare_bfile(const std::string& sequence_id, const std::string& generator, long long offset,
                          const BFile& fixture) {
  OeisOutcome outcome{sequence_id, generator, 0, true, false, std::nullopt, {}};
  if (fixture.records.empty()) {
    outcome.vacuous = true;
    outcome.message = "fixture has no records; nothing to compare";
    return outcome;
  }
  const long long from = fixture.records.front().n;
  const long long to = fixture.records.back().n;
  const auto expected = generate(generator, from, to, offset);
  for (std::size_t i = 0; i < fixture.records.size(); ++i) {
    const auto& rec = fixture.records[i];
    const long long want_n = from + static_cast<long long>(i);
    if (rec.n != want_n) {
      outcome.passed = false;
      outcome.first_mismatch = want_n;
      outcome.message = "index " + std::to_string(want_n) + " is missing from the fixture";
      return outcome;
    }
    const auto& want = expected[static_cast<std::size_t>(rec.n - from)];
    if (rec.value != want) {
      outcome.passed = false;
      outcome.first_mismatch = rec.n;
      outcome.message = "mismatch at n=" + std::to_string(rec.n) + ": fixture " + to_decimal(rec.value) +
                        ", generator " + to_decimal(want);
      return outcome;
    }
    ++outcome.checked;
  }
  outcome.message = "matched " + std::to_string(outcome.checked) + " terms, n in [" + std::to_string(from) + "," +
                    std::to_string(to) + "]";
  return outcome;
}

}  // namespace fibquiver::cli

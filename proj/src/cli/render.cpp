#include "fibquiver/cli/render.hpp"

#include <algorithm>
#include <sstream>

namespace fibquiver::cli {

namespace {

std::string join(const std::vector<BigInt>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_decimal(values[i]);
  }
  return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

template <typename T>
std::string as_json(const T& v) {
  return emit_json(v) + "\n";
}

std::string witness_csv(const PairClass& c) {
  if (!c.witness) return ",,";
  const auto& w = *c.witness;
  return std::to_string(w.t) + "," + std::string(to_string(w.direction)) + "," + (w.negated ? "true" : "false");
}

std::string describe(const PairClass& c) {
  std::string out(to_string(c.kind));
  if (c.witness) {
    const auto& w = *c.witness;
    out += " t=" + std::to_string(w.t) + " " + std::string(to_string(w.direction));
    if (w.negated) out += " (negated)";
  }
  return out;
}

// Lists a ring class; long runs of one value are shortened to "v x count".
std::string class_values(const Ring& r) {
  if (r.count > 4) return to_decimal(r.value) + " x " + to_decimal(r.count);
  std::vector<BigInt> repeated(r.count.get_ui(), r.value);
  return join(repeated, ",");
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const FibListing& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  if (f == Format::csv) {
    out << "n,value\n";
    for (std::size_t i = 0; i < v.values.size(); ++i) {
      out << v.from + static_cast<FibIndex>(i) << "," << v.values[i] << "\n";
    }
  } else {
    out << "f_" << v.from << " .. f_" << v.to << ":\n" << join(v.values, ",") << "\n";
  }
  return out.str();
}

std::string render(const PairsListing& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  if (f == Format::csv) {
    out << "x,y,kind,t,direction,negated\n";
    for (const auto& e : v.pairs) {
      out << e.point.x << "," << e.point.y << "," << to_string(e.classification.kind) << ","
          << witness_csv(e.classification) << "\n";
    }
  } else {
    out << "Fibonacci pairs with |x|, |y| <= " << v.max << " (" << v.pairs.size() << ")\n";
    for (const auto& e : v.pairs) {
      out << "  [" << e.point.x << ", " << e.point.y << "]  " << describe(e.classification) << "\n";
    }
  }
  return out.str();
}

std::string render(const ClassifyResult& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  if (f == Format::csv) {
    out << "x,y,q,kind,t,direction,negated\n"
        << v.point.x << "," << v.point.y << "," << v.q << "," << to_string(v.classification.kind) << ","
        << witness_csv(v.classification) << "\n";
  } else {
    out << "(" << v.point.x << ", " << v.point.y << "): q = " << v.q << ", " << describe(v.classification) << "\n";
  }
  return out.str();
}

std::string render(const UTableListing& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  if (f == Format::csv) {
    out << "t,s,value\n";
    for (const auto& row : v.rows) {
      for (int s = row.values.min_class(); s <= row.values.max_class(); ++s) {
        out << row.t << "," << s << "," << row.values.at(s) << "\n";
      }
    }
    return out.str();
  }
  int lo = 0, hi = 0;
  std::size_t width = 1;
  for (std::size_t i = 0; i < v.rows.size(); ++i) {
    const auto& row = v.rows[i];
    lo = std::min(lo, row.values.min_class());
    hi = std::max(hi, row.values.max_class());
    for (const auto& x : row.values.dense()) width = std::max(width, to_decimal(x).size());
    width = std::max({width, to_decimal(v.sums[i].minus).size(), to_decimal(v.sums[i].plus).size()});
  }
  width = std::max<std::size_t>(width, std::to_string(lo).size()) + 1;
  const std::size_t side = std::max<std::size_t>(width, 9);
  out << pad_left("t", 4) << " |";
  for (int s = lo; s <= hi; ++s) out << pad_left(std::to_string(s), width);
  out << " |" << pad_left("f(4t-1)", side) << pad_left("f(4t+1)", side) << "\n";
  out << std::string(4 + 2 + width * static_cast<std::size_t>(hi - lo + 1) + 2 + 2 * side, '-') << "\n";
  for (std::size_t i = 0; i < v.rows.size(); ++i) {
    const auto& row = v.rows[i];
    out << pad_left(std::to_string(row.t), 4) << " |";
    for (int s = lo; s <= hi; ++s) {
      const bool inside = s >= row.values.min_class() && s <= row.values.max_class();
      out << pad_left(inside ? to_decimal(row.values.at(s)) : "", width);
    }
    out << " |" << pad_left(to_decimal(v.sums[i].minus), side) << pad_left(to_decimal(v.sums[i].plus), side) << "\n";
  }
  return out.str();
}

std::string render(const PartitionReport& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  if (f == Format::csv) {
    out << "target,s,weight,value,product\n";
    for (const auto& term : v.terms_minus) {
      out << "f_4t-1," << term.s << "," << term.weight << "," << term.value << "," << term.product << "\n";
    }
    for (const auto& term : v.terms_plus) {
      out << "f_4t+1," << term.s << "," << term.weight << "," << term.value << "," << term.product << "\n";
    }
    return out.str();
  }
  auto side = [&](const char* name, const BigInt& target, const std::vector<PartitionTerm>& terms,
                  const BigInt& total) {
    out << name << " = " << target << "\n";
    for (const auto& term : terms) {
      out << "  s=" << pad_left(std::to_string(term.s), 4) << ":  " << term.weight << " * " << term.value << " = "
          << term.product << "\n";
    }
    out << "  total " << total << (total == target ? "  (ok)" : "  (MISMATCH)") << "\n";
  };
  out << "t = " << v.t << "\n";
  side("f(4t-1)", v.target_minus, v.terms_minus, v.total_minus());
  side("f(4t+1)", v.target_plus, v.terms_plus, v.total_plus());
  return out.str();
}

std::string render(const VectorListing& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  const auto rings = rings_of(v);
  if (f == Format::csv) {
    out << "class,distance,count,value\n";
    for (const auto& r : rings) out << r.cls << "," << r.distance << "," << r.count << "," << r.value << "\n";
    return out.str();
  }
  if (v.series == Series::s) {
    out << "s_" << v.t << "(x), x = base\n";
  } else {
    out << "r_" << v.t << "(x, y), x = base, y = 0 (y-side classes are negative)\n";
  }
  int current = -1;
  for (const auto& r : rings) {
    if (r.distance != current) {
      if (current >= 0) out << "\n";
      current = r.distance;
      out << "ring " << r.distance << ":";
    }
    if (v.series == Series::r && r.distance > 0) {
      out << (r.cls > 0 ? " +" : "  -") << r.distance << ": " << class_values(r);
    } else {
      out << " " << class_values(r);
    }
  }
  out << "\nparity sums: (" << v.sums.x << ", " << v.sums.y << ")\n";
  return out.str();
}

std::string render(const VerifyOutcome& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  if (f == Format::csv) {
    out << "suite,t,check,passed,detail\n";
    for (const auto& report : v.reports) {
      for (const auto& c : report.checks) {
        out << csv_field(report.suite) << "," << report.t << "," << csv_field(c.name) << ","
            << (c.passed ? "true" : "false") << "," << csv_field(c.detail) << "\n";
      }
    }
    return out.str();
  }
  std::size_t checks = 0;
  for (const auto& report : v.reports) checks += report.checks.size();
  out << v.suite << ": " << (v.passed() ? "PASS" : "FAIL") << " (" << v.reports.size() << " reports, " << checks
      << " checks)\n";
  for (const auto& report : v.reports) {
    if (const auto* bad = report.first_failure()) {
      out << "  t=" << report.t << " " << bad->name << ": " << bad->detail << "\n";
      break;
    }
  }
  return out.str();
}

std::string render(const OeisOutcome& v, Format f) {
  if (f == Format::json) return as_json(v);
  std::ostringstream out;
  if (f == Format::csv) {
    out << "sequence_id,generator,checked,passed,vacuous,first_mismatch,message\n"
        << csv_field(v.sequence_id) << "," << csv_field(v.generator) << "," << v.checked << ","
        << (v.passed ? "true" : "false") << "," << (v.vacuous ? "true" : "false") << ","
        << (v.first_mismatch ? std::to_string(*v.first_mismatch) : "") << "," << csv_field(v.message) << "\n";
  } else {
    out << v.sequence_id << " vs " << v.generator << ": " << (v.passed ? "match" : "MISMATCH") << " - " << v.message
        << "\n";
  }
  return out.str();
}

}  // namespace fibquiver::cli

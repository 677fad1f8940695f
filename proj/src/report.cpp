#include "meanineq/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "meanineq/errors.hpp"

namespace meanineq {
namespace {

// Minimal pretty-printing writer. nlohmann::json picks the shortest round-trip
// representation for floats, which does not give the fixed 17 digits we emit.
class JsonWriter {
 public:
  std::string str() const { return out_.str() + "\n"; }

  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view k) {
    separator();
    write_string(k);
    out_ << ": ";
    pending_key_ = true;
    return *this;
  }

  JsonWriter& value(double v) { return raw(std::isfinite(v) ? format_double(v) : "null"); }
  JsonWriter& value(std::size_t v) { return raw(std::to_string(v)); }
  JsonWriter& value(std::uint64_t v, int) { return raw(std::to_string(v)); }
  JsonWriter& value(int v) { return raw(std::to_string(v)); }
  JsonWriter& value(bool v) { return raw(v ? "true" : "false"); }
  JsonWriter& value(std::string_view s) {
    prefix();
    write_string(s);
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null() { return raw("null"); }

  template <typename T>
  JsonWriter& field(std::string_view k, T v) {
    key(k);
    return value(v);
  }

 private:
  struct Level {
    bool first = true;
  };

  JsonWriter& raw(std::string_view text) {
    prefix();
    out_ << text;
    return *this;
  }

  void prefix() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    separator();
  }

  void separator() {
    if (stack_.empty()) return;
    if (!stack_.back().first) out_ << ',';
    stack_.back().first = false;
    out_ << '\n' << std::string(2 * stack_.size(), ' ');
  }

  JsonWriter& open(char c) {
    prefix();
    out_ << c;
    stack_.push_back({});
    return *this;
  }

  JsonWriter& close(char c) {
    const bool empty = stack_.back().first;
    stack_.pop_back();
    if (!empty) out_ << '\n' << std::string(2 * stack_.size(), ' ');
    out_ << c;
    return *this;
  }

  void write_string(std::string_view s) {
    out_ << '"';
    for (char ch : s) {
      switch (ch) {
        case '"':
          out_ << "\\\"";
          break;
        case '\\':
          out_ << "\\\\";
          break;
        case '\n':
          out_ << "\\n";
          break;
        case '\t':
          out_ << "\\t";
          break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
            out_ << buf;
          } else {
            out_ << ch;
          }
      }
    }
    out_ << '"';
  }

  std::ostringstream out_;
  std::vector<Level> stack_;
  bool pending_key_ = false;
};

void write_report_fields(JsonWriter& w, const InequalityReport& r) {
  w.field("schema_version", kSchemaVersion);
  w.field("mode", mode_name(r.mode));
  w.field("function", std::string_view(r.function));
  w.field("lhs", r.lhs);
  w.field("rhs", r.rhs);
  w.field("gap", r.gap);
  w.field("tol", r.tol);
  w.field("verdict", verdict_name(r.verdict));
  w.key("seed");
  if (r.seed) {
    w.value(*r.seed, 0);
  } else {
    w.null();
  }
  w.field("dims", r.dims);
  w.field("atoms", r.atoms);
}

void write_matrix_rows(JsonWriter& w, const SymMatrix& m) {
  w.begin_array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    w.begin_array();
    for (std::size_t j = 0; j < m.dim(); ++j) w.value(m(i, j));
    w.end_array();
  }
  w.end_array();
}

void write_space(JsonWriter& w, const FiniteJointSpace& space) {
  w.begin_array();
  if (space.is_scalar()) {
    for (const auto& a : space.scalar_atoms()) {
      w.begin_object();
      w.field("p", a.p).field("x", a.x).field("y", a.y);
      w.end_object();
    }
  } else {
    for (const auto& a : space.matrix_atoms()) {
      w.begin_object();
      w.field("p", a.p);
      w.key("x");
      write_matrix_rows(w, a.x);
      w.key("y");
      write_matrix_rows(w, a.y);
      if (a.rho) {
        w.key("rho");
        write_matrix_rows(w, a.rho->matrix());
      }
      w.end_object();
    }
  }
  w.end_array();
}

std::string csv_double(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

std::string csv_optional(const std::optional<double>& v) { return v ? csv_double(*v) : std::string(); }

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw UsageError("unknown format '" + std::string(s) + "' (expected json or csv)");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_report(const InequalityReport& r, Format format) {
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "schema_version,mode,function,lhs,rhs,gap,tol,verdict,seed,dims,atoms\n";
    out << kSchemaVersion << ',' << mode_name(r.mode) << ',' << r.function << ',' << csv_double(r.lhs) << ','
        << csv_double(r.rhs) << ',' << csv_double(r.gap) << ',' << csv_double(r.tol) << ',' << verdict_name(r.verdict)
        << ',' << (r.seed ? std::to_string(*r.seed) : std::string()) << ',' << r.dims << ',' << r.atoms << '\n';
    return out.str();
  }
  JsonWriter w;
  w.begin_object();
  write_report_fields(w, r);
  w.end_object();
  return w.str();
}

std::string emit_report(const CampaignSummary& s, Format format) {
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "schema_version,mode,function,trials,violations,worst_gap,max_abs_gap,tol,seed\n";
    for (const auto& f : s.per_function) {
      out << kSchemaVersion << ',' << mode_name(s.mode) << ',' << f.function << ',' << f.trials << ','
          << f.violations << ',' << csv_optional(f.worst_gap) << ',' << csv_double(f.max_abs_gap) << ','
          << csv_double(s.tol) << ',' << s.seed << '\n';
    }
    return out.str();
  }
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.field("mode", mode_name(s.mode));
  w.key("functions").begin_array();
  for (const auto& f : s.per_function) w.value(std::string_view(f.function));
  w.end_array();
  w.field("trials", s.trials);
  w.field("reports", s.reports);
  w.field("violations", s.violations);
  if (s.worst_gap) w.field("worst_gap", *s.worst_gap);
  w.field("tol", s.tol);
  w.key("seed").value(s.seed, 0);
  w.key("dims").begin_array().value(s.dims.min).value(s.dims.max).end_array();
  w.key("atoms").begin_array().value(s.atoms.min).value(s.atoms.max).end_array();
  w.key("per_function").begin_array();
  for (const auto& f : s.per_function) {
    w.begin_object();
    w.field("function", std::string_view(f.function));
    w.field("trials", f.trials);
    w.field("violations", f.violations);
    if (f.worst_gap) w.field("worst_gap", *f.worst_gap);
    w.field("max_abs_gap", f.max_abs_gap);
    w.end_object();
  }
  w.end_array();
  if (s.worst_case) {
    w.key("worst_case").begin_object();
    w.field("function", std::string_view(s.worst_case->function));
    w.field("trial", s.worst_case->trial);
    w.key("report").begin_object();
    write_report_fields(w, s.worst_case->report);
    w.end_object();
    w.key("space");
    write_space(w, s.worst_case->space);
    w.end_object();
  }
  w.end_object();
  return w.str();
}

std::string emit_report(const AxiomReport& a, const ConcavityVerdict& c, Format format) {
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "schema_version,function,check,violation,verdict\n";
    for (const auto& check : a.checks) {
      out << kSchemaVersion << ',' << a.function << ',' << check.name << ',' << csv_double(check.violation) << ','
          << (check.pass ? "pass" : "fail") << '\n';
    }
    out << kSchemaVersion << ',' << a.function << ",concavity," << csv_double(c.worst_defect) << ','
        << (c.concave ? "concave" : "non-concave") << '\n';
    return out.str();
  }
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.field("mode", "axioms");
  w.field("function", std::string_view(a.function));
  w.field("tol", a.tol);
  w.field("grid_size", a.grid_size);
  w.field("all_pass", a.all_pass());
  w.key("axioms").begin_array();
  for (const auto& check : a.checks) {
    w.begin_object();
    w.field("name", std::string_view(check.name));
    w.field("violation", check.violation);
    w.field("verdict", check.pass ? "pass" : "fail");
    w.key("witness").begin_array();
    for (double v : check.witness) w.value(v);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.key("concavity").begin_object();
  w.field("verdict", c.concave ? "concave" : "non-concave");
  w.field("worst_defect", c.worst_defect);
  if (c.witness) w.key("witness").begin_array().value(c.witness->first).value(c.witness->second).end_array();
  w.end_object();
  w.end_object();
  return w.str();
}

InequalityReport parse_report_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw UsageError("unsupported report schema_version");
    InequalityReport r;
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.function = j.at("function").get<std::string>();
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.gap = j.at("gap").get<double>();
    r.tol = j.at("tol").get<double>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.dims = j.at("dims").get<std::size_t>();
    r.atoms = j.at("atoms").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("report does not match schema: ") + e.what());
  }
}

}  // namespace meanineq

#include "univgate/gate_io.h"

#include <cctype>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include "univgate/errors.h"
#include "univgate/spectra.h"

namespace univgate {

using nlohmann::json;

namespace {

// Minimal scanner used only to map JSON pointers back to text offsets.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : s_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::optional<std::string> string() {
    if (!eat('"')) return std::nullopt;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') ++pos_;
      if (pos_ < s_.size()) out += s_[pos_++];
    }
    ++pos_;
    return out;
  }

  bool skip_value() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    if (c == '"') return string().has_value();
    if (c == '{') {
      ++pos_;
      if (eat('}')) return true;
      do {
        if (!string() || !eat(':') || !skip_value()) return false;
      } while (eat(','));
      return eat('}');
    }
    if (c == '[') {
      ++pos_;
      if (eat(']')) return true;
      do {
        if (!skip_value()) return false;
      } while (eat(','));
      return eat(']');
    }
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '}') {
      ++pos_;
    }
    return true;
  }

  // Moves to the start of member `key` (object) or element `index` (array).
  bool enter(const std::string& token) {
    skip_ws();
    if (eat('{')) {
      if (peek('}')) return false;
      do {
        auto k = string();
        if (!k || !eat(':')) return false;
        if (*k == token) {
          skip_ws();
          return true;
        }
        if (!skip_value()) return false;
      } while (eat(','));
      return false;
    }
    if (eat('[')) {
      std::size_t index = 0;
      try {
        index = std::stoul(token);
      } catch (...) {
        return false;
      }
      if (peek(']')) return false;
      for (std::size_t i = 0; i < index; ++i) {
        if (!skip_value() || !eat(',')) return false;
      }
      skip_ws();
      return true;
    }
    return false;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

struct DocContext {
  const std::string& text;
  const std::string& source;

  [[noreturn]] void fail(const std::string& pointer, const std::string& msg) const {
    const std::size_t off = locate_pointer(text, pointer).value_or(0);
    const auto [line, col] = line_column(text, off);
    throw Error(ErrorCode::kParse, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(col) + ": " + msg);
  }
};

double number_at(const json& j, const DocContext& ctx, const std::string& ptr) {
  if (!j.is_number()) ctx.fail(ptr, "expected a number");
  return j.get<double>();
}

Eigen::MatrixXcd matrix_at(const json& j, int d, Group group, const DocContext& ctx,
                           const std::string& ptr) {
  if (!j.is_array() || static_cast<int>(j.size()) != d) {
    ctx.fail(ptr, "expected " + std::to_string(d) + " rows");
  }
  Eigen::MatrixXcd m(d, d);
  for (int r = 0; r < d; ++r) {
    const std::string rp = ptr + "/" + std::to_string(r);
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      ctx.fail(rp, "expected " + std::to_string(d) + " entries");
    }
    for (int c = 0; c < d; ++c) {
      const std::string ep = rp + "/" + std::to_string(c);
      const json& e = row[c];
      if (e.is_number()) {
        if (group != Group::kSU && group != Group::kSO) ctx.fail(ep, "bad group");
        if (group == Group::kSU) ctx.fail(ep, "SU entries must be [re, im] pairs");
        m(r, c) = e.get<double>();
      } else if (e.is_array() && (e.size() == 2 || e.size() == 1)) {
        const double re = number_at(e[0], ctx, ep + "/0");
        const double im = e.size() == 2 ? number_at(e[1], ctx, ep + "/1") : 0.0;
        m(r, c) = Complex(re, im);
      } else {
        ctx.fail(ep, "expected [re, im]");
      }
    }
  }
  return m;
}

std::string status_key(VerdictStatus s) { return verdict_status_name(s); }

VerdictStatus status_from(const std::string& s) {
  for (VerdictStatus v : {VerdictStatus::kUniversal, VerdictStatus::kFinite,
                          VerdictStatus::kCommutantObstruction,
                          VerdictStatus::kInconclusive}) {
    if (s == verdict_status_name(v)) return v;
  }
  throw Error(ErrorCode::kParse, "unknown verdict '" + s + "'");
}

NgSource ng_source_from(const std::string& s) {
  for (NgSource v : {NgSource::kExact, NgSource::kAnalyticBound,
                     NgSource::kNumericEstimate, NgSource::kUserOverride}) {
    if (s == ng_source_name(v)) return v;
  }
  throw Error(ErrorCode::kParse, "unknown N_G source '" + s + "'");
}

}  // namespace

std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::optional<std::size_t> locate_pointer(const std::string& text,
                                          const std::string& pointer) {
  Scanner sc(text);
  sc.skip_ws();
  std::size_t start = 1;
  while (start <= pointer.size() && !pointer.empty()) {
    const std::size_t end = pointer.find('/', start);
    const std::string token = pointer.substr(start, end - start);
    if (!sc.enter(token)) return std::nullopt;
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return sc.pos();
}

ParsedAngle parse_angle(const std::string& raw) {
  std::string t;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  static const std::regex frac_first(R"(^([+-]?\d+)/(\d+)\*?pi$)");
  static const std::regex pi_first(R"(^([+-]?)(\d*)\*?pi(?:/(\d+))?$)");
  std::smatch m;
  std::optional<Rational> r;
  try {
    if (std::regex_match(t, m, frac_first)) {
      r = Rational(std::stoll(m[1]), std::stoll(m[2]));
    } else if (std::regex_match(t, m, pi_first)) {
      const std::int64_t p = m[2].length() ? std::stoll(m[2]) : 1;
      const std::int64_t q = m[3].matched ? std::stoll(m[3]) : 1;
      r = Rational(m[1] == "-" ? -p : p, q);
    }
  } catch (const Error&) {
    throw Error(ErrorCode::kParse, "bad angle '" + raw + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kParse, "angle out of range '" + raw + "'");
  }
  ParsedAngle out;
  if (r) {
    out.exact = *r;
    out.radians = static_cast<double>(r->value_ld() * std::numbers::pi_v<long double>);
    return out;
  }
  std::size_t used = 0;
  try {
    out.radians = std::stod(t, &used);
  } catch (...) {
    used = 0;
  }
  if (t.empty() || used != t.size()) {
    throw Error(ErrorCode::kParse, "bad angle '" + raw + "'");
  }
  return out;
}

GateSetDocument parse_gate_set(const std::string& text, const std::string& source,
                               const Tolerances& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::kParse, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(col) + ": " + e.what());
  }
  const DocContext ctx{text, source};
  if (!doc.is_object()) ctx.fail("", "expected an object");
  GateSetDocument out;
  if (!doc.contains("group") || !doc["group"].is_string()) {
    ctx.fail("", "missing string field 'group'");
  }
  const std::string g = doc["group"];
  if (g == "SU") out.group = Group::kSU;
  else if (g == "SO") out.group = Group::kSO;
  else ctx.fail("/group", "group must be \"SU\" or \"SO\"");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    ctx.fail("", "missing integer field 'dim'");
  }
  out.dim = doc["dim"];
  if (out.dim < min_dimension(out.group)) {
    ctx.fail("/dim", "dimension too small for " + g);
  }
  if (!doc.contains("gates") || !doc["gates"].is_array() || doc["gates"].empty()) {
    ctx.fail("", "missing non-empty array 'gates'");
  }
  for (std::size_t i = 0; i < doc["gates"].size(); ++i) {
    const std::string ptr = "/gates/" + std::to_string(i);
    const json& gj = doc["gates"][i];
    Eigen::MatrixXcd m;
    std::optional<AxisAngleGate> aa;
    if (gj.is_object()) {
      const bool su2 = out.group == Group::kSU && out.dim == 2;
      const bool so3 = out.group == Group::kSO && out.dim == 3;
      if (!su2 && !so3) ctx.fail(ptr, "axis-angle gates need SU(2) or SO(3)");
      if (!gj.contains("phi") || !gj.contains("axis")) {
        ctx.fail(ptr, "axis-angle gate needs 'phi' and 'axis'");
      }
      ParsedAngle angle;
      if (gj["phi"].is_string()) {
        try {
          angle = parse_angle(gj["phi"].get<std::string>());
        } catch (const Error& e) {
          ctx.fail(ptr + "/phi", e.what());
        }
      } else {
        angle.radians = number_at(gj["phi"], ctx, ptr + "/phi");
      }
      const json& ax = gj["axis"];
      if (!ax.is_array() || ax.size() != 3) ctx.fail(ptr + "/axis", "axis needs 3 numbers");
      Eigen::Vector3d k;
      for (int c = 0; c < 3; ++c) {
        k(c) = number_at(ax[c], ctx, ptr + "/axis/" + std::to_string(c));
      }
      if (k.norm() < 1e-12) ctx.fail(ptr + "/axis", "axis must be nonzero");
      AxisAngleGate gate = angle.exact ? AxisAngleGate::su2(*angle.exact, k)
                                       : AxisAngleGate::su2(angle.radians, k);
      if (so3) {
        gate.group = AxisGroup::kSO3;
        m = so3_matrix(gate.phi, gate.axis).cast<Complex>();
      } else {
        m = su2_matrix(gate.phi, gate.axis);
      }
      aa = gate;
    } else {
      m = matrix_at(gj, out.dim, out.group, ctx, ptr);
    }
    try {
      out.gates.push_back(validate_gate(m, out.group, tol));
    } catch (const Error& e) {
      const std::size_t off = locate_pointer(text, ptr).value_or(0);
      const auto [line, col] = line_column(text, off);
      throw Error(e.code(), source + ":" + std::to_string(line) + ":" +
                                std::to_string(col) + ": gate " + std::to_string(i) +
                                ": " + e.what());
    }
    out.axis_angle.push_back(aa);
  }
  return out;
}

GateSetDocument load_gate_set(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gate_set(ss.str(), path, tol);
}

json verdict_to_json(const UniversalityVerdict& v) {
  json j;
  j["verdict"] = status_key(v.status);
  j["step"] = v.step;
  j["termination_l"] = v.termination_l;
  j["order"] = v.order ? json(*v.order) : json(nullptr);
  j["group_label"] = v.group_label ? json(*v.group_label) : json(nullptr);
  j["commutant_dim"] = v.commutant_dim;
  j["commutant_gap"] = std::isfinite(v.commutant_gap) ? json(v.commutant_gap) : json(nullptr);
  j["ill_conditioned"] = v.ill_conditioned;
  j["n_g_used"] = v.n_g_used;
  j["ng_source"] = ng_source_name(v.ng_source);
  j["generators"] = v.generator_names;
  if (v.witness) {
    json w;
    std::vector<std::string> word;
    for (int letter : v.witness->word) word.push_back(v.generator_names.at(letter));
    w["word"] = word;
    w["power"] = v.witness->power;
    w["center"] = {v.witness->center.real(), v.witness->center.imag()};
    w["fast_path"] = v.witness->fast_path;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["trace"] = json::array();
  for (const auto& e : v.trace) {
    j["trace"].push_back({{"l", e.l}, {"step", e.step}, {"message", e.message}});
  }
  return j;
}

UniversalityVerdict verdict_from_json(const json& j) {
  UniversalityVerdict v;
  try {
    v.status = status_from(j.at("verdict").get<std::string>());
    v.step = j.at("step");
    v.termination_l = j.at("termination_l");
    if (!j.at("order").is_null()) v.order = j["order"].get<std::int64_t>();
    if (!j.at("group_label").is_null()) v.group_label = j["group_label"].get<std::string>();
    v.commutant_dim = j.at("commutant_dim");
    v.commutant_gap = j.at("commutant_gap").is_null()
                          ? std::numeric_limits<double>::infinity()
                          : j["commutant_gap"].get<double>();
    v.ill_conditioned = j.at("ill_conditioned");
    v.n_g_used = j.at("n_g_used");
    v.ng_source = ng_source_from(j.at("ng_source").get<std::string>());
    v.generator_names = j.at("generators").get<std::vector<std::string>>();
    if (!j.at("witness").is_null()) {
      const json& w = j["witness"];
      Witness wit;
      for (const auto& name : w.at("word")) {
        const auto it = std::find(v.generator_names.begin(), v.generator_names.end(),
                                  name.get<std::string>());
        if (it == v.generator_names.end()) {
          throw Error(ErrorCode::kParse, "witness uses an unknown generator");
        }
        wit.word.push_back(static_cast<int>(it - v.generator_names.begin()));
      }
      wit.power = w.at("power");
      wit.center = Complex(w.at("center").at(0).get<double>(),
                           w.at("center").at(1).get<double>());
      wit.fast_path = w.at("fast_path");
      v.witness = wit;
    }
    for (const auto& e : j.at("trace")) {
      v.trace.push_back({e.at("l").get<int>(), e.at("step").get<int>(),
                         e.at("message").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed verdict: ") + e.what());
  }
  return v;
}

json make_report(const std::string& kind, json body) {
  json out = std::move(body);
  out["schema_version"] = kReportSchemaVersion;
  out["kind"] = kind;
  return out;
}

json parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") ||
      j["schema_version"] != kReportSchemaVersion) {
    throw Error(ErrorCode::kParse, "unsupported report schema version");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorCode::kParse, "report has no kind");
  }
  const std::string kind = j["kind"];
  auto need = [&](const char* field) {
    if (!j.contains(field)) {
      throw Error(ErrorCode::kParse, kind + " report lacks '" + field + "'");
    }
  };
  if (kind == "check" || kind == "beamsplitter") {
    need("verdict");
    need("timings");
    verdict_from_json(j);
  } else if (kind == "table1") {
    need("rows");
    need("expected");
    need("match");
  } else if (kind == "ng") {
    need("value");
    need("source");
  } else if (kind == "commutant") {
    need("commutant_dim");
    need("gap");
  } else {
    throw Error(ErrorCode::kParse, "unknown report kind '" + kind + "'");
  }
  return j;
}

}  // namespace univgate
